import pathlib

from stringchar import BoundIceQuiver

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def load(name):
    """Load a fixture quiver by basename."""
    return BoundIceQuiver.from_file(FIXTURES / f"{name}.quiver")
