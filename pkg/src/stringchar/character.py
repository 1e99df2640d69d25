"""Cluster characters of string modules: submodule counts of the string
diagram, the character with coefficients, the principal-coefficient
character and the separation map."""

from __future__ import annotations

import weakref

from .errors import K0IllDefined, NotSubtractionFree, QuiverError, \
    UnfrozenViolation
from .homalg import euler_forms, hereditary_euler
from .laurent import LaurentPoly
from .quiver import ensure_string, simple, string_module

_pairing_cache = weakref.WeakKeyDictionary()


class StringDiagram:
    """The order diagram of a string: positions 1..n+1 labelled by walk
    vertices, one oriented edge per step (forward points i -> i+1, inverse
    points i+1 -> i).  Submodules correspond to successor-closed position
    subsets."""

    def __init__(self, c):
        self.labels = c.vertices
        self.edges = []
        for i, step in enumerate(c.steps, start=1):
            self.edges.append((i, i + 1) if step.forward else (i + 1, i))

    def closed_subsets(self):
        n = len(self.labels)
        for mask in range(1 << n):
            if all(not (mask >> (p - 1)) & 1 or (mask >> (q - 1)) & 1
                   for p, q in self.edges):
                yield [i + 1 for i in range(n) if (mask >> i) & 1]

    def dim_vector(self, positions):
        dims = {}
        for p in positions:
            v = self.labels[p - 1]
            dims[v] = dims.get(v, 0) + 1
        return dims

    def submodule_counts(self):
        """Map from dimension vector (sorted item tuple) to submodule count."""
        counts = {}
        for subset in self.closed_subsets():
            key = tuple(sorted(self.dim_vector(subset).items(), key=str))
            counts[key] = counts.get(key, 0) + 1
        return counts


def gr_euler(c, e):
    """Number of submodules of the string module of c with dim vector e."""
    ensure_string(c.quiver, c)
    diagram = StringDiagram(c)
    target = tuple(sorted(((v, d) for v, d in e.items() if d), key=str))
    return diagram.submodule_counts().get(target, 0)


def total_gr_euler(c):
    """Total submodule count of the string module of c."""
    ensure_string(c.quiver, c)
    return sum(StringDiagram(c).submodule_counts().values())


def _simples_pairing(q):
    """Matrices of the truncated and anti-symmetrised forms on simples."""
    cached = _pairing_cache.get(q)
    if cached is None:
        simples = {v: simple(q, v) for v in q.vertices}
        truncated = {}
        for i in q.vertices:
            for j in q.vertices:
                value, _anti = euler_forms(q, simples[i], simples[j])
                truncated[i, j] = value
        cached = truncated
        _pairing_cache[q] = cached
    return cached


def cluster_character(q, c):
    """The cluster character of the string module of c over the ice quiver
    q, as a Laurent polynomial in the variables of all vertices of q."""
    if q.has_loops_or_two_cycles():
        raise QuiverError("cluster characters need a loop- and 2-cycle-free "
                          "quiver")
    ensure_string(q, c)
    if c.quiver is not q:
        c = c.on(q)
    m = string_module(q, c)
    if m.support() & q.frozen:
        raise UnfrozenViolation(
            f"the string {c} touches the frozen vertices "
            f"{sorted(m.support() & q.frozen, key=str)}")
    truncated = _simples_pairing(q)
    pair_m = {}
    for i in q.vertices:
        direct, anti = euler_forms(q, simple(q, i), m)
        # only the anti-symmetrised pairing is ever applied to a bare
        # dimension class, so that is the descent we must insist on
        bilinear_anti = sum(
            m.dims[j] * (truncated[i, j] - truncated[j, i])
            for j in q.vertices)
        if anti != bilinear_anti:
            raise K0IllDefined(
                f"the anti-symmetrised pairing with the simple at {i!r} "
                f"does not descend to the dimension vector of {c}")
        pair_m[i] = direct
    diagram = StringDiagram(c)
    result = LaurentPoly.zero()
    for key, count in sorted(diagram.submodule_counts().items()):
        e = dict(key)
        exps = {}
        for i in q.vertices:
            pairing = sum(
                e.get(j, 0) * (truncated[i, j] - truncated[j, i])
                for j in q.vertices)
            exps[i] = pairing - pair_m[i]
        result = result + LaurentPoly.monomial(count, exps)
    return result


def pp_character(q, c):
    """The principal-coefficient character over an acyclic relation-free
    quiver, in the initial variables and the frozen variables i'."""
    if q.relations or not q.is_acyclic():
        raise QuiverError("principal-coefficient characters need an acyclic "
                          "relation-free quiver")
    if q.frozen:
        raise QuiverError("the input quiver must have no frozen vertices; "
                          "the principal extension is added internally")
    ensure_string(q, c)
    if c.quiver is not q:
        c = c.on(q)
    m = string_module(q, c)
    diagram = StringDiagram(c)
    result = LaurentPoly.zero()
    for key, count in sorted(diagram.submodule_counts().items()):
        e = dict(key)
        exps = {}
        for i in q.vertices:
            unit = {i: 1}
            exps[i] = -hereditary_euler(q, e, unit) - hereditary_euler(
                q, unit, {v: m.dims[v] - e.get(v, 0) for v in q.vertices})
            coeff_exp = m.dims[i] - e.get(i, 0)
            if coeff_exp:
                exps[f"{i}'"] = coeff_exp
        result = result + LaurentPoly.monomial(count, exps)
    return result


def separate(f, w):
    """Separation of a subtraction-free Laurent polynomial: substitute each
    coefficient variable by its w-monomial and divide by the tropical
    evaluation of the result."""
    if not f.is_nonnegative():
        raise NotSubtractionFree(f"{f} has a negative coefficient")
    assignment = {}
    w_exps = {}
    for var, mono in w.items():
        if not isinstance(mono, LaurentPoly):
            mono = LaurentPoly.monomial(1, mono)
        unit = mono.as_unit()
        if unit is None or unit[0] != 1:
            raise NotSubtractionFree(
                f"the separation monomial for {var!r} must be a monomial "
                f"with coefficient 1, got {mono}")
        assignment[var] = mono
        w_exps[var] = unit[1]
    mins = None
    for mono, _coeff in f.terms.items():
        exps = {}
        for var, e in mono:
            if var in w_exps:
                for target, k in w_exps[var].items():
                    exps[target] = exps.get(target, 0) + e * k
        if mins is None:
            mins = exps
        else:
            mins = {v: min(mins.get(v, 0), exps.get(v, 0))
                    for v in set(mins) | set(exps)}
    numerator = f.substitute(assignment)
    return numerator * LaurentPoly.monomial(
        1, {v: -e for v, e in (mins or {}).items()})


def pp_variable_map(q_decorated, q_plain):
    """Separation data for a plain quiver against its decorated original:
    maps each principal-extension variable i' to the monomial w_i of the
    decorated ice quiver."""
    from .formula import w_monomial
    return {f"{i}'": w_monomial(q_decorated, i)
            for i in q_plain.vertices}
