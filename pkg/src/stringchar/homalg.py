"""Homological algebra over monomial bound quiver algebras: projectives via
path bases, Hom and Ext^1 by exact elimination, Euler forms, rigidity and
the normalising vector of a string module."""

from __future__ import annotations

import weakref
from fractions import Fraction

from . import exactmat
from .errors import PathLimitExceeded, QuiverError
from .quiver import Representation, blow_up, ensure_string, simple, string_module

_path_basis_cache = weakref.WeakKeyDictionary()


class PathBasis:
    """For each vertex, the paths starting there that avoid every relation
    subpath; these index a basis of the indecomposable projective."""

    def __init__(self, q, max_length=None):
        self.quiver = q
        if max_length is None:
            max_length = 10 * max(len(q.arrows), 1)
        self.paths = {v: [()] for v in q.vertices}
        relations = set(q.relations)
        frontier = {v: [()] for v in q.vertices}
        length = 0
        while any(frontier.values()):
            length += 1
            if length > max_length:
                raise PathLimitExceeded(
                    f"paths of length > {max_length} survive all relations; "
                    "the algebra looks infinite dimensional")
            new_frontier = {v: [] for v in q.vertices}
            for v, paths in frontier.items():
                for path in paths:
                    end = q.arrow(path[-1]).target if path else v
                    for arrow in q.arrows_from(end):
                        longer = path + (arrow.name,)
                        if any(longer[i:i + len(rel)] == rel
                               for rel in relations
                               for i in range(len(longer) - len(rel) + 1)):
                            continue
                        new_frontier[v].append(longer)
                        self.paths[v].append(longer)
            frontier = new_frontier

    def path_end(self, v, path):
        return self.quiver.arrow(path[-1]).target if path else v


def path_basis(q):
    basis = _path_basis_cache.get(q)
    if basis is None:
        basis = PathBasis(q)
        _path_basis_cache[q] = basis
    return basis


def projective(q, v):
    """The indecomposable projective at v as a representation."""
    basis = path_basis(q)
    by_vertex = {w: [] for w in q.vertices}
    index = {}
    for path in basis.paths[v]:
        end = basis.path_end(v, path)
        index[path] = len(by_vertex[end])
        by_vertex[end].append(path)
    dims = {w: len(paths) for w, paths in by_vertex.items()}
    mats = {}
    known = set(index)
    for name, arrow in q.arrows.items():
        m = exactmat.zeros(dims[arrow.target], dims[arrow.source])
        for path in by_vertex[arrow.source]:
            longer = path + (name,)
            if longer in known:
                m[index[longer]][index[path]] = Fraction(1)
        mats[name] = m
    return Representation(q, dims, mats)


def direct_sum(q, *reps):
    """Block-diagonal direct sum of representations of the same quiver."""
    dims = {v: sum(r.dims[v] for r in reps) for v in q.vertices}
    mats = {}
    for name, arrow in q.arrows.items():
        block = exactmat.zeros(dims[arrow.target], dims[arrow.source])
        r0 = c0 = 0
        for rep in reps:
            sub = rep.mats[name]
            for i, row in enumerate(sub):
                for j, x in enumerate(row):
                    block[r0 + i][c0 + j] = x
            r0 += rep.dims[arrow.target]
            c0 += rep.dims[arrow.source]
        mats[name] = block
    return Representation(q, dims, mats, check_relations=False)


def hom_dim(q, m, n):
    """dim Hom(m, n): solution space of the commuting squares, exactly."""
    offsets = {}
    total = 0
    for v in q.vertices:
        offsets[v] = total
        total += n.dims[v] * m.dims[v]
    rows = []
    for name, arrow in q.arrows.items():
        s, t = arrow.source, arrow.target
        ma, na = m.mats[name], n.mats[name]
        # equations: f_t m(a) - n(a) f_s = 0, one per (i < dim n(t), j < dim m(s))
        for i in range(n.dims[t]):
            for j in range(m.dims[s]):
                row = [Fraction(0)] * total
                for k in range(m.dims[t]):
                    row[offsets[t] + i * m.dims[t] + k] += ma[k][j]
                for k in range(n.dims[s]):
                    row[offsets[s] + k * m.dims[s] + j] -= na[i][k]
                rows.append(row)
    return total - exactmat.rank(rows, total)


def _top_generators(q, m):
    """One generating vector of m per top basis element, grouped by vertex."""
    generators = []
    for v in q.vertices:
        d = m.dims[v]
        if d == 0:
            continue
        radical_vectors = []
        for arrow in q.arrows_to(v):
            mat = m.mats[arrow.name]
            for j in range(m.dims[arrow.source]):
                radical_vectors.append([mat[i][j] for i in range(d)])
        # extend a basis of rad(m)(v) to m(v) by greedily adding standard
        # basis vectors that enlarge the rank
        cols = [list(col) for col in radical_vectors]
        current = exactmat.rank(cols, d) if cols else 0
        chosen = []
        for k in range(d):
            if current + len(chosen) == d:
                break
            candidate = [Fraction(1) if i == k else Fraction(0)
                         for i in range(d)]
            if exactmat.rank(cols + [c for c in chosen] + [candidate], d) > \
                    current + len(chosen):
                chosen.append(candidate)
        for vec in chosen:
            generators.append((v, vec))
    return generators


def projective_cover_data(q, m):
    """A projective surjection p: P -> m built from top(m).

    Returns (P as a representation, per-vertex matrices of p, per-vertex
    basis labels of P as (generator index, path) pairs).
    """
    basis = path_basis(q)
    generators = _top_generators(q, m)
    labels = {v: [] for v in q.vertices}
    for g, (v, _vec) in enumerate(generators):
        for path in basis.paths[v]:
            labels[basis.path_end(v, path)].append((g, path))
    index = {v: {lab: i for i, lab in enumerate(labs)}
             for v, labs in labels.items()}
    dims = {v: len(labs) for v, labs in labels.items()}
    mats = {}
    for name, arrow in q.arrows.items():
        mat = exactmat.zeros(dims[arrow.target], dims[arrow.source])
        tgt_index = index[arrow.target]
        for (g, path), j in index[arrow.source].items():
            longer = (g, path + (name,))
            if longer in tgt_index:
                mat[tgt_index[longer]][j] = Fraction(1)
        mats[name] = mat
    cover = Representation(q, dims, mats)
    proj = {}
    for v in q.vertices:
        mat = exactmat.zeros(m.dims[v], dims[v])
        for (g, path), j in index[v].items():
            start, vec = generators[g]
            if path:
                vec = exactmat.mat_vec(m.path_matrix(path), vec)
            for i, x in enumerate(vec):
                mat[i][j] = x
        proj[v] = mat
    return cover, proj


def syzygy(q, m):
    """The kernel of a projective cover of m, as a representation."""
    cover, proj = projective_cover_data(q, m)
    kernels = {v: exactmat.nullspace(proj[v], cover.dims[v])
               for v in q.vertices}
    dims = {v: len(kernels[v]) for v in q.vertices}
    mats = {}
    for name, arrow in q.arrows.items():
        s, t = arrow.source, arrow.target
        images = [exactmat.mat_vec(cover.mats[name], vec)
                  for vec in kernels[s]]
        if kernels[t]:
            mats[name] = exactmat.column_space_coords(
                kernels[t], images, cover.dims[t])
        else:
            if any(x != 0 for vec in images for x in vec):
                raise QuiverError("syzygy is not arrow-stable")
            mats[name] = exactmat.zeros(0, dims[s])
    return Representation(q, dims, mats, check_relations=False)


def ext1_dim(q, m, n):
    """dim Ext^1(m, n) from the Hom exact sequence of a projective cover."""
    if m.total_dim() == 0:
        return 0
    cover, _proj = projective_cover_data(q, m)
    omega = syzygy(q, m)
    return hom_dim(q, omega, n) - hom_dim(q, cover, n) + hom_dim(q, m, n)


def euler_forms(q, m, n):
    """(truncated form <m,n>, anti-symmetrised form <m,n>_a)."""
    forward = hom_dim(q, m, n) - ext1_dim(q, m, n)
    backward = hom_dim(q, n, m) - ext1_dim(q, n, m)
    return forward, forward - backward


def hereditary_euler(q, d, e):
    """Euler form of an acyclic relation-free quiver on dimension vectors."""
    if q.relations:
        raise QuiverError("hereditary Euler form needs a relation-free quiver")
    if not q.is_acyclic():
        raise QuiverError("hereditary Euler form needs an acyclic quiver")
    value = sum(d.get(v, 0) * e.get(v, 0) for v in q.vertices)
    for arrow in q.arrows.values():
        value -= d.get(arrow.source, 0) * e.get(arrow.target, 0)
    return value


def is_rigid(q, m):
    return ext1_dim(q, m, m) == 0


def normalisation_vector(q, c):
    """The per-vertex normalisation of a string module, supported on the
    closure of its support: the truncated pairing with each simple minus the
    hereditary pairing of the simple fibres with the spine module of the
    blow-up."""
    ensure_string(q, c)
    m = string_module(q, c)
    qtilde, phi, mtilde = blow_up(q, c)
    result = {}
    for i in phi.target.vertices:
        value, _anti = euler_forms(q, simple(q, i), m)
        for j in phi.vertex_preimages(i):
            value -= hereditary_euler(qtilde, {j: 1}, mtilde.dims)
        result[i] = value
    return result
