"""Matrix-product formulas attached to walks: the Laurent polynomial L_c,
its numerator content, the integer count l_c, frieze entries and the
exchange-style identity checks."""

from __future__ import annotations

from .errors import QuiverError
from .laurent import LaurentPoly, Mat2


def step_matrix(q, step):
    """The 2x2 step matrix A of a (possibly inverted) arrow."""
    arrow = q.arrow(step.arrow)
    xs = LaurentPoly.var(arrow.source)
    xt = LaurentPoly.var(arrow.target)
    if step.forward:
        return Mat2(xt, 0, 1, xs)
    return Mat2(xt, 1, 0, xs)


def vertex_matrix(q, c, i):
    """Diagonal contribution of the i-th walk vertex (1-based i in
    1..length+1).  Arrows used by the walk at positions i-1 and i are
    excluded; everything else incident to v_i contributes."""
    if not 1 <= i <= c.length + 1:
        raise QuiverError(f"vertex index {i} out of range 1..{c.length + 1}")
    v = c.vertices[i - 1]
    excluded = {c.step_arrow(i - 1), c.step_arrow(i)}
    top = LaurentPoly.one()
    for arrow in q.arrows_from(v):
        if arrow.name not in excluded:
            top = top * LaurentPoly.var(arrow.target)
    bottom = LaurentPoly.one()
    for arrow in q.arrows_to(v):
        if arrow.name not in excluded:
            bottom = bottom * LaurentPoly.var(arrow.source)
    return Mat2.diagonal(top, bottom)


def walk_matrix(q, c):
    """The full 2x2 product V_c(1) A(c_1) V_c(2) ... A(c_n) V_c(n+1)."""
    if c.quiver is not q:
        c = c.on(q)
    product = vertex_matrix(q, c, 1)
    for i, step in enumerate(c.steps, start=1):
        product = product * step_matrix(q, step) * vertex_matrix(q, c, i + 1)
    return product


def walk_numerator(q, c):
    """N_c: the bracket of the full matrix product."""
    return walk_matrix(q, c).bracket()


def walk_denominator(q, c):
    """The monomial prod of x_v over all walk vertices v_1..v_{n+1}."""
    exps = {}
    for v in c.vertices:
        exps[v] = exps.get(v, 0) + 1
    return exps


def walk_laurent(q, c):
    """L_c = N_c divided by the product of the walk-vertex variables."""
    numerator = walk_numerator(q, c)
    exps = walk_denominator(q, c)
    return numerator * LaurentPoly.monomial(1, {v: -e for v, e in exps.items()})


def numerator_normalisation(q, c):
    """The exponent vector eta_c of the maximal monomial dividing N_c."""
    eta, _rest = walk_numerator(q, c).monomial_content()
    return eta


def walk_count(c):
    """l_c: the integer matrix-product count (2 for trivial walks)."""
    a, b, cc, d = 1, 0, 0, 1
    for step in c.steps:
        if step.forward:
            # times [[1, 0], [1, 1]]
            a, b, cc, d = a + b, b, cc + d, d
        else:
            # times [[1, 1], [0, 1]]
            a, b, cc, d = a, a + b, cc, cc + d
    return a + b + cc + d


def frieze_entry(word):
    """Frieze-pattern entry of a word of frieze variables.

    word is a list of (variable, position) pairs of length >= 3; for the
    middle entries the position says whether the preceding variable sits to
    the "left" of or "below" this one in the grid, which picks the 2x2
    factor.  The positions of the first two and of the last entry are never
    consulted.
    """
    if len(word) < 3:
        raise QuiverError("a frieze word needs at least three entries")
    names = [v for v, _ in word]
    ell = len(word) - 2
    product = Mat2.identity()
    for j in range(1, ell):
        xj = LaurentPoly.var(names[j])
        xj1 = LaurentPoly.var(names[j + 1])
        position = word[j + 1][1]
        if position == "left":
            factor = Mat2(xj, 1, 0, xj1)
        elif position == "below":
            factor = Mat2(xj1, 0, 1, xj)
        else:
            raise QuiverError(
                f"position of entry {j + 2} must be 'left' or 'below', "
                f"got {position!r}")
        product = product * factor
    left, right = product.row_vec(LaurentPoly.one(),
                                  LaurentPoly.var(names[0]))
    bracket = left + right * LaurentPoly.var(names[-1])
    exps = {}
    for v in names[1:-1]:
        exps[v] = exps.get(v, 0) - 1
    return LaurentPoly.monomial(1, exps) * bracket


def coefficient_monomial(q, i, kind):
    """y_i (kind='y': frozen arrows into i) or z_i (kind='z': frozen arrows
    out of i) as a monomial in the frozen variables."""
    exps = {}
    if kind == "y":
        for arrow in q.arrows_to(i):
            if arrow.source in q.frozen:
                exps[arrow.source] = exps.get(arrow.source, 0) + 1
    elif kind == "z":
        for arrow in q.arrows_from(i):
            if arrow.target in q.frozen:
                exps[arrow.target] = exps.get(arrow.target, 0) + 1
    else:
        raise ValueError(f"kind must be 'y' or 'z', got {kind!r}")
    return LaurentPoly.monomial(1, exps)


def w_monomial(q, i):
    """w_i = y_i / z_i, the separation monomial of an unfrozen vertex."""
    y = coefficient_monomial(q, i, "y")
    z = coefficient_monomial(q, i, "z")
    return y * z ** -1


def _vector_power(q, dims, kind):
    """prod over unfrozen vertices of (y_i or z_i)^{dims[i]}."""
    result = LaurentPoly.one()
    for v in q.unfrozen_vertices:
        d = dims.get(v, 0)
        if d:
            result = result * coefficient_monomial(q, v, kind) ** d
    return result


def check_identity(kind, q, **inputs):
    """Exact check of one of the four exchange-style identities.

    kind 'L4.2a' / 'L4.3' (projective form): inputs i (unfrozen vertex),
    chars (map unfrozen vertex -> Laurent polynomial of its projective) and,
    for 'L4.2a' only, dims (dimension vector of the projective at i).

    kind 'L4.2b' / 'L4.4' (almost-split form): inputs tau_m, mid, m (the
    three Laurent polynomials), dim_tau_m and, for 'L4.2b' only, dim_m.
    """
    if kind in ("L4.2a", "L4.3"):
        i = inputs["i"]
        chars = inputs["chars"]
        unfrozen = set(q.unfrozen_vertices)
        if i not in unfrozen:
            raise QuiverError(f"vertex {i!r} is not unfrozen")
        lhs = LaurentPoly.var(i) * chars[i]
        product = coefficient_monomial(q, i, "y")
        for arrow in q.arrows_from(i):
            if arrow.target in unfrozen:
                product = product * chars[arrow.target]
        for arrow in q.arrows_to(i):
            if arrow.source in unfrozen:
                product = product * LaurentPoly.var(arrow.source)
        lhs = lhs - product
        if kind == "L4.2a":
            rhs = _vector_power(q, inputs["dims"], "z")
        else:
            rhs = LaurentPoly.one()
        return lhs == rhs
    if kind in ("L4.2b", "L4.4"):
        lhs = inputs["tau_m"] * inputs["m"] - inputs["mid"]
        rhs = _vector_power(q, inputs["dim_tau_m"], "y")
        if kind == "L4.2b":
            rhs = rhs * _vector_power(q, inputs["dim_m"], "z")
        return lhs == rhs
    raise ValueError(f"unknown identity kind {kind!r}")
