"""Row reduction over exact fields."""

from ..errors import NotHomogeneous


def rref(rows, K):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = K.one / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, K):
    return len(rref(rows, K)[1])


def nullspace(rows, ncols, K):
    """Basis of ``{v : rows * v = 0}``, one vector per free column."""
    red, pivots = rref(rows, K) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [K.zero] * ncols
        v[f] = K.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(rows, rhs, K):
    """One solution of ``rows * v = rhs`` or ``None`` if inconsistent."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, K)
    if ncols in pivots:
        return None
    v = [K.zero] * ncols
    for row, pc in zip(red, pivots):
        v[pc] = row[-1]
    return v


def graded_component_dim(gens, degree, ring=None):
    """Dimension of the degree-``degree`` part of the ideal spanned by ``gens``.

    All generators must be homogeneous.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return 0
    ring = ring or gens[0].ring
    K = ring.field
    for g in gens:
        if not g.is_homogeneous():
            raise NotHomogeneous(f"{g} is not homogeneous")
    target = ring.monomials_of_degree(degree)
    col = {e: i for i, e in enumerate(target)}
    rows = []
    for g in gens:
        dg = g.degree()
        if dg > degree:
            continue
        for m in ring.monomials_of_degree(degree - dg):
            row = [K.zero] * len(target)
            for e, c in g.terms.items():
                row[col[tuple(a + b for a, b in zip(e, m))]] = c
            rows.append(row)
    return rank(rows, K)
