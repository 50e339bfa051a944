"""Exact dense linear algebra over a field, plus fraction-free rank over
Z[q,q^-1].

Everything here works on lists of lists of field elements (Fraction or
GFElement).  Matrices at desk scale are small, so plain Gaussian
elimination with exact arithmetic is the right tool; the Laurent-entry
rank uses Bareiss elimination, whose intermediate divisions are exact.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly


def row_reduce(rows, field):
    """Reduced row echelon form.

    Returns ``(rref_rows, pivot_cols)``; the input is not modified.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = field.one() / m[r][c] if isinstance(m[r][c], Fraction) else _inv(m[r][c], field)
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [row for row in m[:r]], pivots


def _inv(x, field):
    return field.one() / x if isinstance(x, Fraction) else x.inv()


class IncrementalRREF:
    """Row space built one row at a time, for early rank saturation."""

    def __init__(self, field):
        self.field = field
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def add(self, row) -> bool:
        """Reduce ``row`` against the space; absorb it if independent.

        Returns True when the rank grew.
        """
        v = list(row)
        for r, c in zip(self.rows, self.pivots):
            if v[c]:
                f = v[c]
                v = [a - f * b for a, b in zip(v, r)]
        pc = next((c for c, x in enumerate(v) if x), None)
        if pc is None:
            return False
        inv = _inv(v[pc], self.field)
        v = [x * inv for x in v]
        for i, (r, c) in enumerate(zip(self.rows, self.pivots)):
            if r[pc]:
                f = r[pc]
                self.rows[i] = [a - f * b for a, b in zip(r, v)]
        self.rows.append(v)
        self.pivots.append(pc)
        order = sorted(range(len(self.pivots)), key=lambda i: self.pivots[i])
        self.rows = [self.rows[i] for i in order]
        self.pivots = [self.pivots[i] for i in order]
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(rows, field) -> int:
    return len(row_reduce(rows, field)[1])


def in_row_space(vec, rref_rows, pivots, field) -> bool:
    """Membership test against an already-reduced row space."""
    v = list(vec)
    for row, c in zip(rref_rows, pivots):
        if v[c]:
            f = v[c]
            v = [a - f * b for a, b in zip(v, row)]
    return all(not x for x in v)


def reduce_against(vec, rref_rows, pivots):
    """Remainder of ``vec`` after elimination by a reduced row space."""
    v = list(vec)
    for row, c in zip(rref_rows, pivots):
        if v[c]:
            f = v[c]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def nullspace(rows, field):
    """Basis of the right kernel of the matrix (list of column vectors)."""
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = row_reduce(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero()] * ncols
        v[fc] = field.one()
        for row, pc in zip(rref, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve(rows, rhs, field):
    """One solution x of rows^T... solves sum_j x_j rows[j] = rhs.

    Returns None when rhs is outside the row span.
    """
    if not rows:
        return None if any(rhs) else []
    n = len(rows)
    ncols = len(rows[0])
    aug = [[rows[j][c] for j in range(n)] + [rhs[c]] for c in range(ncols)]
    rref, pivots = row_reduce(aug, field)
    x = [field.zero()] * n
    for row, pc in zip(rref, pivots):
        if pc == n:
            return None
        x[pc] = row[n]
    # Verify (cheap, and guards against ill-posed input shapes).
    for c in range(ncols):
        acc = field.zero()
        for j in range(n):
            acc = acc + x[j] * rows[j][c]
        if acc != rhs[c]:
            return None
    return x


def laurent_rank(rows: list[list[LaurentPoly]]) -> int:
    """Rank of a matrix over Z[q,q^-1] via fraction-free Bareiss elimination.

    Multiplying a row by a power of q is harmless, so entries are first
    shifted to honest polynomials; Bareiss divisions are then exact.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    # Shift each row so all entries have nonnegative support.
    for i, row in enumerate(m):
        exps = [x.min_exp() for x in row if not x.is_zero()]
        if exps:
            shift = -min(min(exps), 0)
            if shift:
                s = LaurentPoly.q_power(shift)
                m[i] = [x * s for x in row]
    nrows, ncols = len(m), len(m[0])
    prev = LaurentPoly.one()
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if not m[i][c].is_zero()), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                num = m[i][j] * piv - m[i][c] * m[r][j]
                m[i][j] = _laurent_exact_div(num, prev)
            m[i][c] = LaurentPoly.zero()
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def _laurent_exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact division in Z[q,q^-1]; Bareiss guarantees divisibility."""
    if num.is_zero():
        return num
    if den == 1:
        return num
    nmap = {e: num.coeff(e) for e in num.support()}
    dsup = den.support()
    dlead = dsup[-1]
    dcoef = den.coeff(dlead)
    out: dict[int, int] = {}
    while nmap:
        e = max(nmap)
        a = nmap[e]
        qexp = e - dlead
        qc, rem = divmod(a, dcoef)
        if rem:
            raise ArithmeticError("non-exact division in Bareiss elimination")
        out[qexp] = qc
        for de in dsup:
            ne = qexp + de
            na = nmap.get(ne, 0) - qc * den.coeff(de)
            if na:
                nmap[ne] = na
            elif ne in nmap:
                del nmap[ne]
    return LaurentPoly(out)
