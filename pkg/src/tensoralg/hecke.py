"""The cyclotomic degenerate affine Hecke algebra H^λ and its dimension
comparison with single-red quotient blocks in type A.

H^λ_d is spanned by x_1^{a_1}..x_d^{a_d} w with 0 <= a_k < N and w in the
symmetric group, N = Σ λ^i the level; the defining relations are

    s_i x_j = x_{s_i(j)} s_i - δ_{j,i} + δ_{j,i+1},    Π_i (x_1 - i)^{λ^i} = 0.

Everything is exact over Q.  Weight idempotents come from simultaneous
generalized eigenprojections of the commuting left multiplications by the
x_k (their spectra are integers), and the bridge certificate checks the
images of the dot relations plus ungraded block-dimension equality
against the diagram side.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

from .cartan import CartanDatum, Weight
from .linalg import rank, solve
from .scalars import QQ

Perm = tuple[int, ...]  # one-line: w[i] = image of i (0-based)
HKey = tuple[tuple[int, ...], Perm]  # (exponents, permutation)


def _perm_mul(u: Perm, v: Perm) -> Perm:
    """(u v)(i) = u(v(i))."""
    return tuple(u[v[i]] for i in range(len(u)))


def _perm_id(d: int) -> Perm:
    return tuple(range(d))


def _s(d: int, i: int) -> Perm:
    w = list(range(d))
    w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


class HeckeAlgebra:
    """H^λ_d for a dominant sl_n-type weight λ, over Q."""

    def __init__(self, datum: CartanDatum, lam: Weight, d: int):
        datum.require_same(lam.datum)
        self.datum = datum
        self.lam = lam
        self.d = d
        self.level = sum(lam.coords)
        if self.level <= 0:
            raise ValueError("the cyclotomic level must be positive")
        # cyclotomic polynomial Π_i (t - i)^{λ^i}; node i is the integer i+1
        coeffs = [Fraction(1)]
        for i, m in enumerate(lam.coords):
            for _ in range(m):
                coeffs = _poly_shift_mul(coeffs, Fraction(i + 1))
        self.cyc = coeffs  # monic, degree = level
        self._nf_cache: dict = {}
        self._xk_reduction: dict[int, dict[HKey, Fraction]] = {}
        self.basis = self._make_basis()
        self.index = {k: i for i, k in enumerate(self.basis)}

    def _make_basis(self) -> list[HKey]:
        exps = list(product(range(self.level), repeat=self.d))
        perms = sorted(permutations(range(self.d)))
        return [(e, w) for e in exps for w in perms]

    # -- normal form sums --------------------------------------------------------

    def zero(self) -> dict[HKey, Fraction]:
        return {}

    def one(self) -> dict[HKey, Fraction]:
        return {((0,) * self.d, _perm_id(self.d)): Fraction(1)}

    def gen_x(self, k: int) -> dict[HKey, Fraction]:
        e = [0] * self.d
        e[k] = 1
        return self.reduce({(tuple(e), _perm_id(self.d)): Fraction(1)})

    def gen_s(self, i: int) -> dict[HKey, Fraction]:
        return {((0,) * self.d, _s(self.d, i)): Fraction(1)}

    @staticmethod
    def add(a: dict, b: dict) -> dict:
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, Fraction(0)) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return out

    @staticmethod
    def scale(a: dict, c: Fraction) -> dict:
        if not c:
            return {}
        return {k: c * v for k, v in a.items()}

    # -- multiplication ----------------------------------------------------------------

    def multiply(self, a: dict, b: dict) -> dict:
        out: dict[HKey, Fraction] = {}
        for (ea, wa), ca in a.items():
            for (eb, wb), cb in b.items():
                for k, c in self._mul_basis((ea, wa), (eb, wb)).items():
                    v = out.get(k, Fraction(0)) + ca * cb * c
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
        return out

    def _mul_basis(self, A: HKey, B: HKey) -> dict[HKey, Fraction]:
        key = (A, B)
        hit = self._nf_cache.get(key)
        if hit is not None:
            return hit
        (ea, wa), (eb, wb) = A, B
        # x^{ea} wa x^{eb} wb: move wa past x^{eb} one letter at a time.
        word = _reduced_word(wa)
        terms = {(eb, wb): Fraction(1)}
        for i in reversed(word):
            nxt: dict[HKey, Fraction] = {}
            for (e, w), c in terms.items():
                for k2, c2 in self._s_times(e, w, i).items():
                    v = nxt.get(k2, Fraction(0)) + c * c2
                    if v:
                        nxt[k2] = v
                    elif k2 in nxt:
                        del nxt[k2]
            terms = nxt
        out: dict[HKey, Fraction] = {}
        for (e, w), c in terms.items():
            ne = tuple(x + y for x, y in zip(ea, e))
            for k2, c2 in self.reduce({(ne, w): Fraction(1)}).items():
                v = out.get(k2, Fraction(0)) + c * c2
                if v:
                    out[k2] = v
                elif k2 in out:
                    del out[k2]
        self._nf_cache[key] = out
        return out

    def _s_times(self, e: tuple[int, ...], w: Perm, i: int) -> dict[HKey, Fraction]:
        """s_i · (x^e w) in normal form x^* ( s_i-shuffled perm )."""
        # s_i x^e = x^{s_i e} s_i + correction(e_i, e_{i+1}) · x^{rest}
        a, b = e[i], e[i + 1]
        se = list(e)
        se[i], se[i + 1] = se[i + 1], se[i]
        out = {(tuple(se), _perm_mul(_s(self.d, i), w)): Fraction(1)}
        # s x_i = x_{i+1} s - 1; iterating gives the divided-difference sum:
        # s x_i^a x_{i+1}^b = x_i^b x_{i+1}^a s - Σ ... ; exponents at the
        # untouched positions ride along on the correction terms.
        corr = _daha_correction(a, b, i, self.d)
        for ce, cc in corr.items():
            full = list(e)
            full[i], full[i + 1] = ce[i], ce[i + 1]
            k = (tuple(full), w)
            v = out.get(k, Fraction(0)) + cc
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return out

    def reduce(self, terms: dict[HKey, Fraction]) -> dict[HKey, Fraction]:
        """Rewrite so every exponent is < N, using the cyclotomic relation
        on x_1 and x_k^N = s x_{k-1}^N s + lower."""
        out: dict[HKey, Fraction] = {}
        work = dict(terms)
        while work:
            (e, w), c = work.popitem()
            k = next((j for j in range(self.d) if e[j] >= self.level), None)
            if k is None:
                v = out.get((e, w), Fraction(0)) + c
                if v:
                    out[(e, w)] = v
                elif (e, w) in out:
                    del out[(e, w)]
                continue
            red = self._xk_power_reduction(k)
            ne = list(e)
            ne[k] -= self.level
            rest = {(tuple(ne), _perm_id(self.d)): Fraction(1)}
            prod = self.multiply_raw(rest, red)
            prod = self.multiply_raw(prod, {((0,) * self.d, w): Fraction(1)})
            for k2, c2 in prod.items():
                v = work.get(k2, Fraction(0)) + c * c2
                if v:
                    work[k2] = v
                elif k2 in work:
                    del work[k2]
        return out

    def multiply_raw(self, a: dict, b: dict) -> dict:
        """Multiplication without cyclotomic reduction (exponents free)."""
        out: dict[HKey, Fraction] = {}
        for (ea, wa), ca in a.items():
            word = _reduced_word(wa)
            for (eb, wb), cb in b.items():
                terms = {(eb, wb): Fraction(1)}
                for i in reversed(word):
                    nxt: dict[HKey, Fraction] = {}
                    for (e, w), c in terms.items():
                        for k2, c2 in self._s_times(e, w, i).items():
                            v = nxt.get(k2, Fraction(0)) + c * c2
                            if v:
                                nxt[k2] = v
                            elif k2 in nxt:
                                del nxt[k2]
                    terms = nxt
                for (e, w), c in terms.items():
                    ne = tuple(x + y for x, y in zip(ea, e))
                    key = (ne, w)
                    v = out.get(key, Fraction(0)) + ca * cb * c
                    if v:
                        out[key] = v
                    elif key in out:
                        del out[key]
        return out

    def _xk_power_reduction(self, k: int) -> dict[HKey, Fraction]:
        """Normal form of x_k^N (total degree < N), built inductively:
        x_1^N from the cyclotomic polynomial, and
        x_{k}^N = s_{k-1} x_{k-1}^N s_{k-1} + (lower degree)."""
        hit = self._xk_reduction.get(k)
        if hit is not None:
            return hit
        N = self.level
        if k == 0:
            out = {}
            for j in range(N):
                e = [0] * self.d
                e[0] = j
                out[(tuple(e), _perm_id(self.d))] = -self.cyc[j]
        else:
            prev = self._xk_power_reduction(k - 1)
            s = {((0,) * self.d, _s(self.d, k - 1)): Fraction(1)}
            conj = self.multiply_raw(self.multiply_raw(s, prev), s)
            # x_k^N = s x_{k-1}^N s + [x_k^N - s x_{k-1}^N s], the bracket
            # having total degree < N; compute it by expanding
            # (s x_{k-1} s + s·s...) — equivalently x_k = s x_{k-1} s + s:
            # x_k^N - s x_{k-1}^N s = Σ over words mixing the two summands.
            mix = self._mixed_power(k, N)
            out = self.add(conj, mix)
            out = self._resolve(out)
        self._xk_reduction[k] = out
        return out

    def _mixed_power(self, k: int, N: int) -> dict[HKey, Fraction]:
        """(u+v)^N − u^N for u = s x_{k-1} s, v = s (so x_k = u+v)."""
        u = self.multiply_raw(
            self.multiply_raw({((0,) * self.d, _s(self.d, k - 1)): Fraction(1)}, self.gen_x_raw(k - 1)),
            {((0,) * self.d, _s(self.d, k - 1)): Fraction(1)},
        )
        v = {((0,) * self.d, _s(self.d, k - 1)): Fraction(1)}
        total = self.add(u, v)
        acc = self.one()
        for _ in range(N):
            acc = self.multiply_raw(acc, total)
        upow = self.one()
        for _ in range(N):
            upow = self.multiply_raw(upow, u)
        return self.add(acc, self.scale(upow, Fraction(-1)))

    def gen_x_raw(self, k: int) -> dict[HKey, Fraction]:
        e = [0] * self.d
        e[k] = 1
        return {(tuple(e), _perm_id(self.d)): Fraction(1)}

    def _resolve(self, terms: dict[HKey, Fraction]) -> dict[HKey, Fraction]:
        """Reduce any residual exponent >= N (recursion on total degree)."""
        out: dict[HKey, Fraction] = {}
        work = dict(terms)
        while work:
            (e, w), c = work.popitem()
            k = next((j for j in range(self.d) if e[j] >= self.level), None)
            if k is None:
                v = out.get((e, w), Fraction(0)) + c
                if v:
                    out[(e, w)] = v
                elif (e, w) in out:
                    del out[(e, w)]
                continue
            red = self._xk_power_reduction(k)
            ne = list(e)
            ne[k] -= self.level
            prod = self.multiply_raw({(tuple(ne), _perm_id(self.d)): Fraction(1)}, red)
            prod = self.multiply_raw(prod, {((0,) * self.d, w): Fraction(1)})
            for k2, c2 in prod.items():
                v = work.get(k2, Fraction(0)) + c * c2
                if v:
                    work[k2] = v
                elif k2 in work:
                    del work[k2]
        return out

    # -- vectors and operators ----------------------------------------------------------

    def to_vector(self, a: dict) -> list[Fraction]:
        v = [Fraction(0)] * len(self.basis)
        for k, c in a.items():
            v[self.index[k]] = c
        return v

    def left_mult_matrix(self, a: dict) -> list[list[Fraction]]:
        n = len(self.basis)
        mat = [[Fraction(0)] * n for _ in range(n)]
        for j, bk in enumerate(self.basis):
            img = self.multiply(a, {bk: Fraction(1)})
            for k, c in img.items():
                mat[self.index[k]][j] = c
        return mat

    def dim(self) -> int:
        return len(self.basis)

    def regular_rank(self) -> int:
        """Rank of the span of all pairwise basis products; equals the
        basis count N^d d! when the rewriting is consistent."""
        rows = []
        for b1 in self.basis:
            for b2 in self.basis:
                rows.append(self.to_vector(self._mul_basis(b1, b2)))
        return rank(rows, QQ)


def _poly_shift_mul(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    """coeffs(t) * (t - root), low-to-high coefficient lists."""
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i + 1] += c
        out[i] -= c * root
    return out


def _reduced_word(w: Perm) -> list[int]:
    """Bubble-sort reduced word for w (letters act on positions)."""
    arr = list(w)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                word.append(i)
                changed = True
    word.reverse()
    return word


def _daha_correction(a: int, b: int, i: int, d: int) -> dict[tuple[int, ...], Fraction]:
    """s x_i^a x_{i+1}^b = x_i^b x_{i+1}^a s + Σ corr: the correction
    monomials (no permutation part) from iterating s x_i = x_{i+1} s - 1."""
    # Known closed form: for a > b: -Σ_{t=b}^{a-1} x_i^t x_{i+1}^{a+b-1-t}
    #                    for a < b: +Σ_{t=a}^{b-1} x_i^t x_{i+1}^{a+b-1-t}
    out: dict[tuple[int, ...], Fraction] = {}
    if a == b:
        return out
    lo, hi, sgn = (b, a, -1) if a > b else (a, b, 1)
    for t in range(lo, hi):
        e = [0] * d
        e[i] = t
        e[i + 1] = a + b - 1 - t
        out[tuple(e)] = Fraction(sgn)
    return out


# -- weight idempotents -------------------------------------------------------------------


def x_spectra(H: HeckeAlgebra) -> list[list[tuple[Fraction, int]]]:
    """Integer spectra (with min-poly multiplicities) of the commuting
    left multiplications L_{x_k}."""
    out = []
    for k in range(H.d):
        mat = H.left_mult_matrix(H.gen_x(k))
        mp = _matrix_min_poly(mat)
        roots = _int_roots(mp)
        out.append(roots)
    return out


def _matrix_min_poly(mat) -> list[Fraction]:
    n = len(mat)
    vecs = [_flatten_identity(n)]
    cur = _flatten_identity(n)
    while True:
        cur = _mat_mul_flat(mat, cur)
        vecs.append(cur)
        sol = solve(vecs[:-1], vecs[-1], QQ)
        if sol is not None:
            return [-c for c in sol] + [Fraction(1)]
        if len(vecs) > n * n + 1:
            raise RuntimeError("minimal polynomial not found")


def _flatten_identity(n):
    return [Fraction(1) if i == j else Fraction(0) for i in range(n) for j in range(n)]


def _mat_mul_flat(mat, flat):
    n = len(mat)
    m = [[flat[i * n + j] for j in range(n)] for i in range(n)]
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if mat[i][k]:
                mik = mat[i][k]
                for j in range(n):
                    if m[k][j]:
                        out[i][j] += mik * m[k][j]
    return [out[i][j] for i in range(n) for j in range(n)]


def _int_roots(coeffs: list[Fraction]) -> list[tuple[Fraction, int]]:
    """Roots of a monic integer-rooted polynomial with multiplicities;
    raises if a non-integer root is detected."""
    work = list(coeffs)
    roots: dict[Fraction, int] = {}
    while len(work) > 1:
        found = None
        bound = 1 + max(abs(c) for c in work)
        cand = [Fraction(0)]
        for v in range(1, int(bound) + 2):
            cand += [Fraction(v), Fraction(-v)]
        for r in cand:
            if _poly_eval(work, r) == 0:
                found = r
                break
        if found is None:
            raise RuntimeError("non-integer eigenvalue in cyclotomic dAHA spectrum")
        roots[found] = roots.get(found, 0) + 1
        out = [Fraction(0)] * (len(work) - 1)
        acc = Fraction(0)
        for k in range(len(work) - 1, 0, -1):
            acc = work[k] + acc * found
            out[k - 1] = acc
        work = out
    return sorted(roots.items())


def _poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def weight_idempotents(H: HeckeAlgebra) -> dict[tuple[int, ...], dict]:
    """e(I) for every integer eigenvalue sequence I with e(I) != 0.

    The spectral projector of x_k onto the generalized v-eigenspace is
    1 - (1 - P)^{m_v} with P = Π_{u≠v} ((x_k - u)/(v - u))^{m_u}, the
    multiplicities taken from the minimal polynomial; this is ≡ 1 mod
    (t - v)^{m_v} and ≡ 0 mod every (t - u)^{m_u}, so it is the exact
    polynomial idempotent, never a numeric approximation.
    """
    spectra = x_spectra(H)
    projectors: list[dict[Fraction, dict]] = []
    for k in range(H.d):
        xk = H.gen_x(k)
        projs = {}
        for v, mv in spectra[k]:
            p = H.one()
            for u, mu in spectra[k]:
                if u == v:
                    continue
                factor = H.scale(H.add(xk, H.scale(H.one(), -u)), Fraction(1) / (v - u))
                for _ in range(mu):
                    p = H.multiply(p, factor)
            # e_v = 1 - (1 - P)^{m_v}
            q = H.add(H.one(), H.scale(p, Fraction(-1)))
            qpow = H.one()
            for _ in range(mv):
                qpow = H.multiply(qpow, q)
            projs[v] = H.add(H.one(), H.scale(qpow, Fraction(-1)))
        projectors.append(projs)
    out = {}
    seqs = [()]
    for k in range(H.d):
        seqs = [s + (v,) for s in seqs for v, _m in spectra[k]]
    for seq in seqs:
        e = H.one()
        for k, v in enumerate(seq):
            e = H.multiply(e, projectors[k][v])
            if not e:
                break
        if e:
            out[tuple(int(v) for v in seq)] = e
    return out


def block_dimension(H: HeckeAlgebra, eI: dict, eJ: dict) -> int:
    """dim e(I) H e(J) by exact rank of the sandwiched basis."""
    rows = []
    for bk in H.basis:
        el = H.multiply(H.multiply(eI, {bk: Fraction(1)}), eJ)
        rows.append(H.to_vector(el))
    return rank(rows, QQ)


def bk_check(H: HeckeAlgebra, datum: CartanDatum, lam: Weight, diagram_dims) -> dict:
    """The relation-and-dimension certificate for the dot correspondence
    y_j e(I) -> e(I)(x_j - i_j).

    ``diagram_dims`` maps (I, J) over node sequences to the ungraded
    dimension of e(I) T^λ e(J).  Checked: idempotency/orthogonality of the
    e(I), the cyclotomic dot relation, nilpotency of the dot images, dot
    commutativity, and the block-dimension match.
    """
    idems = weight_idempotents(H)
    report = {"relations": {}, "dims": {}, "ok": True}
    n = datum.rank
    # Γ-valued sequences correspond to diagram idempotents; the integer
    # label of node index i is i+1.
    gamma_seqs = [seq for seq in idems if all(1 <= v <= n for v in seq)]
    # orthogonal idempotents summing to the component identity
    total = H.zero()
    for seq, e in idems.items():
        total = H.add(total, e)
        ee = H.multiply(e, e)
        if ee != e:
            report["relations"][f"e{seq} idempotent"] = False
            report["ok"] = False
    report["relations"]["sum of all e(I) = 1"] = total == H.one()
    if total != H.one():
        report["ok"] = False
    for seq in gamma_seqs:
        e = idems[seq]
        # cyclotomic relation: (x_1 - i_1)^{λ^{i_1}} e(I) = 0
        i1 = seq[0] - 1
        f = H.add(H.gen_x(0), H.scale(H.one(), Fraction(-seq[0])))
        p = e
        for _ in range(lam.coords[i1]):
            p = H.multiply(p, f)
        key = f"(x_1 - {seq[0]})^{lam.coords[i1]} e{seq} = 0"
        report["relations"][key] = not p
        if p:
            report["ok"] = False
        # nilpotency of every dot image
        for j in range(H.d):
            g = H.add(H.gen_x(j), H.scale(H.one(), Fraction(-seq[j])))
            p = H.multiply(e, g)
            nil = dict(p)
            steps = 0
            while nil and steps <= H.dim():
                nil = H.multiply(nil, g)
                steps += 1
            report["relations"][f"(x_{j + 1} - {seq[j]}) e{seq} nilpotent"] = not nil
            if nil:
                report["ok"] = False
        # dot images commute
        for j in range(H.d):
            for k in range(j + 1, H.d):
                gj = H.multiply(idems[seq], H.gen_x(j))
                gk = H.multiply(idems[seq], H.gen_x(k))
                comm = H.add(H.multiply(gj, gk), H.scale(H.multiply(gk, gj), Fraction(-1)))
                if comm:
                    report["relations"][f"dots commute on e{seq}"] = False
                    report["ok"] = False
    # block dimension match
    for I, J in diagram_dims:
        want = diagram_dims[(I, J)]
        seqI = tuple(i + 1 for i in I)
        seqJ = tuple(j + 1 for j in J)
        eI = idems.get(seqI, H.zero())
        eJ = idems.get(seqJ, H.zero())
        got = block_dimension(H, eI, eJ) if eI and eJ else 0
        report["dims"][f"{seqI}|{seqJ}"] = {"hecke": got, "diagram": want, "match": got == want}
        if got != want:
            report["ok"] = False
    return report
