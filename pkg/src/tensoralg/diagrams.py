"""The red/black strand diagram algebra and its straightening engine.

An idempotent is a crossingless arrangement of n black strands labeled by
simple roots and ℓ red strands labeled by dominant weights; a basis
diagram is an idempotent, a merged-strand permutation that never inverts
two reds, and a vector of dots on the black strands at the top boundary.
Products are computed by stacking and rewriting back to this basis with
the local relations:

* quiver Hecke relations between black strands (dot slides with ±1
  corrections at equal labels, double crossings collapsing to 0 or to
  Q_ij on the dots, braid moves with a divided-difference correction in
  the i-j-i pattern);
* black dots and black crossings pass red strands, a black/black
  crossing passing a red of weight λ costing δ_{ij} Σ_{a+b+1=λ^i} dots;
* a black strand crossing a red and returning costs λ^i dots.

Every rewrite strictly reduces (number of crossings, dots below
crossings), so normalization terminates; products of normal forms are
memoized aggressively since blocks reuse the same small Hom components
over and over.

Orientation convention, pinned once for the whole package: reading a
diagram upward, a black strand moving to the *right* through a red strand
is the crossing that the polynomial representation multiplies by
y_k^{λ^i}; its mirror acts by the identity.  The cost relation above is
the composite of one crossing of each kind, in either order.
"""

from __future__ import annotations

import re
from itertools import permutations
from typing import Iterable, Sequence

from .cartan import CartanDatum, QMatrix, Weight
from .qtensor import check_kappa
from .scalars import QQ

IdemKey = tuple[tuple[int, ...], tuple[int, ...]]  # (I, kappa)
DiagKey = tuple[IdemKey, tuple[int, ...], tuple[int, ...]]  # (idem, w, dots)


class RedCrossingError(ValueError):
    """Red strands never cross; asking for it is a structural error."""


class WordError(ValueError):
    """A generic word event is out of range for its idempotent."""


def idem_key(I: Sequence[int], kappa: Sequence[int]) -> IdemKey:
    I = tuple(int(i) for i in I)
    return I, check_kappa(kappa, len(I))


def merged_sequence(idem: IdemKey, ell: int) -> tuple[tuple[str, int], ...]:
    """Bottom boundary, left to right: ('b', black index) / ('r', red index)."""
    I, kappa = idem
    seq: list[tuple[str, int]] = []
    r = 0
    for b in range(len(I) + 1):
        while r < ell and kappa[r] == b:
            seq.append(("r", r))
            r += 1
        if b < len(I):
            seq.append(("b", b))
    if r != ell:
        raise WordError("kappa places a red strand beyond the black count")
    return tuple(seq)


def perm_of_word(word: Iterable[int], m: int) -> tuple[int, ...]:
    """One-line permutation of a crossing word read bottom to top."""
    arr = list(range(m))  # arr[slot] = strand
    for p in word:
        if p < 0 or p + 1 >= m:
            raise WordError(f"crossing at slot {p} out of range")
        arr[p], arr[p + 1] = arr[p + 1], arr[p]
    w = [0] * m
    for slot, strand in enumerate(arr):
        w[strand] = slot
    return tuple(w)


def canonical_word(w: Sequence[int]) -> tuple[int, ...]:
    """The fixed reduced word: bubble the strand bound for slot 0 to the
    front, then recurse on the rest (straight selection)."""
    m = len(w)
    cur = list(range(m))  # cur[slot] = strand
    word: list[int] = []
    for target in range(m):
        x = w.index(target) if isinstance(w, tuple) else list(w).index(target)
        s = cur.index(x)
        for p in range(s - 1, target - 1, -1):
            word.append(p)
            cur[p], cur[p + 1] = cur[p + 1], cur[p]
    return tuple(word)


def inversions(w: Sequence[int]) -> list[tuple[int, int]]:
    m = len(w)
    return [(x, y) for x in range(m) for y in range(x + 1, m) if w[x] > w[y]]


def tits_moves(V: Sequence[int], target: Sequence[int]) -> list[tuple[str, int]]:
    """A deterministic Tits path between two reduced words of one permutation.

    Moves are ('c', idx): swap distant letters idx, idx+1, and ('b', idx):
    braid (a, b, a) -> (b, a, b) at idx..idx+2.  Fixes the target word one
    letter at a time using the exchange property.
    """
    cur = list(V)
    moves: list[tuple[str, int]] = []

    def apply(kind: str, idx: int):
        if kind == "c":
            cur[idx], cur[idx + 1] = cur[idx + 1], cur[idx]
        else:
            a, b = cur[idx], cur[idx + 1]
            cur[idx : idx + 3] = [b, a, b]
        moves.append((kind, idx))

    def surface(start: int, c: int):
        if cur[start] == c:
            return
        r = cur[start]
        surface(start + 1, c)
        if abs(r - c) >= 2:
            apply("c", start)
        else:
            surface(start + 2, r)
            apply("b", start)

    for i, c in enumerate(target):
        surface(i, c)
    if cur != list(target):
        raise AssertionError("Tits path failed to reach the target word")
    return moves


class DiagramAlgebra:
    """The strand algebra for a fixed Cartan datum, Q-matrix, red labels
    and scalar field.  All rewriting state (memo tables) lives here."""

    def __init__(self, datum: CartanDatum, q: QMatrix, lambdas: Sequence[Weight], field=QQ):
        self.datum = datum
        self.q = q
        self.lambdas = tuple(lambdas)
        for lam in self.lambdas:
            datum.require_same(lam.datum)
            if not lam.is_dominant():
                raise ValueError("red labels must be dominant weights")
        self.ell = len(self.lambdas)
        self.field = field
        self._merged: dict[IdemKey, tuple] = {}
        self._cross_memo: dict[tuple, dict] = {}
        self._word_memo: dict[tuple, dict] = {}

    # -- boundary bookkeeping ---------------------------------------------------

    def merged(self, idem: IdemKey):
        seq = self._merged.get(idem)
        if seq is None:
            seq = merged_sequence(idem, self.ell)
            self._merged[idem] = seq
        return seq

    def strand_label(self, idem: IdemKey, strand: tuple[str, int]):
        kind, k = strand
        if kind == "b":
            return ("b", idem[0][k])
        return ("r", k)

    def top_sequence(self, idem: IdemKey, w: Sequence[int]):
        bot = self.merged(idem)
        top: list = [None] * len(bot)
        for slot, strand in enumerate(bot):
            top[w[slot]] = strand
        return tuple(top)

    def top_idem(self, idem: IdemKey, w: Sequence[int]) -> IdemKey:
        top = self.top_sequence(idem, w)
        I = tuple(idem[0][k] for kind, k in top if kind == "b")
        blacks = 0
        reds = []
        for kind, k in top:
            if kind == "b":
                blacks += 1
            else:
                reds.append((k, blacks))
        if [k for k, _ in reds] != list(range(self.ell)):
            raise RedCrossingError("permutation inverts a pair of red strands")
        return I, tuple(b for _, b in reds)

    def check_red_order(self, idem: IdemKey, w: Sequence[int]):
        bot = self.merged(idem)
        red_slots = [slot for slot, (kind, _) in enumerate(bot) if kind == "r"]
        tops = [w[s] for s in red_slots]
        if tops != sorted(tops):
            raise RedCrossingError("permutation inverts a pair of red strands")

    def black_index_at(self, seq, slot: int) -> int:
        """Position of the black strand at ``slot`` among blacks, or raise."""
        if seq[slot][0] != "b":
            raise WordError(f"slot {slot} is not a black strand")
        return sum(1 for s in range(slot) if seq[s][0] == "b")

    # -- degrees -------------------------------------------------------------------

    def crossing_degree(self, la, lb) -> int:
        d = self.datum
        if la[0] == "b" and lb[0] == "b":
            # <α_i, α_j> = d_j c_ij with the convention c_ij = α_j^∨(α_i)
            i, j = la[1], lb[1]
            return -d.sym[j] * d.cartan[i][j]
        if la[0] == "r" and lb[0] == "r":
            raise RedCrossingError("red strands never cross")
        i = la[1] if la[0] == "b" else lb[1]
        lam = self.lambdas[lb[1]] if la[0] == "b" else self.lambdas[la[1]]
        return d.root_pairing_coeff(i, lam)

    def diagram_degree(self, idem: IdemKey, w: Sequence[int], dots: Sequence[int]) -> int:
        bot = self.merged(idem)
        deg = 0
        for x, y in inversions(w):
            deg += self.crossing_degree(self.strand_label(idem, bot[x]), self.strand_label(idem, bot[y]))
        top = self.top_sequence(idem, w)
        labels = [idem[0][k] for kind, k in top if kind == "b"]
        for a, i in zip(dots, labels):
            deg += 2 * self.datum.sym[i] * a
        return deg

    # -- the rewriting core ------------------------------------------------------------

    def eval_word(self, idem: IdemKey, events: Sequence[tuple[str, int]]):
        """Normal form of a generic word (events bottom to top) over ``idem``.

        Returns ``{(w, dots): coeff}``; every produced key is a basis
        diagram over the same bottom idempotent.
        """
        events = tuple(events)
        key = (idem, events)
        hit = self._word_memo.get(key)
        if hit is not None:
            return dict(hit)
        m = len(self.merged(idem))
        acc = {(tuple(range(m)), (0,) * len(idem[0])): self.field.one()}
        for ev, p in events:
            if ev == "y":
                acc = self._acc_dot(idem, acc, p)
            elif ev == "s":
                nxt: dict = {}
                for (w, dots), c in acc.items():
                    for k2, c2 in self.term_times_s(idem, w, dots, p).items():
                        v = nxt.get(k2, self.field.zero()) + c * c2
                        if v:
                            nxt[k2] = v
                        elif k2 in nxt:
                            del nxt[k2]
                acc = nxt
            else:
                raise WordError(f"unknown event {ev!r}")
        self._word_memo[key] = dict(acc)
        return acc

    def _acc_dot(self, idem: IdemKey, acc: dict, p: int):
        out: dict = {}
        for (w, dots), c in acc.items():
            top = self.top_sequence(idem, w)
            if not (0 <= p < len(top)):
                raise WordError(f"dot at slot {p} out of range")
            k = self.black_index_at(top, p)
            nd = list(dots)
            nd[k] += 1
            key = (w, tuple(nd))
            v = out.get(key, self.field.zero()) + c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        return out

    def term_times_s(self, idem: IdemKey, w: tuple[int, ...], dots: tuple[int, ...], p: int):
        """(e ψ_w y^dots) · ψ_p in the basis, sliding dots off slots p, p+1
        first (with same-label corrections) and then crossing."""
        m = len(w)
        if not (0 <= p < m - 1):
            raise WordError(f"crossing at slot {p} out of range")
        top = self.top_sequence(idem, w)
        la, lb = (self.strand_label(idem, top[p]), self.strand_label(idem, top[p + 1]))
        if la[0] == "r" and lb[0] == "r":
            raise RedCrossingError("red strands never cross")
        one = self.field.one()
        same_black = la[0] == "b" and lb[0] == "b" and la[1] == lb[1]

        if same_black:
            ka = self.black_index_at(top, p)
            kb = ka + 1
            if dots[ka] > 0:
                nd = list(dots)
                nd[ka] -= 1
                sub = self.term_times_s(idem, w, tuple(nd), p)
                out = self._add_dot_at_slot(idem, sub, p + 1)
                key = (w, tuple(nd))
                out[key] = out.get(key, self.field.zero()) + one
                return _prune(out)
            if dots[kb] > 0:
                nd = list(dots)
                nd[kb] -= 1
                sub = self.term_times_s(idem, w, tuple(nd), p)
                out = self._add_dot_at_slot(idem, sub, p)
                key = (w, tuple(nd))
                out[key] = out.get(key, self.field.zero()) - one
                return _prune(out)
            # fall through with no dots on the crossed pair

        # Remaining dots ride along with their strands (swapping the pair's
        # entries when both are black; a red passing a black keeps indexing).
        moved = list(dots)
        if la[0] == "b" and lb[0] == "b":
            ka = self.black_index_at(top, p)
            moved[ka], moved[ka + 1] = moved[ka + 1], moved[ka]
        moved = tuple(moved)
        out: dict = {}
        for (w2, d2), c in self.crossing_on_basis(idem, w, p).items():
            key = (w2, tuple(a + b for a, b in zip(d2, moved)))
            v = out.get(key, self.field.zero()) + c
            if v:
                out[key] = v
            elif key in out:
                del out[key]
        return out

    def _add_dot_at_slot(self, idem: IdemKey, terms: dict, slot: int):
        out: dict = {}
        for (w, dots), c in terms.items():
            top = self.top_sequence(idem, w)
            k = self.black_index_at(top, slot)
            nd = list(dots)
            nd[k] += 1
            key = (w, tuple(nd))
            out[key] = out.get(key, self.field.zero()) + c
        return out

    def crossing_on_basis(self, idem: IdemKey, w: tuple[int, ...], p: int):
        """e ψ_w · ψ_p for a dot-free basis element; the memoized core."""
        key = (idem, w, p)
        hit = self._cross_memo.get(key)
        if hit is not None:
            return dict(hit)
        m = len(w)
        u = w.index(p)
        v = w.index(p + 1)
        la = self.strand_label(idem, self.merged(idem)[u])
        lb = self.strand_label(idem, self.merged(idem)[v])
        if la[0] == "r" and lb[0] == "r":
            raise RedCrossingError("red strands never cross")
        one = self.field.one()
        n = len(idem[0])
        zero_dots = (0,) * n

        if u < v:
            # First crossing of this pair; normalize the longer reduced word.
            wp = _compose_s(w, p)
            V = canonical_word(w) + (p,)
            if canonical_word(wp) == V:
                out = {(wp, zero_dots): one}
            else:
                out = self.reduced_to_element(idem, V)
        else:
            # The pair is already inverted: cancel the double crossing.
            wpp = _compose_s(w, p)
            X = dict(self.crossing_on_basis(idem, wpp, p))
            lead = X.pop((w, zero_dots), None)
            if lead is None or lead != one:
                raise AssertionError("straightening lost its unitriangular leading term")
            out = {}
            # ψ_w ψ_p = ψ_w'' (ψ_p ψ_p) - (lower terms) ψ_p
            toppp = self.top_sequence(idem, wpp)
            lv = self.strand_label(idem, toppp[p])
            lu = self.strand_label(idem, toppp[p + 1])
            if lv[0] == "b" and lu[0] == "b":
                if lv[1] != lu[1]:
                    kp = self.black_index_at(toppp, p)
                    for (a, b), coeff in self.q.entry(lv[1], lu[1]).items():
                        nd = [0] * n
                        nd[kp] += a
                        nd[kp + 1] += b
                        k2 = (wpp, tuple(nd))
                        out[k2] = out.get(k2, self.field.zero()) + self.field.from_int(coeff)
            else:
                # red/black bigon: λ^i dots on the black strand
                slot = p if lv[0] == "b" else p + 1
                i = (lv if lv[0] == "b" else lu)[1]
                lam = self.lambdas[(lu if lv[0] == "b" else lv)[1]]
                kblack = self.black_index_at(toppp, slot)
                nd = [0] * n
                nd[kblack] += lam.coords[i]
                k2 = (wpp, tuple(nd))
                out[k2] = out.get(k2, self.field.zero()) + one
            for (wl, dl), c in X.items():
                for k2, c2 in self.term_times_s(idem, wl, dl, p).items():
                    val = out.get(k2, self.field.zero()) - c * c2
                    if val:
                        out[k2] = val
                    elif k2 in out:
                        del out[k2]
        out = _prune(out)
        self._cross_memo[key] = dict(out)
        return out

    def reduced_to_element(self, idem: IdemKey, V: tuple[int, ...]):
        """Express ψ of an arbitrary reduced word in the basis by walking a
        Tits path to the canonical word, collecting braid corrections."""
        m = len(self.merged(idem))
        w_target = perm_of_word(V, m)
        cv = canonical_word(w_target)
        n = len(idem[0])
        if V == cv:
            return {(w_target, (0,) * n): self.field.one()}
        moves = tits_moves(V, cv)
        cur = list(V)
        corr: dict = {}
        for kind, t in moves:
            if kind == "b":
                a, b = cur[t], cur[t + 1]
                p = min(a, b)
                sign = 1 if a == p else -1
                labels = self._labels_below(idem, cur[:t])
                L0, L1, L2 = labels[p], labels[p + 1], labels[p + 2]
                poly = self._braid_correction(L0, L1, L2)
                for (e0, e1, e2), coeff in poly.items():
                    events = [("s", q) for q in cur[:t]]
                    events += [("y", p)] * e0 + [("y", p + 1)] * e1 + [("y", p + 2)] * e2
                    events += [("s", q) for q in cur[t + 3 :]]
                    sub = self.eval_word(idem, events)
                    fc = self.field.from_int(sign * coeff)
                    for k2, c2 in sub.items():
                        val = corr.get(k2, self.field.zero()) + fc * c2
                        if val:
                            corr[k2] = val
                        elif k2 in corr:
                            del corr[k2]
                cur[t : t + 3] = [b, a, b]
            else:
                cur[t], cur[t + 1] = cur[t + 1], cur[t]
        out = dict(corr)
        key = (w_target, (0,) * n)
        out[key] = out.get(key, self.field.zero()) + self.field.one()
        return _prune(out)

    def _labels_below(self, idem: IdemKey, word: Sequence[int]):
        arr = [self.strand_label(idem, s) for s in self.merged(idem)]
        for q in word:
            arr[q], arr[q + 1] = arr[q + 1], arr[q]
        return arr

    def _braid_correction(self, L0, L1, L2) -> dict[tuple[int, int, int], int]:
        """Correction monomials for the braid move with strand labels
        (L0, L1, L2) left to right below the pattern; {} when exact."""
        if L0[0] != "b" or L2[0] != "b" or L0[1] != L2[1]:
            return {}
        i = L0[1]
        if L1[0] == "r":
            lam_i = self.lambdas[L1[1]].coords[i]
            return {(bb, 0, aa): 1 for aa in range(lam_i) for bb in [lam_i - 1 - aa]}
        j = L1[1]
        if j == i:
            return {}
        out: dict[tuple[int, int, int], int] = {}
        for (a, b), c in self.q.entry(i, j).items():
            for k in range(a):
                key = (k, b, a - 1 - k)
                out[key] = out.get(key, 0) + c
                if not out[key]:
                    del out[key]
        return out


def _compose_s(w: tuple[int, ...], p: int) -> tuple[int, ...]:
    """s_p ∘ w: swap the values p and p+1."""
    return tuple(p + 1 if x == p else p if x == p + 1 else x for x in w)


def _prune(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


class Element:
    """A finite Z-linear (field-linear) combination of basis diagrams."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: DiagramAlgebra, terms: dict[DiagKey, object] | None = None):
        self.algebra = algebra
        self.terms = _prune(dict(terms or {}))

    # -- constructors ----------------------------------------------------------------

    @staticmethod
    def idempotent(algebra: DiagramAlgebra, I: Sequence[int], kappa: Sequence[int]) -> "Element":
        idem = idem_key(I, kappa)
        m = len(algebra.merged(idem))
        key = (idem, tuple(range(m)), (0,) * len(idem[0]))
        return Element(algebra, {key: algebra.field.one()})

    @staticmethod
    def basis_diagram(algebra: DiagramAlgebra, I, kappa, w, dots) -> "Element":
        idem = idem_key(I, kappa)
        w = tuple(w)
        if sorted(w) != list(range(len(algebra.merged(idem)))):
            raise WordError(f"{w} is not a permutation of the merged strands")
        algebra.check_red_order(idem, w)
        return Element(algebra, {(idem, w, tuple(dots)): algebra.field.one()})

    @staticmethod
    def from_word(algebra: DiagramAlgebra, I, kappa, events) -> "Element":
        """Normal form of a generic word over the idempotent e(I,κ)."""
        idem = idem_key(I, kappa)
        nf = algebra.eval_word(idem, tuple(events))
        return Element(algebra, {(idem, w, d): c for (w, d), c in nf.items()})

    # -- vector space structure ----------------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, self.algebra.field.zero()) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return Element(self.algebra, out)

    def __sub__(self, other: "Element") -> "Element":
        return self + other.scale(self.algebra.field.from_int(-1))

    def scale(self, c) -> "Element":
        return Element(self.algebra, {k: c * v for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, Element) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "Element(0)"
        bits = [f"({c}) {diagram_text(self.algebra, k)}" for k, c in sorted(self.terms.items())]
        return "Element[" + " + ".join(bits) + "]"

    # -- structure maps ------------------------------------------------------------------

    def multiply(self, other: "Element") -> "Element":
        """Stack ``other`` on top of ``self`` and straighten."""
        alg = self.algebra
        out: dict[DiagKey, object] = {}
        for (idem1, w1, d1), c1 in self.terms.items():
            top1 = alg.top_idem(idem1, w1)
            for (idem2, w2, d2), c2 in other.terms.items():
                if idem2 != top1:
                    continue
                acc = {(w1, d1): alg.field.one()}
                for ev in _diagram_events(alg, idem2, w2, d2):
                    nxt: dict = {}
                    for (w, d), c in acc.items():
                        step = (
                            alg.term_times_s(idem1, w, d, ev[1])
                            if ev[0] == "s"
                            else alg._acc_dot(idem1, {(w, d): c}, ev[1])
                        )
                        if ev[0] == "s":
                            for k2, c2b in step.items():
                                v = nxt.get(k2, alg.field.zero()) + c * c2b
                                if v:
                                    nxt[k2] = v
                                elif k2 in nxt:
                                    del nxt[k2]
                        else:
                            for k2, c2b in step.items():
                                v = nxt.get(k2, alg.field.zero()) + c2b
                                if v:
                                    nxt[k2] = v
                                elif k2 in nxt:
                                    del nxt[k2]
                    acc = nxt
                cc = c1 * c2
                for (w, d), c in acc.items():
                    k = (idem1, w, d)
                    v = out.get(k, alg.field.zero()) + cc * c
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
        return Element(alg, out)

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.multiply(other)
        return NotImplemented

    def flip(self) -> "Element":
        """The anti-automorphism reflecting diagrams top to bottom."""
        alg = self.algebra
        out: dict[DiagKey, object] = {}
        for (idem, w, dots), c in self.terms.items():
            new_bottom = alg.top_idem(idem, w)
            top = alg.top_sequence(idem, w)
            events: list[tuple[str, int]] = []
            k = 0
            for slot, strand in enumerate(top):
                if strand[0] == "b":
                    events += [("y", slot)] * dots[k]
                    k += 1
            events += [("s", p) for p in reversed(canonical_word(w))]
            nf = alg.eval_word(new_bottom, tuple(events))
            for (w2, d2), c2 in nf.items():
                k2 = (new_bottom, w2, d2)
                v = out.get(k2, alg.field.zero()) + c * c2
                if v:
                    out[k2] = v
                elif k2 in out:
                    del out[k2]
        return Element(alg, out)

    def degree_decomposition(self) -> dict[int, "Element"]:
        out: dict[int, dict] = {}
        for k, c in self.terms.items():
            d = self.algebra.diagram_degree(*k)
            out.setdefault(d, {})[k] = c
        return {d: Element(self.algebra, t) for d, t in sorted(out.items())}

    def degree(self) -> int | None:
        """The common degree of all terms; raises if mixed, None if zero."""
        degs = {self.algebra.diagram_degree(*k) for k in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous element with degrees {sorted(degs)}")
        return degs.pop()

    # -- serialization ---------------------------------------------------------------------

    def to_json(self) -> list:
        out = []
        for (idem, w, dots), c in sorted(self.terms.items()):
            out.append(
                {
                    "I": list(idem[0]),
                    "kappa": list(idem[1]),
                    "w": list(w),
                    "dots": list(dots),
                    "coeff": str(c),
                }
            )
        return out

    @staticmethod
    def from_json(algebra: DiagramAlgebra, data) -> "Element":
        from fractions import Fraction

        terms: dict[DiagKey, object] = {}
        for t in data:
            idem = idem_key(t["I"], t["kappa"])
            w = tuple(int(x) for x in t["w"])
            algebra.check_red_order(idem, w)
            key = (idem, w, tuple(int(x) for x in t["dots"]))
            raw = t["coeff"]
            if algebra.field.characteristic == 0:
                c = Fraction(raw)
            else:
                c = algebra.field.from_int(int(str(raw).split(" ")[0]))
            terms[key] = terms.get(key, algebra.field.zero()) + c
        return Element(algebra, terms)


def _diagram_events(alg: DiagramAlgebra, idem: IdemKey, w, dots):
    events = [("s", p) for p in canonical_word(w)]
    top = alg.top_sequence(idem, w)
    k = 0
    for slot, strand in enumerate(top):
        if strand[0] == "b":
            events += [("y", slot)] * dots[k]
            k += 1
    return events


# -- text notation -----------------------------------------------------------------------


def diagram_text(alg: DiagramAlgebra, key: DiagKey) -> str:
    """Render like ``e[1,2|R@0,2] ; s3 s2 ; y1^2``.

    Idempotent labels are 1-based node names, crossing letters are 1-based
    slot numbers of the canonical word, dots are listed per top black
    strand.
    """
    (I, kappa), w, dots = key
    e = "e[" + ",".join(alg.datum.nodes[i] for i in I) + "|R@" + ",".join(map(str, kappa)) + "]"
    word = " ".join(f"s{p + 1}" for p in canonical_word(w)) or "1"
    ys = " ".join(f"y{k + 1}^{a}" if a > 1 else f"y{k + 1}" for k, a in enumerate(dots) if a) or "1"
    return f"{e} ; {word} ; {ys}"


_TEXT_RE = re.compile(r"^e\[(?P<I>[^|\]]*)\|R@(?P<K>[^\]]*)\]\s*;\s*(?P<W>[^;]*);\s*(?P<Y>.*)$")


def diagram_from_text(alg: DiagramAlgebra, text: str) -> Element:
    m = _TEXT_RE.match(text.strip())
    if not m:
        raise WordError(f"cannot parse diagram text {text!r}")
    names = [s.strip() for s in m.group("I").split(",") if s.strip()]
    I = [alg.datum.nodes.index(nm) for nm in names]
    kappa = [int(s) for s in m.group("K").split(",") if s.strip()] if m.group("K").strip() else []
    events: list[tuple[str, int]] = []
    wpart = m.group("W").strip()
    if wpart and wpart != "1":
        for tok in wpart.split():
            if not tok.startswith("s"):
                raise WordError(f"bad crossing token {tok!r}")
            events.append(("s", int(tok[1:]) - 1))
    ypart = m.group("Y").strip()
    idem = idem_key(I, kappa)
    if ypart and ypart != "1":
        seq_top = None
        for tok in ypart.split():
            mm = re.match(r"^y(\d+)(?:\^(\d+))?$", tok)
            if not mm:
                raise WordError(f"bad dot token {tok!r}")
            k = int(mm.group(1)) - 1
            a = int(mm.group(2) or 1)
            if seq_top is None:
                w = perm_of_word([p for ev, p in events if ev == "s"], len(alg.merged(idem)))
                seq_top = alg.top_sequence(idem, w)
                black_slots = [s for s, st in enumerate(seq_top) if st[0] == "b"]
            events += [("y", black_slots[k])] * a
    return Element.from_word(alg, I, kappa, events)


# -- basis enumeration ---------------------------------------------------------------------


def connecting_perms(alg: DiagramAlgebra, bottom: IdemKey, top: IdemKey):
    """All merged-strand permutations from ``bottom`` to ``top`` preserving
    red order and black labels."""
    bot = alg.merged(bottom)
    tp = alg.merged(top)
    if len(bot) != len(tp):
        return
    bot_blacks = [s for s, st in enumerate(bot) if st[0] == "b"]
    top_blacks = [s for s, st in enumerate(tp) if st[0] == "b"]
    bot_reds = {st[1]: s for s, st in enumerate(bot) if st[0] == "r"}
    top_reds = {st[1]: s for s, st in enumerate(tp) if st[0] == "r"}
    if set(bot_reds) != set(top_reds):
        return
    by_label: dict[int, list[int]] = {}
    for s in top_blacks:
        by_label.setdefault(top[0][alg.black_index_at(tp, s)], []).append(s)
    # group bottom blacks by label, in order
    groups: dict[int, list[int]] = {}
    for s in bot_blacks:
        groups.setdefault(bottom[0][alg.black_index_at(bot, s)], []).append(s)
    if {k: len(v) for k, v in groups.items()} != {k: len(v) for k, v in by_label.items()}:
        return
    labels = sorted(groups)
    pools = [list(permutations(by_label[lab])) for lab in labels]

    def rec(gi, assignment):
        if gi == len(labels):
            w = [0] * len(bot)
            for rj, s in bot_reds.items():
                w[s] = top_reds[rj]
            for lab, perm in assignment.items():
                for src, dst in zip(groups[lab], perm):
                    w[src] = dst
            wt = tuple(w)
            try:
                alg.check_red_order(bottom, wt)
            except RedCrossingError:
                return
            yield wt
            return
        for perm in pools[gi]:
            assignment[labels[gi]] = perm
            yield from rec(gi + 1, assignment)
        assignment.pop(labels[gi], None)

    yield from rec(0, {})


def basis_enumerate(alg: DiagramAlgebra, bottom: IdemKey, top: IdemKey, lo: int, hi: int):
    """All basis diagrams in the Hom component with degree in [lo, hi]."""
    out = []
    n = len(bottom[0])
    dlist = [2 * alg.datum.sym[i] for i in top[0]]
    for w in connecting_perms(alg, bottom, top):
        base = alg.diagram_degree(bottom, w, (0,) * n)
        if base > hi:
            continue
        for dots in _dot_vectors(dlist, lo - base, hi - base):
            out.append((bottom, w, dots))
    return out


def _dot_vectors(weights: list[int], lo: int, hi: int):
    """All nonnegative vectors with Σ weights[k]·a_k in [lo, hi]."""
    if hi < 0:
        return
    n = len(weights)

    def rec(k, remaining_hi, acc):
        if k == n:
            total = hi - remaining_hi
            if total >= lo:
                yield tuple(acc)
            return
        a = 0
        while a * weights[k] <= remaining_hi:
            acc.append(a)
            yield from rec(k + 1, remaining_hi - a * weights[k], acc)
            acc.pop()
            a += 1

    yield from rec(0, hi, [])
