"""Evaluating Jones-Wenzl networks through the two-dimensional strand representation.

The Temperley-Lieb category with loop value ``q + q^-1`` acts on tensor powers of
``V = Q(q)^2``: the cup is ``|01> + q|10>``, the cap is ``q^-1 <01| + <10|``, and closing
a strand on the right inserts ``K = diag(q^-1, q)``.  The image of ``f^(n)`` preserves the
number of 1s (the weight) and on each weight space is a rank-one idempotent
``u_w v_w^T``, so a network built from projector-capped vertices can be stored by its
weight blocks alone.  This gives an evaluation of theta and tetrahedral networks that
is independent of the closed-form formulas and of the diagram calculus, and cheap
enough for edge labels up to about 8.
"""

from __future__ import annotations

import functools
from itertools import product
from typing import Iterable

from anfield.cyclotomic import CyclotomicNumber
from anfield.exact_linalg import solve

Vector = dict[tuple[int, ...], object]


def _admissible(a: int, b: int, c: int) -> bool:
    return min(a, b, c) >= 0 and (a + b + c) % 2 == 0 and a <= b + c and b <= a + c and c <= a + b


class StrandRepresentation:
    """``TL(q + q^-1)`` acting on ``(Q(q)^2)^{(x) n}``."""

    def __init__(self, q: CyclotomicNumber):
        self.q = q
        self.qinv = q.inverse()
        self.zero = q * 0
        self.one = self.zero + 1
        self.loop = q + self.qinv
        # cup[x][y] = coefficient of |xy> in the cup, cap[x][y] = value of the cap on |xy>
        self.cup = {(0, 1): self.one, (1, 0): q}
        self.cap = {(0, 1): self.qinv, (1, 0): self.one}
        self._jw: dict[int, dict[int, tuple[Vector, Vector]]] = {
            0: {0: ({(): self.one}, {(): self.one})},
            1: {0: ({(0,): self.one}, {(0,): self.one}), 1: ({(1,): self.one}, {(1,): self.one})},
        }
        self._delta = [self.one, self.loop]
        self._cache: dict = {}

    def chebyshev(self, n: int):
        while len(self._delta) <= n:
            self._delta.append(self.loop * self._delta[-1] - self._delta[-2])
        return self._delta[n]

    def closure_weight(self, n: int, w: int):
        """Scalar by which ``K^{(x) n}`` acts on a weight-``w`` vector: ``q^(2w - n)``."""
        return self.q ** (2 * w - n)

    # -- Jones-Wenzl projectors ------------------------------------------
    def jw_factors(self, n: int) -> dict[int, tuple[Vector, Vector]]:
        """``{w: (u_w, v_w)}`` with ``f^(n)`` restricted to weight ``w`` equal to ``u_w v_w^T``."""
        while max(self._jw) < n:
            self._extend()
        return self._jw[n]

    def _lifted(self, n: int, vec: Vector, transpose: bool) -> Vector:
        """Apply ``f^(n) (x) 1`` (or its transpose) to a vector on ``n + 1`` strands."""
        factors = self._jw[n]
        dots: dict[tuple[int, int], object] = {}
        for bits, c in vec.items():
            prefix, last = bits[:-1], bits[-1]
            w = sum(prefix)
            u, v = factors[w]
            coeff = (u if transpose else v).get(prefix)
            if coeff:
                key = (w, last)
                dots[key] = dots[key] + coeff * c if key in dots else coeff * c
        out: Vector = {}
        for (w, last), x in dots.items():
            if not x:
                continue
            u, v = factors[w]
            for p, cu in (v if transpose else u).items():
                key = p + (last,)
                out[key] = out[key] + cu * x if key in out else cu * x
        return out

    def _apply_e_last(self, vec: Vector, transpose: bool) -> Vector:
        """Apply ``e`` on the last two strands (or its transpose)."""
        out: Vector = {}
        if transpose:
            weights, image = self.cup, {(0, 1): self.qinv, (1, 0): self.one}
        else:
            weights, image = self.cap, self.cup
        for bits, c in vec.items():
            w = weights.get(bits[-2:])
            if w is None:
                continue
            scaled = c * w
            for tail, t in image.items():
                key = bits[:-2] + tail
                out[key] = out[key] + scaled * t if key in out else scaled * t
        return out

    def _apply_jw(self, n: int, vec: Vector, transpose: bool = False) -> Vector:
        """Apply ``f^(n+1)`` (built from ``f^(n)``) to a vector on ``n + 1`` strands."""
        a = self._lifted(n, vec, transpose)
        if n == 0:
            return a
        coeff = self.chebyshev(n - 1) / self.chebyshev(n)
        inner = self._lifted(n, self._apply_e_last(a, transpose), transpose)
        out = dict(a)
        for k, x in inner.items():
            out[k] = out[k] - coeff * x if k in out else -(coeff * x)
        return {k: x for k, x in out.items() if x}

    def _extend(self) -> None:
        n = max(self._jw)
        if not self.chebyshev(n):
            raise ZeroDivisionError(f"Delta_{n} vanishes, so f^({n + 1}) is undefined")
        factors = {}
        for w in range(n + 2):
            for ones in _positions(n + 1, w):
                x = tuple(1 if i in ones else 0 for i in range(n + 1))
                u = self._apply_jw(n, {x: self.one})
                pivot = u.get(x)
                if pivot:
                    z = self._apply_jw(n, {x: self.one}, transpose=True)
                    inv = 1 / pivot
                    factors[w] = (u, {k: c * inv for k, c in z.items()})
                    break
            else:
                raise ArithmeticError(f"no usable basis vector for weight {w} on {n + 1} strands")
        self._jw[n + 1] = factors

    # -- projector-capped vertices ---------------------------------------
    def split(self, c: int, a: int, b: int) -> "BlockMap":
        """Weight blocks of the vertex ``c -> a (x) b``."""
        key = ("split", c, a, b)
        if key not in self._cache:
            if not _admissible(a, b, c):
                raise ValueError(f"({a}, {b}, {c}) is not admissible")
            i, w = (a + c - b) // 2, (a + b - c) // 2
            fa, fb, fc = self.jw_factors(a), self.jw_factors(b), self.jw_factors(c)
            cups = self._nested(w, self.cup)
            data: dict = {}
            for wc, (uc, _) in fc.items():
                for bits, coeff in uc.items():
                    left, right = bits[:i], bits[i:]
                    for mid, cw in cups:
                        top = left + mid + right
                        pa, pb = top[:a], top[a:]
                        wa, wb = sum(pa), sum(pb)
                        va = fa[wa][1].get(pa)
                        if not va:
                            continue
                        vb = fb[wb][1].get(pb)
                        if not vb:
                            continue
                        k = ((wa, wb), (wc,))
                        val = coeff * cw * va * vb
                        data[k] = data[k] + val if k in data else val
            self._cache[key] = BlockMap(self, (c,), (a, b), data)
        return self._cache[key]

    def merge(self, a: int, b: int, c: int) -> "BlockMap":
        """Weight blocks of the vertex ``a (x) b -> c``."""
        key = ("merge", a, b, c)
        if key not in self._cache:
            if not _admissible(a, b, c):
                raise ValueError(f"({a}, {b}, {c}) is not admissible")
            w = (a + b - c) // 2
            fa, fb, fc = self.jw_factors(a), self.jw_factors(b), self.jw_factors(c)
            data: dict = {}
            for wa, (ua, _) in fa.items():
                for wb, (ub, _) in fb.items():
                    for ba, ca in ua.items():
                        for bb, cb in ub.items():
                            weight = ca * cb
                            for t in range(w):
                                cw = self.cap.get((ba[a - 1 - t], bb[t]))
                                if cw is None:
                                    break
                                weight = weight * cw
                            else:
                                out = ba[: a - w] + bb[w:]
                                wc = sum(out)
                                vc = fc[wc][1].get(out)
                                if vc:
                                    k = ((wc,), (wa, wb))
                                    val = weight * vc
                                    data[k] = data[k] + val if k in data else val
            self._cache[key] = BlockMap(self, (a, b), (c,), data)
        return self._cache[key]

    def identity(self, n: int) -> "BlockMap":
        return BlockMap(self, (n,), (n,), {((w,), (w,)): self.one for w in range(n + 1)})

    @staticmethod
    def _nested(w: int, table) -> list[tuple[tuple[int, ...], object]]:
        """States of ``w`` nested cups: position ``t`` pairs with ``2w - 1 - t``."""
        states = []
        for choice in product(((0, 1), (1, 0)), repeat=w):
            bits = [0] * (2 * w)
            coeff = None
            for t, (x, y) in enumerate(choice):
                bits[t], bits[2 * w - 1 - t] = x, y
                coeff = table[(x, y)] if coeff is None else coeff * table[(x, y)]
            states.append((tuple(bits), coeff if coeff is not None else 1))
        return states

    # -- dense images, for cross-checks against the diagram calculus ------
    def represent(self, morphism) -> dict[tuple[tuple[int, ...], tuple[int, ...]], object]:
        """Dense matrix ``{(out_bits, in_bits): value}`` of a Temperley-Lieb morphism.

        Coefficients of the morphism must already be numbers in the field of ``q``.
        """
        n, m = morphism.bottom, morphism.top
        out: dict = {}
        for d, coeff in morphism.items():
            for bits_in in product((0, 1), repeat=n):
                for bits_out in product((0, 1), repeat=m):
                    val = self._diagram_entry(d, bits_in, bits_out)
                    if val is not None:
                        k = (bits_out, bits_in)
                        out[k] = out[k] + coeff * val if k in out else coeff * val
        return {k: v for k, v in out.items() if v}

    def _diagram_entry(self, d, bits_in, bits_out):
        n = d.bottom
        value = self.one

        def bit(idx: int) -> int:
            return bits_in[idx] if idx < n else bits_out[d.top_index(0) - idx]

        for i, j in d.pairs():
            x, y = bit(i), bit(j)
            if j < n:  # cap on the bottom, i to the left of j
                w = self.cap.get((x, y))
            elif i >= n:  # cup on the top; larger index is further left
                w = self.cup.get((y, x))
            else:  # through strand
                w = self.one if x == y else None
            if w is None:
                return None
            value = value * w
        return value


def _positions(n: int, w: int) -> Iterable[frozenset[int]]:
    from itertools import combinations

    for combo in combinations(range(n), w):
        yield frozenset(combo)


class BlockMap:
    """A map between tensor products of projector-capped strands, stored by weight blocks.

    ``data[(target_weights, source_weights)]`` is the scalar ``v_target^T X u_source``.
    """

    __slots__ = ("rep", "source", "target", "data")

    def __init__(self, rep: StrandRepresentation, source: tuple[int, ...], target: tuple[int, ...], data: dict):
        self.rep = rep
        self.source = source
        self.target = target
        self.data = data

    def __matmul__(self, other: BlockMap) -> BlockMap:
        if self.source != other.target:
            raise ValueError(f"cannot compose {self.source} with {other.target}")
        by_mid: dict = {}
        for (mid, s), x in other.data.items():
            by_mid.setdefault(mid, []).append((s, x))
        data: dict = {}
        for (t, mid), y in self.data.items():
            for s, x in by_mid.get(mid, ()):
                k = (t, s)
                data[k] = data[k] + y * x if k in data else y * x
        return BlockMap(self.rep, other.source, self.target, data)

    def tensor(self, other: BlockMap) -> BlockMap:
        data = {}
        for (t1, s1), x in self.data.items():
            for (t2, s2), y in other.data.items():
                data[(t1 + t2, s1 + s2)] = x * y
        return BlockMap(self.rep, self.source + other.source, self.target + other.target, data)

    def trace(self):
        if self.source != self.target:
            raise ValueError("trace needs an endomorphism")
        total = self.rep.zero
        for (t, s), x in self.data.items():
            if t == s:
                weight = self.rep.one
                for n, w in zip(self.source, s):
                    weight = weight * self.rep.closure_weight(n, w)
                total = total + x * weight
        return total


# ---------------------------------------------------------------------------
# Theta and tetrahedral evaluations
# ---------------------------------------------------------------------------


def theta_value(rep: StrandRepresentation, a: int, b: int, c: int):
    """Theta network ``tr(merge_{a,b->c} o split_{c->a,b})``."""
    return (rep.merge(a, b, c) @ rep.split(c, a, b)).trace()


def sixj_block(rep: StrandRepresentation, k: int, a: int, b: int, c: int, d: int) -> dict[tuple[int, int], object]:
    """All coefficients ``x[e, f]`` with ``H_f = sum_e x[e, f] I_e`` for ``a (x) d -> b (x) c``.

    ``H_f`` passes the label ``f`` between an ``(a, b)`` vertex and a ``(c, d)`` vertex;
    ``I_e`` fuses ``a`` and ``d`` into ``e`` and splits it into ``b`` and ``c``.  The
    coefficients are found by pairing both sides with every ``I_e'`` through the trace
    and solving the resulting Gram system, so negligible morphisms drop out.
    """
    def ok(x, y, z):
        return _admissible(x, y, z) and max(x, y, z) <= k and x + y + z <= 2 * k

    es = [e for e in range(k + 1) if ok(a, d, e) and ok(b, c, e)]
    fs = [f for f in range(k + 1) if ok(a, b, f) and ok(c, d, f)]
    if not es or not fs:
        return {}
    i_maps = {e: rep.split(e, b, c) @ rep.merge(a, d, e) for e in es}
    i_daggers = {e: rep.split(e, a, d) @ rep.merge(b, c, e) for e in es}
    h_maps = {
        f: rep.identity(b).tensor(rep.merge(f, d, c)) @ rep.split(a, b, f).tensor(rep.identity(d))
        for f in fs
    }
    gram = [[(i_daggers[e2] @ i_maps[e1]).trace() for e2 in es] for e1 in es]
    rhs = [[(i_daggers[e2] @ h_maps[f]).trace() for f in fs] for e2 in es]
    # sum_e x[e, f] gram[e][e2] = rhs[e2][f]  ->  gram^T x = rhs
    gram_t = [[gram[j][i] for j in range(len(es))] for i in range(len(es))]
    x = solve(gram_t, rhs)
    return {(e, f): x[i][j] for i, e in enumerate(es) for j, f in enumerate(fs)}


@functools.lru_cache(maxsize=64)
def strand_representation(q: CyclotomicNumber) -> StrandRepresentation:
    return StrandRepresentation(q)
