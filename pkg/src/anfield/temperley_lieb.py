"""Temperley-Lieb diagrams, morphisms and Jones-Wenzl projectors.

A planar diagram with ``n`` bottom and ``m`` top boundary points is a non-crossing
perfect matching of ``n + m`` points numbered counterclockwise from the bottom-left:
bottom points are ``0 .. n-1`` from left to right, then the top points run from right to
left, so the top point at horizontal position ``t`` has index ``n + m - 1 - t``.

Morphisms are finite linear combinations of diagrams with coefficients in any exact
scalar ring (rationals, :class:`~anfield.cyclotomic.CyclotomicNumber` or
:class:`~anfield.symbolic.RationalFunction`).  Closed loops are removed as soon as they
form, each contributing a factor of the loop value ``delta``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "PlanarDiagram",
    "TLMorphism",
    "compose",
    "tensor",
    "identity",
    "generator",
    "cup",
    "cap",
    "all_diagrams",
    "chebyshev",
    "jones_wenzl",
    "markov_trace",
    "partial_trace",
    "level_equal",
    "vertex_split",
    "vertex_merge",
    "Compose",
    "Tensor",
    "Trace",
    "evaluate_network",
    "evaluate_closed_network",
    "theta_network",
    "tetrahedral_network",
]


# ---------------------------------------------------------------------------
# Diagrams
# ---------------------------------------------------------------------------


class PlanarDiagram:
    """A crossingless matching from ``bottom`` points to ``top`` points."""

    __slots__ = ("bottom", "top", "pairing", "_hash", "_factors")

    def __init__(self, bottom: int, top: int, pairing: Iterable[int]):
        pairing = tuple(pairing)
        if bottom < 0 or top < 0 or len(pairing) != bottom + top:
            raise ValueError(f"pairing of length {len(pairing)} does not fit {bottom} -> {top}")
        for i, j in enumerate(pairing):
            if not 0 <= j < len(pairing) or j == i or pairing[j] != i:
                raise ValueError(f"pairing {pairing} is not a fixed-point-free involution")
        stack: list[int] = []
        for i, j in enumerate(pairing):
            if j > i:
                stack.append(i)
            elif not stack or stack.pop() != j:
                raise ValueError(f"pairing {pairing} has crossing arcs")
        self.bottom = bottom
        self.top = top
        self.pairing = pairing
        self._hash = None
        self._factors = None

    @classmethod
    def _raw(cls, bottom: int, top: int, pairing: tuple[int, ...]) -> PlanarDiagram:
        obj = cls.__new__(cls)
        obj.bottom = bottom
        obj.top = top
        obj.pairing = pairing
        obj._hash = None
        obj._factors = None
        return obj

    @classmethod
    def from_pairs(cls, bottom: int, top: int, pairs: Iterable[Iterable[int]]) -> PlanarDiagram:
        pairing = [-1] * (bottom + top)
        for i, j in pairs:
            if pairing[i] != -1 or pairing[j] != -1:
                raise ValueError(f"boundary point used twice in {pairs}")
            pairing[i], pairing[j] = j, i
        if -1 in pairing:
            raise ValueError("every boundary point must be matched")
        return cls(bottom, top, pairing)

    def pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.pairing) if i < j]

    def to_json(self) -> dict:
        return {"bottom": self.bottom, "top": self.top, "pairs": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json(cls, data: Mapping) -> PlanarDiagram:
        return cls.from_pairs(int(data["bottom"]), int(data["top"]), data["pairs"])

    def top_index(self, position: int) -> int:
        """Boundary index of the top point at horizontal ``position``."""
        return self.bottom + self.top - 1 - position

    def through_strands(self) -> int:
        n = self.bottom
        return sum(1 for i in range(n) if self.pairing[i] >= n)

    def factor(self) -> tuple[PlanarDiagram, PlanarDiagram]:
        """Split as ``upper o lower`` through the through-strands.

        ``lower`` keeps the bottom arcs and sends the through-strands straight up;
        ``upper`` keeps the top arcs.  Composing the two never creates a loop.
        """
        if self._factors is None:
            n, m, p = self.bottom, self.top, self.pairing
            through = [(i, n + m - 1 - p[i]) for i in range(n) if p[i] >= n]
            t = len(through)
            low = list(range(n + t))
            up = list(range(t + m))
            for i in range(n):
                if p[i] < n:
                    low[i] = p[i]
            for r, (i, pos) in enumerate(through):
                low[i], low[n + t - 1 - r] = n + t - 1 - r, i
                up[r], up[t + m - 1 - pos] = t + m - 1 - pos, r
            for idx in range(n, n + m):
                j = p[idx]
                if j >= n:
                    up[t + (idx - n)] = t + (j - n)
            self._factors = (
                PlanarDiagram._raw(t, m, tuple(up)),
                PlanarDiagram._raw(n, t, tuple(low)),
            )
        return self._factors

    def dagger(self) -> PlanarDiagram:
        """Mirror image swapping top and bottom."""
        n, m, p = self.bottom, self.top, self.pairing

        def flip(idx: int) -> int:
            # bottom position i becomes top position i and vice versa
            if idx < n:
                return m + n - 1 - idx
            return n + m - 1 - idx

        out = [0] * (n + m)
        for i, j in enumerate(p):
            out[flip(i)] = flip(j)
        return PlanarDiagram._raw(m, n, tuple(out))

    def __eq__(self, other):
        if not isinstance(other, PlanarDiagram):
            return NotImplemented
        return self.bottom == other.bottom and self.top == other.top and self.pairing == other.pairing

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.bottom, self.top, self.pairing))
        return self._hash

    def __lt__(self, other: PlanarDiagram):
        return (self.bottom, self.top, self.pairing) < (other.bottom, other.top, other.pairing)

    def __repr__(self):
        return f"PlanarDiagram({self.bottom}, {self.top}, {self.pairs()})"


@functools.lru_cache(maxsize=1 << 18)
def _compose_diagrams(upper: PlanarDiagram, lower: PlanarDiagram) -> tuple[PlanarDiagram, int]:
    """Stack ``upper`` on ``lower``; return the resulting diagram and the number of loops."""
    n, m, p = lower.bottom, lower.top, upper.top
    if upper.bottom != m:
        raise ValueError(f"cannot compose {upper.bottom}-point bottom with {m}-point top")
    gp, fp = lower.pairing, upper.pairing
    total = n + p
    out = [-1] * total
    seen = [False] * m
    lower_top = n + m - 1  # lower's index of middle position j is lower_top - j
    upper_top = m + p - 1  # upper's index of its top position t is upper_top - t

    def walk_from_lower(x: int) -> int:
        # x is an index into lower's boundary that lies on the middle line
        while True:
            j = lower_top - x
            seen[j] = True
            y = fp[j]
            if y >= m:
                return n + p - 1 - (upper_top - y)
            seen[y] = True
            x = gp[lower_top - y]
            if x < n:
                return x

    def walk_from_upper(y: int) -> int:
        while True:
            seen[y] = True
            x = gp[lower_top - y]
            if x < n:
                return x
            j = lower_top - x
            seen[j] = True
            y = fp[j]
            if y >= m:
                return n + p - 1 - (upper_top - y)

    for i in range(n):
        if out[i] != -1:
            continue
        x = gp[i]
        target = x if x < n else walk_from_lower(x)
        out[i], out[target] = target, i
    for t in range(p):
        idx = n + p - 1 - t
        if out[idx] != -1:
            continue
        y = fp[upper_top - t]
        target = n + p - 1 - (upper_top - y) if y >= m else walk_from_upper(y)
        out[idx], out[target] = target, idx
    loops = 0
    for j in range(m):
        if not seen[j]:
            loops += 1
            start = j
            while True:
                seen[j] = True
                x = gp[lower_top - j]
                j2 = lower_top - x
                seen[j2] = True
                j = fp[j2]
                if j == start:
                    break
    return PlanarDiagram._raw(n, p, tuple(out)), loops


def _tensor_diagrams(left: PlanarDiagram, right: PlanarDiagram) -> PlanarDiagram:
    n1, m1, n2, m2 = left.bottom, left.top, right.bottom, right.top
    n, m = n1 + n2, m1 + m2

    def from_left(idx: int) -> int:
        if idx < n1:
            return idx
        return n + m - 1 - (n1 + m1 - 1 - idx)

    def from_right(idx: int) -> int:
        if idx < n2:
            return n1 + idx
        return n + m - 1 - (m1 + n2 + m2 - 1 - idx)

    out = [0] * (n + m)
    for i, j in enumerate(left.pairing):
        out[from_left(i)] = from_left(j)
    for i, j in enumerate(right.pairing):
        out[from_right(i)] = from_right(j)
    return PlanarDiagram._raw(n, m, tuple(out))


def _closure_loops(d: PlanarDiagram) -> int:
    """Number of loops in the Markov (right) closure of an endomorphism diagram."""
    n = d.bottom
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in d.pairs():
        a = i if i < n else 2 * n - 1 - i
        b = j if j < n else 2 * n - 1 - j
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return sum(1 for x in range(n) if find(x) == x)


def all_diagrams(bottom: int, top: int) -> list[PlanarDiagram]:
    """Every planar diagram ``bottom -> top`` (a Catalan number of them)."""
    total = bottom + top
    if total % 2:
        return []

    def matchings(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
        if not points:
            yield []
            return
        first = points[0]
        for k in range(1, len(points), 2):
            for inner in matchings(points[1:k]):
                for outer in matchings(points[k + 1 :]):
                    yield [(first, points[k])] + inner + outer

    return [PlanarDiagram.from_pairs(bottom, top, pairs) for pairs in matchings(tuple(range(total)))]


# ---------------------------------------------------------------------------
# Morphisms
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=4096)
def _loop_power(delta, loops: int):
    return delta**loops


def _accumulate(acc: dict, key, value) -> None:
    if key in acc:
        acc[key] = acc[key] + value
    else:
        acc[key] = value


class TLMorphism:
    """A linear combination of planar diagrams ``bottom -> top`` with loop value ``delta``."""

    __slots__ = ("bottom", "top", "delta", "_terms")

    def __init__(self, bottom: int, top: int, terms: Mapping[PlanarDiagram, object], delta):
        clean = {}
        for d, c in terms.items():
            if d.bottom != bottom or d.top != top:
                raise ValueError(f"diagram {d!r} is not a {bottom} -> {top} diagram")
            if c:
                clean[d] = c
        self.bottom = bottom
        self.top = top
        self.delta = delta
        self._terms = clean

    @classmethod
    def from_diagram(cls, diagram: PlanarDiagram, delta, coeff=1) -> TLMorphism:
        return cls(diagram.bottom, diagram.top, {diagram: delta * 0 + coeff}, delta)

    @classmethod
    def zero(cls, bottom: int, top: int, delta) -> TLMorphism:
        return cls(bottom, top, {}, delta)

    @property
    def terms(self) -> dict[PlanarDiagram, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def coefficient(self, diagram: PlanarDiagram):
        return self._terms.get(diagram, self.delta * 0)

    def is_zero(self) -> bool:
        return not self._terms

    def _check_shape(self, other: TLMorphism) -> None:
        if (self.bottom, self.top) != (other.bottom, other.top):
            raise ValueError(
                f"shape mismatch: {self.bottom} -> {self.top} vs {other.bottom} -> {other.top}"
            )

    def __add__(self, other):
        if not isinstance(other, TLMorphism):
            return NotImplemented
        self._check_shape(other)
        out = dict(self._terms)
        for d, c in other._terms.items():
            _accumulate(out, d, c)
        return TLMorphism(self.bottom, self.top, out, self.delta)

    def __neg__(self):
        return TLMorphism(self.bottom, self.top, {d: -c for d, c in self._terms.items()}, self.delta)

    def __sub__(self, other):
        if not isinstance(other, TLMorphism):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, TLMorphism):
            return NotImplemented
        return TLMorphism(self.bottom, self.top, {d: c * scalar for d, c in self._terms.items()}, self.delta)

    __rmul__ = __mul__

    def __matmul__(self, other: TLMorphism) -> TLMorphism:
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, TLMorphism):
            return NotImplemented
        return (self.bottom, self.top) == (other.bottom, other.top) and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def dagger(self) -> TLMorphism:
        return TLMorphism(
            self.top, self.bottom, {d.dagger(): c for d, c in self._terms.items()}, self.delta
        )

    def map_scalars(self, fn, delta) -> TLMorphism:
        """Apply ``fn`` to every coefficient, e.g. to specialise a symbolic morphism."""
        return TLMorphism(self.bottom, self.top, {d: fn(c) for d, c in self._terms.items()}, delta)

    def scalar(self):
        """The value of a closed (0 -> 0) morphism."""
        if self.bottom or self.top:
            raise ValueError(f"a {self.bottom} -> {self.top} morphism is not closed")
        return self.coefficient(PlanarDiagram._raw(0, 0, ()))

    def to_json(self, scalar_to_json) -> dict:
        rows = sorted(self._terms.items(), key=lambda kv: kv[0].pairing)
        return {
            "bottom": self.bottom,
            "top": self.top,
            "terms": [{"pairs": [list(p) for p in d.pairs()], "coeff": scalar_to_json(c)} for d, c in rows],
        }

    def __repr__(self):
        return f"TLMorphism({self.bottom} -> {self.top}, {len(self._terms)} terms)"


def compose(upper: TLMorphism, lower: TLMorphism) -> TLMorphism:
    """``upper o lower`` (``lower`` is applied first)."""
    if lower.top != upper.bottom:
        raise ValueError(f"cannot compose: {lower.top} top points against {upper.bottom} bottom points")
    delta = upper.delta
    # Factor each diagram of ``lower`` as U o L; the product upper o U depends only on U.
    groups: dict[PlanarDiagram, list] = {}
    for d, c in lower._terms.items():
        u, l = d.factor()
        groups.setdefault(u, []).append((l, c))
    out: dict[PlanarDiagram, object] = {}
    for u, lowers in groups.items():
        partial: dict[PlanarDiagram, object] = {}
        for e, c in upper._terms.items():
            r, loops = _compose_diagrams(e, u)
            _accumulate(partial, r, c * _loop_power(delta, loops) if loops else c)
        for r, x in partial.items():
            if not x:
                continue
            for l, c in lowers:
                r2, _ = _compose_diagrams(r, l)
                _accumulate(out, r2, x * c)
    return TLMorphism(lower.bottom, upper.top, out, delta)


def tensor(left: TLMorphism, right: TLMorphism) -> TLMorphism:
    """Place ``left`` to the left of ``right``."""
    out: dict[PlanarDiagram, object] = {}
    for d1, c1 in left._terms.items():
        for d2, c2 in right._terms.items():
            _accumulate(out, _tensor_diagrams(d1, d2), c1 * c2)
    return TLMorphism(left.bottom + right.bottom, left.top + right.top, out, left.delta)


def identity(n: int, delta) -> TLMorphism:
    return TLMorphism.from_diagram(PlanarDiagram._raw(n, n, tuple(2 * n - 1 - i for i in range(2 * n))), delta)


def generator(n: int, i: int, delta) -> TLMorphism:
    """The generator ``e_i`` on ``n`` strands, capping strands ``i`` and ``i+1`` (1-based)."""
    if not 1 <= i < n:
        raise ValueError(f"e_{i} does not exist on {n} strands")
    pairing = [2 * n - 1 - j for j in range(2 * n)]
    a, b = i - 1, i
    ta, tb = 2 * n - 1 - a, 2 * n - 1 - b
    pairing[a], pairing[b] = b, a
    pairing[ta], pairing[tb] = tb, ta
    return TLMorphism.from_diagram(PlanarDiagram._raw(n, n, tuple(pairing)), delta)


def cup(delta) -> TLMorphism:
    return TLMorphism.from_diagram(PlanarDiagram._raw(0, 2, (1, 0)), delta)


def cap(delta) -> TLMorphism:
    return TLMorphism.from_diagram(PlanarDiagram._raw(2, 0, (1, 0)), delta)


def _nested_cups(n: int, delta) -> TLMorphism:
    """``n`` nested cups: 0 -> 2n, joining top position i with 2n-1-i."""
    pairing = [0] * (2 * n)
    for i in range(2 * n):
        pairing[i] = 2 * n - 1 - i
    return TLMorphism.from_diagram(PlanarDiagram._raw(0, 2 * n, tuple(pairing)), delta)


def markov_trace(f: TLMorphism):
    """Close every strand around the right side and evaluate."""
    if f.bottom != f.top:
        raise ValueError("the trace needs an endomorphism")
    total = f.delta * 0
    for d, c in f._terms.items():
        total = total + c * _loop_power(f.delta, _closure_loops(d))
    return total


def partial_trace(f: TLMorphism, side: str = "right") -> TLMorphism:
    """Close only the rightmost (or leftmost) strand."""
    n = f.bottom
    if f.top != n or n == 0:
        raise ValueError("the partial trace needs a non-empty endomorphism")
    delta = f.delta
    rest = identity(n - 1, delta)
    one = identity(1, delta)
    if side == "right":
        return tensor(rest, cap(delta)) @ tensor(f, one) @ tensor(rest, cup(delta))
    if side == "left":
        return tensor(cap(delta), rest) @ tensor(one, f) @ tensor(cup(delta), rest)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def level_equal(f: TLMorphism, g: TLMorphism) -> bool:
    """Equality modulo the kernel of the trace pairing (equality in the semisimple quotient)."""
    f._check_shape(g)
    diff = f - g
    if diff.is_zero():
        return True
    for h in all_diagrams(f.top, f.bottom):
        if markov_trace(TLMorphism.from_diagram(h, f.delta) @ diff):
            return False
    return True


# ---------------------------------------------------------------------------
# Jones-Wenzl projectors
# ---------------------------------------------------------------------------


def chebyshev(n: int, delta):
    """``Delta_n``: ``Delta_0 = 1``, ``Delta_1 = delta``, ``Delta_{j+1} = delta Delta_j - Delta_{j-1}``."""
    prev, cur = delta * 0 + 1, delta
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, delta * cur - prev
    return cur


@functools.lru_cache(maxsize=128)
def jones_wenzl(n: int, delta) -> TLMorphism:
    """The Jones-Wenzl idempotent ``f^(n)`` by the Wenzl recursion.

    ``f^(j+1) = f^(j) x 1 - (Delta_{j-1} / Delta_j) (f^(j) x 1) e_j (f^(j) x 1)``.
    Raises ZeroDivisionError when some ``Delta_j`` with ``j < n`` vanishes.
    """
    if n < 0:
        raise ValueError("Jones-Wenzl index must be non-negative")
    if n <= 1:
        return identity(n, delta)
    prev = jones_wenzl(n - 1, delta)
    denom = chebyshev(n - 1, delta)
    if not denom:
        raise ZeroDivisionError(f"Delta_{n - 1} vanishes, so f^({n}) is undefined")
    coeff = chebyshev(n - 2, delta) / denom
    lifted = tensor(prev, identity(1, delta))
    middle = (lifted @ generator(n, n - 1, delta)) @ lifted
    return lifted - middle * coeff


# ---------------------------------------------------------------------------
# Trivalent vertices and closed networks
# ---------------------------------------------------------------------------


def _vertex_diagram(c: int, a: int, b: int) -> PlanarDiagram:
    i, w = (a + c - b) // 2, (a + b - c) // 2
    top = a + b
    pairing = [0] * (c + top)

    def t(pos: int) -> int:
        return c + top - 1 - pos

    for r in range(c):
        pos = r if r < i else a + w + (r - i)
        pairing[r], pairing[t(pos)] = t(pos), r
    for j in range(w):
        x, y = t(a - 1 - j), t(a + j)
        pairing[x], pairing[y] = y, x
    return PlanarDiagram._raw(c, top, tuple(pairing))


def _check_triple(a: int, b: int, c: int) -> None:
    if min(a, b, c) < 0 or (a + b + c) % 2 or a > b + c or b > a + c or c > a + b:
        raise ValueError(f"({a}, {b}, {c}) is not an admissible triple")


def vertex_split(c: int, a: int, b: int, delta) -> TLMorphism:
    """The trivalent vertex ``c -> a (x) b`` with Jones-Wenzl projectors on every leg."""
    _check_triple(a, b, c)
    d = TLMorphism.from_diagram(_vertex_diagram(c, a, b), delta)
    return _cap_legs(a, b, d @ jones_wenzl(c, delta), delta)


def _cap_legs(a: int, b: int, f: TLMorphism, delta) -> TLMorphism:
    """``(f^(a) x f^(b)) o f``, one projector at a time to keep term counts small."""
    f = tensor(identity(a, delta), jones_wenzl(b, delta)) @ f
    return tensor(jones_wenzl(a, delta), identity(b, delta)) @ f


def vertex_merge(a: int, b: int, c: int, delta) -> TLMorphism:
    """The trivalent vertex ``a (x) b -> c``, the mirror image of :func:`vertex_split`."""
    return vertex_split(c, a, b, delta).dagger()


@dataclass(frozen=True)
class Compose:
    """Network node: ``upper`` stacked on ``lower``."""

    upper: "Network"
    lower: "Network"


@dataclass(frozen=True)
class Tensor:
    """Network node: ``left`` beside ``right``."""

    left: "Network"
    right: "Network"


@dataclass(frozen=True)
class Trace:
    """Network node: Markov closure of an endomorphism."""

    body: "Network"


Network = Union[TLMorphism, PlanarDiagram, Compose, Tensor, Trace]


def evaluate_network(node: Network, delta=None) -> TLMorphism:
    """Evaluate a composition tree to a single morphism (a ``Trace`` gives a 0 -> 0 one)."""
    if isinstance(node, TLMorphism):
        return node
    if isinstance(node, PlanarDiagram):
        if delta is None:
            raise ValueError("bare diagrams in a network need an explicit delta")
        return TLMorphism.from_diagram(node, delta)
    if isinstance(node, Compose):
        return compose(evaluate_network(node.upper, delta), evaluate_network(node.lower, delta))
    if isinstance(node, Tensor):
        return tensor(evaluate_network(node.left, delta), evaluate_network(node.right, delta))
    if isinstance(node, Trace):
        body = evaluate_network(node.body, delta)
        value = markov_trace(body)
        return TLMorphism(0, 0, {PlanarDiagram._raw(0, 0, ()): value}, body.delta)
    raise TypeError(f"not a network node: {node!r}")


def evaluate_closed_network(node: Network, delta=None):
    """Scalar value of a network with no free boundary points."""
    return evaluate_network(node, delta).scalar()


def theta_network(a: int, b: int, c: int, delta) -> Trace:
    """Theta graph with edges labelled ``a``, ``b``, ``c``.

    Each edge carries a single projector; the doubled projectors of ``merge o split``
    are redundant because projectors are idempotent.
    """
    _check_triple(a, b, c)
    d = TLMorphism.from_diagram(_vertex_diagram(c, a, b), delta)
    capped = _cap_legs(a, b, d, delta)
    return Trace(Compose(jones_wenzl(c, delta), Compose(d.dagger(), capped)))


def tetrahedral_network(a: int, b: int, e: int, c: int, d: int, f: int, delta) -> Trace:
    """Tetrahedron pairing the two bases of ``a (x) d -> b (x) c``.

    It closes ``I_e^dagger o H_f``, where ``H_f`` passes ``f`` between the ``a``-``b``
    and ``c``-``d`` vertices and ``I_e`` fuses ``a``, ``d`` into ``e`` and splits it into ``b``, ``c``.
    """
    h = Compose(
        Tensor(identity(b, delta), vertex_merge(f, d, c, delta)),
        Tensor(vertex_split(a, b, f, delta), identity(d, delta)),
    )
    i_dagger = Compose(vertex_split(e, a, d, delta), vertex_merge(b, c, e, delta))
    return Trace(Compose(i_dagger, h))
