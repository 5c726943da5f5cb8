"""Positive roots of type A_n, simple reflections and Dynkin quivers.

A positive root alpha_a + ... + alpha_b is stored as the segment ``[a, b]``.
In the standard realisation it is ``e_a - e_{b+1}``, so a simple reflection
``s_i`` acts by swapping the coordinates ``i`` and ``i + 1``.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import BadChar, BadRank, BadRoot, LengthMismatch, OutOfRange


@dataclass(frozen=True, order=True)
class Segment:
    """The positive root ``[a, b]``, i.e. alpha_a + ... + alpha_b."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.b, int)) or not 1 <= self.a <= self.b:
            raise BadRoot(f"not a segment: [{self.a},{self.b}]")

    @property
    def height(self) -> int:
        return self.b - self.a + 1

    @property
    def coords(self) -> tuple[int, int]:
        return (self.a, self.b + 1)

    @property
    def is_simple(self) -> bool:
        return self.a == self.b

    def check_rank(self, n: int) -> "Segment":
        if self.b > n:
            raise BadRoot(f"{self} is not a root of A_{n}")
        return self

    def dim_vector(self, n: int) -> tuple[int, ...]:
        return tuple(1 if self.a <= k <= self.b else 0 for k in range(1, n + 1))

    def plus(self, other: "Segment") -> "Segment | None":
        """The sum as a root, or None when the sum is not a root."""
        if self.b + 1 == other.a:
            return Segment(self.a, other.b)
        if other.b + 1 == self.a:
            return Segment(other.a, self.b)
        return None

    def splits(self) -> Iterator[tuple["Segment", "Segment"]]:
        """All decompositions ``[a,c] + [c+1,b]``."""
        for c in range(self.a, self.b):
            yield Segment(self.a, c), Segment(c + 1, self.b)

    def __str__(self) -> str:
        return f"[{self.a}]" if self.a == self.b else f"[{self.a},{self.b}]"

    @classmethod
    def parse(cls, text: str) -> "Segment":
        body = text.strip().strip("[]")
        try:
            parts = [int(x) for x in body.split(",")]
        except ValueError as exc:
            raise BadRoot(f"cannot parse root {text!r}") from exc
        if len(parts) == 1:
            parts = parts * 2
        if len(parts) != 2:
            raise BadRoot(f"cannot parse root {text!r}")
        return cls(parts[0], parts[1])


def root(a: int, b: int | None = None) -> Segment:
    return Segment(a, a if b is None else b)


@dataclass(frozen=True)
class SignedRoot:
    sign: int
    segment: Segment

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def positive(self) -> bool:
        return self.sign == 1

    def __neg__(self) -> "SignedRoot":
        return SignedRoot(-self.sign, self.segment)

    def __str__(self) -> str:
        return ("+" if self.positive else "-") + str(self.segment)

    @classmethod
    def from_coords(cls, x: int, y: int) -> "SignedRoot":
        """The root ``e_x - e_y``."""
        if x == y:
            raise BadRoot("e_x - e_x is not a root")
        if x < y:
            return cls(1, Segment(x, y - 1))
        return cls(-1, Segment(y, x - 1))

    def to_coords(self) -> tuple[int, int]:
        x, y = self.segment.coords
        return (x, y) if self.positive else (y, x)


def positive_roots(n: int) -> list[Segment]:
    if n < 1:
        raise BadRank(f"rank must be >= 1, got {n}")
    return [Segment(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


def _as_signed(r: Segment | SignedRoot) -> SignedRoot:
    return r if isinstance(r, SignedRoot) else SignedRoot(1, r)


def _swap(x: int, i: int) -> int:
    if x == i:
        return i + 1
    if x == i + 1:
        return i
    return x


def weyl_apply(word: Sequence[int], r: Segment | SignedRoot, n: int | None = None) -> SignedRoot:
    """Apply ``s_{w1} s_{w2} ... s_{wk}`` to ``r``; the rightmost letter acts first."""
    for i in word:
        if i < 1 or (n is not None and i > n):
            raise OutOfRange(f"reflection index {i} out of range")
    x, y = _as_signed(r).to_coords()
    for i in reversed(word):
        x, y = _swap(x, i), _swap(y, i)
    return SignedRoot.from_coords(x, y)


class Edge(enum.Enum):
    RIGHT = ">"  # i -> i+1
    LEFT = "<"  # i+1 -> i


class VertexClass(enum.Enum):
    SOURCE = "source"
    SINK = "sink"
    LEFT_INTERMEDIATE = "left-intermediate"  # i-1 -> i -> i+1
    RIGHT_INTERMEDIATE = "right-intermediate"  # i+1 -> i -> i-1


@dataclass(frozen=True)
class DynkinQuiverA:
    """An orientation of the A_n Dynkin diagram with a height function.

    ``orientation[k]`` describes the edge between vertices ``k+1`` and ``k+2``.
    Heights obey ``xi_j = xi_i - 1`` for every arrow ``i -> j``.
    """

    n: int
    orientation: tuple[Edge, ...]
    xi1: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise BadRank(f"rank must be >= 1, got {self.n}")
        if len(self.orientation) != self.n - 1:
            raise LengthMismatch(
                f"orientation of A_{self.n} needs {self.n - 1} edges, got {len(self.orientation)}"
            )

    @property
    def orientation_string(self) -> str:
        return "".join(e.value for e in self.orientation)

    def __str__(self) -> str:
        return f"A_{self.n}({self.orientation_string or '-'})"

    def _check(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise OutOfRange(f"vertex {i} not in 1..{self.n}")

    def edge(self, i: int) -> Edge:
        """Orientation of the edge between ``i`` and ``i+1``."""
        return self.orientation[i - 1]

    @cached_property
    def xi(self) -> tuple[int, ...]:
        out = [self.xi1]
        for e in self.orientation:
            out.append(out[-1] - 1 if e is Edge.RIGHT else out[-1] + 1)
        return tuple(out)

    def height(self, i: int) -> int:
        self._check(i)
        return self.xi[i - 1]

    def arrows(self) -> list[tuple[int, int]]:
        return [(k, k + 1) if e is Edge.RIGHT else (k + 1, k) for k, e in enumerate(self.orientation, 1)]

    def has_arrow(self, i: int, j: int) -> bool:
        if abs(i - j) != 1 or not (1 <= i <= self.n and 1 <= j <= self.n):
            return False
        lo = min(i, j)
        return (self.edge(lo) is Edge.RIGHT) == (i == lo)

    def out_neighbours(self, i: int) -> list[int]:
        return [j for j in (i - 1, i + 1) if self.has_arrow(i, j)]

    def in_neighbours(self, i: int) -> list[int]:
        return [j for j in (i - 1, i + 1) if self.has_arrow(j, i)]

    def is_source(self, i: int) -> bool:
        self._check(i)
        return not self.in_neighbours(i)

    def is_sink(self, i: int) -> bool:
        self._check(i)
        return not self.out_neighbours(i)

    def classify(self, i: int) -> VertexClass:
        self._check(i)
        if self.is_source(i):
            return VertexClass.SOURCE
        if self.is_sink(i):
            return VertexClass.SINK
        if self.has_arrow(i - 1, i):
            return VertexClass.LEFT_INTERMEDIATE
        return VertexClass.RIGHT_INTERMEDIATE

    def reflect(self, i: int) -> "DynkinQuiverA":
        """Reverse every arrow at ``i``.

        When ``i`` is a source (sink) its height drops (rises) by 2 and the
        other heights are kept.
        """
        self._check(i)
        flip = {Edge.RIGHT: Edge.LEFT, Edge.LEFT: Edge.RIGHT}
        orient = list(self.orientation)
        for k in (i - 1, i):
            if 1 <= k <= self.n - 1:
                orient[k - 1] = flip[orient[k - 1]]
        xi1 = self.xi1
        if i == 1 and self.n > 1:
            xi1 += -2 if self.is_source(1) else 2
        return DynkinQuiverA(self.n, tuple(orient), xi1)

    def reverse(self) -> "DynkinQuiverA":
        flip = {Edge.RIGHT: Edge.LEFT, Edge.LEFT: Edge.RIGHT}
        return DynkinQuiverA(self.n, tuple(flip[e] for e in self.orientation), self.xi1)

    @cached_property
    def source_order(self) -> tuple[int, ...]:
        """Vertices peeled as sources, smallest index first."""
        q = self
        order: list[int] = []
        left = set(range(1, self.n + 1))
        while left:
            i = min(v for v in left if q.is_source(v))
            order.append(i)
            left.remove(i)
            q = q.reflect(i)
        return tuple(order)

    @cached_property
    def coxeter_permutation(self) -> tuple[int, ...]:
        """tau as a permutation of the coordinates 1..n+1 (index 0 unused)."""
        perm = list(range(self.n + 2))
        for i in reversed(self.source_order):
            perm = [_swap(x, i) for x in perm]
        return tuple(perm)

    @cached_property
    def _coxeter_inverse(self) -> tuple[int, ...]:
        inv = [0] * (self.n + 2)
        for k, v in enumerate(self.coxeter_permutation):
            inv[v] = k
        return tuple(inv)

    def path_sources(self, i: int) -> Segment:
        """Vertices with a path to ``i`` (an interval)."""
        self._check(i)
        lo = i
        while lo > 1 and self.has_arrow(lo - 1, lo):
            lo -= 1
        hi = i
        while hi < self.n and self.has_arrow(hi + 1, hi):
            hi += 1
        return Segment(lo, hi)

    def path_targets(self, i: int) -> Segment:
        """Vertices reachable from ``i`` (an interval)."""
        self._check(i)
        lo = i
        while lo > 1 and self.has_arrow(lo, lo - 1):
            lo -= 1
        hi = i
        while hi < self.n and self.has_arrow(hi, hi + 1):
            hi += 1
        return Segment(lo, hi)


def parse_quiver(n: int, text: str, xi1: int = 0) -> DynkinQuiverA:
    if not isinstance(n, int) or n < 1:
        raise BadRank(f"rank must be >= 1, got {n}")
    if len(text) != n - 1:
        raise LengthMismatch(f"orientation of A_{n} needs {n - 1} symbols, got {len(text)}")
    edges = []
    for ch in text:
        if ch not in "<>":
            raise BadChar(f"orientation symbol {ch!r} is not '<' or '>'")
        edges.append(Edge(ch))
    return DynkinQuiverA(n, tuple(edges), xi1)


def all_quivers(n: int, xi1: int = 0) -> Iterator[DynkinQuiverA]:
    for combo in itertools.product((Edge.RIGHT, Edge.LEFT), repeat=n - 1):
        yield DynkinQuiverA(n, combo, xi1)


def tau(q: DynkinQuiverA, r: Segment | SignedRoot) -> SignedRoot:
    """The Coxeter element attached to ``q`` applied to ``r``."""
    x, y = _as_signed(r).to_coords()
    perm = q.coxeter_permutation
    if max(x, y) > q.n + 1:
        raise BadRoot(f"{r} is not a root of A_{q.n}")
    return SignedRoot.from_coords(perm[x], perm[y])


def tau_inverse(q: DynkinQuiverA, r: Segment | SignedRoot) -> SignedRoot:
    x, y = _as_signed(r).to_coords()
    inv = q._coxeter_inverse
    return SignedRoot.from_coords(inv[x], inv[y])


def gamma_theta_m(q: DynkinQuiverA, i: int) -> tuple[Segment, Segment, int]:
    """``(gamma_i, theta_i, m_i)``: the sum over vertices with a path to ``i``,
    the sum over vertices reachable from ``i``, and the number of times tau can
    be applied to gamma_i while staying positive."""
    g = q.path_sources(i)
    th = q.path_targets(i)
    m = 0
    cur = SignedRoot(1, g)
    while True:
        nxt = tau(q, cur)
        if not nxt.positive:
            break
        m += 1
        cur = nxt
    return g, th, m


def star(i: int, n: int) -> int:
    if not 1 <= i <= n:
        raise OutOfRange(f"index {i} not in 1..{n}")
    return n + 1 - i
