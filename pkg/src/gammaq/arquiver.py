"""The Auslander-Reiten quiver of a type-A Dynkin quiver, realised on Z x Z.

Vertices are coordinates ``(i, p)`` labelled by positive roots.  Arrows always
go ``(i, p) -> (i +- 1, p + 1)``.  Along an N-arrow ``(i, p) -> (i-1, p+1)`` the
first component of the root is constant; along an S-arrow
``(i, p) -> (i+1, p+1)`` the second one is.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

from .errors import BadRoot, InconsistentHooks, NotAVertex, NotAPair
from .rootsys import (
    DynkinQuiverA,
    Edge,
    Segment,
    SignedRoot,
    VertexClass,
    gamma_theta_m,
    parse_quiver,
    positive_roots,
    tau,
)


class Coord(NamedTuple):
    i: int
    p: int


class PathKind(enum.Enum):
    N = "N"
    S = "S"


# forward step of a sectional arrow
STEP = {PathKind.N: (-1, 1), PathKind.S: (1, 1)}


class RaySide(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class ARQuiver:
    quiver: DynkinQuiverA
    root_at: Mapping[Coord, Segment] = field(hash=False)
    arrows: frozenset[tuple[Coord, Coord]] = field(hash=False)

    @property
    def n(self) -> int:
        return self.quiver.n

    @cached_property
    def coord_of(self) -> dict[Segment, Coord]:
        return {r: c for c, r in self.root_at.items()}

    @cached_property
    def vertices(self) -> list[Coord]:
        return sorted(self.root_at)

    def has(self, c: tuple[int, int]) -> bool:
        return Coord(*c) in self.root_at

    def phi(self, c: tuple[int, int]) -> Segment:
        try:
            return self.root_at[Coord(*c)]
        except KeyError:
            raise NotAVertex(f"{tuple(c)} is not a vertex") from None

    def phi_inv(self, beta: Segment) -> Coord:
        try:
            return self.coord_of[beta]
        except KeyError:
            raise BadRoot(f"{beta} is not a root of A_{self.n}") from None

    def row(self, i: int) -> list[Coord]:
        return [c for c in self.vertices if c.i == i]

    @cached_property
    def _succ(self) -> dict[Coord, list[Coord]]:
        out: dict[Coord, list[Coord]] = {c: [] for c in self.root_at}
        for s, t in self.arrows:
            out[s].append(t)
        return out

    @cached_property
    def _pred(self) -> dict[Coord, list[Coord]]:
        out: dict[Coord, list[Coord]] = {c: [] for c in self.root_at}
        for s, t in self.arrows:
            out[t].append(s)
        return out

    def successors(self, c: Coord) -> list[Coord]:
        return self._succ[c]

    def predecessors(self, c: Coord) -> list[Coord]:
        return self._pred[c]

    @cached_property
    def _index(self) -> dict[Coord, int]:
        return {c: k for k, c in enumerate(self.vertices)}

    @cached_property
    def _reach(self) -> dict[Coord, int]:
        # bitmask of vertices reachable from each vertex (reflexive)
        index = self._index
        reach: dict[Coord, int] = {}
        for c in sorted(self.root_at, key=lambda c: -c.p):
            mask = 1 << index[c]
            for t in self._succ[c]:
                mask |= reach[t]
            reach[c] = mask
        return reach

    def has_path(self, src: Segment, dst: Segment) -> bool:
        """Is there a (possibly empty) path from ``src`` to ``dst``?"""
        reach = self._reach
        return bool(reach[self.phi_inv(src)] >> self._index[self.phi_inv(dst)] & 1)

    def step(self, c: Coord, kind: PathKind, forward: bool = True) -> Coord | None:
        di, dp = STEP[kind]
        if not forward:
            di, dp = -di, -dp
        nxt = Coord(c.i + di, c.p + dp)
        return nxt if nxt in self.root_at else None


def zq_arrows(coords: Iterable[Coord]) -> frozenset[tuple[Coord, Coord]]:
    present = set(coords)
    out = set()
    for c in present:
        for di in (-1, 1):
            t = Coord(c.i + di, c.p + 1)
            if t in present:
                out.add((c, t))
    return frozenset(out)


def build_coxeter(q: DynkinQuiverA) -> ARQuiver:
    """Seed ``(i, xi_i)`` with gamma_i and walk left by tau until it turns negative."""
    root_at: dict[Coord, Segment] = {}
    for i in range(1, q.n + 1):
        g, _, _ = gamma_theta_m(q, i)
        p = q.height(i)
        cur = SignedRoot(1, g)
        while cur.positive:
            root_at[Coord(i, p)] = cur.segment
            cur = tau(q, cur)
            p -= 2
    return ARQuiver(q, root_at, zq_arrows(root_at))


def simple_root_position(q: DynkinQuiverA, k: int) -> Coord:
    """Coordinate of alpha_k, determined by the class of vertex ``k``."""
    n, x = q.n, q.height(k)
    cls = vertex_class(q, k)
    if cls is VertexClass.SOURCE:
        return Coord(k, x)
    if cls is VertexClass.SINK:
        return Coord(n + 1 - k, x - n + 1)
    if cls is VertexClass.LEFT_INTERMEDIATE:
        return Coord(1, x - k + 1)
    return Coord(n, x - n + k)


def vertex_class(q: DynkinQuiverA, k: int) -> VertexClass:
    """Like ``q.classify`` but with the endpoint convention for n >= 2:
    vertex 1 is a source iff ``1 -> 2`` and vertex n is a source iff ``n -> n-1``."""
    if q.n >= 2 and k == 1:
        return VertexClass.SOURCE if q.edge(1) is Edge.RIGHT else VertexClass.SINK
    if q.n >= 2 and k == q.n:
        return VertexClass.SOURCE if q.edge(q.n - 1) is Edge.LEFT else VertexClass.SINK
    return q.classify(k)


def _hooks(q: DynkinQuiverA, a: int) -> tuple[list[Coord], list[Coord]]:
    """The N-hook (roots [a, *]) and S-hook (roots [*, a]) through alpha_a."""
    n = q.n
    r, p = simple_root_position(q, a)
    cls = vertex_class(q, a)
    if cls in (VertexClass.SOURCE, VertexClass.LEFT_INTERMEDIATE):
        nhook = [Coord(r + t, p - t) for t in range(n - a + 1)]
    else:
        nhook = [Coord(r - t, p + t) for t in range(n - a + 1)]
    if cls in (VertexClass.SOURCE, VertexClass.RIGHT_INTERMEDIATE):
        shook = [Coord(r - t, p - t) for t in range(a)]
    else:
        shook = [Coord(r + t, p + t) for t in range(a)]
    return nhook, shook


def build_hooks(q: DynkinQuiverA) -> ARQuiver:
    """Place the simple roots, draw their hooks and label each intersection."""
    n = q.n
    first: dict[Coord, int] = {}
    second: dict[Coord, int] = {}
    for a in range(1, n + 1):
        nhook, shook = _hooks(q, a)
        for c, table in [(c, first) for c in nhook] + [(c, second) for c in shook]:
            if not 1 <= c.i <= n:
                raise InconsistentHooks(f"hook of alpha_{a} leaves the strip at {tuple(c)}")
            if table.get(c, a) != a:
                raise InconsistentHooks(f"hooks collide at {tuple(c)}")
            table[c] = a
    if set(first) != set(second):
        raise InconsistentHooks("N-hooks and S-hooks do not meet in the same points")
    root_at: dict[Coord, Segment] = {}
    for c, a in first.items():
        b = second[c]
        if a > b:
            raise InconsistentHooks(f"hooks meet at {tuple(c)} with a={a} > b={b}")
        root_at[c] = Segment(a, b)
    if len(set(root_at.values())) != n * (n + 1) // 2:
        raise InconsistentHooks("hook labelling is not a bijection onto the positive roots")
    return ARQuiver(q, root_at, zq_arrows(root_at))


build = build_coxeter


@dataclass(frozen=True)
class SectionalPath:
    """A maximal sectional path; roots are listed by increasing row."""

    kind: PathKind
    roots: tuple[Segment, ...]
    coords: tuple[Coord, ...]

    @property
    def shared(self) -> int:
        r = self.roots[0]
        return r.a if self.kind is PathKind.N else r.b

    @property
    def length(self) -> int:
        return len(self.roots) - 1


def _run(ar: ARQuiver, c: Coord, kind: PathKind) -> list[Coord]:
    """The maximal sectional run of ``kind`` through ``c``, in arrow order."""
    back = []
    cur = ar.step(c, kind, forward=False)
    while cur is not None:
        back.append(cur)
        cur = ar.step(cur, kind, forward=False)
    fwd = []
    cur = ar.step(c, kind)
    while cur is not None:
        fwd.append(cur)
        cur = ar.step(cur, kind)
    return back[::-1] + [c] + fwd


def maximal_sectional_paths(ar: ARQuiver, kind: PathKind | str) -> list[SectionalPath]:
    kind = PathKind(kind)
    seen: set[Coord] = set()
    out = []
    for c in ar.vertices:
        if c in seen:
            continue
        run = sorted(_run(ar, c, kind))
        seen.update(run)
        out.append(SectionalPath(kind, tuple(ar.phi(x) for x in run), tuple(run)))
    out.sort(key=lambda sp: (sp.shared, sp.coords))
    return out


def kappa_sigma(ar: ARQuiver) -> tuple[tuple[Segment, ...], tuple[Segment, ...]]:
    """Row 1 read right to left and row n read left to right."""
    kappa = tuple(ar.phi(c) for c in sorted(ar.row(1), key=lambda c: -c.p))
    sigma = tuple(ar.phi(c) for c in sorted(ar.row(ar.n), key=lambda c: c.p))
    return kappa, sigma


def chi_reindex(ar: ARQuiver, s_convention: str = "example") -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(i_tuple, j_tuple)``.

    ``j_tuple`` lists the shared first components of the maximal N-paths sorted
    by ``i + p`` descending.  ``i_tuple`` lists the shared second components of
    the maximal S-paths sorted by ``p - i`` descending.  ``s_convention="printed"``
    sorts S-paths by ``i - p`` descending instead, which reverses ``i_tuple``.
    """
    if s_convention not in ("example", "printed"):
        raise ValueError("s_convention must be 'example' or 'printed'")
    npaths = maximal_sectional_paths(ar, PathKind.N)
    spaths = maximal_sectional_paths(ar, PathKind.S)
    j_tuple = tuple(sp.shared for sp in sorted(npaths, key=lambda sp: -(sp.coords[0].i + sp.coords[0].p)))
    sgn = 1 if s_convention == "example" else -1
    i_tuple = tuple(
        sp.shared for sp in sorted(spaths, key=lambda sp: -sgn * (sp.coords[0].p - sp.coords[0].i))
    )
    return i_tuple, j_tuple


def long_root_failures(ar: ARQuiver, printed: bool = False) -> list[str]:
    """Check where [1,n] sits relative to m_1, m_n and the row lengths.

    With ``printed=False`` the identities are
    ``phi^-1([1,n]) = (m_1+1, xi_1-m_1) = (n-m_n, xi_n-m_n)``,
    ``|kappa| = m_1+1`` and ``|sigma| = m_n+1``.  With ``printed=True`` the
    off-by-one variant ``(m_1, xi_1-m_1+1) = (n+1-m_n, xi_n-m_n+1)`` with
    ``|kappa| = m_1`` and ``|sigma| = m_n`` is checked.  Returns the names of the
    identities that fail.
    """
    q, n = ar.quiver, ar.n
    m1 = gamma_theta_m(q, 1)[2]
    mn = gamma_theta_m(q, n)[2]
    x1, xn = q.height(1), q.height(n)
    pos = ar.phi_inv(Segment(1, n))
    kappa, sigma = kappa_sigma(ar)
    d = 0 if printed else 1
    checks = {
        "position_from_row_1": pos == (m1 + d, x1 - m1 + 1 - d),
        "position_from_row_n": pos == (n + 1 - mn - d, xn - mn + 1 - d),
        "kappa_length": len(kappa) == m1 + d,
        "sigma_length": len(sigma) == mn + d,
    }
    return [k for k, ok in checks.items() if not ok]


@dataclass(frozen=True)
class Ray:
    center: Segment
    side: RaySide
    before: tuple[Segment, ...]
    after: tuple[Segment, ...]

    @property
    def roots(self) -> tuple[Segment, ...]:
        return self.before + (self.center,) + self.after


def rays(ar: ARQuiver, gamma: Segment) -> tuple[Ray, Ray]:
    """Upper ray: S-path into gamma then N-path out.  Lower ray: N-path in, S-path out."""
    c = ar.phi_inv(gamma)

    def split(kind: PathKind) -> tuple[tuple[Segment, ...], tuple[Segment, ...]]:
        run = _run(ar, c, kind)
        k = run.index(c)
        return tuple(map(ar.phi, run[:k])), tuple(map(ar.phi, run[k + 1 :]))

    s_in, s_out = split(PathKind.S)
    n_in, n_out = split(PathKind.N)
    return Ray(gamma, RaySide.UPPER, s_in, n_out), Ray(gamma, RaySide.LOWER, n_in, s_out)


@dataclass(frozen=True)
class RayPair:
    """``alpha + beta = gamma`` with a path from gamma to alpha (and beta to gamma)."""

    alpha: Segment
    beta: Segment
    gamma: Segment
    side: RaySide


def pairs_of(ar: ARQuiver, gamma: Segment) -> list[RayPair]:
    gamma.check_rank(ar.n)
    upper, lower = rays(ar, gamma)
    out = []
    for left, right in gamma.splits():
        if left in upper.after and right in upper.before:
            out.append(RayPair(left, right, gamma, RaySide.UPPER))
        if right in lower.after and left in lower.before:
            out.append(RayPair(right, left, gamma, RaySide.LOWER))
    return out


def pair_side(ar: ARQuiver, alpha: Segment, beta: Segment) -> RayPair:
    """Locate the ray carrying the pair ``{alpha, beta}``."""
    gamma = alpha.plus(beta)
    if gamma is None:
        raise NotAPair(f"{alpha} + {beta} is not a root")
    for pr in pairs_of(ar, gamma):
        if {pr.alpha, pr.beta} == {alpha, beta}:
            return pr
    raise NotAPair(f"{alpha}, {beta} do not lie on a common ray of {gamma}")


# serialisation ----------------------------------------------------------


def _root_json(r: Segment) -> list[int]:
    return [r.a, r.b]


def to_json(ar: ARQuiver) -> str:
    obj = {
        "n": ar.n,
        "orientation": ar.quiver.orientation_string,
        "xi": list(ar.quiver.xi),
        "vertices": [{"i": c.i, "p": c.p, "root": _root_json(ar.phi(c))} for c in ar.vertices],
        "arrows": [[{"i": s.i, "p": s.p}, {"i": t.i, "p": t.p}] for s, t in sorted(ar.arrows)],
    }
    return json.dumps(obj, separators=(",", ":"))


def from_json(text: str) -> ARQuiver:
    obj = json.loads(text)
    q = parse_quiver(obj["n"], obj["orientation"], obj["xi"][0] if obj["xi"] else 0)
    root_at = {Coord(v["i"], v["p"]): Segment(*v["root"]) for v in obj["vertices"]}
    arrows = frozenset((Coord(s["i"], s["p"]), Coord(t["i"], t["p"])) for s, t in obj["arrows"])
    return ARQuiver(q, root_at, arrows)


def to_dot(ar: ARQuiver) -> str:
    def nid(c: Coord) -> str:
        return f'"{c.i}_{c.p}"'

    lines = ["digraph GammaQ {", "  rankdir=LR;"]
    for c in ar.vertices:
        lines.append(f'  {nid(c)} [label="{ar.phi(c)}"];')
    for s, t in sorted(ar.arrows):
        lines.append(f"  {nid(s)} -> {nid(t)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_ascii(ar: ARQuiver) -> str:
    """One line per row, one column per p."""
    ps = [c.p for c in ar.vertices]
    lo, hi = min(ps), max(ps)
    labels = {c: str(ar.phi(c)) for c in ar.vertices}
    width = max([len(s) for s in labels.values()] + [len(str(lo)), len(str(hi))]) + 1
    head = "i\\p".ljust(4) + "".join(str(p).rjust(width) for p in range(lo, hi + 1))
    lines = [head.rstrip()]
    for i in range(1, ar.n + 1):
        cells = "".join(labels.get(Coord(i, p), "").rjust(width) for p in range(lo, hi + 1))
        lines.append((str(i).ljust(4) + cells).rstrip())
    return "\n".join(lines) + "\n"


def serialize(ar: ARQuiver, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(ar)
    if fmt == "dot":
        return to_dot(ar)
    if fmt == "ascii":
        return to_ascii(ar)
    raise ValueError(f"unknown format {fmt!r}")


def all_roots(ar: ARQuiver) -> list[Segment]:
    return positive_roots(ar.n)
