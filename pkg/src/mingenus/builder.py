"""The unknotted graph, end-sliding, and extraction of the link with tunnels.

The graph lives in the standard diagram of ``#_n S^1 x S^2`` and is kept
purely combinatorially: every edge is labelled by the word recording which
1-handles it passes through, in order.  Vertex 0 is the basepoint; circle
``i`` sits on vertex ``i + 1`` and is tied to the basepoint by a connector
arc with empty label.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Optional

from .errors import InvariantViolation
from .presentation import IDENTITY, Presentation, Word

BASEPOINT = 0


@dataclass(frozen=True)
class Edge:
    tail: int
    head: int
    label: Word


@dataclass(frozen=True)
class SpatialGraph:
    n: int
    loop_edges: tuple[Edge, ...]
    circle_edges: tuple[Edge, ...]
    connector_arcs: tuple[Edge, ...]
    slid: tuple[bool, ...]

    @property
    def num_vertices(self) -> int:
        return 1 + len(self.circle_edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.loop_edges + self.circle_edges + self.connector_arcs

    def betti_number(self) -> int:
        """``E - V + 1``; valid because the graph is connected."""
        return len(self.edges) - self.num_vertices + 1

    def is_connected(self) -> bool:
        seen = {BASEPOINT}
        frontier = [BASEPOINT]
        adj: dict[int, set[int]] = {v: set() for v in range(self.num_vertices)}
        for e in self.edges:
            adj[e.tail].add(e.head)
            adj[e.head].add(e.tail)
        while frontier:
            for w in adj[frontier.pop()] - seen:
                seen.add(w)
                frontier.append(w)
        return len(seen) == self.num_vertices

    @property
    def circle_words(self) -> tuple[Word, ...]:
        return tuple(e.label for e in self.circle_edges)


def build_gamma0(n: int, r: int) -> SpatialGraph:
    """``n`` loops at the basepoint labelled by the generators, plus ``r``
    circles with empty labels hanging off the basepoint."""
    if n < 0 or r < 0:
        raise ValueError("generator and relator counts must be nonnegative")
    loops = tuple(Edge(BASEPOINT, BASEPOINT, Word.letter(j)) for j in range(n))
    circles = tuple(Edge(i + 1, i + 1, IDENTITY) for i in range(r))
    connectors = tuple(Edge(BASEPOINT, i + 1, IDENTITY) for i in range(r))
    return SpatialGraph(n, loops, circles, connectors, (False,) * r)


def slide_circle(g: SpatialGraph, i: int, r: Word) -> SpatialGraph:
    """Slide the right end of circle ``i`` along the loops so it reads ``r``.

    The end traverses ``r`` left to right; each letter drags it once around
    the corresponding loop, in the direction given by the sign.  Only the
    label changes, so ``b_1`` and connectivity are untouched.
    """
    if not 0 <= i < len(g.circle_edges):
        raise IndexError(f"circle index {i} out of range for {len(g.circle_edges)} circles")
    if r.max_generator() >= g.n:
        raise ValueError(f"word uses generator {r.max_generator()} but the graph has {g.n} loops")
    circles = list(g.circle_edges)
    circles[i] = replace(circles[i], label=r)
    slid = list(g.slid)
    slid[i] = True
    return replace(g, circle_edges=tuple(circles), slid=tuple(slid))


def slide_all(p: Presentation) -> SpatialGraph:
    g = build_gamma0(p.n, len(p.relators))
    for i, rel in enumerate(p.relators):
        g = slide_circle(g, i, rel)
    return g


@dataclass(frozen=True)
class LinkComponent:
    word: Word
    framing: int = 0
    meridian_of: Optional[int] = None

    def __post_init__(self):
        if self.meridian_of is not None and (self.word or self.framing):
            raise ValueError("a meridian component has empty word and framing 0")


@dataclass(frozen=True)
class Link:
    components: tuple[LinkComponent, ...] = ()

    def __len__(self):
        return len(self.components)

    @property
    def words(self) -> tuple[Word, ...]:
        return tuple(c.word for c in self.components)


class ArcKind(str, enum.Enum):
    LOOP = "loop"
    CONNECTOR = "connector"


@dataclass(frozen=True)
class TunnelArc:
    """A loop-tunnel is the loop of generator ``index`` cut open at circle 0;
    a connector joins circle ``index`` to circle ``index + 1``."""

    kind: ArcKind
    index: int


@dataclass(frozen=True)
class TunnelSystem:
    arcs: tuple[TunnelArc, ...]
    count: int
    empty_link: bool = False

    @property
    def genus(self) -> int:
        return self.count + 1


def tunnel_upper_bound(n: int, num_components: int) -> int:
    if num_components < 1:
        raise ValueError("the empty link has no tunnel number")
    return n + num_components - 1


def extract_link(g: SpatialGraph) -> tuple[Link, TunnelSystem]:
    """Split the graph into the link (the circles) and the remaining arcs.

    Contracting the connector of circle 0 moves the basepoint onto that
    circle, so the ``n`` loops become arcs with both ends on circle 0; the
    other connectors are re-routed between consecutive circles.
    """
    r = len(g.circle_edges)
    link = Link(tuple(LinkComponent(e.label) for e in g.circle_edges))
    if r == 0:
        return link, TunnelSystem((), max(g.n - 1, 0), empty_link=True)
    arcs = tuple(TunnelArc(ArcKind.LOOP, j) for j in range(g.n)) + tuple(
        TunnelArc(ArcKind.CONNECTOR, i) for i in range(r - 1)
    )
    tunnels = TunnelSystem(arcs, len(arcs))
    if not tunnels.count == tunnel_upper_bound(g.n, r) == g.betti_number() - 1:
        raise InvariantViolation(f"tunnel count {tunnels.count} disagrees with b1 - 1")
    return link, tunnels


def build_link(p: Presentation) -> tuple[Link, TunnelSystem]:
    return extract_link(slide_all(p))
