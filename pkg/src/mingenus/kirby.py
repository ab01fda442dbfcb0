"""Handle decompositions: the 2-handlebody N, its double, and stabilizations.

1-handles are dotted circles; a 2-handle is recorded by the word its
attaching circle reads through them.  3- and 4-handles attach uniquely and
are only counted.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .builder import Link
from .presentation import IDENTITY, Word

HOPF = "hopf"
CP2 = "cp2"
CP2BAR = "cp2bar"


@dataclass(frozen=True)
class TwoHandle:
    """``meridian_of`` marks the 0-framed meridian added by doubling;
    ``marker`` tags split stabilization summands (``hopf:<k>``, ``cp2``,
    ``cp2bar``), whose geometry is not modelled."""

    word: Word
    framing: int = 0
    meridian_of: Optional[int] = None
    marker: Optional[str] = None

    def __post_init__(self):
        if self.meridian_of is not None and (self.word or self.framing):
            raise ValueError("meridian 2-handles have empty word and framing 0")
        if self.marker is not None and self.word:
            raise ValueError("stabilization 2-handles have empty words")

    @property
    def is_link_component(self) -> bool:
        return self.meridian_of is None and self.marker is None


@dataclass(frozen=True)
class KirbyDiagram:
    h0: int
    one_handles: int
    two_handles: tuple[TwoHandle, ...]
    h3: int
    h4: int
    closed: bool

    def __post_init__(self):
        if self.closed and not (self.h4 == 1 and self.h3 == self.one_handles):
            raise ValueError("a closed diagram has one 4-handle and as many 3-handles as 1-handles")
        if not self.closed and (self.h3 or self.h4):
            raise ValueError("an open diagram has no 3- or 4-handles")

    @property
    def handle_counts(self) -> tuple[int, int, int, int, int]:
        return (self.h0, self.one_handles, len(self.two_handles), self.h3, self.h4)

    @property
    def link_components(self) -> tuple[TwoHandle, ...]:
        return tuple(h for h in self.two_handles if h.is_link_component)

    def stabilization_counts(self) -> tuple[int, int, int]:
        markers = [h.marker for h in self.two_handles if h.marker]
        return (
            sum(1 for m in markers if m.startswith(HOPF)) // 2,
            markers.count(CP2),
            markers.count(CP2BAR),
        )


def build_N(n: int, link: Link, framings: Sequence[int] = ()) -> KirbyDiagram:
    """One 0-handle, ``n`` 1-handles and a 2-handle along each component.

    An empty ``framings`` means all-zero framings.
    """
    if not framings:
        framings = [0] * len(link)
    if len(framings) != len(link):
        raise ValueError(f"got {len(framings)} framings for a {len(link)}-component link")
    handles = tuple(TwoHandle(c.word, int(f)) for c, f in zip(link.components, framings))
    return KirbyDiagram(1, n, handles, 0, 0, closed=False)


def double(N: KirbyDiagram) -> KirbyDiagram:
    """Turn N upside down and glue: every 2-handle gains a 0-framed meridian,
    and the result is capped by ``n`` 3-handles and a 4-handle."""
    if N.closed:
        raise ValueError("cannot double a closed diagram")
    meridians = tuple(TwoHandle(IDENTITY, 0, meridian_of=i) for i in range(len(N.two_handles)))
    return replace(N, two_handles=N.two_handles + meridians, h3=N.one_handles, h4=1, closed=True)


def euler_characteristic(K: KirbyDiagram) -> int:
    return K.h0 - K.one_handles + len(K.two_handles) - K.h3 + K.h4


def stabilize(M: KirbyDiagram, s2xs2: int = 0, cp2_plus: int = 0, cp2_minus: int = 0) -> KirbyDiagram:
    """Connected sum with ``s2xs2`` copies of S^2 x S^2 and ``cp2_plus`` /
    ``cp2_minus`` copies of +CP^2 / -CP^2.

    Hopf pair numbering continues from pairs already present.
    """
    if not M.closed:
        raise ValueError("stabilization applies to closed diagrams")
    if min(s2xs2, cp2_plus, cp2_minus) < 0:
        raise ValueError("stabilization counts must be nonnegative")
    start = M.stabilization_counts()[0]
    extra = []
    for k in range(start, start + s2xs2):
        extra += [TwoHandle(IDENTITY, 0, marker=f"{HOPF}:{k}")] * 2
    extra += [TwoHandle(IDENTITY, 1, marker=CP2)] * cp2_plus
    extra += [TwoHandle(IDENTITY, -1, marker=CP2BAR)] * cp2_minus
    return replace(M, two_handles=M.two_handles + tuple(extra))


def framings_mod2(M: KirbyDiagram) -> tuple[int, ...]:
    """Framing parities of the link's own 2-handles.

    For the double these parities are the only framing data that matter;
    meridians and stabilization summands are left out.
    """
    return tuple(h.framing % 2 for h in M.link_components)
