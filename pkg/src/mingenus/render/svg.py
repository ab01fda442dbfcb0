"""Deterministic SVG pictures of the construction stages and the Kirby diagram.

Layout: the 1-handles are tall dotted ellipses in columns left to right, the
basepoint sits in a column of its own on the far left, and every strand owns
a horizontal band below the previous one.  Letter ``k`` of a strand's word is
a short arrowed segment (class ``passage``) through the column of its
generator at its own height in the band, pointing right for a positive
letter and left for a negative one.  No crossing information is drawn.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from ..builder import ArcKind, Link, SpatialGraph, TunnelSystem
from ..kirby import KirbyDiagram
from ..presentation import Word, format_word

PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#e377c2")
GRAPH_COLOR = "#7f7f7f"

MARGIN = 30.0
STAR_X = 60.0
COLUMN = 90.0
STEP = 18.0
BAND_PAD = 24.0
HALF_PASSAGE = 16.0
LABEL_GAP = 40.0
CAPTION = 40.0
PANEL = 170.0


def _f(v: float) -> str:
    return f"{v:.1f}"


def default_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{j + 1}" for j in range(n))


@dataclass(frozen=True)
class Band:
    top: float
    height: float

    def slot(self, k: int) -> float:
        return self.top + BAND_PAD / 2 + (k + 0.5) * STEP

    @property
    def anchor(self) -> float:
        return self.top + BAND_PAD / 2


@dataclass(frozen=True)
class Scene:
    width: float
    height: float
    columns: tuple[float, ...]
    bands: tuple[Band, ...]
    lanes: tuple[tuple[float, ...], ...]
    colors: tuple[str, ...]


def layout_scene(n: int, strand_lengths: Sequence[int], extra_width: float = 0.0,
                 label_chars: int = 0) -> Scene:
    """Columns for ``n`` dotted circles and one band per strand.

    ``lanes[i][k]`` is the height of passage ``k`` of strand ``i``; bands are
    disjoint, so no two passages share a height.
    """
    columns = tuple(STAR_X + COLUMN * (j + 1) for j in range(n))
    bands, lanes = [], []
    y = MARGIN + CAPTION
    for length in strand_lengths:
        band = Band(y, BAND_PAD + STEP * max(length, 1))
        bands.append(band)
        lanes.append(tuple(band.slot(k) for k in range(length)))
        y += band.height
    width = (columns[-1] if columns else STAR_X) + COLUMN / 2 + LABEL_GAP + 7.0 * label_chars + extra_width
    height = max(y, MARGIN + CAPTION + 60.0) + MARGIN
    colors = tuple(PALETTE[i % len(PALETTE)] for i in range(len(strand_lengths)))
    return Scene(width, height, columns, tuple(bands), tuple(lanes), colors)


class _Doc:
    def __init__(self, width: float, height: float, title: str):
        self.width, self.height = width, height
        self.parts = [
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(width)}" '
            f'height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">',
            f"<title>{escape(title)}</title>",
            "<defs>",
            '<marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" '
            'markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="context-stroke"/></marker>',
            "</defs>",
            f'<rect x="0" y="0" width="{_f(width)}" height="{_f(height)}" fill="#ffffff"/>',
        ]

    def add(self, s: str):
        self.parts.append(s)

    def text(self, x, y, s, cls="label", size=12, color="#000000", anchor="start"):
        self.add(f'<text class="{cls}" x="{_f(x)}" y="{_f(y)}" font-family="sans-serif" '
                 f'font-size="{size}" fill="{color}" text-anchor="{anchor}">{escape(s)}</text>')

    def finish(self) -> str:
        return "\n".join(self.parts + ["</svg>"]) + "\n"


def _dotted_circles(doc: _Doc, scene: Scene, names: Sequence[str]):
    top = MARGIN + CAPTION - 8
    bottom = scene.height - MARGIN + 8
    cy, ry = (top + bottom) / 2, (bottom - top) / 2
    for j, cx in enumerate(scene.columns):
        doc.add(f'<ellipse class="dotted" id="handle-{j + 1}" cx="{_f(cx)}" cy="{_f(cy)}" rx="10.0" '
                f'ry="{_f(ry)}" fill="none" stroke="#000000" stroke-width="1.5" stroke-dasharray="2,3"/>')
        doc.add(f'<circle class="dot" cx="{_f(cx)}" cy="{_f(top)}" r="3.0" fill="#000000"/>')
        doc.text(cx, top - 8, names[j], cls="handle-label", anchor="middle")


def _strand(doc: _Doc, scene: Scene, i: int, word: Word, color: str, cls: str, ident: str,
            label: str, start_x: float = STAR_X + 20) -> tuple[float, float]:
    """Closed strand in band ``i``; returns its attachment point."""
    band = scene.bands[i]
    x0, y0 = start_x, band.anchor
    doc.add(f'<g class="{cls}" id="{ident}">')
    if not word:
        doc.add(f'<circle class="strand" cx="{_f(x0)}" cy="{_f(y0 + STEP / 2)}" r="{_f(STEP / 2)}" '
                f'fill="none" stroke="{color}" stroke-width="2"/>')
    else:
        pts = [(x0, y0)]
        segs = []
        for k, (gen, sign) in enumerate(word.letters):
            cx, y = scene.columns[gen], scene.lanes[i][k]
            a, b = (cx - HALF_PASSAGE, cx + HALF_PASSAGE)
            if sign < 0:
                a, b = b, a
            pts += [(a, y), (b, y)]
            segs.append((a, y, b, y))
        pts.append((x0, band.top + band.height - BAND_PAD / 2))
        pts.append((x0, y0))
        doc.add(f'<polyline class="strand" points="{" ".join(f"{_f(x)},{_f(y)}" for x, y in pts)}" '
                f'fill="none" stroke="{color}" stroke-width="1.5"/>')
        for x1, y1, x2, y2 in segs:
            doc.add(f'<line class="passage" x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
                    f'stroke="{color}" stroke-width="2.5" marker-end="url(#arrow)"/>')
    doc.text(_label_x(scene), band.anchor + 4, label, color=color)
    doc.add("</g>")
    return x0, y0


def _label_x(scene: Scene) -> float:
    return (scene.columns[-1] if scene.columns else STAR_X) + COLUMN / 2


def _basepoint(doc: _Doc, x: float, y: float):
    doc.add(f'<circle class="basepoint" cx="{_f(x)}" cy="{_f(y)}" r="4.0" fill="#000000"/>')
    doc.text(x - 8, y - 6, "*", cls="basepoint-label", anchor="end")


def render_graph_stage(g: SpatialGraph, names: Optional[Sequence[str]] = None,
                       caption: str = "") -> str:
    """The graph before or after sliding: gray loops at the basepoint, one
    through each dotted circle, and the coloured circles tied to it."""
    names = tuple(names) if names else default_names(g.n)
    words = g.circle_words
    # band 0 holds the loops, one passage each
    labels = [f"c{i + 1}: {format_word(w, names)}" for i, w in enumerate(words)]
    scene = layout_scene(g.n, [g.n] + [len(w) for w in words], label_chars=max(map(len, labels), default=0))
    doc = _Doc(scene.width, scene.height, caption or "graph")
    doc.text(MARGIN, MARGIN, caption, cls="caption", size=14)
    _dotted_circles(doc, scene, names)
    star = (STAR_X, scene.bands[0].anchor)
    doc.add('<g class="graph" id="gamma0">')
    for j in range(g.n):
        y = scene.lanes[0][j]
        cx = scene.columns[j]
        doc.add(f'<polyline class="loop" points="{_f(star[0])},{_f(star[1])} {_f(cx - HALF_PASSAGE)},{_f(y)} '
                f'{_f(cx + HALF_PASSAGE)},{_f(y)} {_f(cx + HALF_PASSAGE + 8)},{_f(star[1])} '
                f'{_f(star[0])},{_f(star[1])}" fill="none" stroke="{GRAPH_COLOR}" stroke-width="1.5"/>')
    doc.add("</g>")
    for i, w in enumerate(words):
        color = scene.colors[i]
        ax, ay = _strand(doc, scene, i + 1, w, color, "component", f"component-{i + 1}", labels[i])
        doc.add(f'<line class="connector" x1="{_f(star[0])}" y1="{_f(star[1])}" x2="{_f(ax)}" '
                f'y2="{_f(ay)}" stroke="{GRAPH_COLOR}" stroke-width="1"/>')
    _basepoint(doc, *star)
    return doc.finish()


def render_link_stage(n: int, link: Link, tunnels: TunnelSystem,
                      names: Optional[Sequence[str]] = None, caption: str = "") -> str:
    """The link with its tunnel system drawn dashed: loop-tunnels start and
    end on the first component, connectors join consecutive components."""
    names = tuple(names) if names else default_names(n)
    words = link.words
    loops = [a.index for a in tunnels.arcs if a.kind is ArcKind.LOOP]
    labels = [f"L{i + 1}: {format_word(w, names)}" for i, w in enumerate(words)]
    scene = layout_scene(n, [len(loops)] + [len(w) for w in words], label_chars=max(map(len, labels), default=0))
    doc = _Doc(scene.width, scene.height, caption or "link")
    doc.text(MARGIN, MARGIN, caption, cls="caption", size=14)
    _dotted_circles(doc, scene, names)
    anchors = []
    for i, w in enumerate(words):
        anchors.append(_strand(doc, scene, i + 1, w, scene.colors[i], "component", f"component-{i + 1}", labels[i]))
    doc.add('<g class="tunnels" id="tunnels">')
    if anchors:
        ax, ay = anchors[0]
        for slot, j in enumerate(loops):
            cx, y = scene.columns[j], scene.lanes[0][slot]
            doc.add(f'<polyline class="tunnel" points="{_f(ax)},{_f(ay)} {_f(cx - HALF_PASSAGE)},{_f(y)} '
                    f'{_f(cx + HALF_PASSAGE)},{_f(y)} {_f(ax)},{_f(ay)}" fill="none" stroke="{GRAPH_COLOR}" '
                    f'stroke-width="1" stroke-dasharray="5,4"/>')
        for a in tunnels.arcs:
            if a.kind is ArcKind.CONNECTOR:
                (x1, y1), (x2, y2) = anchors[a.index], anchors[a.index + 1]
                doc.add(f'<line class="tunnel" x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2 - 10)}" y2="{_f(y2)}" '
                        f'stroke="{GRAPH_COLOR}" stroke-width="1" stroke-dasharray="5,4"/>')
    doc.add("</g>")
    doc.text(MARGIN, scene.height - MARGIN / 2,
             f"tunnels: {tunnels.count}" + (" (empty link)" if tunnels.empty_link else ""),
             cls="tunnel-count")
    if not words:
        _basepoint(doc, STAR_X, scene.bands[0].anchor)
    return doc.finish()


def render_kirby(K: KirbyDiagram, names: Optional[Sequence[str]] = None, caption: str = "") -> str:
    """Dotted circles, framed strands, meridians as small circles around
    their strand, and stabilization summands in a side panel."""
    names = tuple(names) if names else default_names(K.one_handles)
    comps = [(i, h) for i, h in enumerate(K.two_handles) if h.is_link_component]
    labels = [f"{format_word(h.word, names)}  [{h.framing}]" for _, h in comps]
    scene = layout_scene(K.one_handles, [len(h.word) for _, h in comps], extra_width=PANEL,
                         label_chars=max(map(len, labels), default=0))
    doc = _Doc(scene.width, scene.height, caption or "kirby diagram")
    counts = ",".join(str(c) for c in K.handle_counts)
    doc.text(MARGIN, MARGIN, f"{caption}  handles ({counts})".strip(), cls="caption", size=14)
    _dotted_circles(doc, scene, names)
    anchor_of = {}
    for band, (i, h) in enumerate(comps):
        anchor_of[i] = _strand(doc, scene, band, h.word, scene.colors[band], "component",
                               f"component-{band + 1}", labels[band])
        x, y = anchor_of[i]
        doc.text(x - 10, y - 4, str(h.framing), cls="framing", anchor="end", color=scene.colors[band])
    for h in K.two_handles:
        if h.meridian_of is not None and h.meridian_of in anchor_of:
            x, y = anchor_of[h.meridian_of]
            doc.add(f'<circle class="meridian" id="meridian-{h.meridian_of + 1}" cx="{_f(x)}" cy="{_f(y)}" '
                    f'r="8.0" fill="none" stroke="#000000" stroke-width="1.5"/>')
            doc.text(x + 10, y - 8, "0", cls="framing")
    a, b, c = K.stabilization_counts()
    px = scene.width - PANEL
    doc.add('<g class="stabilization" id="stabilization">')
    doc.add(f'<rect x="{_f(px)}" y="{_f(MARGIN + CAPTION)}" width="{_f(PANEL - MARGIN)}" height="90.0" '
            f'fill="none" stroke="#bbbbbb"/>')
    for row, (label, count) in enumerate((("S2xS2 (0-framed Hopf pair)", a),
                                          ("+CP2 (+1 unknot)", b), ("-CP2 (-1 unknot)", c))):
        doc.text(px + 8, MARGIN + CAPTION + 22 + 26 * row, f"{count} x {label}", cls="summand", size=11)
    doc.add("</g>")
    return doc.finish()
