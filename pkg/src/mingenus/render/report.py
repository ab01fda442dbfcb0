"""Flat ``key: value`` report format.

One value per line, keys in a fixed order, ``[section]`` headers and ``#``
comments.  Lists are comma-separated, ``-`` is an empty list and ``none`` a
missing value.  Component references (``link_<i>``, ``two_handle_<i>``,
``meridian_of``) are 1-based.  Keys are unique across sections.
"""

from __future__ import annotations

from typing import Optional, Sequence

from ..abelian import RankReport, RankStatus
from ..builder import ArcKind, Link, LinkComponent, TunnelArc, TunnelSystem
from ..kirby import KirbyDiagram, TwoHandle
from ..presentation import Presentation, PresentationError, format_presentation, format_word, parse_presentation, parse_word
from ..trisect import Certificate, Construction, TrisectionParams

FORMAT_VERSION = "1"
HEADER = "# mingenus construction report"


class ReportSchemaError(Exception):
    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        self.field = field
        self.line = line
        where = []
        if field is not None:
            where.append(f"field {field!r}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


def _ints(xs: Sequence[int]) -> str:
    return ",".join(str(x) for x in xs) if len(xs) else "-"


def _opt(x) -> str:
    return "none" if x is None else str(x)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _arc(arc: TunnelArc, names: Sequence[str]) -> str:
    if arc.kind is ArcKind.LOOP:
        return f"loop:{names[arc.index]}"
    return f"connector:{arc.index + 1}-{arc.index + 2}"


def report_lines(cert: Certificate, K: KirbyDiagram, L: Link, T: TunnelSystem,
                 p: Presentation) -> list[tuple[str, str] | str]:
    """Ordered ``(key, value)`` pairs, with section names as bare strings."""
    names = p.names
    out: list[tuple[str, str] | str] = ["presentation"]
    out += [("format_version", FORMAT_VERSION),
            ("presentation", format_presentation(p)),
            ("generators", str(p.n)),
            ("relators", str(len(p.relators)))]

    out.append("link")
    out.append(("link_components", str(len(L))))
    for i, c in enumerate(L.components, 1):
        out += [(f"link_{i}", format_word(c.word, names)),
                (f"link_{i}_framing", str(c.framing)),
                (f"link_{i}_meridian_of", _opt(None if c.meridian_of is None else c.meridian_of + 1))]

    out.append("tunnels")
    out += [("tunnel_count", str(T.count)),
            ("tunnel_empty_link", _bool(T.empty_link)),
            ("tunnel_arcs", ",".join(_arc(a, names) for a in T.arcs) or "-")]

    out.append("kirby")
    out += [("handles", _ints(K.handle_counts)),
            ("closed", _bool(K.closed)),
            ("framings", _ints([h.framing for h in K.link_components])),
            ("framing_parities", _ints([h.framing % 2 for h in K.link_components])),
            ("stabilization", _ints(cert.stabilization))]
    for i, h in enumerate(K.two_handles, 1):
        out += [(f"two_handle_{i}", format_word(h.word, names)),
                (f"two_handle_{i}_framing", str(h.framing)),
                (f"two_handle_{i}_meridian_of", _opt(None if h.meridian_of is None else h.meridian_of + 1)),
                (f"two_handle_{i}_marker", _opt(h.marker))]
    out.append(("chi", str(cert.chi)))

    out.append("trisection")
    out += [("g", str(cert.params.g)),
            ("k", _ints(cert.params.k)),
            ("intermediate", str(cert.intermediate)),
            ("bound", str(cert.bound)),
            ("n", str(cert.n)),
            ("t_L", _opt(cert.t_L)),
            ("t_Lhat", _opt(cert.t_Lhat)),
            ("num_L", str(cert.num_L)),
            ("num_Lhat", str(cert.num_Lhat)),
            ("chain", _ints(cert.chain))]

    rr = cert.rank_report
    out.append("rank")
    out += [("presentation_rank", str(rr.presentation_rank)),
            ("abelian_lower_bound", str(rr.abelian_lower_bound)),
            ("invariant_factors", _ints(rr.invariant_factors)),
            ("free_rank", str(rr.free_rank)),
            ("rank_status", rr.status.value)]

    out.append("certificate")
    out += [("status", cert.status.value),
            ("notes", "; ".join(cert.notes) or "-")]
    return out


def serialize_report(cert: Certificate, K: KirbyDiagram, L: Link, T: TunnelSystem,
                     p: Presentation) -> str:
    lines = [HEADER]
    for item in report_lines(cert, K, L, T, p):
        lines.append(f"[{item}]" if isinstance(item, str) else f"{item[0]}: {item[1]}")
    return "\n".join(lines) + "\n"


def serialize_construction(c: Construction) -> str:
    return serialize_report(c.certificate, c.M, c.link, c.tunnels, c.presentation)


# -- reading ------------------------------------------------------------------

def read_fields(text: str) -> dict[str, tuple[str, int]]:
    """Schema-level parse: ``key -> (raw value, line number)``."""
    fields: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or not key:
            raise ReportSchemaError("expected 'key: value'", line=lineno)
        if key in fields:
            raise ReportSchemaError("duplicate key", field=key, line=lineno)
        fields[key] = (value.strip(), lineno)
    return fields


class _Reader:
    def __init__(self, fields: dict[str, tuple[str, int]]):
        self.fields = fields

    def raw(self, key: str) -> str:
        if key not in self.fields:
            raise ReportSchemaError("missing field", field=key)
        return self.fields[key][0]

    def fail(self, key: str, message: str):
        line = self.fields.get(key, (None, None))[1]
        raise ReportSchemaError(message, field=key, line=line)

    def int(self, key: str) -> int:
        try:
            return int(self.raw(key))
        except ValueError:
            self.fail(key, "expected an integer")

    def opt_int(self, key: str) -> Optional[int]:
        return None if self.raw(key) == "none" else self.int(key)

    def ints(self, key: str) -> tuple[int, ...]:
        v = self.raw(key)
        if v == "-":
            return ()
        try:
            return tuple(int(x) for x in v.split(","))
        except ValueError:
            self.fail(key, "expected comma-separated integers")

    def bool(self, key: str) -> bool:
        v = self.raw(key)
        if v not in ("true", "false"):
            self.fail(key, "expected true or false")
        return v == "true"

    def word(self, key: str, names):
        try:
            return parse_word(self.raw(key), names)
        except PresentationError as e:
            self.fail(key, f"bad word: {e}")

    def status(self, key: str) -> RankStatus:
        try:
            return RankStatus(self.raw(key))
        except ValueError:
            self.fail(key, "expected PROVEN or CONDITIONAL")

    def params(self, key: str) -> TrisectionParams:
        v = self.raw(key)
        try:
            g, ks = v.strip("()").split(";")
            return TrisectionParams(int(g), *(int(x) for x in ks.split(",")))
        except (ValueError, TypeError):
            self.fail(key, "expected (g;k1,k2,k3)")


def report_presentation(text: str) -> Presentation:
    r = _Reader(read_fields(text))
    try:
        return parse_presentation(r.raw("presentation"))
    except PresentationError as e:
        r.fail("presentation", f"bad presentation: {e}")


def _arc_from(token: str, names: Sequence[str]) -> TunnelArc:
    kind, _, rest = token.partition(":")
    if kind == ArcKind.LOOP.value:
        return TunnelArc(ArcKind.LOOP, list(names).index(rest))
    if kind == ArcKind.CONNECTOR.value:
        a, b = (int(x) for x in rest.split("-"))
        if b != a + 1:
            raise ValueError("connectors join consecutive circles")
        return TunnelArc(ArcKind.CONNECTOR, a - 1)
    raise ValueError(f"unknown arc kind {kind!r}")


def deserialize_report(text: str) -> tuple[Certificate, KirbyDiagram, Link, TunnelSystem]:
    """Inverse of :func:`serialize_report`; validates certificate invariants."""
    r = _Reader(read_fields(text))
    if r.raw("format_version") != FORMAT_VERSION:
        r.fail("format_version", f"unsupported version, expected {FORMAT_VERSION}")
    p = report_presentation(text)
    names = p.names

    def ref(key):
        v = r.opt_int(key)
        return None if v is None else v - 1

    comps = []
    for i in range(1, r.int("link_components") + 1):
        try:
            comps.append(LinkComponent(r.word(f"link_{i}", names), r.int(f"link_{i}_framing"),
                                       ref(f"link_{i}_meridian_of")))
        except ValueError as e:
            r.fail(f"link_{i}", str(e))
    link = Link(tuple(comps))

    arcs_raw = r.raw("tunnel_arcs")
    try:
        arcs = () if arcs_raw == "-" else tuple(_arc_from(t, names) for t in arcs_raw.split(","))
    except ValueError as e:
        r.fail("tunnel_arcs", f"bad arc list: {e}")
    tunnels = TunnelSystem(arcs, r.int("tunnel_count"), r.bool("tunnel_empty_link"))

    handles = r.ints("handles")
    if len(handles) != 5:
        r.fail("handles", "expected five handle counts")
    h0, h1, h2, h3, h4 = handles
    two = []
    for i in range(1, h2 + 1):
        marker = r.raw(f"two_handle_{i}_marker")
        try:
            two.append(TwoHandle(r.word(f"two_handle_{i}", names), r.int(f"two_handle_{i}_framing"),
                                 ref(f"two_handle_{i}_meridian_of"), None if marker == "none" else marker))
        except ValueError as e:
            r.fail(f"two_handle_{i}", str(e))
    try:
        kirby = KirbyDiagram(h0, h1, tuple(two), h3, h4, r.bool("closed"))
    except ValueError as e:
        r.fail("handles", str(e))
    if r.ints("framings") != tuple(h.framing for h in kirby.link_components):
        r.fail("framings", "framings disagree with the 2-handle list")
    if r.ints("framing_parities") != tuple(h.framing % 2 for h in kirby.link_components):
        r.fail("framing_parities", "parities disagree with the framings")

    k = r.ints("k")
    if len(k) != 3:
        r.fail("k", "expected three handlebody genera")
    try:
        params = TrisectionParams(r.int("g"), *k)
    except ValueError as e:
        r.fail("g", str(e))
    chain = r.ints("chain")
    if len(chain) != 4:
        r.fail("chain", "expected four chain values")
    stab = r.ints("stabilization")
    if len(stab) != 3:
        r.fail("stabilization", "expected three counts")
    try:
        rank = RankReport(r.int("presentation_rank"), r.int("abelian_lower_bound"),
                          r.ints("invariant_factors"), r.int("free_rank"), r.status("rank_status"))
    except ValueError as e:
        r.fail("abelian_lower_bound", str(e))
    notes_raw = r.raw("notes")
    cert = Certificate(
        params=params, chi=r.int("chi"), n=r.int("n"), rank_report=rank,
        t_L=r.opt_int("t_L"), t_Lhat=r.opt_int("t_Lhat"),
        num_L=r.int("num_L"), num_Lhat=r.int("num_Lhat"), chain=chain,
        intermediate=r.params("intermediate"), bound=r.int("bound"), stabilization=stab,
        status=r.status("status"),
        notes=() if notes_raw == "-" else tuple(s.strip() for s in notes_raw.split(";")),
    )
    problems = cert.problems()
    if problems:
        r.fail(problems[0], f"certificate invariant violated: {', '.join(problems)}")
    return cert, kirby, link, tunnels
