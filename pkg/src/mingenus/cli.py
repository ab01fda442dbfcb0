"""Command-line front end.

Exit codes: 0 success, 1 presentation parse error, 2 configuration error,
3 internal invariant violation, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .errors import InvariantViolation
from .presentation import PresentationError, format_word, parse_presentation
from .render.report import ReportSchemaError, read_fields, serialize_construction
from .render.svg import PALETTE, render_graph_stage, render_kirby, render_link_stage
from .trisect import Construction, construct

log = logging.getLogger("mingenus")

EXIT_OK, EXIT_PARSE, EXIT_CONFIG, EXIT_INVARIANT, EXIT_MISMATCH = 0, 1, 2, 3, 4
EMIT_CHOICES = ("report", "svg-stages", "svg-kirby")
COLOR_NAMES = {"#d62728": "red", "#1f77b4": "blue", "#2ca02c": "green", "#ff7f0e": "orange",
               "#9467bd": "purple", "#8c564b": "brown", "#17becf": "cyan", "#e377c2": "pink"}

REPORT_FILE = "report.txt"
STAGE_FILES = ("stage1_gamma0.svg", "stage2_slid.svg", "stage3_link.svg")
KIRBY_FILE = "kirby.svg"


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    inline: Optional[str]
    file: Optional[Path]
    framings: tuple[int, ...]
    stabilization: tuple[int, int, int]
    out: Path
    emit: frozenset[str]

    def read_input(self) -> str:
        if (self.inline is None) == (self.file is None):
            raise ConfigError("give exactly one of an inline argument or --file")
        if self.file is None:
            return self.inline
        try:
            return self.file.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise ConfigError(f"cannot read {self.file}: {e}") from e


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _count(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("count must be nonnegative")
    return value


def _emit(text: str) -> frozenset[str]:
    items = frozenset(x.strip() for x in text.split(",") if x.strip())
    bad = items - set(EMIT_CHOICES)
    if bad:
        raise argparse.ArgumentTypeError(f"unknown emit target(s) {sorted(bad)}; choose from {EMIT_CHOICES}")
    return items


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mingenus",
        description="Build minimal-genus trisected 4-manifold data from a group presentation.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def pipeline_args(p, default_emit):
        p.add_argument("presentation", nargs="?", help='inline presentation, e.g. "<x | x^5>"')
        p.add_argument("--file", type=Path, help="read the presentation from a file")
        p.add_argument("--framing", type=_int_list, default=(), help="comma-separated framings, one per relator")
        p.add_argument("--stabilize-s2xs2", type=_count, default=0, metavar="N")
        p.add_argument("--stabilize-cp2", type=_count, default=0, metavar="N")
        p.add_argument("--stabilize-cp2bar", type=_count, default=0, metavar="N")
        p.add_argument("--out", type=Path, default=Path("."), help="output directory")
        p.add_argument("--emit", type=_emit, default=frozenset(default_emit),
                       help="comma-separated subset of " + ",".join(EMIT_CHOICES))

    pipeline_args(sub.add_parser("build", help="construct, certify and write the report"), {"report"})
    pipeline_args(sub.add_parser("render", help="write SVGs of every stage"), {"svg-stages", "svg-kirby"})
    v = sub.add_parser("verify", help="re-derive a report and compare field by field")
    v.add_argument("report", nargs="?", type=Path, help="report file")
    v.add_argument("--file", type=Path, help="report file (alternative to the positional argument)")
    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    if args.subcommand == "verify":
        return CliConfig("verify", None, args.report or args.file, (), (0, 0, 0), Path("."), frozenset())
    return CliConfig(args.subcommand, args.presentation, args.file, args.framing,
                     (args.stabilize_s2xs2, args.stabilize_cp2, args.stabilize_cp2bar),
                     args.out, args.emit)


def write_atomic(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def summary(c: Construction) -> str:
    cert = c.certificate
    k = ",".join(str(x) for x in cert.params.k)
    return f"g={cert.params.g} chi={cert.chi} k=({k}) status={cert.status.value}"


def _construct(cfg: CliConfig) -> Construction:
    p = parse_presentation(cfg.read_input())
    if cfg.framings and len(cfg.framings) != len(p.relators):
        raise ConfigError(f"--framing has {len(cfg.framings)} entries but there are {len(p.relators)} relators")
    return construct(p, cfg.framings, cfg.stabilization)


def stage_documents(c: Construction) -> dict[str, str]:
    p = c.presentation
    names = p.names
    slid = ", ".join(
        f"c{i + 1} ({COLOR_NAMES[PALETTE[i % len(PALETTE)]]}) reads {format_word(w, names, compact=True)}"
        for i, w in enumerate(c.graph.circle_words)
    )
    captions = (
        f"Unknotted graph in #{p.n} S1xS2: {p.n} loops, {len(p.relators)} circles",
        f"Sliding the ends of the circles along the loops: {slid}" if slid else "No circles to slide",
        f"The link L ({len(c.link)} components) with {c.tunnels.count} tunnels",
    )
    return {
        STAGE_FILES[0]: render_graph_stage(c.gamma0, names, captions[0]),
        STAGE_FILES[1]: render_graph_stage(c.graph, names, captions[1]),
        STAGE_FILES[2]: render_link_stage(p.n, c.link, c.tunnels, names, captions[2]),
    }


def kirby_document(c: Construction) -> str:
    return render_kirby(c.M, c.presentation.names, f"Double M, chi={c.certificate.chi}")


def _write_outputs(cfg: CliConfig, c: Construction):
    docs: dict[str, str] = {}
    if "report" in cfg.emit:
        docs[REPORT_FILE] = serialize_construction(c)
    if "svg-stages" in cfg.emit:
        docs.update(stage_documents(c))
    if "svg-kirby" in cfg.emit:
        docs[KIRBY_FILE] = kirby_document(c)
    for name, text in docs.items():
        write_atomic(cfg.out / name, text)
        log.info("wrote %s", cfg.out / name)


def cmd_build(cfg: CliConfig) -> int:
    c = _construct(cfg)
    _write_outputs(cfg, c)
    print(summary(c))
    return EXIT_OK


cmd_render = cmd_build


def _report_ints(fields, key) -> tuple[int, ...]:
    v = fields[key][0]
    return () if v == "-" else tuple(int(x) for x in v.split(","))


def verify_text(text: str) -> list[str]:
    """Mismatched field names after rebuilding from the presentation echo.

    Raises PresentationError if the echoed presentation does not parse.
    """
    try:
        fields = read_fields(text)
    except ReportSchemaError as e:
        return [f"{e.field or 'schema'}: {e}"]
    if "presentation" not in fields:
        return ["presentation"]
    p = parse_presentation(fields["presentation"][0])
    try:
        framings = _report_ints(fields, "framings")
        stab = _report_ints(fields, "stabilization")
    except (KeyError, ValueError):
        return ["framings/stabilization"]
    if len(stab) != 3 or min(stab, default=0) < 0 or (framings and len(framings) != len(p.relators)):
        return ["framings/stabilization"]
    expected = read_fields(serialize_construction(construct(p, framings, tuple(stab))))
    bad = [k for k in expected if k not in fields or fields[k][0] != expected[k][0]]
    bad += [k for k in fields if k not in expected]
    return bad


def cmd_verify(cfg: CliConfig) -> int:
    if cfg.file is None:
        raise ConfigError("verify needs a report file")
    try:
        text = cfg.file.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigError(f"cannot read {cfg.file}: {e}") from e
    bad = verify_text(text)
    if bad:
        print("MISMATCH: " + ", ".join(bad))
        return EXIT_MISMATCH
    print("OK: every field re-derives")
    return EXIT_OK


COMMANDS = {"build": cmd_build, "render": cmd_render, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors, 0 on --help
        return int(e.code or 0)
    try:
        return COMMANDS[args.subcommand](_config(args))
    except PresentationError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (ConfigError, OSError) as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except InvariantViolation as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
