import random
import string
import subprocess
import sys

import pytest

from mingenus.cli import KIRBY_FILE, REPORT_FILE, STAGE_FILES, main

EXAMPLE = "<x,y,z | x^3 y^-2, [y,z]>"


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("args, line", [
    (["build", "<x | x^5>"], "g=3 chi=2 k=(1,1,1) status=PROVEN"),
    (["build", "< | >"], "g=0 chi=2 k=(0,0,0) status=PROVEN"),
    (["build", EXAMPLE, "--stabilize-s2xs2", "1"], "g=9 chi=2 k=(3,3,3) status=CONDITIONAL"),
])
def test_build_summary(args, line, tmp_path, capsys):
    code, out, _ = run(args + ["--out", str(tmp_path)], capsys)
    assert code == 0
    assert out.strip() == line
    assert (tmp_path / REPORT_FILE).exists()


def test_build_from_file(tmp_path, capsys):
    src = tmp_path / "g.txt"
    src.write_text("<x | x^2>\n")
    code, out, _ = run(["build", "--file", str(src), "--out", str(tmp_path)], capsys)
    assert code == 0 and "g=3" in out


def test_build_then_verify(tmp_path, capsys):
    assert run(["build", EXAMPLE, "--framing", "1,-3", "--stabilize-cp2bar", "2", "--out", str(tmp_path)],
               capsys)[0] == 0
    code, out, _ = run(["verify", str(tmp_path / REPORT_FILE)], capsys)
    assert code == 0, out


@pytest.mark.parametrize("old, new, name", [
    ("\ng: 7", "\ng: 8", "g"),
    ("chain: 3,3,3,3", "chain: 3,3,3,2", "chain"),
    ("tunnel_count: 4", "tunnel_count: 3", "tunnel_count"),
    ("\nstatus: CONDITIONAL", "\nstatus: PROVEN", "status"),
])
def test_verify_names_tampered_field(old, new, name, tmp_path, capsys):
    run(["build", EXAMPLE, "--out", str(tmp_path)], capsys)
    report = tmp_path / REPORT_FILE
    report.write_text(report.read_text().replace(old, new))
    code, out, _ = run(["verify", str(report)], capsys)
    assert code == 4
    assert name in out.strip().removeprefix("MISMATCH: ").split(", ")


def test_verify_truncated_report(tmp_path, capsys):
    run(["build", EXAMPLE, "--out", str(tmp_path)], capsys)
    report = tmp_path / REPORT_FILE
    report.write_text(report.read_text()[:400])
    code, out, _ = run(["verify", str(report)], capsys)
    assert code == 4 and "g" in out


def test_verify_missing_file(tmp_path, capsys):
    assert run(["verify", str(tmp_path / "nope.txt")], capsys)[0] == 2


def test_render_writes_four_svgs(tmp_path, capsys):
    code, _, _ = run(["render", EXAMPLE, "--out", str(tmp_path)], capsys)
    assert code == 0
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == sorted(STAGE_FILES + (KIRBY_FILE,))
    stage2 = (tmp_path / STAGE_FILES[1]).read_text()
    assert "Sliding the ends" in stage2 and "c1 (red) reads x^3 y^-2" in stage2
    assert "c2 (blue) reads y z y^-1 z^-1" in stage2
    first = {p.name: p.read_bytes() for p in tmp_path.iterdir()}
    run(["render", EXAMPLE, "--out", str(tmp_path)], capsys)
    assert first == {p.name: p.read_bytes() for p in tmp_path.iterdir()}


def test_render_empty_presentation(tmp_path, capsys):
    assert run(["render", "< | >", "--out", str(tmp_path), "--emit", "svg-stages"], capsys)[0] == 0
    assert "basepoint" in (tmp_path / STAGE_FILES[0]).read_text()


@pytest.mark.parametrize("args, code", [
    (["build", "<x | y>"], 1),
    (["build", "<x | x"], 1),
    (["build"], 2),
    (["build", "<x|x>", "--file", "f"], 2),
    (["build", "<x | x^2>", "--framing", "1,2"], 2),
    (["build", "<x | x^2>", "--framing", "a"], 2),
    (["build", "<x | x^2>", "--stabilize-cp2", "-1"], 2),
    (["build", "<x | x^2>", "--emit", "pdf"], 2),
    (["frobnicate"], 2),
    ([], 2),
])
def test_exit_codes(args, code, tmp_path, capsys):
    assert run(args + (["--out", str(tmp_path)] if args and args[0] == "build" and len(args) > 1 else []),
               capsys)[0] == code


def test_fuzz_arguments_never_crash(tmp_path, capsys):
    rng = random.Random(2024)
    alphabet = string.ascii_letters[:6] + "<>|,()[]^-0123456789 "
    flags = ["--framing", "--stabilize-s2xs2", "--stabilize-cp2", "--stabilize-cp2bar", "--emit", "--file"]
    for _ in range(300):
        args = [rng.choice(["build", "render", "verify", "bogus"])]
        args.append("".join(rng.choice(alphabet) for _ in range(rng.randint(0, 20))))
        for _ in range(rng.randint(0, 2)):
            args += [rng.choice(flags), "".join(rng.choice("0123,-x") for _ in range(rng.randint(0, 4)))]
        args += ["--out", str(tmp_path)] if args[0] != "verify" else []
        code = main(args)
        capsys.readouterr()
        assert code in (0, 1, 2, 3, 4)


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "mingenus", "build", "<x | x^2>", "--out", str(tmp_path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "g=3 chi=2 k=(1,1,1) status=PROVEN"
