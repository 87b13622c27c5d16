from pathlib import Path

from eggbox.cli import main

DEFS_DIR = Path(__file__).resolve().parent.parent / "definitions"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def trailer(out):
    lines = out.splitlines()
    start = len(lines) - 1 - lines[::-1].index("---")
    pairs = dict(ln.split("=", 1) for ln in lines[start + 1:] if "=" in ln)
    return pairs


def test_analyze_builtin_group(capsys):
    code, out, _ = run(capsys, "analyze", "C4")
    assert code == 0
    t = trailer(out)
    assert t["max_subgroup"] == "C4"
    assert t["elements"] == "4"
    assert t["j_classes"] == "1"


def test_analyze_declared_monoid(capsys):
    code, out, _ = run(capsys, "analyze", "M",
                       "--defs", str(DEFS_DIR / "unit-zero.defs"))
    assert code == 0
    t = trailer(out)
    assert t["min_ideal"] == "1"
    assert t["faithful_on_min_ideal"] == "no"


def test_analyze_unknown_name(capsys):
    code, out, err = run(capsys, "analyze", "no-such-thing")
    assert code == 2
    assert "error" in err


def test_cover_full_and_reload(capsys, tmp_path):
    path = tmp_path / "c2.defs"
    code, out, _ = run(capsys, "cover", "C2", "3", "--out", str(path))
    assert code == 0
    t = trailer(out)
    assert t["result"] == "pass"
    assert t["size"] == "21"
    assert t["mode"] == "full"

    mname = next(
        ln.split()[1] for ln in path.read_text().splitlines()
        if ln.startswith("monoid "))
    code, out, _ = run(capsys, "analyze", mname, "--defs", str(path))
    assert code == 0
    t = trailer(out)
    assert t["elements"] == "21"
    assert t["max_subgroup"] == "C2"


def test_cover_cheap_mode_cannot_be_written(capsys, tmp_path):
    code, out, err = run(capsys, "cover", "S3", "11",
                         "--out", str(tmp_path / "s3.defs"))
    assert code == 2
    assert "--mode full" in err


def test_cover_modulus_too_small(capsys):
    code, _, err = run(capsys, "cover", "C2", "2")
    assert code == 2
    assert "need n >=" in err


def test_cover_cap_exceeded(capsys):
    code, _, err = run(capsys, "cover", "S3", "11", "--mode", "full")
    assert code == 3
    assert "cap" in err


def test_cover_auto_falls_back_to_cheap(capsys):
    code, out, _ = run(capsys, "cover", "S3", "11")
    assert code == 0
    t = trailer(out)
    assert t["mode"] == "cheap"
    assert t["result"] == "pass"
    assert "skipped" in out


def test_cover_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "cover", "C2xC2", "7")
    _, second, _ = run(capsys, "cover", "C2xC2", "7")
    assert first == second


def test_embed_declared_problem(capsys):
    code, out, _ = run(capsys, "embed", "E2",
                       "--defs", str(DEFS_DIR / "doubled-swap.defs"))
    assert code == 0
    t = trailer(out)
    assert t["result"] == "pass"
    assert t["p"] == "5"
    assert t["size"] == "120"
    assert t["group"] == "C4"


def test_embed_base_alpha_pair(capsys):
    code, out, _ = run(capsys, "embed", "M", "a",
                       "--defs", str(DEFS_DIR / "unit-zero.defs"))
    assert code == 0
    assert trailer(out)["result"] == "pass"


def test_embed_prime_override(capsys):
    code, out, _ = run(capsys, "embed", "E2", "--prime", "7",
                       "--defs", str(DEFS_DIR / "doubled-swap.defs"))
    assert code == 0
    assert trailer(out)["p"] == "7"
    code, _, err = run(capsys, "embed", "E2", "--prime", "4",
                       "--defs", str(DEFS_DIR / "doubled-swap.defs"))
    assert code == 2
    assert "prime" in err


def test_embed_unknown_problem(capsys):
    code, _, err = run(capsys, "embed", "E9",
                       "--defs", str(DEFS_DIR / "doubled-swap.defs"))
    assert code == 2
    assert "error" in err


def test_srank(capsys):
    code, out, _ = run(capsys, "srank", "C2xC2", "C2")
    assert code == 0
    assert trailer(out)["rank"] == "2"
    code, _, err = run(capsys, "srank", "C3", "C4")
    assert code == 2
    assert "simple" in err
