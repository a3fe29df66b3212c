import io
import subprocess
import sys

import pytest

from peeliso.cli import main
from peeliso.fixtures import fixture_text
from peeliso.graph import parse_mapping, read_edge_list


def call(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name in ("fig1", "fig2", "c6", "2c3", "appendix-g", "appendix-h"):
        p = tmp_path / f"{name}.el"
        p.write_text(fixture_text(name))
        paths[name] = str(p)
    return paths


def test_check_isomorphic(files, tmp_path):
    code, out = call("check", files["fig1"], files["fig2"], "--mode", "faithful")
    assert code == 0
    mapping = parse_mapping(out)
    assert len(mapping) == 7
    m = tmp_path / "m.txt"
    m.write_text(out)
    assert call("verify", files["fig1"], files["fig2"], str(m))[0] == 0


def test_check_trace(files):
    code, out = call("check", files["fig1"], files["fig2"], "--trace")
    assert code == 0
    assert "# round 1 pivot 1 partner 1 pairs 1:1 remaining 6" in out


def test_map_prints_only_pairs(files):
    code, out = call("map", files["fig1"], files["fig2"])
    assert code == 0
    assert all(not line.startswith("#") for line in out.splitlines())


def test_check_negative(files):
    code, out = call("check", files["c6"], files["2c3"], "--mode", "faithful")
    assert code == 1
    assert parse_mapping(out) == []
    assert call("check", files["c6"], files["2c3"], "--mode", "cautious")[0] == 2


def test_check_input_errors(files, tmp_path):
    assert call("check", str(tmp_path / "missing.el"), files["fig2"])[0] == 3
    bad = tmp_path / "bad.el"
    bad.write_text("3 1\n1 1\n")
    assert call("check", str(bad), files["fig2"])[0] == 3


def test_usage_errors_exit_3():
    with pytest.raises(SystemExit) as info:
        main(["check"])
    assert info.value.code == 3
    with pytest.raises(SystemExit) as info:
        main(["check", "a", "b", "--mode", "eager"])
    assert info.value.code == 3


def test_verify_paper_mappings(files, tmp_path):
    from peeliso.fixtures import data_text

    fig = tmp_path / "fig.map"
    fig.write_text(data_text("fig-phi.map"))
    assert call("verify", files["fig1"], files["fig2"], str(fig))[0] == 0
    app = tmp_path / "app.map"
    app.write_text(data_text("appendix-phi.map"))
    assert call("verify", files["appendix-g"], files["appendix-h"], str(app))[0] == 0

    lines = data_text("fig-phi.map").splitlines()
    pairs = [ln for ln in lines if not ln.startswith("#")]
    (v1, u1), (v2, u2) = pairs[0].split(), pairs[1].split()
    swapped = [f"{v1} {u2}", f"{v2} {u1}"] + pairs[2:]
    bad = tmp_path / "bad.map"
    bad.write_text("\n".join(swapped))
    code, out = call("verify", files["fig1"], files["fig2"], str(bad))
    assert code == 1 and "rejected" in out

    junk = tmp_path / "junk.map"
    junk.write_text("1 2 3\n")
    assert call("verify", files["fig1"], files["fig2"], str(junk))[0] == 3


def test_fuzz(tmp_path):
    code, out = call("fuzz", "--trials", "100", "-n", "6", "-p", "0.5", "--seed", "1")
    assert code == 0
    assert out.count("soundness-violations=0") == 3
    assert call("fuzz", "--trials", "1", "-n", "1", "-p", "0", "--seed", "1")[0] == 0
    a = call("fuzz", "--trials", "200", "-n", "8", "-p", "0.3", "--seed", "9")[1]
    b = call("fuzz", "--trials", "200", "-n", "8", "-p", "0.3", "--seed", "9")[1]
    assert a == b
    assert call("fuzz", "-n", "20", "--trials", "1")[0] == 3


def test_fuzz_dump_and_regular(tmp_path):
    code, out = call("fuzz", "--trials", "60", "-n", "8", "--seed", "7", "--dump", str(tmp_path / "cx"), "--regular")
    assert code == 0
    assert "rook-vs-shrikhande" in out
    dumped = sorted((tmp_path / "cx").glob("*.el"))
    assert dumped and all(read_edge_list(p).n in (8, 16) for p in dumped)


def test_bench():
    code, out = call("bench", "--sizes", "20", "--samples", "2", "--seed", "0")
    assert code == 0
    assert len(out.strip().splitlines()) == 2 and "slope" not in out
    assert call("bench", "--sizes", "10", "--samples", "0")[0] == 3
    assert call("bench", "--sizes", "20", "10")[0] == 3
    code, out = call("bench", "--sizes", "10", "20", "--samples", "1")
    assert "log-log slope" in out


def test_gen(tmp_path, files):
    out_file = tmp_path / "g.el"
    assert call("gen", "fixture", "fig1", "-o", str(out_file))[0] == 0
    assert read_edge_list(out_file) == read_edge_list(files["fig1"])

    prefix = tmp_path / "pair"
    assert call("gen", "iso-pair", "-n", "8", "-p", "0.5", "--seed", "3", "-o", str(prefix))[0] == 0
    g, h = tmp_path / "pair-g.el", tmp_path / "pair-h.el"
    code, _ = call("check", str(g), str(h), "--mode", "retry")
    assert code in (0, 2)
    first = g.read_text(), h.read_text()
    call("gen", "iso-pair", "-n", "8", "-p", "0.5", "--seed", "3", "-o", str(prefix))
    assert (g.read_text(), h.read_text()) == first

    for name in ("c6", "2c3", "rook4x4"):
        assert call("gen", "fixture", name, "-o", str(tmp_path / f"{name}.el"))[0] == 0
    assert call("gen", "fixture", "nope", "-o", str(tmp_path / "x"))[0] == 3
    assert call("gen", "random", "-n", "5", "-p", "1", "-o", str(tmp_path / "k5.el"))[0] == 0
    assert read_edge_list(tmp_path / "k5.el").m == 10
    assert call("gen", "regular-pair", "-n", "10", "--degree", "3", "-o", str(tmp_path / "r"))[0] == 0
    assert call("gen", "regular-pair", "-n", "10", "-o", str(tmp_path / "r"))[0] == 3
    assert call("gen", "random", "-o", str(tmp_path / "r"))[0] == 3


def test_console_script_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "peeliso.cli", "check", files["c6"], files["2c3"]],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert proc.stdout.startswith("# not-isomorphic")
