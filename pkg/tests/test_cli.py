"""CLI: subcommands, piping, exit codes, report schema."""

import io
import json
import subprocess
import sys

from posurf import classify_both, read_facets, sphere, write_facets
from posurf.cli import main


def run_cli(argv, stdin_text="", monkeypatch=None, capsys=None):
    if monkeypatch is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_to_file_then_classify(tmp_path, capsys, monkeypatch):
    target = tmp_path / "s2.facets"
    code, out, _ = run_cli(["gen", "sphere", "2", "-o", str(target)], capsys=capsys)
    assert code == 0 and out == ""
    code, out, _ = run_cli(["classify", str(target), "--mode", "both"], capsys=capsys)
    assert code == 0
    assert "surface: yes" in out and "path: both" in out


def test_gen_classify_pipe_equivalent(capsys, monkeypatch):
    code, facets_text, _ = run_cli(["gen", "sphere", "2"], capsys=capsys)
    assert code == 0
    code, out, _ = run_cli(
        ["classify", "-", "--mode", "both", "--json"],
        stdin_text=facets_text,
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 0
    report = json.loads(out)
    # piped round-trip equals in-process classification
    in_process = classify_both(read_facets(facets_text))
    assert report["classification"]["rank"] == in_process.rank
    assert report["classification"]["is_surface"] == in_process.is_surface
    assert report["classification"]["category"] == in_process.category
    assert report["instance"]["total_faces"] == 14
    assert report["instance"]["faces_by_rank"] == {"0": 4, "1": 6, "2": 4}


def test_json_schema_stable(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["classify", "--json"],
        stdin_text=write_facets(sphere(1)),
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"command", "input", "format", "mode", "instance", "classification"}
    assert set(report["classification"]) == {
        "rank",
        "is_surface",
        "is_pcm",
        "is_smooth_pcm",
        "is_pseudomanifold",
        "is_normal_pseudomanifold",
        "border_empty",
        "category",
        "path",
        "timings_ms",
    }


def test_classify_empty_input(capsys, monkeypatch):
    code, out, _ = run_cli(
        ["classify"], stdin_text="", monkeypatch=monkeypatch, capsys=capsys
    )
    assert code == 0
    assert "rank: -1" in out
    assert "surface: yes" in out
    assert "pcm: yes" in out


def test_classify_pinched_sphere(capsys, monkeypatch):
    code, gen_out, _ = run_cli(["gen", "pinched-sphere"], capsys=capsys)
    code, out, _ = run_cli(
        ["classify"], stdin_text=gen_out, monkeypatch=monkeypatch, capsys=capsys
    )
    assert code == 0
    assert "pseudomanifold: yes" in out
    assert "normal pseudomanifold: no" in out


def test_classify_hasse_poset(capsys, monkeypatch):
    code, gen_out, _ = run_cli(["gen", "khalimsky", "2", "2"], capsys=capsys)
    assert code == 0
    code, out, _ = run_cli(
        ["classify", "--format", "hasse"],
        stdin_text=gen_out,
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 0
    assert "pcm: yes" in out
    assert "pseudomanifold: not evaluated" in out


def test_fast_mode_on_hasse_is_refused(capsys, monkeypatch):
    code, gen_out, _ = run_cli(["gen", "khalimsky", "1", "1"], capsys=capsys)
    code, _, err = run_cli(
        ["classify", "--format", "hasse", "--mode", "fast"],
        stdin_text=gen_out,
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 1
    assert "error" in err


def test_gen_khalimsky_facets_refused(capsys):
    code, _, err = run_cli(["gen", "khalimsky", "2", "2", "--format", "facets"], capsys=capsys)
    assert code == 1
    assert "hasse" in err


def test_border_command(capsys, monkeypatch):
    code, gen_out, _ = run_cli(["gen", "disk", "6"], capsys=capsys)
    code, out, _ = run_cli(
        ["border"], stdin_text=gen_out, monkeypatch=monkeypatch, capsys=capsys
    )
    assert code == 0
    assert "# border: 12 of 25 faces, 1 component(s)" in out
    assert "component 0: 12 faces, 1-surface" in out
    assert "rank 1" in out  # the emitted border poset


def test_border_empty_poset_is_domain_error(capsys, monkeypatch):
    code, _, err = run_cli(
        ["border"], stdin_text="", monkeypatch=monkeypatch, capsys=capsys
    )
    assert code == 1
    assert "undefined" in err


def test_check_flags(capsys, monkeypatch):
    text = write_facets(sphere(2))
    for flag, expect in [
        ("--surface", "surface: yes (rank 2)"),
        ("--pcm", "pcm: no"),
        ("--smooth", "smooth pcm: no"),
        ("--pseudomanifold", "pseudomanifold: yes"),
        ("--normal", "normal pseudomanifold: yes"),
    ]:
        code, out, _ = run_cli(
            ["check", flag], stdin_text=text, monkeypatch=monkeypatch, capsys=capsys
        )
        assert code == 0
        assert expect in out


def test_check_pm_on_hasse_refused(capsys, monkeypatch):
    code, gen_out, _ = run_cli(["gen", "khalimsky", "1", "1"], capsys=capsys)
    code, _, err = run_cli(
        ["check", "--normal", "--format", "hasse"],
        stdin_text=gen_out,
        monkeypatch=monkeypatch,
        capsys=capsys,
    )
    assert code == 1


def test_parse_error_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.facets"
    bad.write_text("1 2 3\n4 x\n")
    code, _, err = run_cli(["classify", str(bad)], capsys=capsys)
    assert code == 1
    assert "line 2" in err


def test_usage_errors_exit_1(capsys):
    assert run_cli(["bogus"], capsys=capsys)[0] == 1
    assert run_cli(["classify", "--mode", "sideways"], capsys=capsys)[0] == 1
    assert run_cli([], capsys=capsys)[0] == 1


def test_gen_deterministic(capsys):
    a = run_cli(["gen", "random-pure", "2", "8", "6", "42"], capsys=capsys)[1]
    b = run_cli(["gen", "random-pure", "2", "8", "6", "42"], capsys=capsys)[1]
    c = run_cli(["gen", "random-pure", "2", "8", "6", "--seed", "42"], capsys=capsys)[1]
    assert a == b == c


def test_memo_disable_env_var(capsys, monkeypatch):
    text = write_facets(sphere(2))
    monkeypatch.setenv("POSURF_DISABLE_MEMO", "1")
    code, out_nomemo, _ = run_cli(
        ["classify", "--mode", "both"], stdin_text=text, monkeypatch=monkeypatch, capsys=capsys
    )
    assert code == 0
    monkeypatch.delenv("POSURF_DISABLE_MEMO")
    code, out_memo, _ = run_cli(
        ["classify", "--mode", "both"], stdin_text=text, monkeypatch=monkeypatch, capsys=capsys
    )
    assert code == 0
    assert out_nomemo == out_memo


def test_bench_small(capsys):
    code, out, _ = run_cli(
        ["bench", "--max-sphere", "2", "--random", "4"], capsys=capsys
    )
    assert code == 0
    assert "speedup" in out and "instance mix:" in out


def test_real_pipe_subprocess():
    # one true end-to-end pipe through the OS
    cmd = (
        f"{sys.executable} -m posurf gen sphere 2 | "
        f"{sys.executable} -m posurf classify --mode both"
    )
    proc = subprocess.run(
        cmd, shell=True, capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0, proc.stderr
    assert "surface: yes" in proc.stdout
