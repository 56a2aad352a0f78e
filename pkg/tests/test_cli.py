"""CLI surface: subcommands, exit codes, and byte-level determinism."""

import json
import subprocess
import sys

import pytest

from chainforms.cli import main
from chainforms.complexes import parse_complex, sphere_complex, suspension
from chainforms.fixtures import torus


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_homology_builtin(capsys):
    code, out, _ = run_cli(capsys, "homology", "rp2", "--ring", "z", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["groups"][2]["torsion_invariants"] == [2]


def test_homology_single_degree(capsys):
    code, out, _ = run_cli(capsys, "homology", "rp2", "--ring", "mod:2",
                           "--degree", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["groups"]) == 1
    assert payload["groups"][0]["free_rank"] == 1


def test_homology_from_file(tmp_path, capsys):
    path = tmp_path / "circle.cplx"
    path.write_text("0 1\n1 2\n0 2\n")
    code, out, _ = run_cli(capsys, "homology", str(path), "--ring", "z", "--json")
    assert code == 0
    assert json.loads(out)["groups"][1]["free_rank"] == 1


def test_steenrod_command(capsys):
    code, out, _ = run_cli(capsys, "steenrod", "rp2", "--json")
    assert code == 0
    payload = json.loads(out)
    deg1 = [row for row in payload["classes"] if row["degree"] == 1][0]
    assert deg1["squares"][1] == {"i": 1, "coords": [1]}


def test_wu_command(capsys):
    code, out, _ = run_cli(capsys, "wu", "cp2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["wu_classes"][2] == [1]
    assert payload["stiefel_whitney"] == [[1], [], [1], [], [1]]


def test_linkform_command(capsys):
    code, out, _ = run_cli(capsys, "linkform", "rp3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["gram"] == [[{"num": 1, "den": 2}]]
    assert payload["nondegenerate"] is True


def test_qr_command(capsys):
    code, out, _ = run_cli(capsys, "qr", "--bound", "1000", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["law_violations"] == 0


def test_product_and_lens_emit_parseable(capsys):
    code, out, _ = run_cli(capsys, "product", "rp2", "circle")
    assert code == 0
    P = parse_complex(out)
    assert P.dim == 3
    code, out, _ = run_cli(capsys, "lens", "3")
    assert code == 0
    L = parse_complex(out)
    assert L.f_vector == (56, 344, 576, 288)


def test_verify_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "sphere3", "--json")
    assert code == 0
    assert json.loads(out)["all_pass"] is True


# -- exit codes ----------------------------------------------------------------


def test_exit_usage_unknown_command(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 1


def test_exit_usage_bad_ring(capsys):
    assert run_cli(capsys, "homology", "rp2", "--ring", "zz")[0] == 1


def test_exit_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.cplx"
    bad.write_text("0 one 2\n")
    code, _, err = run_cli(capsys, "homology", str(bad))
    assert code == 2
    assert "parse error" in err


def test_exit_topology_error(tmp_path, capsys):
    # open surface: a sphere with one facet removed
    K = sphere_complex(2)
    open_complex = "\n".join(
        " ".join(str(v) for v in f) for f in K.facets[:-1]
    )
    path = tmp_path / "open.cplx"
    path.write_text(open_complex + "\n")
    code, _, err = run_cli(capsys, "verify", str(path))
    assert code == 3
    assert "topology" in err


def test_exit_size_bound(capsys):
    code, _, err = run_cli(capsys, "product", "rp2", "rp2", "--bound", "5")
    assert code == 4
    assert "size bound" in err


def test_exit_checks_failed_on_non_manifold(tmp_path, capsys):
    # suspension of the torus: closed pseudomanifold, duality fails
    S = suspension(torus())
    path = tmp_path / "susp.cplx"
    path.write_text(S.emit())
    code, out, _ = run_cli(capsys, "verify", str(path), "--json")
    assert code == 5
    payload = json.loads(out)
    statuses = {c["name"]: c["status"] for c in payload["checks"]}
    assert statuses["duality_mod2"] == "fail"
    assert statuses["closed_pseudomanifold"] == "pass"


# -- determinism ----------------------------------------------------------------


def _run_subprocess(*argv):
    return subprocess.run(
        [sys.executable, "-m", "chainforms.cli", *argv],
        capture_output=True, check=False,
    )


@pytest.mark.parametrize("fixture", ["sphere2", "rp2"])
def test_verify_json_byte_identical_across_processes(fixture):
    a = _run_subprocess("verify", fixture, "--json", "--seed", "7")
    b = _run_subprocess("verify", fixture, "--json", "--seed", "7")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout.endswith(b"\n")


def test_verify_json_byte_identical_in_process(capsys):
    code1, out1, _ = run_cli(capsys, "verify", "rp3", "--json", "--seed", "3")
    code2, out2, _ = run_cli(capsys, "verify", "rp3", "--json", "--seed", "3")
    assert code1 == code2 == 0
    assert out1 == out2
