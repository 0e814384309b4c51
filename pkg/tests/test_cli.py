"""End-to-end CLI tests (in-process via main())."""

import json

import pytest

import known
import oracle
from pgroups.cli import (EXIT_BOUND, EXIT_INTEGRITY, EXIT_INVALID, EXIT_OK,
                         main)
from pgroups.presentation import format_presentation


D8_TEXT = format_presentation(known.dihedral8())
Q8_TEXT = format_presentation(known.quaternion8())


@pytest.fixture(scope="module")
def workspace(tmp_path_factory):
    """Catalog and tree files for order 16, built once through the CLI."""
    root = tmp_path_factory.mktemp("cli")
    cat = root / "cat16.txt"
    tree = root / "tree16.txt"
    assert main(["enumerate", "2", "4", "--out", str(cat)]) == EXIT_OK
    assert main(["tree-build", str(cat), str(tree)]) == EXIT_OK
    return {"cat": str(cat), "tree": str(tree), "root": root}


def test_enumerate_output(capsys, tmp_path):
    out = tmp_path / "cat8.txt"
    assert main(["enumerate", "2", "3", "--out", str(out)]) == EXIT_OK
    assert "5 groups" in capsys.readouterr().out
    assert out.exists()


def test_enumerate_machine_mode(capsys):
    assert main(["--machine", "enumerate", "3", "2"]) == EXIT_OK
    rec = json.loads(capsys.readouterr().out)
    assert rec["kind"] == "enumerate" and rec["count"] == 2


def test_enumerate_bound_exit():
    assert main(["enumerate", "7", "5"]) == EXIT_BOUND
    assert main(["enumerate", "2", "7"]) == EXIT_BOUND


def test_enumerate_invalid_prime():
    assert main(["enumerate", "6", "2"]) == EXIT_INVALID


def test_identify_inline(capsys, workspace):
    pres = format_presentation(known.elementary_abelian(2, 4))
    assert main(["identify", workspace["tree"], workspace["cat"], pres]) \
        == EXIT_OK
    out = capsys.readouterr().out.strip()
    assert out.startswith("16#")


def test_identify_from_file_and_stdin(capsys, workspace, monkeypatch):
    path = workspace["root"] / "g.txt"
    pres = format_presentation(known.cyclic(2, 4))
    path.write_text(pres + "\n")
    assert main(["identify", workspace["tree"], workspace["cat"],
                 str(path)]) == EXIT_OK
    from_file = capsys.readouterr().out.strip()
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(pres))
    assert main(["identify", workspace["tree"], workspace["cat"], "-"]) \
        == EXIT_OK
    assert capsys.readouterr().out.strip() == from_file


def test_identify_wrong_order(workspace):
    assert main(["identify", workspace["tree"], workspace["cat"], D8_TEXT]) \
        == EXIT_INVALID


def test_identify_rejects_bad_presentation(workspace):
    assert main(["identify", workspace["tree"], workspace["cat"],
                 "2 2 | pow 9: 1"]) == EXIT_INVALID


def test_identify_deterministic(capsys, workspace):
    pres = format_presentation(known.oracle_to_presentation(
        oracle.semidihedral(4), 2))
    main(["identify", workspace["tree"], workspace["cat"], pres])
    first = capsys.readouterr().out
    main(["identify", workspace["tree"], workspace["cat"], pres])
    assert capsys.readouterr().out == first


def test_tree_rejects_foreign_catalog(workspace, tmp_path, capsys):
    cat8 = tmp_path / "cat8.txt"
    assert main(["enumerate", "2", "3", "--out", str(cat8)]) == EXIT_OK
    capsys.readouterr()
    assert main(["identify", workspace["tree"], str(cat8), D8_TEXT]) \
        == EXIT_INTEGRITY


def test_siblings_report(capsys, workspace):
    assert main(["siblings", workspace["cat"]]) == EXIT_OK
    assert "pairs=0 triples=0 quadruples=0" in capsys.readouterr().out


def test_twins_report(capsys, workspace):
    assert main(["twins", workspace["cat"]]) == EXIT_OK
    out = capsys.readouterr().out
    assert "twin-pairs=0" in out


def test_fingerprint_output(capsys):
    assert main(["fingerprint", D8_TEXT]) == EXIT_OK
    out = capsys.readouterr().out
    assert "group of order 8" in out
    assert "frattini:" in out


def test_brauer_d8_q8(capsys):
    assert main(["--machine", "brauer", D8_TEXT, Q8_TEXT]) == EXIT_OK
    rec = json.loads(capsys.readouterr().out)
    assert rec["char_equivalent"] is True
    assert rec["brauer"] is False


def test_isoclinic_d8_q8(capsys):
    assert main(["isoclinic", D8_TEXT, Q8_TEXT]) == EXIT_OK
    assert "isoclinic: True" in capsys.readouterr().out


def test_family_listing(capsys):
    assert main(["family", "theorem1_Gx", "5"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.count("consistent=True") == 2
    assert main(["family", "theorem1_Gx", "5", "3"]) == EXIT_INVALID
    assert main(["family", "tuple2", "3"]) == EXIT_INVALID


def test_bench(capsys, workspace):
    assert main(["--machine", "bench", workspace["tree"], workspace["cat"],
                 "10"]) == EXIT_OK
    rec = json.loads(capsys.readouterr().out)
    assert rec["trials"] == 10 and rec["mean_ms"] >= 0


def test_usage_error_exit_code():
    assert main([]) == EXIT_INVALID
    assert main(["no-such-command"]) == EXIT_INVALID
