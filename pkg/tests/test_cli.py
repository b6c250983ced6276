import json
import subprocess
import sys

import pytest

from mpdr import FormatError
from mpdr.cli import main, parse_group_text


@pytest.fixture()
def files(tmp_path):
    paths = {}
    paths["z5"] = tmp_path / "z5.grp"
    paths["z5"].write_text("cyclic 5\n")
    paths["z3"] = tmp_path / "z3.grp"
    paths["z3"].write_text("cyclic 3\n")
    paths["s3"] = tmp_path / "s3.grp"
    paths["s3"].write_text("perm 3\n(0 1 2)\n(0 1)\n")
    paths["allg"] = tmp_path / "allg.spec"
    paths["allg"].write_text(json.dumps({
        "m": 2, "n": 3,
        "sets": [{"i": 0, "j": 1, "elements": [0, 1, 2]},
                 {"i": 1, "j": 0, "elements": [0, 1, 2]}],
    }))
    paths["tri"] = tmp_path / "tri.dg"
    paths["tri"].write_text("n 3\n0 1\n1 2\n2 0\n")
    paths["tmp"] = tmp_path
    return paths


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_parse_group_text_cyclic():
    assert parse_group_text("cyclic 6\n").order == 6


def test_parse_group_text_perm():
    g = parse_group_text("perm 3\n(0 1 2)\n(0 1)\n")
    assert g.order == 6
    assert g.designated_generators == (1, 2)


def test_parse_group_text_comments_and_errors():
    assert parse_group_text("# symmetric\nperm 3\n(0 1 2)\n(0 1)\n").order == 6
    for bad in ("", "ring 4\n", "cyclic x\n", "cyclic 4\n(0 1)\n", "perm 3\n"):
        with pytest.raises(FormatError):
            parse_group_text(bad)


def test_construct_to_stdout(capsys, files):
    code = main(["construct", "--family", "cyclic-2pdr", "--n", "5"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["m"] == 2 and doc["n"] == 5


def test_construct_exception_exit_2(capsys, files):
    assert main(["construct", "--family", "cyclic-2pdr", "--n", "3"]) == 2
    assert main(["construct", "--family", "cyclic-mpdr", "--n", "2", "--m", "3"]) == 2


def test_construct_two_gen_from_group_file(capsys, files):
    out = files["tmp"] / "spec.json"
    code = main(["construct", "--family", "two-gen-mpdr", "--group", str(files["s3"]),
                 "--m", "3", "--out", str(out)])
    assert code == 0
    assert out.exists()
    doc = json.loads(out.read_text())
    assert doc["m"] == 3 and doc["n"] == 6


def test_construct_drr_extend(capsys, files):
    z7 = files["tmp"] / "z7.grp"
    z7.write_text("cyclic 7\n")
    code, doc = run_json(capsys, ["construct", "--family", "drr-extend",
                                  "--group", str(z7), "--r", "1,3"])
    assert code == 0
    assert doc["m"] == 2


def test_verify_true_exit_0(capsys, files):
    spec = files["tmp"] / "fig.spec"
    main(["construct", "--family", "cyclic-2pdr", "--n", "5", "--out", str(spec)])
    capsys.readouterr()
    code, doc = run_json(capsys, ["verify", "--group", str(files["z5"]),
                                  "--spec", str(spec)])
    assert code == 0
    assert doc["report"]["is_pdr"] is True
    assert doc["report"]["aut_order"] == "5"
    assert doc["tool"]["name"] == "mpdr"
    assert doc["tool"]["version"]
    assert set(doc["inputs"]) == {"group", "spec"}
    assert len(doc["inputs"]["group"]["sha256"]) == 64


def test_verify_false_exit_1_with_witness(capsys, files):
    code, doc = run_json(capsys, ["verify", "--group", str(files["z3"]),
                                  "--spec", str(files["allg"])])
    assert code == 1
    assert doc["report"]["is_pdr"] is False
    assert doc["report"]["extra_automorphism_witness"]


def test_verify_parts_as_colors_crosscheck(capsys, files):
    spec = files["tmp"] / "fig.spec"
    main(["construct", "--family", "cyclic-2pdr", "--n", "5", "--out", str(spec)])
    capsys.readouterr()
    code, doc = run_json(capsys, ["verify", "--group", str(files["z5"]),
                                  "--spec", str(spec), "--parts-as-colors"])
    assert code == 0
    assert doc["report"]["color_blind"] is False
    assert doc["report"]["aut_order"] == "5"


def test_verify_malformed_spec_exit_3(capsys, files):
    bad = files["tmp"] / "bad.spec"
    bad.write_text("{ not json")
    assert main(["verify", "--group", str(files["z3"]), "--spec", str(bad)]) == 3
    missing = files["tmp"] / "nope.spec"
    assert main(["verify", "--group", str(files["z3"]), "--spec", str(missing)]) == 3


def test_aut_digraph(capsys, files):
    code, doc = run_json(capsys, ["aut", "--digraph", str(files["tri"])])
    assert code == 0
    assert doc["aut"]["order"] == "3"
    assert doc["aut"]["degree"] == 3


def test_aut_oracle_agrees(capsys, files):
    _, fast = run_json(capsys, ["aut", "--digraph", str(files["tri"])])
    _, oracle = run_json(capsys, ["aut", "--digraph", str(files["tri"]), "--oracle"])
    assert fast["aut"]["order"] == oracle["aut"]["order"]
    assert oracle["mode"] == "oracle"


def test_aut_from_group_and_spec(capsys, files):
    spec = files["tmp"] / "fig.spec"
    main(["construct", "--family", "cyclic-2pdr", "--n", "5", "--out", str(spec)])
    capsys.readouterr()
    code, doc = run_json(capsys, ["aut", "--group", str(files["z5"]),
                                  "--spec", str(spec)])
    assert code == 0
    assert doc["aut"]["order"] == "5"


def test_export_dot_digon_rendering(capsys, files):
    z2 = files["tmp"] / "z2.grp"
    z2.write_text("cyclic 2\n")
    spec = files["tmp"] / "fig3.spec"
    main(["construct", "--family", "cyclic-mpdr", "--n", "2", "--m", "4",
          "--out", str(spec)])
    capsys.readouterr()
    code = main(["export", "--format", "dot", "--group", str(z2), "--spec", str(spec)])
    out = capsys.readouterr().out
    assert code == 0
    assert out.count("dir=none") == 10  # digon count of the built digraph
    assert 'label="x_3"' in out
    arrows = [ln for ln in out.splitlines()
              if "->" in ln and "dir=none" not in ln and "label" not in ln]
    assert len(arrows) == 24 - 2 * 10  # one-way arcs


def test_search_exhaust_negative(capsys, files):
    code, doc = run_json(capsys, ["search", "--problem", "exhaust-negative",
                                  "--n", "4"])
    assert code == 0
    assert len(doc["records"]) == 16
    assert doc["all_exceed_group_order"] is True
    assert all(r["aut_order"] > 4 for r in doc["records"])
    assert all(r["shift_exponent"] is not None for r in doc["records"])


def test_search_rigid3(capsys, files):
    code, doc = run_json(capsys, ["search", "--problem", "rigid3", "--m", "4"])
    assert code == 0
    assert doc["verdict"] == "none-exists"


def test_search_drr2(capsys, files):
    code, doc = run_json(capsys, ["search", "--problem", "drr2",
                                  "--group", str(files["z5"])])
    assert code == 0
    assert doc["verdict"] == "witness-found"
    assert doc["witness"]["pair"] == [1, 2]


def test_search_missing_args(capsys, files):
    assert main(["search", "--problem", "rigid3"]) == 3
    assert main(["search", "--problem", "exhaust-negative"]) == 3


def test_console_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "mpdr", "aut", "--digraph", str(files["tri"])],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["aut"]["order"] == "3"


def test_bad_subcommand_exit_3():
    assert main(["frobnicate"]) == 3
