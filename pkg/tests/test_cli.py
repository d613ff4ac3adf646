"""Command line behavior, exercised in process through main(argv)."""

import json
import random

from colorinv.cli import main
from colorinv.config import builtin_config
from colorinv.pictures import PictureShape, build_phi
from colorinv.sampling import random_w0_point, standard_test_algebra
from colorinv.textform import format_point, format_sym, parse_sym


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_validate_builtin(capsys):
    rc, out, err = run(capsys, "validate", "--config", "builtin:super")
    assert rc == 0
    assert "valid" in out.splitlines()[-1]
    assert "group: factors [2]" in out


def test_validate_unknown_config(capsys):
    rc, out, err = run(capsys, "validate", "--config", "builtin:missing")
    assert rc == 2
    assert err.startswith("error:")


def test_list_enumerates_shapes(capsys):
    rc, out, err = run(capsys, "list", "--config", "builtin:super",
                       "--max-degree", "2")
    assert rc == 0
    assert "multiplicities 1  positions N=1" in out
    assert "multiplicities 2  positions N=2" in out
    assert "cycle type 2" in out
    assert "cycle type 1+1" in out


def test_picture_output_parses_back(capsys):
    rc, out, err = run(capsys, "picture", "--config", "builtin:z2z2",
                       "--multiplicities", "2", "--sigma", "(1 2)")
    assert rc == 0
    cfg = builtin_config("z2z2")
    expected = build_phi(PictureShape(cfg.shape, (2,)), (2, 1)).poly
    assert parse_sym(out.strip(), cfg.shape) == expected


def test_picture_structured_output(capsys):
    rc, out, err = run(capsys, "picture", "--config", "builtin:super",
                       "--multiplicities", "2", "--sigma", "id")
    assert rc == 0
    rc, out, err = run(capsys, "picture", "--config", "builtin:super",
                       "--multiplicities", "2", "--sigma", "id",
                       "--format", "structured")
    assert rc == 0
    decoded = json.loads(out)
    assert decoded["terms"]


def test_picture_rejects_bad_sigma(capsys):
    rc, out, err = run(capsys, "picture", "--config", "builtin:super",
                       "--multiplicities", "2", "--sigma", "[1,1]")
    assert rc == 2
    assert err.startswith("error:")


def test_picture_rejects_wrong_multiplicity_count(capsys):
    rc, out, err = run(capsys, "picture", "--config", "builtin:super",
                       "--multiplicities", "1,1", "--sigma", "id")
    assert rc == 2


def test_eval_matches_trace_on_shared_point(capsys, tmp_path):
    cfg = builtin_config("super")
    alg = standard_test_algebra(cfg.chi)
    rng = random.Random("cli-point")
    point = random_w0_point(cfg.shape, alg, rng)
    point_file = tmp_path / "point.txt"
    point_file.write_text(format_point(point))
    phi = build_phi(PictureShape(cfg.shape, (2,)), (2, 1))
    poly_file = tmp_path / "phi.txt"
    poly_file.write_text(format_sym(phi.poly))

    rc, eval_out, _ = run(capsys, "eval", "--config", "builtin:super",
                          "--poly", str(poly_file), "--point", str(point_file))
    assert rc == 0
    rc, trace_out, _ = run(capsys, "trace", "--config", "builtin:super",
                           "--sigma", "(1 2)", "--assign", "1,1",
                           "--point", str(point_file))
    assert rc == 0
    assert eval_out == trace_out


def test_eval_missing_file(capsys, tmp_path):
    rc, out, err = run(capsys, "eval", "--config", "builtin:super",
                       "--poly", str(tmp_path / "absent.txt"),
                       "--point", str(tmp_path / "absent2.txt"))
    assert rc == 2
    assert err.startswith("error:")


def test_verify_single_suite_with_report(capsys, tmp_path):
    report = tmp_path / "report.txt"
    rc, out, err = run(capsys, "verify", "--config", "builtin:trivial",
                       "--suite", "bicharacter", "--report", str(report))
    assert rc == 0
    assert "verify: PASS" in out
    text = report.read_text()
    assert text.startswith("suite: bicharacter")
    assert "result: PASS" in text


def test_verify_unknown_suite(capsys):
    rc, out, err = run(capsys, "verify", "--config", "builtin:trivial",
                       "--suite", "nonsense")
    assert rc == 2
    assert err.startswith("error:")
