import json

import numpy as np
import pytest

from qqbound import cli, verify
from qqbound.exceptions import NoConvergence
from qqbound.tcsim import TCAmplitudes


def test_run_all_small():
    results = verify.run_all(trials=4, d_list=(3,), seed=1)
    assert [r.name for r in results] == [
        "route_pairs",
        "route_c_db",
        "pure_saturation",
        "separable_zero",
        "xform_consistency",
        "propagator_oracle",
        "block_reproduction",
        "closed_form",
    ]
    assert all(r.passed for r in results)


def test_expected_blocks_have_no_n1_form():
    with pytest.raises(ValueError):
        verify.expected_tc_blocks(TCAmplitudes(0, 0, 1, 0, 0, 0), 1)


def test_failing_suite_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(verify, "BLOCK_TOL", 0.0)
    code = cli.main(["verify", "--trials", "2", "--d-list", "3"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL block_reproduction" in out


def test_numerical_failure_exit_code(monkeypatch, tmp_path, capsys):
    def boom(rho):
        raise NoConvergence("forced")

    monkeypatch.setattr(cli, "c_db_full", boom)
    path = tmp_path / "rho.json"
    path.write_text(json.dumps(cli.density_document(np.eye(4) / 4)))
    assert cli.main(["bound", "--input", str(path)]) == 3
    assert "numerical failure" in capsys.readouterr().err
