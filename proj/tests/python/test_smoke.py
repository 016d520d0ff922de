import json
from pathlib import Path

import pytest

import toric_mirror as tm

EXAMPLES = Path(__file__).resolve().parents[2] / "tools" / "examples"
QUINTIC = [[4, -1, -1, -1], [-1, 4, -1, -1], [-1, -1, 4, -1], [-1, -1, -1, 4], [-1, -1, -1, -1]]


def test_quintic():
    assert tm.is_reflexive(QUINTIC)
    assert len(tm.lattice_points(QUINTIC)) == 126
    assert tm.hodge(QUINTIC) == (1, 101)
    assert sorted(map(tuple, tm.polar(tm.polar(QUINTIC)))) == sorted(map(tuple, QUINTIC))


def test_chambers():
    points, chambers = tm.chambers([[-1, -1], [-1, 1], [1, -1], [1, 1], [0, 0]])
    assert len(points) == 5
    assert len(chambers) == 3
    assert [c["phase"] for c in chambers].count("geometric") == 1


def test_wide_integers():
    big = 2**70
    pts = tm.lattice_points([[0, 0], [1, 0], [0, 1]])
    assert sorted(map(tuple, pts)) == [(0, 0), (0, 1), (1, 0)]
    assert not tm.is_reflexive([[0, 0], [big, 0], [0, 1]])


def test_errors():
    with pytest.raises(tm.PreconditionError):
        tm.is_reflexive([[0, 0], [1, 1], [2, 2]])
    with pytest.raises(tm.PreconditionError):
        tm.hodge([[0, 0], [2, 0], [0, 1]])
    with pytest.raises(tm.Error):
        tm.polar([[0, 0], [2, 0], [0, 1]])


def test_run_matches_cli():
    code, out, err = tm.run(["mdmm", str(EXAMPLES / "quintic.json")])
    assert code == 0 and err == ""
    data = json.loads(out)
    assert data["rank"] == 1 and data["dominance"] == "holds"
    code, _, err = tm.run(["reflexive", str(EXAMPLES / "missing.json")])
    assert code == 1 and err
