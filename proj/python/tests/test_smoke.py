import json
import math

import pytest

import navslip


def test_catalog_lists_fields():
    names = navslip.catalog_names()
    assert "rigid_rotation" in names
    assert "robin_shear" in names


def test_robin_root_solves_the_transcendental_equation():
    lam = navslip.robin_root(0.5)
    assert abs(lam * math.tan(lam) - 2.0) < 1e-12


def test_rigid_rotation_identity():
    rep = navslip.divcurl_base_check("rigid_rotation")
    assert rep["terms"]["grad_sq"] == pytest.approx(8 * math.pi / 3, rel=1e-12)
    assert rep["terms"]["boundary_II"] == pytest.approx(-8 * math.pi / 3, rel=1e-12)


def test_sphere_normal():
    n = navslip.normal("unit_sphere", [0.0, 0.6, 0.8])
    assert n == pytest.approx([0.0, 0.6, 0.8])


def test_persistence_verdict():
    v = navslip.persistence_check("rigid_rotation", "rigid_rotation", "unit_sphere", [0, 0, 1])
    assert v["verdict"] == "Inconclusive"


def test_fit_rate():
    fit = navslip.fit_rate([(1e-2, 0.1), (1e-3, 0.01), (1e-4, 0.001)])
    assert fit["slope"] == pytest.approx(1.0)


def test_config_and_errors():
    doc = navslip.parse_config("[solver]\nnu = 0.001\nnu_ladder = 1e-2, 1e-3\n")
    assert doc["solver"]["nu"] == 0.001
    assert doc["solver"]["nu_ladder"] == [1e-2, 1e-3]
    with pytest.raises(navslip.NavslipError, match="TypeMismatch"):
        navslip.parse_config("nu = banana")


def test_short_simulation_conserves_euler_energy():
    rep = navslip.simulate(
        "[domain]\nnx = 8\nny = 8\nnz = 9\n[solver]\nnu = 0\ndt = 0.01\nT = 0.1\nsave_every = 5\n"
        "[field]\nfield = taylor_green_2d\n"
    )
    e = [row["E0"] for row in rep["rows"]]
    assert len(e) == 3
    assert max(e) - min(e) < 1e-10 * e[0]


def test_snapshot_roundtrip(tmp_path):
    assert navslip.snapshot_roundtrip(str(tmp_path / "u.vfld")) == 0.0
