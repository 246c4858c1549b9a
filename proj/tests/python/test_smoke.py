import csv
import json
import math
from pathlib import Path

import pytest

import qwire

CONFIG = """schema = 1
command = levels

[geometry]
radii_nm = 3, 4

[spectrum]
min_mev = 0
max_mev = 400
step_mev = 2
"""


def test_levels_decrease_with_radius():
    e3 = qwire.find_levels(0, qwire.resolve(qwire.Geometry(core_radius=3.0)), 1)[0].energy
    e4 = qwire.find_levels(0, qwire.resolve(qwire.Geometry(core_radius=4.0)), 1)[0].energy
    assert 0.0 < e4 < e3
    assert e4 == pytest.approx(82.637009826332665, rel=1e-9)


def test_dot_levels_and_dipole():
    well = qwire.resolve(qwire.Geometry(core_radius=4.0, shape=qwire.Shape.sphere))
    d10 = qwire.qd_find_levels(0, well, 1)[0]
    d11 = qwire.qd_find_levels(1, well, 1)[0]
    assert d11.energy > d10.energy
    assert qwire.qd_dipole(d10, d11) == pytest.approx(1.3902574366771735, rel=1e-7)


def test_selection_rule():
    well = qwire.resolve(qwire.Geometry())
    s10 = qwire.find_levels(0, well, 2)[0]
    s20 = qwire.find_levels(0, well, 2)[1]
    s11 = qwire.find_levels(1, well, 1)[0]
    assert qwire.dipole_element(s10, s20) == 0.0
    assert qwire.dipole_element(s10, s11) > 0.0


def test_static_permittivity():
    g = qwire.Geometry(core_radius=4.0)
    wire = qwire.wire_line(g)
    dot = qwire.dot_line(g)
    assert qwire.dielectric_function([0.0], wire)[0].real == pytest.approx(10.05, abs=0.01)
    assert qwire.dielectric_function([0.0], dot)[0].real == pytest.approx(9.89, abs=0.01)


def test_spectra():
    g = qwire.Geometry(core_radius=4.0)
    grid = [50.0 + 0.5 * k for k in range(500)]
    qd = qwire.qd_absorption(grid, qwire.dot_line(g))
    qwr = qwire.qwr_absorption(grid, qwire.wire_line(g))
    assert qwr["peak_energy"] < qd["peak_energy"]
    assert qwr["fwhm"] > qd["fwhm"]
    assert len(qd["values"]) == len(grid)


def test_special_functions():
    v, d = qwire.bessel_j(0, 2.404825557695773)
    assert abs(v) < 1e-12
    assert d == pytest.approx(-0.5191474972894669, rel=1e-12)
    assert qwire.bessel_k(0, 1.0)[0] == pytest.approx(0.42102443824070834, rel=1e-14)
    assert qwire.spherical_bessel_j(0, math.pi)[0] == pytest.approx(0.0, abs=1e-15)


def test_errors():
    with pytest.raises(qwire.Error, match="lookup"):
        qwire.material_lookup("Unobtainium")
    with pytest.raises(qwire.Error, match="config"):
        qwire.run_config("schema = 3\n", "levels", "unused")


def test_run_config(tmp_path: Path):
    files, warnings = qwire.run_config(CONFIG, "compare", str(tmp_path))
    assert warnings == []
    assert [Path(f).name for f in files] == ["compare.csv"]
    raw = Path(files[0]).read_bytes()
    assert b"\r" not in raw
    rows = list(csv.reader(raw.decode().splitlines()))
    assert rows[0][0] == "radius_nm"
    assert [r[0] for r in rows[1:]] == ["3.00000000000", "4.00000000000"]
    meta = json.loads(Path(files[0] + ".meta.json").read_text())
    assert meta["command"] == "compare"
    assert len(meta["config_hash"]) == 64

    again, _ = qwire.run_config(CONFIG, "compare", str(tmp_path / "again"))
    assert Path(again[0]).read_bytes() == raw
