import json
import math
import os
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

import permutent as pt

SCHEMA_DIR = Path(os.environ.get("PERMUTENT_SCHEMA_DIR", Path(__file__).resolve().parents[2] / "schema"))


def schema(name):
    return json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())


def test_worked_case_spectrum_and_entropy():
    cfg = pt.sector(occupations=[2, 2])
    weights = dict(pt.exact_spectrum(cfg, 2))
    assert weights[(1, 1)] == pytest.approx(2 / 3, abs=1e-15)
    assert weights[(0, 2)] == pytest.approx(1 / 6, abs=1e-15)
    want = math.log2(6) / 3 + 2 / 3 * math.log2(1.5)
    assert pt.block_entropy(cfg, 2) == pytest.approx(want, abs=1e-12)


def test_exact_weights_are_rationals_summing_to_one():
    doc = pt.spectrum_json(pt.sector(occupations=[7, 5, 9]), 8, exact=True)
    jsonschema.validate(doc, schema("spectrum"))
    assert sum(Fraction(e["weight"]) for e in doc["entries"]) == 1


def test_thermo_and_uniform():
    assert [w for _, w in pt.thermo_spectrum([0.5, 0.5], 2)] == pytest.approx([0.25, 0.5, 0.25])
    flat = pt.uniform_mixed_spectrum(2, 3)
    assert len(flat) == 6 and all(w == pytest.approx(1 / 6) for _, w in flat)
    assert pt.dimension_symmetric_subspace(200, 5) == math.comb(204, 4)


def test_asymptotics_and_bounds():
    third = pt.sector(densities=[1 / 3] * 3)
    closed_form = 0.5 * math.log2(1 / 27) + math.log2(2 * math.pi * math.e * 100)
    assert pt.asymptotic_entropy(third, 100) == pytest.approx(closed_form, abs=1e-12)
    assert closed_form == pytest.approx(8.3606, abs=1e-4)
    assert pt.max_entropy_bound(2, 2) == pytest.approx(math.log2(3))
    report = pt.entropy_report(third, 300)
    jsonschema.validate(report, schema("entropy_report"))
    assert report["within_validity"]
    assert report["gaussian_bits"] == pytest.approx(report["asymptotic_bits"], abs=1e-9)


def test_effective_spin_and_prefactor():
    assert pt.effective_spin([0.5, 0.5, 0.0])["sigma_eff"] == 0.5
    pts = [(n, 0.5 * math.log2(n) + 7) for n in (4, 8, 16, 32)]
    assert pt.fit_prefactor(pts) == pytest.approx(0.5)


def test_corrections_and_gaussian_validate():
    corr = pt.finite_size_corrections(pt.sector(occupations=[10, 10, 10]), 15)
    jsonschema.validate(corr, schema("correction_report"))
    assert corr["delta_per_bits"] == pytest.approx(-1.0)
    model = pt.gaussian_model([0.25] * 4, 16)
    jsonschema.validate(model, schema("gaussian_model"))
    assert 1 / model["det_A"] == pytest.approx(16**3 / 4**4, rel=1e-9)


def test_oracle_matches():
    rep = pt.verify_theorem(pt.sector(occupations=[2, 1, 2]), 2)
    jsonschema.validate(rep, schema("match_report"))
    assert rep["pass"]
    assert pt.verify_uniform_mixture(4, 2, 2)["support_size_dense"] == 3


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError, match="n exceeds L"):
        pt.exact_spectrum(pt.sector(occupations=[2, 2]), 9)
    with pytest.raises(pt.DomainError):
        pt.asymptotic_entropy(pt.sector(densities=[0.5, 0.5, 0.0]), 10)
    with pytest.raises(pt.ResourceError):
        pt.verify_theorem(pt.sector(occupations=[15, 15]), 1)
    with pytest.raises(ValueError):
        pt.sector()


def test_cli_json_outputs_validate(tmp_path):
    code, out, _ = pt.run_cli(["spectrum", "--L", "4", "--d", "2", "--occ", "2,2", "--n", "2", "--exact"])
    assert code == 0
    jsonschema.validate(json.loads(out), schema("spectrum"))

    code, out, _ = pt.run_cli(["spectrum", "--L", "inf", "--d", "3", "--dens", "1/3,1/3,1/3", "--n", "1"])
    doc = json.loads(out)
    jsonschema.validate(doc, schema("spectrum"))
    assert [2 ** e["log2_weight"] for e in doc["entries"]] == pytest.approx([1 / 3] * 3)

    code, out, _ = pt.run_cli(["entropy", "--L", "inf", "--dens", "0.2,0.3,0.5", "--n", "40"])
    doc = json.loads(out)
    jsonschema.validate(doc["report"], schema("entropy_report"))
    jsonschema.validate(doc["sector"], schema("sector"))

    code, out, _ = pt.run_cli(["corrections", "--L", "100", "--d", "2", "--n-max", "5", "--format", "json"])
    for row in json.loads(out)["rows"]:
        jsonschema.validate(row, schema("correction_report"))

    target = tmp_path / "verify.json"
    code, _, _ = pt.run_cli(["verify", "--grid", "2:4,3:3", "--out", str(target)])
    assert code == 0
    for rep in json.loads(target.read_text()):
        jsonschema.validate(rep, schema("match_report"))

    code, _, err = pt.run_cli(["verify", "--grid", "2:3", "--inject-fault", "0"])
    assert code == 2 and "MISMATCH" in err
