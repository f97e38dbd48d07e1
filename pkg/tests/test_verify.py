import pytest

from sucalc.fgl import ConfigError
from sucalc.verify import VerifyConfig, check_names, verify_all

ACCEPTANCE = ["fgl_axioms", "alpha_values", "partial_values", "composition", "stong_projection",
              "multiplication", "gamma_phi", "fw_standard", "fw_closed_forms", "coefficient_gcd", "non_generation",
              "w_lattices", "numtheory", "odd_generation"]


def test_every_criterion_registered():
    names = check_names()
    assert all(n in names for n in ACCEPTANCE)
    assert len(names) == len(set(names)) == len(ACCEPTANCE) + 1


def test_only_filter():
    r = verify_all(VerifyConfig(only="non_generation", k=4))
    assert [c.check for c in r.checks] == ["non_generation"]
    assert r.passed and r.exit_code == 0
    assert r.checks[0].parameters["k"] == 4


def test_deterministic_json():
    cfg = VerifyConfig(only="m*", order=6, weight_cap=4)
    assert verify_all(cfg).to_json() == verify_all(cfg).to_json()


def test_schema():
    d = verify_all(VerifyConfig(only="partial_values")).to_dict()
    rec = d["checks"][0]
    assert set(rec) == {"name", "paper_ref", "degree_cap", "status", "witness", "detail", "parameters"}
    assert rec["degree_cap"] == 16 and rec["status"] == "pass"


def test_invalid_projection_fails_with_witness():
    r = verify_all(VerifyConfig(only="projection_validity", lambdas="d0 + b2*d2"))
    c = r.checks[0]
    assert c.status == "fail" and "Delta o pi" in c.witness
    assert r.exit_code == 1


def test_user_projection_family_member_passes():
    # pi0 itself, written out
    r = verify_all(VerifyConfig(only="projection_validity", order=4, weight_cap=2,
                                lambdas="d0 + (b1^2 - b2)*d2"))
    assert r.passed


@pytest.mark.parametrize("cfg", [
    VerifyConfig(order=12),
    VerifyConfig(only="nothing*"),
    VerifyConfig(k=9),
    VerifyConfig(omega="b1^2"),
    VerifyConfig(lambdas="d0 + b1*d1"),
    VerifyConfig(lambdas="d0 +"),
])
def test_config_errors(cfg):
    with pytest.raises(ConfigError):
        verify_all(cfg)


def test_small_caps_pass():
    r = verify_all(VerifyConfig(order=6, weight_cap=4, samples=10, random_orientations=1))
    assert r.passed, r.to_text()
