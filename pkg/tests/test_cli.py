"""CLI contract: exit codes, JSON schema, output round trips."""

import json

import jsonschema

from sconf import algebras
from sconf.algebras import AlgebraElement, BasisSymbol, GeneratorMap
from sconf.cli import main
from sconf.reports import VerificationReport

REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "suite": {"type": "string"},
        "params": {"type": "object"},
        "status": {"enum": ["pass", "fail", "inconclusive"]},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "context": {"type": "string"},
                    "lhs": {"type": "string"},
                    "rhs": {"type": "string"},
                },
                "required": ["context", "lhs", "rhs"],
                "additionalProperties": False,
            },
        },
    },
    "required": ["suite", "params", "status", "violations"],
    "additionalProperties": False,
}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    return code, doc


def test_verify_algebra_pass(capsys):
    code, doc = run_json(capsys, "verify", "algebra", "--which", "R", "--window", "2")
    assert code == 0 and doc["status"] == "pass" and doc["violations"] == []


def test_verify_homomorphism_named(capsys):
    code, doc = run_json(capsys, "verify", "homomorphism", "--map", "sigma", "--window", "4")
    assert code == 0 and doc["status"] == "pass"


def test_verify_submodule_spec(capsys):
    code, doc = run_json(
        capsys, "verify", "submodule", "--spec", "M[h=y^2-1]", "--window", "2", "--degree", "2"
    )
    assert code == 0 and doc["status"] == "pass"


def test_verify_quotient_single_a(capsys):
    code, doc = run_json(
        capsys, "verify", "quotient", "--a", "1", "--window", "2", "--degree", "2"
    )
    assert code == 0 and doc["status"] == "pass"


def test_verify_restriction_rank1(capsys):
    code, doc = run_json(
        capsys, "verify", "restriction", "--algebra", "N1R", "--a", "1",
        "--check", "rank1", "--degree", "4",
    )
    assert code == 0 and doc["status"] == "pass"


def test_restrict_simplicity(capsys):
    code, doc = run_json(
        capsys, "restrict", "--algebra", "N1R", "--a", "1", "--check", "simplicity",
        "--degree", "3", "--words", "3",
    )
    assert code == 0 and doc["status"] == "pass"


def test_act_examples(capsys):
    code, out, _ = run(capsys, "act", "L[1]", "1", "--module", "omega", "--parity", "even")
    assert code == 0 and out.strip() == "lam*x + 1/2*lam*y"
    code, out, _ = run(capsys, "act", "Gp[2]", "1", "--module", "omega", "--parity", "odd")
    assert code == 0 and out.strip() == "2*lam^2*alp^-1*x + 4*lam^2*alp^-1*y"
    code, out, _ = run(capsys, "act", "C", "x^5*y")
    assert code == 0 and out.strip() == "0"


def test_act_quotient_with_specialization(capsys):
    code, out, _ = run(
        capsys, "act", "L[1]", "x", "--module", "quotient", "--a", "1",
        "--lam0", "2", "--alp0", "3",
    )
    assert code == 0 and out.strip() == "2*x^2 + x - 1"


def test_act_word_composition(capsys):
    code, out, _ = run(capsys, "act", "Gp[0]; Gm[0]", "1", "--parity", "even")
    assert code == 0 and out.strip() == "2*x"


def test_decompose_pass(capsys):
    code, doc = run_json(capsys, "decompose", "--h", "y^2-1")
    assert code == 0 and doc["status"] == "pass"
    assert doc["params"]["factors"] == ["-1", "1"]
    assert doc["params"]["chain"] == ["M[h=y - 1]", "M[h=y^2 - 1]"]


def test_decompose_with_hints(capsys):
    code, doc = run_json(capsys, "decompose", "--h", "y^2-2", "--roots", "sqrt2,-sqrt2")
    assert code == 0 and doc["status"] == "pass"


def test_decompose_inconclusive_exit2(capsys):
    code, doc = run_json(capsys, "decompose", "--h", "y^2-3")
    assert code == 2 and doc["status"] == "inconclusive"


def test_usage_error_exit3(capsys):
    assert run(capsys, "verify", "nosuchsuite")[0] == 3
    assert run(capsys, "act", "L[1", "1", "--parity", "even")[0] == 3
    assert run(capsys, "act", "L[1]", "x + s")[0] == 3
    assert run(capsys, "verify", "module", "--window", "0")[0] == 3
    assert run(capsys, "decompose", "--h", "1")[0] == 3


def test_failing_suite_exit1(capsys, monkeypatch):
    # a deliberately broken map (mode shift without the compensating H term)
    # demonstrates the failure exit path end to end
    def broken():
        good = algebras.spectral_flow()

        def rule(s):
            if s.family == "L":
                return AlgebraElement.basis(BasisSymbol("R", "L", s.twice))
            return good.rule(s)

        return GeneratorMap("sigma", "NS", "R", rule)

    monkeypatch.setitem(algebras.STANDARD_MAPS, "sigma", broken)
    code, doc = run_json(capsys, "verify", "homomorphism", "--map", "sigma", "--window", "1")
    assert code == 1 and doc["status"] == "fail" and doc["violations"]


def test_violations_sorted_in_json():
    report = VerificationReport("demo", {"k": 1})
    report.record("b-context", "1", "2")
    report.record("a-context", "3", "4")
    doc = report.to_dict()
    assert [v["context"] for v in doc["violations"]] == ["a-context", "b-context"]
    assert report.exit_code == 1
