import json

import pytest

from homhopf.errors import ConfigurationError
from homhopf.instance import make_instance
from homhopf.suite import builtin_modules, emit_report, parse_selection, report_payload, run_suite


def test_parse_selection():
    assert parse_selection("") == ()
    assert parse_selection("hopf, yd,hopf") == ("hopf", "yd")
    assert parse_selection("all") == ("all",)
    with pytest.raises(ConfigurationError):
        parse_selection("hopf,nope")


def test_coalgebra_instance_only_has_coalgebra_suite(builtin):
    inst = make_instance("c", builtin("trivial-Z3").coalgebra)
    assert inst.kind == "coalgebra"
    assert run_suite(inst, "all").selection == ("coalgebra",)
    with pytest.raises(ConfigurationError):
        run_suite(inst, "hopf")


def test_suites_run_in_canonical_order(builtin):
    rep = run_suite(builtin("crossed-constant-kZ3"), "braiding,hopf")
    assert rep.selection == ("hopf", "braiding")


def test_module_set(builtin):
    assert [m.name for m in builtin_modules(builtin("crossed-constant-kZ3"))] == ["k", "H", "D0", "D1"]
    assert [m.name for m in builtin_modules(builtin("twisted-crossed-constant-kZ3"))] == ["k", "H"]
    assert [m.name for m in builtin_modules(builtin("yd-declared"))] == ["k", "H"]


def test_report_rendering(builtin):
    rep = run_suite(builtin("fx-3.2-counit"), "hopf")
    text = emit_report(rep, "text")
    assert "FAIL" in text and "witness at" in text
    assert text.rstrip().endswith("verdict: FAIL")
    payload = report_payload(rep)
    assert payload["verdict"] == "fail"
    bad = [r for r in payload["suites"][0]["results"] if not r["pass"]]
    assert all(r["witness"]["lhs"] != r["witness"]["rhs"] for r in bad)
    assert json.loads(emit_report(rep, "json")) == payload
    with pytest.raises(ConfigurationError):
        emit_report(rep, "xml")
