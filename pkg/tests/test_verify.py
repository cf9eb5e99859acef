import json

import pytest

from magic_jsd.verify import SUITES, format_report, run_suite


@pytest.mark.parametrize("suite", SUITES)
def test_suite_passes_small(suite):
    rep = run_suite(suite, samples=40)
    bad = [c["name"] for c in rep["cases"] if not c["passed"]]
    assert rep["failed"] == 0, bad


def test_report_is_deterministic():
    a = run_suite("magic", seed=7, samples=20)
    b = run_suite("magic", seed=7, samples=20)
    assert json.dumps(a) == json.dumps(b)
    assert a["passed"] + a["failed"] == len(a["cases"])


def test_format_report():
    rep = run_suite("gatepower", samples=5)
    text = format_report(rep)
    assert text.endswith(f"{rep['passed']} passed, {rep['failed']} failed\n")
    assert text.count("\n") == len(rep["cases"]) + 1


def test_run_suite_rejects():
    with pytest.raises(ValueError):
        run_suite("nope")
    with pytest.raises(ValueError):
        run_suite("jsd", samples=0)
