import json

import pytest

from septic_index.cli import main
from septic_index.exact import Trinomial
from septic_index.report import (
    CERTIFIED,
    REDUCIBLE,
    UNKNOWN,
    build_report,
    certify_irreducible,
    discrepancy_class,
    rational_root,
)


@pytest.mark.parametrize(
    "a,b,status,method",
    [
        (7, 56, CERTIFIED, "eisenstein"),
        (17, 51, CERTIFIED, "eisenstein"),
        (7, 8, REDUCIBLE, "rational-root"),
        (0, 3, CERTIFIED, "eisenstein"),
        (1, 1, CERTIFIED, "mod-q"),
        (-1, 1, CERTIFIED, "mod-q"),
    ],
)
def test_certificates(a, b, status, method):
    c = certify_irreducible(Trinomial(a, b))
    assert (c.status, c.method) == (status, method)


def test_certificate_details():
    assert certify_irreducible(Trinomial(7, 56)).detail == "Eisenstein at 7"
    assert certify_irreducible(Trinomial(17, 51)).detail == "Eisenstein at 17"
    assert certify_irreducible(Trinomial(7, 8)).detail == "f(-1) = 0"


def test_rational_root_search():
    assert rational_root(Trinomial(-65, 2)) == 2  # 128 - 130 + 2 = 0
    assert rational_root(Trinomial(3, 5)) is None


def test_reducible_without_rational_root_needs_exact_fallback():
    # x^7 - 7x + 10 = (x^2 - x + 2)(x^5 + x^4 - x^3 - 3x^2 - x + 5)
    t = Trinomial(-7, 10)
    assert rational_root(t) is None
    assert certify_irreducible(t).status == REDUCIBLE
    assert certify_irreducible(t, exact_fallback=False).status == UNKNOWN
    assert certify_irreducible(t).detail == "factor degrees 2,5"


def test_report_example2():
    r = build_report(7, 56)
    assert r.engine_divisors == [2]
    assert r.theorem_divisors == [2]
    assert r.discrepancies == []
    assert r.primes[0]["theorem_condition"] == "Thm1.1(1)"
    assert "K is not monogenic" in r.to_text()


def test_report_json_is_stable():
    a = build_report(28, 32).to_json()
    b = build_report(28, 32).to_json()
    assert a == b
    doc = json.loads(a)
    assert list(doc) == sorted(doc)
    assert doc["engine_index_divisors"] == [2]


def test_unknown_certificate_downgrades_claim():
    r = build_report(7, 56)
    r.certificate = type(r.certificate)(UNKNOWN, "none", "no certificate found")
    assert "if f is irreducible, then" in r.to_text()


def test_discrepancy_labels():
    # theorem-only claims carry the matched tag
    assert discrepancy_class(Trinomial(1, 4), 2, "Thm1.1(3)", False) == "Thm1.1(3)"
    # engine-only claims are labelled by the family whose hypotheses hold
    assert discrepancy_class(Trinomial(1, 2), 2, None, True).startswith("Thm1.1(")


def test_example1_marker():
    r = build_report(17, 51)
    assert r.example_markers == [{"example": "Example1", "claimed": 3, "agrees": False}]


# CLI exit-code contract


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_classify_text_and_json(capsys):
    code, out, _ = _run(capsys, "classify", "--a", "7", "--b", "56")
    assert code == 0 and "Thm1.1(1)" in out
    code, out, _ = _run(capsys, "classify", "--a", "0", "--b", "3", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["engine_index_divisors"] == [] and "index-one-remark" in doc["corollaries"]


def test_cli_classify_is_byte_identical(capsys):
    _, first, _ = _run(capsys, "classify", "--a", "12", "--b", "32", "--json")
    _, second, _ = _run(capsys, "classify", "--a", "12", "--b", "32", "--json")
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "--a", "0", "--b", "0"),
        ("classify", "--a", "7", "--b", "8"),
        ("split", "--a", "7", "--b", "56", "--p", "4"),
        ("split", "--a", "3", "--b", "0", "--p", "2"),
        ("classify", "--a", "x", "--b", "1"),
    ],
)
def test_cli_invalid_input_exit_2(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == 2


def test_cli_split(capsys):
    code, out, _ = _run(capsys, "split", "--a", "7", "--b", "56", "--p", "2")
    assert code == 0 and "{(1,1),(1,1),(1,1),(1,2),(1,2)}" in out
    code, out, _ = _run(capsys, "split", "--a", "0", "--b", "3", "--p", "3")
    assert "{(7,1)}" in out
    code, out, _ = _run(capsys, "split", "--a", "12", "--b", "32", "--p", "2", "--trace", "--json")
    doc = json.loads(out)
    assert doc["splitting"] == [[1, 1], [3, 2]]
    assert "Y^2+Y+1" in json.dumps(doc["trace"])


def test_cli_unresolved_exit_3(capsys, monkeypatch):
    from septic_index import cli
    from septic_index.errors import Unresolved

    def boom(*_a, **_k):
        raise Unresolved("budget exhausted", p=2)

    monkeypatch.setattr(cli, "splitting_type", boom)
    code, _, err = _run(capsys, "split", "--a", "12", "--b", "32", "--p", "2")
    assert code == 3 and "unresolved" in err


def test_cli_selftest(capsys):
    code, out, _ = _run(capsys, "selftest")
    assert code == 0
    assert "x^7+7x+56 non-monogenic" in out
    assert "(17,51) Example-1 discrepancy present" in out
    assert "6^7a^7f(mu)+Db=0" in out
