import json

import pytest

from eulerqsym.combinatorics import partitions
from eulerqsym.eulerian import q_lambda, q_lambda_direct
from eulerqsym.poly import Poly, p, q
from eulerqsym.qp import AQPPoly, a_lambda_direct
from eulerqsym.symfunc import s
from eulerqsym.verify import (
    Verdict,
    block_multisets,
    check_cadogan,
    check_fund_prop,
    check_p_one,
    check_qp_routes,
    check_qp_theorem,
    check_routes,
    check_schur_theorem,
    check_series_aggregate,
    check_shuffle_lemma,
    eulerian_number,
    report_json,
    run_all,
    run_suite,
    summary,
)


def test_examples_pass():
    assert check_schur_theorem((1, 1, 1)).passed
    assert check_schur_theorem((4,)).passed
    assert check_schur_theorem((2, 1)).passed
    assert check_qp_theorem((2, 1)).passed
    assert check_qp_theorem((1, 1, 1)).passed
    assert check_shuffle_lemma(1, 1, 0).passed
    assert check_shuffle_lemma(0, 1, 0).passed
    assert check_shuffle_lemma(3, 2, 2).passed
    assert check_fund_prop(3, 1, ()).passed
    assert check_fund_prop(4, 2, (1,)).passed
    assert check_fund_prop(2, 2, ()).passed
    assert check_cadogan(0).passed and check_cadogan(2).passed


def test_empty_bounds():
    assert run_all({}) == []
    assert summary([]) == "0 checks, 0 passed, 0 failed"


def test_over_limit_is_reported():
    (v,) = run_suite("thm1", 20)
    assert not v.passed and "error" in v.witness


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("bogus", 3)


def test_report_is_deterministic():
    bounds = {"thm1": 5, "lemma-shuffle": (2, 2), "fund-prop": 4, "spot": True}
    a = report_json(run_all(bounds))
    b = report_json(run_all(dict(reversed(list(bounds.items())))))
    assert a == b
    data = json.loads(a)
    keys = [(d["claim"], json.dumps(d["instance"], sort_keys=True)) for d in data]
    assert keys == sorted(keys)
    assert all("elapsed" not in d for d in data)
    assert "elapsed" in json.loads(report_json(run_all({"cadogan": 1}), timings=True))[0]


def perturb_schur(row, j, lam, delta):
    out = list(row)
    out[j] = out[j] + s(*lam) * delta
    return out


@pytest.mark.parametrize("n", range(2, 6))
def test_schur_mutations_caught(n):
    """Every +/-1 change of one Schur coefficient fails some check."""
    for lam in partitions(n):
        row = q_lambda(lam)
        direct = q_lambda_direct(lam)
        for j in range(len(row)):
            for mu in partitions(n):
                for delta in (1, -1):
                    bad = perturb_schur(row, j, mu, delta)
                    verdicts = [
                        check_schur_theorem(lam, bad),
                        check_routes(lam, bad, direct),
                        check_p_one(lam, None, bad),
                    ]
                    assert not all(v.passed for v in verdicts), (lam, j, mu, delta)
                    failing = [v for v in verdicts if not v.passed]
                    assert all(v.witness for v in failing)


def test_series_aggregate_mutation():
    rows = {lam: q_lambda(lam) for lam in partitions(4)}
    assert check_series_aggregate(4, rows).passed
    rows[(4,)] = perturb_schur(rows[(4,)], 1, (2, 2), 1)
    v = check_series_aggregate(4, rows)
    assert not v.passed and v.witness["partition"] == [2, 2]


def test_qp_mutation_caught():
    A = a_lambda_direct((3, 1))
    coeffs = list(A.coeffs)
    coeffs[1] = coeffs[1] + p * q
    bad = AQPPoly(A.lam, tuple(coeffs))
    assert not check_qp_theorem((3, 1), bad).passed
    assert not check_qp_routes((3, 1), bad).passed
    negative = AQPPoly(A.lam, tuple(c - Poly.monomial(q=9) if j == 0 else c for j, c in enumerate(A.coeffs)))
    v = check_qp_theorem((3, 1), negative)
    assert not v.passed and v.witness["part"] == "nonnegativity"


def test_verdict_shape():
    v = Verdict("x", {"n": 1}, True)
    assert v.to_dict() == {"claim": "x", "instance": {"n": 1}, "passed": True, "witness": None}


def test_eulerian_closed_form():
    assert [eulerian_number(4, j) for j in range(4)] == [1, 11, 11, 1]


def test_block_multisets():
    assert block_multisets(4) == [(2,), (2, 2), (3,), (4,)]
