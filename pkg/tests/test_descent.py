from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from math import gcd

import pytest

from oracles import lemma1_scalar
from pythbox import DomainError
from pythbox.descent import (
    DescentCertificate,
    SquarePair,
    certificate_violations,
    check_sum_diff_squares,
    descent_step,
    parametrize_two_square_sum,
    validate_certificate,
    verify_lemma1,
)


def admissible_k(max_k1):
    return [
        (k1, k2)
        for k1 in range(2, max_k1 + 1)
        for k2 in range(1, k1)
        if gcd(k1, k2) == 1 and (k1 + k2) % 2
    ]


@pytest.mark.parametrize("r,v", [(5, 4), (5, 3), (2, 1)])
def test_check_sum_diff_squares_small(r, v):
    assert check_sum_diff_squares(SquarePair(r, v)) is False


def test_square_pair_invariant():
    for r, v in ((1, 1), (2, 3), (3, 0)):
        with pytest.raises(DomainError):
            SquarePair(r, v)


def test_descent_step_rejects_non_members():
    with pytest.raises(DomainError, match="not both squares"):
        descent_step(SquarePair(5, 4))
    with pytest.raises(DomainError, match="not coprime"):
        descent_step(SquarePair(10, 8))


def test_descent_step_rejects_everything_up_to_300():
    for r in range(2, 301):
        for v in range(1, r):
            with pytest.raises(DomainError):
                descent_step(SquarePair(r, v))


@pytest.mark.parametrize("r0,beta,gamma,expected", [(5, 1, 7, (2, 1)), (13, 7, 17, (3, 2))])
def test_parametrize_two_square_sum(r0, beta, gamma, expected):
    k1, k2 = parametrize_two_square_sum(r0, beta, gamma)
    assert (k1, k2) == expected
    assert k1 * k1 + k2 * k2 == r0
    assert gamma**2 - beta**2 == 8 * (k1 - k2) * (k1 + k2) * k1 * k2


def test_parametrize_bruteforce_agreement():
    # For (5, 1, 7) and (13, 7, 17) only one admissible (k1, k2) <= 3 works.
    for r0, beta, gamma in ((5, 1, 7), (13, 7, 17)):
        lo, hi = (gamma - beta) // 2, (gamma + beta) // 2
        hits = [
            (k1, k2)
            for k1, k2 in admissible_k(3)
            if k1 * k1 + k2 * k2 == r0 and {2 * k1 * k2, k1 * k1 - k2 * k2} == {lo, hi}
        ]
        assert hits == [parametrize_two_square_sum(r0, beta, gamma)]


@pytest.mark.parametrize(
    "args",
    [(5, 2, 7), (5, 1, 8), (5, 7, 1), (5, 1, 9), (15, 3, 21), (0, 1, 7)],
)
def test_parametrize_rejects(args):
    with pytest.raises(DomainError):
        parametrize_two_square_sum(*args)


def test_parametrize_round_trip():
    for k1, k2 in admissible_k(20):
        legs = sorted((2 * k1 * k2, k1 * k1 - k2 * k2))
        gamma = legs[0] + legs[1]
        beta = legs[1] - legs[0]
        r0 = k1 * k1 + k2 * k2
        assert parametrize_two_square_sum(r0, beta, gamma) == (k1, k2)
        quotient, rem = divmod(gamma**2 - beta**2, 8 * k1 * k2 * (k1 - k2) * (k1 + k2))
        assert (quotient, rem) == (1, 0)


def _synthetic_certificate():
    # No fully consistent certificate exists; this one satisfies some links.
    return DescentCertificate(
        r0=5, v0=4, beta=3, gamma=7, k1=2, k2=1, a=1, b=2, c=1, f=1
    )


def test_certificate_checker_reports_failures():
    bad = certificate_violations(_synthetic_certificate())
    assert "sum_square" in bad  # 25 + 16 != 49
    assert "difference_square" not in bad  # 25 - 16 == 9
    assert "k1_minus_k2" not in bad and "k2_square" not in bad
    with pytest.raises(DomainError, match="violates"):
        validate_certificate(_synthetic_certificate())


@pytest.mark.parametrize(
    "field,value,name",
    [("beta", 4, "difference_square"), ("k2", 2, "k2_square"), ("a", 3, "k1_minus_k2"), ("c", 9, "descent_weak")],
)
def test_certificate_single_broken_invariant(field, value, name):
    cert = replace(_synthetic_certificate(), **{field: value})
    assert name in certificate_violations(cert)


def test_certificate_weak_only_is_flagged():
    # c² + f² = 2 lies between v0² = 1 and r0² + v0² = 26.
    cert = DescentCertificate(r0=5, v0=1, beta=3, gamma=7, k1=2, k2=1, a=1, b=2, c=1, f=1)
    bad = certificate_violations(cert)
    assert "descent_strong" in bad and "descent_weak" not in bad


def test_verify_lemma1_small_bounds():
    rep = verify_lemma1(1)
    assert rep.count == 0 and rep.details["pairs"] == 0
    assert verify_lemma1(2).count == 0


def test_verify_lemma1_matches_scalar_oracle():
    rep = verify_lemma1(300)
    diff, summ, both = lemma1_scalar(300)
    assert (diff, summ) == (418, 249)
    assert rep.details["difference_square_pairs"] == diff
    assert rep.details["sum_square_pairs"] == summ
    assert rep.count == len(both) == 0


def test_verify_lemma1_1000():
    rep = verify_lemma1(1000)
    assert rep.count == 0 and rep.exemplar is None
    assert rep.details["pairs"] == 1000 * 999 // 2


def test_verify_lemma1_partition_invariance():
    serial = verify_lemma1(2000)
    with ProcessPoolExecutor(max_workers=3) as pool:
        parallel = verify_lemma1(2000, pool.map)
    assert serial == parallel


def test_validate_distinguishes_weak_only(monkeypatch):
    import pythbox.descent as descent

    monkeypatch.setattr(descent, "certificate_violations", lambda cert: ["descent_strong"])
    with pytest.raises(DomainError, match="weak descent"):
        descent.validate_certificate(_synthetic_certificate())
