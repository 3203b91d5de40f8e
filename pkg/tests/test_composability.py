import math
from fractions import Fraction

import numpy as np
import pytest

from fixauth.core.config.fa_code import DomainError, NoFeasibleRoundError, UnboundedRoundsError
from fixauth.sim.composability import (
    EpsilonParams, RoundLedger, auth_ideality, key_perfection, ledger, ledger_entry, max_rounds_within_budget,
    refresh_plan,
)

EPS = EpsilonParams(1e-6, 1e-6)


def _scan(eps, budget, limit=200):
    best = None
    for n in range(1, limit):
        if auth_ideality(n, eps)[0] <= budget:
            best = n
    return best


def test_key_perfection():
    assert [key_perfection(n) for n in (1, 2, 3)] == [1, 2, 4]
    with pytest.raises(DomainError):
        key_perfection(0)


def test_auth_ideality_examples():
    eps = EpsilonParams(0.001, 0.01)
    assert auth_ideality(1, eps) == (0.01, 0, 1)
    loss, a, b = auth_ideality(2, eps)
    assert (a, b) == (1, 2)
    assert loss == pytest.approx(0.001 + 2 * 0.01)
    loss, a, b = auth_ideality(3, eps)
    assert (a, b) == (3, 4)
    assert loss == pytest.approx(3 * 0.001 + 4 * 0.01)


def test_coefficient_doubling_is_exact():
    for n in range(1, 200):
        _, a, b = auth_ideality(n, EPS)
        assert b == 2 ** (n - 1)
        assert a == 2 ** (n - 1) - 1
        assert key_perfection(n) == b
    rows = RoundLedger.build(10, EPS).to_rows()
    assert [r[:3] for r in rows[:3]] == [(1, 0, 1), (2, 1, 2), (3, 3, 4)]


def test_saturation():
    entry = ledger_entry(1100, EPS)
    assert entry.saturated
    assert math.isinf(entry.loss)
    assert entry.b_n == 2 ** 1099
    assert not ledger_entry(50, EPS).saturated
    assert RoundLedger(EPS, [entry]).to_dict()['saturated'] == [1100]


def test_max_rounds_example():
    assert max_rounds_within_budget(EPS, 1e-3) == 8


def test_max_rounds_boundary_inclusive():
    eps = EpsilonParams(0.5, 0.5)
    # auth_ideality(4) = 7 * 0.5 + 8 * 0.5 = 7.5
    assert max_rounds_within_budget(eps, 7.5) == 4
    assert max_rounds_within_budget(eps, 7.49) == 3


def test_max_rounds_without_eps1():
    eps = EpsilonParams(0.0, 1e-3)
    # largest n with 2^(n-1) <= 100
    assert max_rounds_within_budget(eps, 0.1) == 7


@pytest.mark.parametrize('eps1, eps2', [(1e-6, 1e-6), (1e-9, 1e-6), (1e-4, 1e-10), (0.0, 1e-8), (1e-8, 0.0)])
@pytest.mark.parametrize('budget', [1e-5, 1e-3, 0.05, 0.9])
def test_max_rounds_matches_scan(eps1, eps2, budget):
    eps = EpsilonParams(eps1, eps2)
    assert max_rounds_within_budget(eps, budget) == _scan(eps, budget)


def _first_exceeding_scan(eps, budget, limit=200):
    n = 0
    while n + 1 < limit and auth_ideality(n + 1, eps)[0] <= budget:
        n += 1
    return n


def test_max_rounds_matches_scan_on_random_triples():
    rng = np.random.default_rng(2024)
    checked = 0
    for _ in range(10 ** 4):
        eps1, eps2 = 10.0 ** rng.uniform(-12, -2, size=2)
        zero = rng.integers(4)
        if zero == 0:
            eps1 = 0.0
        elif zero == 1:
            eps2 = 0.0
        eps = EpsilonParams(float(eps1), float(eps2))
        budget = float(10.0 ** rng.uniform(-9, 0))
        if budget <= eps.eps2:
            with pytest.raises(NoFeasibleRoundError):
                max_rounds_within_budget(eps, budget)
            continue
        assert max_rounds_within_budget(eps, budget) == _first_exceeding_scan(eps, budget)
        checked += 1
    assert checked > 5000


def test_auth_ideality_identity():
    for eps in (EpsilonParams(Fraction(1, 10 ** 6), Fraction(3, 10 ** 7)),
                EpsilonParams(Fraction(0), Fraction(1, 7)),
                EpsilonParams(Fraction(2, 3), Fraction(0))):
        for n in range(1, 150):
            loss, _, _ = auth_ideality(n, eps)
            assert loss == key_perfection(n) * (eps.eps1 + eps.eps2) - eps.eps1
    for n in range(1, 60):
        loss, _, _ = auth_ideality(n, EPS)
        assert loss == pytest.approx(key_perfection(n) * (EPS.eps1 + EPS.eps2) - EPS.eps1, rel=1e-12)


def test_max_rounds_errors():
    with pytest.raises(NoFeasibleRoundError):
        max_rounds_within_budget(EPS, 1e-6)
    with pytest.raises(UnboundedRoundsError):
        max_rounds_within_budget(EpsilonParams(0.0, 0.0), 1e-3)
    with pytest.raises(DomainError):
        EpsilonParams(-1e-6, 1e-6)
    with pytest.raises(DomainError):
        EpsilonParams(float('nan'), 1e-6)


def test_refresh_plan():
    plan = refresh_plan(EPS, 1e-3, 18.0)
    assert plan.interval == 8
    assert plan.bits_per_round == pytest.approx(18.0 / 8)
    with pytest.raises(DomainError):
        refresh_plan(EPS, 1e-3, 0)


def test_ledger_rows():
    entries = ledger(3, EPS)
    assert [e.loss for e in entries] == pytest.approx([1e-6, 3e-6, 7e-6])
    data = RoundLedger(EPS, entries).to_dict()
    assert data['columns'] == ['n', 'a_n', 'b_n', 'key_perfection', 'loss']
    assert data['saturated'] == []
