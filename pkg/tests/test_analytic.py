import math

import numpy as np
import pytest
from scipy import stats

from fixauth.core.config.fa_code import DegenerateRecursionError, DivergenceError, DomainError
from fixauth.sim.analytic import (
    ModelParams, chebyshev_bound, chebyshev_bound_sqrt, continuous_lifetime, expected_lifetime,
    family_lifetime, guessing_lifetime, hypergeom_mean_var, hypergeom_pmf, independent_model_simulate,
    information_gain_bits, lifetime_table,
)

# (H, h) pairs at h/H = 0.5 and 0.9, large enough for k up to 2000
DOMINANCE_MODELS = [(4000, 2000), (4000, 3600)]


def _brute_continuous(k_max, ratio):
    n, out = 0, [0]
    for k in range(1, k_max + 1):
        n = max(n, 1)
        while k * ratio ** n >= 1:
            n += 1
        out.append(n)
    return out


@pytest.mark.parametrize('size', [1, 128, 1 << 20])
def test_guessing_lifetime(size):
    assert guessing_lifetime(size) == size


def test_information_gain():
    assert information_gain_bits(0.5) == pytest.approx(1.0)
    assert information_gain_bits(0.25) == pytest.approx(2.0)
    with pytest.raises(DivergenceError):
        information_gain_bits(1.0)


def test_continuous_examples():
    assert continuous_lifetime(0, 0.9) == 0
    for ratio in (0.01, 0.5, 0.9, 0.999):
        assert continuous_lifetime(1, ratio) == 1
    assert continuous_lifetime(1 << 20, 0.9) == 132
    # log k / -log ratio exactly 3: strict inequality needs n = 4
    assert continuous_lifetime(8, 0.5) == 4
    assert family_lifetime(1 << 20, 0.9) == 132


def test_continuous_errors():
    with pytest.raises(DivergenceError):
        continuous_lifetime(10, 1.0)
    with pytest.raises(DomainError):
        continuous_lifetime(10, 0.0)
    with pytest.raises(DomainError):
        continuous_lifetime(-1, 0.5)


@pytest.mark.parametrize('ratio', [0.5, 0.9, 0.99])
def test_continuous_matches_brute_force(ratio):
    expected = _brute_continuous(20000, ratio)
    assert [continuous_lifetime(k, ratio) for k in range(20001)] == expected


@pytest.mark.slow
@pytest.mark.parametrize('ratio', [0.5, 0.9, 0.99])
def test_continuous_matches_brute_force_full(ratio):
    expected = _brute_continuous(10 ** 6, ratio)
    mismatches = [k for k in range(10 ** 6 + 1) if continuous_lifetime(k, ratio) != expected[k]]
    assert mismatches == []


def test_pmf_examples():
    assert hypergeom_pmf(1, 2, 2, 4) == pytest.approx(2 / 3, rel=1e-15)
    assert hypergeom_pmf(7, 7, 7, 7) == 1.0
    assert hypergeom_pmf(0, 3, 1, 4) == pytest.approx(0.25)
    # h - j > H - k
    assert hypergeom_pmf(0, 3, 2, 4) == 0.0
    with pytest.raises(DomainError):
        hypergeom_pmf(3, 2, 2, 4)


def test_pmf_against_scipy():
    for H, h, k in [(64, 32, 10), (4000, 3600, 50), (20000, 1500, 300)]:
        ref = stats.hypergeom(H, k, h)
        for j in range(0, min(k, h) + 1, max(1, min(k, h) // 10)):
            assert hypergeom_pmf(j, k, h, H) == pytest.approx(ref.pmf(j), rel=1e-8, abs=1e-300)


def test_pmf_normalisation():
    rng = np.random.default_rng(4)
    for _ in range(10):
        H = int(rng.integers(2, 3000))
        k, h = int(rng.integers(0, H + 1)), int(rng.integers(1, H + 1))
        total = math.fsum(hypergeom_pmf(j, k, h, H) for j in range(min(k, h) + 1))
        assert total == pytest.approx(1.0, abs=1e-10)
    for H, h, k in [(20000, 1500, 300), (100000, 2000, 900), (60000, 59000, 150)]:
        total = math.fsum(hypergeom_pmf(j, k, h, H) for j in range(min(k, h) + 1))
        assert total == pytest.approx(1.0, abs=1e-10)


def test_mean_var():
    mean, var = hypergeom_mean_var(10, 32, 64)
    ref = stats.hypergeom(64, 10, 32)
    assert mean == pytest.approx(ref.mean())
    assert var == pytest.approx(ref.var())


def test_mean_var_bound():
    mean, var = hypergeom_mean_var(10, 32, 64, bound=True)
    assert mean == pytest.approx(5.0)
    assert var == pytest.approx(2.5)
    assert var >= hypergeom_mean_var(10, 32, 64)[1]
    # the bound form accepts k beyond H, as the Chebyshev bounds do
    assert hypergeom_mean_var(5000, 1, 2, bound=True) == pytest.approx((2500.0, 1250.0))
    with pytest.raises(DomainError):
        hypergeom_mean_var(-1, 1, 2, bound=True)


def test_recursion_base():
    for H, h in [(4096, 2048), (4000, 3600), (64, 32), (200, 180)]:
        n = expected_lifetime(1, h, H)
        assert n[0] == 0.0
        assert n[1] == pytest.approx(1 / (1 - h / H), rel=1e-12)


def test_recursion_small_exact():
    # H = 2, h = 1: n_1 = 2, n_2 = (1 + p_12 n_1) / (1 - p_22) with p_22 = 0, p_12 = 1
    n = expected_lifetime(2, 1, 2)
    assert n.tolist() == pytest.approx([0.0, 2.0, 3.0])


def test_recursion_errors():
    with pytest.raises(DivergenceError):
        expected_lifetime(3, 8, 8)
    with pytest.raises(DomainError):
        expected_lifetime(9, 4, 8)
    with pytest.raises(DomainError):
        expected_lifetime(5, 4, 8, ceiling=4)
    with pytest.raises(DegenerateRecursionError) as excinfo:
        expected_lifetime(1, 10 ** 16 - 1, 10 ** 16)
    assert excinfo.value.k == 1


def test_recursion_matches_monte_carlo():
    n = expected_lifetime(10, 32, 64)
    summary = independent_model_simulate(64, 32, 10, 200000, seed=1)
    assert summary.mean == pytest.approx(n[10], rel=0.02)
    assert sum(summary.distribution) == 200000


@pytest.mark.slow
@pytest.mark.parametrize('H, h', [(64, 32), (200, 180)])
def test_recursion_matches_monte_carlo_full(H, h):
    n = expected_lifetime(50, h, H)
    for k in (5, 10, 50):
        summary = independent_model_simulate(H, h, k, 10 ** 6, seed=k)
        assert summary.mean == pytest.approx(n[k], rel=0.02)


def test_simulate_edge_cases():
    summary = independent_model_simulate(64, 32, 0, 100, seed=0)
    assert summary.mean == 0.0
    assert summary.distribution == [100]
    a = independent_model_simulate(64, 32, 10, 500, seed=3)
    b = independent_model_simulate(64, 32, 10, 500, seed=3)
    assert a.to_dict() == b.to_dict()
    with pytest.raises(DomainError):
        independent_model_simulate(64, 32, 10, 0, seed=0)


def test_simulate_near_one_stays_under_bound():
    H, h, k = 1000, 950, 100
    summary = independent_model_simulate(H, h, k, 2000, seed=5)
    assert summary.mean > continuous_lifetime(k, h / H) - 1
    assert summary.mean < chebyshev_bound_sqrt(k, h, H)


def test_chebyshev_pinned():
    # k = 2, h/H = 1/2, s = sqrt(2): 7 + 2 sqrt(2)
    assert chebyshev_bound(2, 1, 2, math.sqrt(2)) == pytest.approx(7 + 2 * math.sqrt(2), rel=1e-12)
    assert chebyshev_bound_sqrt(2, 1, 2) == pytest.approx(7 + 2 * math.sqrt(2), rel=1e-12)


def test_chebyshev_domain():
    with pytest.raises(DomainError):
        chebyshev_bound(10, 1, 2, 5.0)
    with pytest.raises(DomainError):
        chebyshev_bound(10, 1, 2, 10.0)
    with pytest.raises(DomainError):
        chebyshev_bound_sqrt(1, 1, 2)
    with pytest.raises(DivergenceError):
        chebyshev_bound_sqrt(5, 2, 2)


@pytest.mark.parametrize('h, H', [(1, 2), (9, 10), (99, 100)])
def test_sqrt_specialisation(h, H):
    for k in (2, 3, 10, 100, 5000):
        s = k * math.sqrt(h / H)
        assert chebyshev_bound_sqrt(k, h, H) == pytest.approx(chebyshev_bound(k, h, H, s), rel=1e-9)


def test_sqrt_bound_monotone_at_half():
    values = [chebyshev_bound_sqrt(k, 1, 2) for k in range(2, 2001)]
    assert all(a <= b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize('H, h', DOMINANCE_MODELS)
def test_bound_dominance(H, h):
    ratio = h / H
    n = expected_lifetime(2000, h, H)
    for k in range(2, 2001):
        assert n[k] <= chebyshev_bound_sqrt(k, h, H)
        assert n[k] >= continuous_lifetime(k, ratio) - 1
    target = 2 / -math.log2(ratio)
    assert chebyshev_bound_sqrt(2000, h, H) / math.log2(2000) == pytest.approx(target, rel=0.1)


def test_model_params():
    assert ModelParams.from_ratio(4096, 0.5).h == 2048
    assert ModelParams.from_ratio(10, 0.01).h == 1
    with pytest.raises(DomainError):
        ModelParams(10, 11)


def test_lifetime_table():
    table = lifetime_table(100, 2048, 4096)
    assert len(table.rows) == 101
    assert table.s_factor == 0.75
    assert table.rows[0].continuous == 0
    assert table.rows[1].recursive == pytest.approx(2.0, rel=1e-12)
    assert table.rows[1].cheb_s == table.rows[1].cheb_sqrt == pytest.approx(2.0)
    for row in table.rows[2:]:
        assert row.recursive <= row.cheb_sqrt
        assert row.cheb_s > 0
    data = table.to_dict()
    assert data['provenance']['H'] == 4096
    assert data['provenance']['information_gain_bits'] == pytest.approx(1.0)
    assert data['provenance']['family_lifetime'] == 13
    assert data['columns'] == ['k', 'continuous', 'recursive', 'cheb_s', 'cheb_sqrt']


def test_lifetime_table_ceiling():
    table = lifetime_table(10, 32, 64, ceiling=5)
    assert [r.recursive is None for r in table.rows] == [False] * 6 + [True] * 5
    with pytest.raises(DomainError):
        lifetime_table(10, 32, 64, s_factor=0.4)
