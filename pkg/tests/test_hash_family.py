import numpy as np
import pytest

from fixauth.core.config.fa_code import DomainError, RangeError
from fixauth.sim.hash_family import (
    HashFamilyParams, HashKey, evaluate, evaluate_indices, index_of, key_of, preimage_histogram,
    smallest_prime_geq,
)
from fixauth.tools.utils import is_prime


@pytest.mark.parametrize('n, expected', [(512, 521), (1, 2), (8192, 8209), (2, 3), (1024, 1031)])
def test_smallest_prime_geq(n, expected):
    assert smallest_prime_geq(n) == expected


@pytest.mark.parametrize('n', [0, -5, 1 << 32])
def test_smallest_prime_geq_out_of_range(n):
    with pytest.raises(RangeError):
        smallest_prime_geq(n)


def test_primality_paths_agree():
    # trial division below 2^20, Miller-Rabin above
    small = [n for n in range(2, 2000) if is_prime(n)]
    assert small[:10] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert len(small) == 303
    assert is_prime((1 << 31) - 1)
    assert not is_prime((1 << 32) + 1)  # 641 * 6700417
    assert is_prime(4294967311)  # smallest prime above 2^32


def test_params_validation():
    with pytest.raises(DomainError):
        HashFamilyParams(8, 3, 11)
    with pytest.raises(DomainError):
        HashFamilyParams(8, 4, 13)
    with pytest.raises(RangeError):
        HashFamilyParams.from_sizes(0, 4)


def test_params_derived(default_params):
    assert default_params.prime_p == 521
    assert default_params.family_size == 521 * 520
    assert default_params.false_matches == 521 * 520 - 1
    assert default_params.key_bits == pytest.approx(np.log2(521 * 520))
    assert default_params.bitmap_bytes == (521 * 520 + 7) // 8


def test_evaluate_examples(tiny_params, default_params):
    assert tiny_params.prime_p == 11
    assert evaluate(tiny_params, HashKey(1, 0), 7) == 3
    assert evaluate(tiny_params, HashKey(3, 5), 2) == 0
    # (17 * 100 + 400) mod 521 = 16
    assert evaluate(default_params, HashKey(17, 400), 100) == 16


def test_evaluate_domain(tiny_params):
    with pytest.raises(DomainError):
        evaluate(tiny_params, HashKey(1, 0), 8)
    with pytest.raises(DomainError):
        evaluate(tiny_params, HashKey(1, 0), -1)
    with pytest.raises(DomainError):
        evaluate(tiny_params, HashKey(11, 0), 1)


def test_index_bijection(tiny_params):
    p = tiny_params.prime_p
    assert index_of(tiny_params, HashKey(1, 0)) == 0
    assert index_of(tiny_params, HashKey(p - 1, p - 1)) == p * (p - 1) - 1
    assert key_of(tiny_params, index_of(tiny_params, HashKey(3, 5))) == HashKey(3, 5)
    seen = {index_of(tiny_params, HashKey(q, r)) for q in range(1, p) for r in range(p)}
    assert seen == set(range(tiny_params.family_size))


def test_key_of_out_of_range(tiny_params):
    with pytest.raises(RangeError):
        key_of(tiny_params, tiny_params.family_size)
    with pytest.raises(RangeError):
        key_of(tiny_params, -1)


def test_evaluate_indices_matches_scalar(small_params):
    indices = np.arange(small_params.family_size)
    for m in (0, 1, 17, 63):
        tags = evaluate_indices(small_params, indices, m)
        expected = [evaluate(small_params, key_of(small_params, i), m) for i in range(small_params.family_size)]
        assert tags.tolist() == expected


def test_histogram_tiny(tiny_params):
    for m in range(tiny_params.message_space_size):
        hist = preimage_histogram(tiny_params, m)
        assert sum(hist.values()) == 110
        assert set(hist.values()) == {20, 30}


def test_histogram_equal_mod_p_minus_one():
    params = HashFamilyParams.from_sizes(12, 4)
    assert params.prime_p == 13
    for m in range(12):
        assert all(c % 12 == 0 for c in preimage_histogram(params, m).values())


@pytest.mark.parametrize('msg_bits, p', [(9, 521), (10, 1031)])
def test_histogram_balance(msg_bits, p):
    params = HashFamilyParams.from_bits(msg_bits, 7)
    assert params.prime_p == p
    low, high = (p - 1) * (p // 128), (p - 1) * -(-p // 128)
    rng = np.random.default_rng(7)
    for m in rng.choice(params.message_space_size, size=20, replace=False):
        hist = preimage_histogram(params, int(m))
        assert sum(hist.values()) == p * (p - 1)
        assert set(hist.values()) == {low, high}
        assert max(hist.values()) == params.max_preimage
