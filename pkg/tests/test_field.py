import itertools
import random

import pytest

from cayleydrg.field import FiniteField, is_prime


def test_prime_field_trivial_modulus():
    f = FiniteField(7)
    assert f.q == 7
    assert f.modulus == (0, 1)  # x


def test_gf8_every_nonzero_element_invertible():
    f = FiniteField(2, 3)
    assert f.q == 8
    for a in range(1, 8):
        assert f.mul(a, f.inv(a)) == 1


def test_gf27_modulus_is_least_irreducible_by_brute_force():
    f = FiniteField(3, 3)
    # oracle: a monic cubic is reducible iff it has a root or factors as
    # (monic linear)(monic quadratic); over GF(3) a rootless cubic with no
    # linear factor is irreducible, so a root scan suffices at degree 3
    def value(c0, c1, c2):
        return c0 + 3 * c1 + 9 * c2

    def has_root(c0, c1, c2):
        return any((x**3 + c2 * x**2 + c1 * x + c0) % 3 == 0 for x in range(3))

    least = min(
        (value(c0, c1, c2), (c0, c1, c2, 1))
        for c0, c1, c2 in itertools.product(range(3), repeat=3)
        if not has_root(c0, c1, c2)
    )
    assert f.modulus == least[1]


def test_gf7_inverse_of_three():
    assert FiniteField(7).inv(3) == 5  # 3*5 = 15 = 1 (mod 7)


def test_additive_identity():
    f = FiniteField(3, 2)
    for x in f.elements():
        assert f.add(x, 0) == x


def test_gf8_multiplicative_order_divides_seven():
    f = FiniteField(2, 3)
    for g in range(1, 8):
        assert f.pow(g, 7) == 1


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2), (2, 3), (11, 1)])
def test_field_laws_exhaustive_small(p, k):
    f = FiniteField(p, k)
    els = list(f.elements())
    assert f.q <= 128
    for x in els:
        if x:
            assert f.mul(x, f.inv(x)) == 1
        for y in els:
            assert f.add(x, y) == f.add(y, x)
            assert f.mul(x, y) == f.mul(y, x)
            for z in els:
                assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))


def test_field_laws_randomized_larger():
    f = FiniteField(5, 4)  # 625 elements, above the exhaustive limit
    rng = random.Random(1)
    for _ in range(10_000):
        x, y, z = (rng.randrange(f.q) for _ in range(3))
        assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
        assert f.mul(x, y) == f.mul(y, x)
    for _ in range(500):
        x = rng.randrange(1, f.q)
        assert f.mul(x, f.inv(x)) == 1


def test_nonzero_squares_gf7():
    assert sorted(FiniteField(7).nonzero_squares()) == [1, 2, 4]


def test_nonzero_squares_gf11_excludes_minus_one():
    f = FiniteField(11)
    sq = f.nonzero_squares()
    assert len(sq) == 5
    assert 10 not in sq  # -1


def test_nonzero_squares_gf2():
    assert FiniteField(2).nonzero_squares() == frozenset({1})


@pytest.mark.parametrize("q", [3, 7, 11, 19, 23, 27])
def test_minus_one_not_square_when_q_3_mod_4(q):
    from cayleydrg.field import is_prime_power

    p, k = is_prime_power(q)
    f = FiniteField(p, k)
    assert q % 4 == 3
    assert f.minus_one() not in f.nonzero_squares()


def test_square_count_odd_q():
    for p, k in [(3, 1), (5, 1), (7, 1), (3, 2), (3, 3), (5, 2)]:
        f = FiniteField(p, k)
        assert len(f.nonzero_squares()) == (f.q - 1) // 2


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        FiniteField(5).inv(0)


def test_nonprime_characteristic_rejected():
    with pytest.raises(ValueError):
        FiniteField(6)


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
