import random

import numpy as np
import pytest

from cayleydrg.groups import (
    ConnectionSet,
    Word,
    affine_square,
    cyclic,
    direct_product,
    elem_abelian,
    evaluate_word,
    heisenberg,
    is_general_product,
    semidirect,
    subgroup_closure,
    subgroups_of_order,
)


def test_semidirect_defining_relation_7_3_2():
    g = semidirect(7, 3, 2)
    assert g.n == 21
    a, b = g.gen("a"), g.gen("b")
    assert g.mul(g.mul(g.inverse(b), a), b) == g.power(a, 2)


def test_semidirect_defining_relation_73_9_2():
    g = semidirect(73, 9, 2)
    assert g.n == 657
    a, b = g.gen("a"), g.gen("b")
    assert g.mul(g.mul(g.inverse(b), a), b) == g.power(a, 2)


def test_semidirect_conjugation_9_3_7():
    g = semidirect(9, 3, 7)
    a, b = g.gen("a"), g.gen("b")
    assert g.mul(g.mul(g.inverse(b), a), b) == g.power(a, 7)


def test_semidirect_rejects_bad_action():
    with pytest.raises(ValueError):
        semidirect(7, 3, 3)  # 3^3 = 27 != 1 (mod 7)
    with pytest.raises(ValueError):
        semidirect(9, 2, 3)  # gcd(3, 9) != 1


def test_heisenberg_3_element_orders():
    g = heisenberg(3)
    assert g.n == 27
    assert all(g.order_of(x) == 3 for x in range(1, 27))


def test_heisenberg_relation_abc_eq_ba():
    g = heisenberg(3)
    a, b, c = g.gen("a"), g.gen("b"), g.gen("c")
    assert g.mul(g.mul(a, b), c) == g.mul(b, a)


def test_affine_square_order():
    g = affine_square(7)
    assert g.n == 21
    g11 = affine_square(11)
    assert g11.n == 55


def test_affine_square_rejects_even_q():
    with pytest.raises(ValueError):
        affine_square(8)


def test_cyclic_generator_order():
    g = cyclic(4)
    assert g.order_of(1) == 4
    assert g.inverse(0) == 0


def test_word_evaluation_inverse_pairing():
    g = semidirect(9, 3, 7)
    w = Word((("a", 7), ("b", 1)))
    x = evaluate_word(g, w)
    # (a^7 b)^-1 = a^5 b^2, which is why both sit in the inverse-closed set
    assert g.name_of(g.inverse(x)) == "a^5 b^2"


def test_empty_word_is_identity():
    assert evaluate_word(cyclic(6), Word(())) == 0


def test_heisenberg_words():
    g = heisenberg(3)
    for text in ("c b a", "a b a", "b a b"):
        w = Word(tuple((nm, 1) for nm in text.split()))
        assert 0 <= evaluate_word(g, w) < 27


def test_subgroup_closure_trivial():
    g = cyclic(5)
    assert subgroup_closure(g, set()) == {0}


def test_subgroup_closure_z21():
    g = cyclic(21)
    assert len(subgroup_closure(g, {3})) == 7


def test_subgroup_closure_two_lines_in_z3z3z5():
    g = direct_product(elem_abelian(3, 2), cyclic(5))
    subs = subgroups_of_order(g, 3).subgroups
    H, K = subs[0], subs[1]
    closure = subgroup_closure(g, (H | K) - {0})
    assert len(closure) == 9  # disconnection witness: never all 45


def test_subgroups_of_order_counts():
    assert len(subgroups_of_order(cyclic(45), 3)) == 1
    g = direct_product(elem_abelian(3, 2), cyclic(5))
    assert len(subgroups_of_order(g, 3)) == 4
    assert len(subgroups_of_order(heisenberg(3), 3)) == 13


def test_subgroups_of_order_rejects_nondivisor():
    with pytest.raises(ValueError):
        subgroups_of_order(cyclic(10), 3)


def test_general_product_direct_factors():
    for n in (2, 3, 4):
        g = direct_product(cyclic(n), cyclic(n))
        H = frozenset(i * n for i in range(n))
        K = frozenset(range(n))
        assert is_general_product(g, H, K)


def test_general_product_fails_on_overlap():
    g = cyclic(9)
    H = g.cyclic_subgroup(3)
    assert not is_general_product(g, H, H)


def test_general_product_fails_on_size():
    g = semidirect(9, 3, 7)
    H = g.cyclic_subgroup(g.gen("b"))
    K = g.cyclic_subgroup(g.conj(g.inverse(g.gen("a")), g.gen("b")))
    assert not is_general_product(g, H, K)  # |H||K| = 9 != 27


def test_connection_set_rejects_identity():
    with pytest.raises(ValueError):
        ConnectionSet(cyclic(5), {0, 1, 4})


def test_connection_set_rejects_inverse_violation():
    with pytest.raises(ValueError):
        ConnectionSet(cyclic(5), {1})  # inverse 4 missing


def test_connection_set_invclose():
    g = cyclic(5)
    conn = ConnectionSet.from_words(g, [Word((("a", 1),))], invclose=True)
    assert conn.elems == frozenset({1, 4})


def test_table_validation_rejects_broken_tables():
    from cayleydrg.groups import FiniteGroup

    bad = np.array([[0, 1], [1, 1]])  # not a Latin square
    with pytest.raises(ValueError):
        FiniteGroup(bad)
    # Latin square with identity but not associative: no 2x2 example exists,
    # use a 5x5 quasigroup
    q = np.array(
        [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
    )
    with pytest.raises(ValueError):
        FiniteGroup(q)


@pytest.mark.parametrize(
    "build",
    [
        lambda: cyclic(12),
        lambda: semidirect(7, 3, 2),
        lambda: semidirect(9, 3, 7),
        lambda: heisenberg(3),
        lambda: affine_square(7),
        lambda: direct_product(cyclic(4), cyclic(4)),
        lambda: elem_abelian(2, 4),
    ],
)
def test_constructions_satisfy_group_axioms_randomized(build):
    g = build()
    rng = random.Random(5)
    for _ in range(200):
        a, b, c = (rng.randrange(g.n) for _ in range(3))
        assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))
        assert g.mul(a, g.inverse(a)) == 0
    # order of every element divides the group order
    for x in range(g.n):
        assert g.n % g.order_of(x) == 0
