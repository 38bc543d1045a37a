import random
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

import oracles as O
from veronese_koszul.cycles import (
    CyclePair, TableauPair, expand_combination, garnir_sum, hook_cycle, nonzero_products_check, omega,
    random_cycle_pair, random_non_tableau, squarefree_Z_product, squarefree_term_check, straighten,
    strand_span_check, tableau_generators, z_cycle)
from veronese_koszul.koszul import KoszulElement, class_is_nonzero, differential, is_cycle
from veronese_koszul.linalg import GF, QQ
from veronese_koszul.partitions import hook_partition, schur_dim

FIELDS = [QQ, GF(2), GF(3)]


def elem(n, terms):
    return KoszulElement(n, terms, QQ)


def test_hook_cycles_as_written():
    # x1 (x) 1, x1 (x) x2^2 - x2 (x) x1x2, and the three-term Z_2
    assert hook_cycle(0, 1) == KoszulElement.variable(1, 1)
    assert hook_cycle(1, 2) == elem(2, {((1, 0), ((1, 1),)): 1, ((0, 1), ((0, 1),)): -1})
    Z2 = elem(3, {((1, 0, 0), ((1, 2), (2, 2))): 1,
                  ((0, 1, 0), ((0, 2), (2, 2))): -1,
                  ((0, 0, 1), ((0, 2), (1, 2))): 1})
    assert hook_cycle(2, 3) == Z2


def test_hook_cycles_match_oracle_and_are_cycles():
    for n in range(1, 6):
        for i in range(n):
            Z = hook_cycle(i, n)
            assert dict(Z.items()) == O.hook_Z(i, n)
            assert differential(Z) == 0
    with pytest.raises(ValueError):
        hook_cycle(3, 3)


def test_z_cycle_examples():
    assert z_cycle((1,), (), 2) == hook_cycle(0, 2)
    assert z_cycle((1, 2), (2,), 2) == -hook_cycle(1, 2)


@pytest.mark.parametrize("t", [0, 1, 2, 3])
def test_z_cycle_on_hook_inputs(t):
    n = t + 1
    z = z_cycle(tuple(range(1, t + 2)), (t + 1,) * t, n)
    assert z == hook_cycle(t, n).scale((-1) ** t * factorial(t))


def test_z_cycle_matches_permutation_expansion():
    rng = random.Random(8)
    for _ in range(50):
        n, t = rng.randint(1, 4), rng.randint(0, 3)
        p = random_cycle_pair(n, t, rng)
        z = z_cycle(p.a, p.b, n)
        assert dict(z.items()) == O.z_expand(p.a, p.b, n)
        assert differential(z) == 0


def test_cycle_pair_parse():
    assert CyclePair.parse("z[1,2|2]") == CyclePair((1, 2), (2,))
    assert CyclePair.parse("1|") == CyclePair((1,), ())
    assert CyclePair((1, 2, 3), (1, 1)).t == 2
    with pytest.raises(ValueError):
        CyclePair((1,), (1,))


def test_tableau_pair_validation():
    TableauPair((1, 2), (1,))
    for a, b in [((2, 1), (1,)), ((1, 2, 3), (2, 1)), ((2, 3), (1,)), ((1, 1), (1,))]:
        with pytest.raises(ValueError):
            TableauPair(a, b)


def test_garnir_example_t1():
    assert garnir_sum((1, 2, 3), (), 3) == 0


@pytest.mark.parametrize("field", FIELDS, ids=repr)
def test_garnir_random_n4_t2(field):
    rng = random.Random(4)
    for _ in range(25):
        a = tuple(rng.randint(1, 4) for _ in range(4))
        btail = (rng.randint(1, 4),)
        assert garnir_sum(a, btail, 4, field) == 0


def test_garnir_needs_t_at_least_one():
    with pytest.raises(ValueError):
        garnir_sum((1, 2), (), 2)


@pytest.mark.parametrize("n,t,expected", [(2, 1, 2), (3, 1, 8), (4, 0, 4), (3, 0, 3)])
def test_tableau_generator_counts(n, t, expected):
    gens = tableau_generators(n, t)
    assert len(gens) == expected == schur_dim(hook_partition(t), n)


def test_tableau_generators_n2_t1():
    assert tableau_generators(2, 1) == [TableauPair((1, 2), (1,)), TableauPair((1, 2), (2,))]


def test_straighten_examples():
    assert straighten((1, 2), (2,), 2) == {TableauPair((1, 2), (2,)): 1}
    got = straighten((2, 3), (1,), 3)
    assert expand_combination(got, 3) == z_cycle((2, 3), (1,), 3)
    assert all(omega(p.a, p.b) == 0 for p in got)
    assert straighten((1, 1), (2,), 2) == {}


@pytest.mark.parametrize("field", FIELDS, ids=repr)
def test_straighten_random(field):
    rng = random.Random(21)
    done = 0
    while done < 50:
        n, t = rng.randint(2, 4), rng.randint(1, 3)
        case = random_non_tableau(n, t, rng)
        if case is None:
            continue
        a, b = case
        coeffs, depth = straighten(a, b, n, field, return_depth=True)
        assert expand_combination(coeffs, n, field) == z_cycle(a, b, n, field)
        assert depth <= omega(sorted(a), sorted(b))
        done += 1


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.integers(0, 3).flatmap(lambda t: st.tuples(
        st.lists(st.integers(1, n), min_size=t + 1, max_size=t + 1),
        st.lists(st.integers(1, n), min_size=t, max_size=t))))))
@settings(max_examples=60, deadline=None)
def test_straighten_any_pair(case):
    n, (a, b) = case
    assert expand_combination(straighten(a, b, n), n) == z_cycle(a, b, n)


@pytest.mark.parametrize("n,t", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2)])
def test_strand_span(n, t):
    r = strand_span_check(n, t)
    assert r["pass"]
    assert r["generators"] == r["schur_dim"] == r["homology_dim"] == r["span_in_homology"]


def test_strand_n3_t2_value():
    # hook (3,1,1) in three variables
    assert strand_span_check(3, 2)["homology_dim"] == schur_dim((3, 1, 1), 3) == 6


def test_strand_vanishes_beyond_n():
    r = strand_span_check(3, 3)
    assert r["pass"] and r["homology_dim"] == r["schur_dim"] == 0


def test_squarefree_term_check():
    for n in range(1, 5):
        assert squarefree_term_check(n)["pass"]
    full = squarefree_Z_product(range(3), 3)
    term = ((1, 1, 1), ((0, 1), (0, 2), (1, 2)))
    assert full.coefficient(*term) in (1, -1)


def test_nonzero_products():
    assert class_is_nonzero(squarefree_Z_product([0], 2))
    assert nonzero_products_check(3)["pass"]


def test_squarefree_product_is_cycle():
    for n in range(1, 5):
        assert is_cycle(squarefree_Z_product(range(n), n))
