import random
from collections import Counter
from itertools import permutations as all_perms

import pytest
from hypothesis import given, strategies as st

from jmkit.characters import chi
from jmkit.partitions import make_partition, partitions_of
from jmkit.permutations import (
    GroupAlgebraElement,
    Permutation,
    build_R,
    build_R_j,
    build_T,
    build_V,
    compose,
    cycle_type,
    eval_class_function,
    parse_cycles,
    representative,
    transposition,
)


def perm(text, n):
    return parse_cycles(text, n)


def test_compose_examples():
    sigma = perm("(2 5 3)(1)(4)", 6)
    assert compose(sigma, Permutation.identity(6)) == sigma
    t = transposition(1, 2, 2)
    assert t * t == Permutation.identity(2)
    assert compose(sigma, transposition(2, 6, 6)) == perm("(2 6 5 3)", 6)
    with pytest.raises(ValueError):
        compose(Permutation.identity(2), Permutation.identity(3))


def test_parse_and_print():
    sigma = parse_cycles("(2 5 3)(1)(4)")
    assert sigma.n == 5 and sigma(2) == 5 and sigma(3) == 2
    assert str(sigma) == "(1)(2 5 3)(4)"
    assert parse_cycles("", 3) == Permutation.identity(3)
    for bad in ["(1 2)(2 3)", "1 2", "(0 1)"]:
        with pytest.raises(ValueError):
            parse_cycles(bad, 3)


@pytest.mark.parametrize("text, n, mu", [
    ("", 4, (1, 1, 1, 1)),
    ("(2 5 3)(1)(4)", 5, (3, 1, 1)),
    ("(2 6 5 3)(1)(4)", 6, (4, 1, 1)),
])
def test_cycle_type(text, n, mu):
    assert cycle_type(perm(text, n)) == mu


def test_build_R_paper_example():
    elem = build_R(perm("(2 5 3)", 6))
    assert len(elem) == 5
    assert elem.cycle_type_census() == {(3, 2, 1): 2, (4, 1, 1): 3}
    expected = {perm(c, 6) for c in ["(2 6 5 3)", "(2 5 6 3)", "(2 5 3 6)", "(2 5 3)(1 6)", "(2 5 3)(4 6)"]}
    assert {p for p, _ in elem.terms} == expected


def test_build_R_small():
    assert [p for p, _ in build_R(Permutation.identity(2)).terms] == [transposition(1, 2, 2)]
    assert build_R(Permutation.identity(4)).cycle_type_census() == {(2, 1, 1): 3}
    with pytest.raises(ValueError):
        build_R(perm("(1 3)", 3))


def promoted(mu, j):
    parts = list(mu)
    parts.remove(j)
    return make_partition(sorted(parts + [j + 1], reverse=True))


@pytest.mark.parametrize("n", range(2, 10))
def test_build_R_census(n):
    # j * m_j summands promote a part j to j + 1
    for mu in partitions_of(n - 1):
        census = build_R(representative(mu, n)).cycle_type_census()
        expected = Counter()
        for j, m in Counter(mu).items():
            expected[promoted(mu, j)] += j * m
        assert census == dict(expected)


@pytest.mark.parametrize("n", range(2, 10))
def test_insertion_convention(n):
    rng = random.Random(n)
    for _ in range(20):
        images = list(range(1, n))
        rng.shuffle(images)
        sigma = Permutation(tuple(images) + (n,))
        bar = Permutation(tuple(images))
        for i in range(1, n):
            j = next(len(c) for c in bar.cycles() if i in c)
            assert cycle_type(sigma * transposition(i, n, n)) == promoted(cycle_type(bar), j)


def test_build_T_examples():
    (term,) = build_T(Permutation.identity(3)).terms
    assert term[0] == perm("(1 2 3)", 3)
    assert build_T(Permutation.identity(4)).cycle_type_census() == {(3, 1): 2}
    elem = build_T(perm("(1 2)", 4))
    assert [p for p, _ in elem.terms] == [perm("(1 2)", 4) * perm("(1 3 4)", 4),
                                          perm("(1 2)", 4) * perm("(2 3 4)", 4)]
    assert elem.cycle_type_census() == {(4,): 2}
    with pytest.raises(ValueError):
        build_T(perm("(3 4)", 4))


def test_build_V_examples():
    assert len(build_V(Permutation.identity(5))) == 0
    elem = build_V(perm("(1 2)", 2))
    assert [p for p, _ in elem.terms] == [Permutation.identity(2)] * 2
    elem = build_V(perm("(1 2 3)", 3))
    assert elem.cycle_type_census() == {(2, 1): 3}
    assert elem.terms[0][0] == perm("(1 3)", 3)


@pytest.mark.parametrize("n", range(1, 8))
def test_build_V_terms_have_fixed_points(n):
    for images in all_perms(range(1, n + 1)):
        sigma = Permutation(images)
        elem = build_V(sigma)
        assert len(elem) == n - len(sigma.fixed_points())
        for (term, _), i in zip(elem.terms, [k for k in range(1, n + 1) if sigma(k) != k]):
            assert term(sigma(i)) == sigma(i)


def test_eval_class_function_examples():
    assert eval_class_function(build_R(perm("(2 5 3)", 6)), (6,)) == 5
    assert eval_class_function(build_V(perm("(1 2)", 2)), (1,), drop_fixed_points=1) == 2
    assert eval_class_function(GroupAlgebraElement(4), (2, 2)) == 0
    with pytest.raises(ValueError):
        eval_class_function(build_R(Permutation.identity(3)), (2,))
    with pytest.raises(ValueError):
        # (1 2)(3 4) has no fixed point to drop
        eval_class_function(GroupAlgebraElement(4, ((perm("(1 2)(3 4)", 4), 1),)), (2, 1), 1)


@given(st.permutations(range(1, 7)), st.permutations(range(1, 7)),
       st.sampled_from(partitions_of(5)), st.sampled_from(partitions_of(6)))
def test_evaluation_is_conjugation_invariant(sigma_images, g_images, lam5, lam6):
    sigma = Permutation(tuple(sigma_images))
    g = Permutation(tuple(g_images))
    v = build_V(sigma)
    assert eval_class_function(v.conjugate_by(g), lam5, 1) == eval_class_function(v, lam5, 1)
    r = build_R(representative(lam5, 6))
    assert eval_class_function(r.conjugate_by(g), lam6) == eval_class_function(r, lam6)


def test_build_R_j_exploratory():
    elem = build_R_j(Permutation.identity(5), 3)
    assert len(elem) == 2 and elem.cycle_type_census() == {(2, 1, 1, 1): 2}


def test_representative():
    assert representative((3, 1, 1), 6) == perm("(1 2 3)", 6)
    assert cycle_type(representative((2, 2, 1))) == (2, 2, 1)
    assert chi((3, 2), cycle_type(representative((2, 2, 1)))) == chi((3, 2), (2, 2, 1))
