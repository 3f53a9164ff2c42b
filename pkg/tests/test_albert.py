import pytest

from kodaira_monodromy.albert import (
    AlbertClass,
    AlbertType,
    SignatureIV,
    enumerate_albert_classes,
    enumerate_signatures,
)
from kodaira_monodromy.errors import DomainError
from oracles import brute_albert_tuples

I, II, III, IV = AlbertType.I, AlbertType.II, AlbertType.III, AlbertType.IV


def tuples(classes):
    return {(c.albert_type.value, c.l, c.q, c.m) for c in classes}


@pytest.mark.parametrize("n, expected", [
    (1, {("I", 1, 1, 2), ("IV", 1, 1, 1)}),
    (2, {("I", 1, 1, 4), ("I", 2, 1, 2), ("II", 1, 2, 1), ("III", 1, 2, 1),
         ("IV", 1, 1, 2), ("IV", 2, 1, 1)}),
    (3, {("I", 1, 1, 6), ("I", 3, 1, 2), ("IV", 1, 1, 3), ("IV", 3, 1, 1)}),
])
def test_small_n_exact(n, expected):
    assert tuples(enumerate_albert_classes(n)) == expected


@pytest.mark.parametrize("n", range(1, 13))
def test_matches_brute_force(n):
    classes = enumerate_albert_classes(n)
    assert len(classes) == len(tuples(classes))
    assert tuples(classes) == brute_albert_tuples(n)


def test_invariants_up_to_30():
    for n in range(1, 31):
        for c in enumerate_albert_classes(n):
            assert c.m * c.degree_L == 2 * n
            assert n % c.l == 0
            assert c.degree_L <= 2 * n
            assert c.n == n


def test_q_two_appears_without_special_casing():
    # 2 l q^2 | 2n with q = 2 first happens at n = 4
    assert ("IV", 1, 2, 1) in tuples(enumerate_albert_classes(4))
    assert all(c.q == 1 for c in enumerate_albert_classes(3) if c.albert_type is IV)


def test_order_and_purity():
    a = enumerate_albert_classes(12)
    assert a == enumerate_albert_classes(12)
    assert [c.sort_key for c in a] == sorted(c.sort_key for c in a)
    assert a[0].albert_type is I and a[0].l == 1


def test_descriptions():
    names = [c.description for c in enumerate_albert_classes(3)]
    assert names == ["Q", "totally real cubic field", "imaginary quadratic field", "CM field of degree 6"]
    assert AlbertClass(II, 1, 2, 1, 2).description == "indefinite quaternion algebra over Q"


def test_degree():
    assert AlbertClass(I, 3, 1, 2, 3).degree_L == 3
    assert AlbertClass(III, 1, 2, 1, 2).degree_L == 4
    assert AlbertClass(IV, 1, 2, 1, 4).degree_L == 8


@pytest.mark.parametrize("args", [
    (I, 1, 2, 6, 3),      # q != 1 for Type I
    (II, 1, 1, 1, 2),     # q != 2 for Type II
    (I, 1, 1, 3, 3),      # 2n != m [L:Q]... and m odd
    (I, 2, 1, 3, 3),      # l does not divide n
    (IV, 0, 1, 1, 1),
])
def test_invalid_classes(args):
    with pytest.raises(DomainError):
        AlbertClass(*args)


def test_signatures_examples():
    c = AlbertClass(IV, 1, 1, 3, 3)
    assert [s.pairs for s in enumerate_signatures(c)] == [((3, 0),), ((2, 1),), ((1, 2),), ((0, 3),)]
    c = AlbertClass(IV, 1, 1, 2, 2)
    assert [s.pairs for s in enumerate_signatures(c)] == [((2, 0),), ((1, 1),), ((0, 2),)]
    sextic = enumerate_signatures(AlbertClass(IV, 3, 1, 1, 3))
    assert len(sextic) == 8
    assert all(p in ((1, 0), (0, 1)) for s in sextic for p in s.pairs)


def test_signature_count_formula():
    for n in range(1, 13):
        for c in enumerate_albert_classes(n):
            if c.albert_type is IV:
                sigs = enumerate_signatures(c)
                assert len(sigs) == (c.m * c.q + 1) ** c.l
                assert len(set(sigs)) == len(sigs)
                for s in sigs:
                    s.check(c)


def test_signatures_reject_non_type_iv():
    with pytest.raises(DomainError):
        enumerate_signatures(AlbertClass(I, 1, 1, 6, 3))


def test_signature_check_and_arithmetic():
    c = AlbertClass(IV, 1, 1, 3, 3)
    with pytest.raises(DomainError):
        SignatureIV(((2, 2),)).check(c)
    with pytest.raises(DomainError):
        SignatureIV(((2, 1), (1, 2))).check(c)
    with pytest.raises(DomainError):
        SignatureIV(((-1, 4),))
    assert SignatureIV(((1, 0),)) + SignatureIV(((1, 1),)) == SignatureIV(((2, 1),))
    assert SignatureIV(((1, 0),)).scaled(3) == SignatureIV(((3, 0),))
    assert str(SignatureIV(((2, 1),))) == "(2,1)"
