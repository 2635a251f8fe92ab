"""Orthogonal-pair search: golden signatures, invariants, caps."""

from itertools import permutations

import pytest

from wpp_mori import mult, orthpair
from wpp_mori.orthpair import (
    ceil_sqrt,
    check_pair,
    find_f1,
    mds_test,
    minimal_mu,
    pair_degrees,
)
from wpp_mori.poly import divides
from wpp_mori.weights import WeightTriple


def test_ceil_sqrt():
    assert [ceil_sqrt(n) for n in (1, 2, 3, 4, 5, 9, 10)] == [1, 2, 2, 2, 3, 3, 4]


def test_minimal_mu():
    for abc in (1, 6, 30, 231, 572):
        for d in range(1, 60):
            mu = minimal_mu(d, abc)
            assert d * d <= mu * mu * abc
            assert mu == 1 or d * d > (mu - 1) * (mu - 1) * abc
    with pytest.raises(ValueError):
        minimal_mu(0, 6)


def test_golden_signatures():
    assert pair_degrees(WeightTriple(1, 1, 1), 5) == (1, 1, 1, 1)
    assert pair_degrees(WeightTriple(1, 2, 3), 5) == (2, 1, 3, 1)
    assert pair_degrees(WeightTriple(2, 3, 5), 5) == (5, 1, 6, 1)
    assert pair_degrees(WeightTriple(7, 3, 11), 5) == (14, 1, 33, 2)


def test_golden_witnesses():
    v = mds_test(WeightTriple(2, 3, 5), 5)
    assert v.is_mori_dream
    assert str(v.pair.f1) == "x*y - z"
    assert str(v.pair.f2) == "x^3 - y^2"
    v = mds_test(WeightTriple(1, 2, 3), 5)
    assert str(v.pair.f1) == "x^2 - y"
    assert str(v.pair.f2) == "x*y - z"


def test_inconclusive_triple():
    v = mds_test(WeightTriple(9, 10, 13), 5)
    assert v.outcome == "Inconclusive"
    assert v.pair is None
    assert not v.is_mori_dream
    assert v.mu_cap == 5
    assert pair_degrees(WeightTriple(9, 10, 13), 5) is None


def test_mu_cap_validation():
    with pytest.raises(ValueError):
        mds_test(WeightTriple(1, 1, 1), 0)


def test_pair_invariants():
    for (a, b, c) in [(1, 1, 1), (1, 2, 3), (2, 3, 5), (3, 5, 7), (7, 3, 11)]:
        w = WeightTriple(a, b, c)
        v = mds_test(w, 6)
        assert v.is_mori_dream
        p = v.pair
        assert p.d1 * p.d1 <= p.mu1 * p.mu1 * w.abc
        assert p.d1 * p.d2 == p.mu1 * p.mu2 * w.abc
        assert not divides(p.f1, p.f2)
        assert mult.rees_multiplicity(w, p.f1) == p.mu1
        assert mult.rees_multiplicity(w, p.f2) == p.mu2
        check_pair(w, p)


def test_f1_degree_is_minimal():
    # no smaller degree admits a form with d^2 <= mu*(d)^2 * abc
    w = WeightTriple(2, 3, 5)
    d1, mu1, _ = find_f1(w, 40)
    assert (d1, mu1) == (5, 1)
    for d in range(1, d1):
        assert mult.slice_dim(w, d, minimal_mu(d, w.abc)) == 0


def test_signature_is_permutation_invariant():
    for triple in [(1, 2, 3), (2, 3, 5), (7, 3, 11)]:
        sigs = {
            pair_degrees(WeightTriple(*p), 6) for p in permutations(triple)
        }
        assert len(sigs) == 1


def test_mult2_triples_have_multiplicity_two_signature():
    # in the 2a = nb + mc regime the pair is (2a, 1, bc, 2)
    for (a, b, c) in [(7, 3, 11), (9, 5, 13), (8, 3, 13)]:
        w = WeightTriple(a, b, c)
        assert pair_degrees(w, 5) == (2 * a, 1, b * c, 2)


def test_tie_break_does_not_change_signature():
    for (a, b, c) in [(1, 2, 3), (2, 3, 5), (7, 3, 11), (4, 5, 7)]:
        w = WeightTriple(a, b, c)
        first = mds_test(w, 6, tie_break="first")
        last = mds_test(w, 6, tie_break="last")
        assert first.outcome == last.outcome
        assert first.pair.signature() == last.pair.signature()
