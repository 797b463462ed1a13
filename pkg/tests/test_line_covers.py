"""Tests for tropical double Hurwitz covers of the line."""

import itertools
from fractions import Fraction

import pytest

from tropica.errors import ArgumentError, DegenerateInputError
from tropica.line_covers import (LineCover, double_hurwitz_tropical,
                                 enumerate_line_covers, multiplicity)
from tropica.sym_oracle import hurwitz_line
from tropica.util import partitions_of


def explicit_total(genus, mu, nu):
    return sum((multiplicity(c).value
                for c in enumerate_line_covers(genus, mu, nu)),
               Fraction(0))


def small_cases(dmax, gmax, smax=None):
    for d in range(1, dmax + 1):
        parts = list(partitions_of(d))
        for g in range(gmax + 1):
            for mu in parts:
                for nu in parts:
                    s = -2 + 2 * g + len(mu) + len(nu)
                    if s < 1:
                        continue
                    if smax is not None and s > smax:
                        continue
                    yield g, mu, nu


def test_genus_one_three_sheets():
    covers = enumerate_line_covers(1, (3,), (3,))
    assert len(covers) == 1
    m = multiplicity(covers[0])
    assert m.value == 2
    assert (m.weight_product, m.forks, m.wieners) == (2, 0, 0)
    assert covers[0].bounded_edges == ((1, 2, 1), (1, 2, 2))
    assert double_hurwitz_tropical(1, (3,), (3,)) == 2


def test_known_totals():
    assert double_hurwitz_tropical(0, (1, 1), (1, 1)) == Fraction(1, 2)
    assert double_hurwitz_tropical(0, (2, 1), (2, 1)) == 4
    assert double_hurwitz_tropical(0, (3, 1), (2, 2)) == 3
    assert double_hurwitz_tropical(0, (2, 1), (3,)) == 1
    assert double_hurwitz_tropical(1, (2, 2), (2, 1, 1)) == 480


def test_fork_halving():
    # two weight-1 ends meeting at one vertex give a single 1/2 class
    covers = enumerate_line_covers(0, (1, 1), (2,))
    assert len(covers) == 1
    m = multiplicity(covers[0])
    assert (m.forks, m.wieners, m.value) == (1, 0, Fraction(1, 2))


def test_double_fork():
    covers = enumerate_line_covers(0, (1, 1), (1, 1))
    assert len(covers) == 1
    m = multiplicity(covers[0])
    assert (m.weight_product, m.forks, m.wieners) == (2, 2, 0)
    assert m.value == Fraction(1, 2)


def test_wiener_halving():
    # the unique genus-1 degree-2 cover is a pair of parallel weight-1 edges
    covers = enumerate_line_covers(1, (2,), (2,))
    assert len(covers) == 1
    m = multiplicity(covers[0])
    assert covers[0].bounded_edges == ((1, 2, 1), (1, 2, 1))
    assert (m.forks, m.wieners, m.value) == (0, 1, Fraction(1, 2))


def test_class_structure_2_1():
    covers = enumerate_line_covers(0, (2, 1), (2, 1))
    values = sorted(multiplicity(c).value for c in covers)
    assert values == [1, 3]


def test_routes_agree_battery():
    for g, mu, nu in small_cases(4, 2):
        ex = explicit_total(g, mu, nu)
        dp = double_hurwitz_tropical(g, mu, nu)
        orc = hurwitz_line(g, mu, nu)
        assert ex == dp == orc, (g, mu, nu)


def test_routes_agree_degree_five():
    for g, mu, nu in [(0, (3, 2), (2, 2, 1)), (1, (5,), (2, 2, 1))]:
        assert explicit_total(g, mu, nu) \
            == double_hurwitz_tropical(g, mu, nu) == hurwitz_line(g, mu, nu)


def test_dp_against_oracle_degree_five():
    for mu in partitions_of(5):
        for nu in partitions_of(5):
            for g in (0, 1, 2):
                s = -2 + 2 * g + len(mu) + len(nu)
                if s < 1:
                    continue
                assert double_hurwitz_tropical(g, mu, nu) \
                    == hurwitz_line(g, mu, nu), (g, mu, nu)


def test_cover_invariants():
    for g, mu, nu in small_cases(4, 2):
        d = sum(mu)
        for cover in enumerate_line_covers(g, mu, nu):
            cover.validate()
            assert tuple(sorted((w for _, w in cover.left_ends),
                                reverse=True)) == mu
            assert tuple(sorted((w for _, w in cover.right_ends),
                                reverse=True)) == nu
            graph = cover.to_multigraph()
            assert graph.first_betti() == g
            assert all(graph.valence(v) == 3
                       for v in range(graph.num_vertices))
            # every level slice cuts edges and ends of total weight d
            for t in range(1, cover.num_levels):
                crossing = sum(w for v, w in cover.left_ends if v > t)
                crossing += sum(w for u, v, w in cover.bounded_edges
                                if u <= t < v)
                crossing += sum(w for v, w in cover.right_ends if v <= t)
                assert crossing == d


def brute_list_symmetries(items):
    count = 0
    for perm in itertools.permutations(range(len(items))):
        if all(items[perm[i]] == items[i] for i in range(len(items))):
            count += 1
    return count


def test_symmetry_count_matches_halving():
    # the 2^(forks + wieners) denominator is the cover's symmetry count
    cases = list(small_cases(3, 1)) + [(2, (2,), (2,)), (2, (1, 1), (2,))]
    checked = 0
    for g, mu, nu in cases:
        for cover in enumerate_line_covers(g, mu, nu):
            lists = (cover.left_ends, cover.bounded_edges, cover.right_ends)
            if any(len(lst) > 7 for lst in lists):
                continue
            brute = 1
            for lst in lists:
                brute *= brute_list_symmetries(lst)
            m = multiplicity(cover)
            assert brute == 2 ** (m.forks + m.wieners), cover.canonical_text()
            checked += 1
    assert checked > 50


def test_reflection_symmetry():
    for g, mu, nu in small_cases(4, 2, smax=6):
        assert double_hurwitz_tropical(g, mu, nu) \
            == double_hurwitz_tropical(g, nu, mu), (g, mu, nu)


def test_input_order_is_irrelevant():
    assert enumerate_line_covers(0, (1, 2), (1, 2)) \
        == enumerate_line_covers(0, (2, 1), (2, 1))
    assert double_hurwitz_tropical(1, [2, 3], [1, 4]) \
        == double_hurwitz_tropical(1, (3, 2), (4, 1))


def test_cover_ordering_is_canonical():
    covers = enumerate_line_covers(1, (2, 2), (2, 1, 1))
    texts = [c.canonical_text() for c in covers]
    assert texts == sorted(texts)
    assert len(set(texts)) == len(texts)


def test_input_validation():
    with pytest.raises(ArgumentError):
        enumerate_line_covers(0, (2, 1), (2, 2))
    with pytest.raises(ArgumentError):
        double_hurwitz_tropical(-1, (2,), (2,))
    with pytest.raises(ArgumentError):
        enumerate_line_covers(0, (0, 2), (1, 1))
    # a single unbranched sheet pair has no 3-valent vertex at all
    with pytest.raises(DegenerateInputError):
        enumerate_line_covers(0, (3,), (3,))
    with pytest.raises(DegenerateInputError):
        double_hurwitz_tropical(0, (2,), (2,))


def test_degenerate_is_argument_error_subclass():
    assert issubclass(DegenerateInputError, ArgumentError)
