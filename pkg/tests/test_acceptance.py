"""Acceptance gate: one test per criterion, exact equality throughout.

Each test prints a single [criterion NN] PASS/FAIL line (visible with -s, or
via the -v test names); any assertion failure fails the suite.
"""

import math

import numpy as np

from invcayley.cayley import build_cayley_graph, build_zn_graph, crt_isomorphism_check, tensor_product
from invcayley.invariants import (
    chromatic_number,
    clique_number,
    connected_components,
    constant_parity_bipartition,
    girth,
    independence_number,
    is_bipartite,
    is_proper_bipartition,
    is_self_complementary,
    k33_witness_mod4,
    monomial_independent_check,
    planarity_test,
)
from invcayley.oracle import growth_scan, predicted_component_count
from invcayley.polyring import (
    PolyRing,
    inv_count_formula,
    involutions_bruteforce,
    involutions_closed_form,
)
from invcayley.rings import factorize, involutions_zn, is_cycle_modulus

FULL_GRID = [
    (n, d)
    for n in range(2, 13)
    for d in range(4)
    if n ** (d + 1) <= 50_000
]


def _report(num, desc, fn):
    try:
        fn()
    except BaseException:
        print(f"[criterion {num:02d}] FAIL  {desc}")
        raise
    print(f"[criterion {num:02d}] PASS  {desc}")


def test_criterion_01_involution_oracle_equivalence():
    def check():
        for n, d in FULL_GRID:
            ring = PolyRing(n, d)
            closed = involutions_closed_form(ring)
            brute = involutions_bruteforce(ring)
            assert closed == brute, (n, d)
            assert len(closed) == inv_count_formula(ring), (n, d)

    _report(1, "closed-form involutions = brute force on the full grid", check)


def test_criterion_02_zn_involution_tables():
    def check():
        assert involutions_zn(16) == (1, 7, 9, 15)
        assert involutions_zn(27) == (1, 26)
        assert len(involutions_zn(60)) == 8
        assert len(involutions_zn(24)) == 8
        assert len(involutions_zn(105)) == 8

    _report(2, "published involution tables for Z_16, Z_27, Z_60, Z_24, Z_105", check)


def test_criterion_03_girth_grid():
    def check():
        for d in range(5):
            assert girth(build_cayley_graph(PolyRing(2, d))) == math.inf, d
        for n in (3, 5, 7, 9, 11, 6, 10):
            for d in range(3):
                assert girth(build_cayley_graph(PolyRing(n, d))) == n, (n, d)
        for n in (4, 8, 12):
            for d in range(3):
                assert girth(build_cayley_graph(PolyRing(n, d))) == 4, (n, d)

    _report(3, "girth grid: infinity / n / 4 by modulus class", check)


def test_criterion_04_chromatic_and_clique_grid():
    def check():
        for n in range(2, 13):
            for d in range(3):
                g = build_cayley_graph(PolyRing(n, d))
                assert chromatic_number(g) == (2 if n % 2 == 0 else 3), (n, d)
                assert clique_number(g) == (3 if n == 3 else 2), (n, d)

    _report(4, "chromatic 2/3 by parity, clique 3 only at modulus 3", check)


def test_criterion_05_bipartiteness():
    def check():
        for n, d in FULL_GRID:
            g = build_cayley_graph(PolyRing(n, d))
            assert is_bipartite(g).bipartite == (n % 2 == 0), (n, d)
            if n % 2 == 0:
                part_a, _ = constant_parity_bipartition(PolyRing(n, d))
                assert is_proper_bipartition(g, part_a), (n, d)

    _report(5, "bipartite iff even modulus; parity bipartition proper", check)


def test_criterion_06_planarity():
    def check():
        res = planarity_test(build_cayley_graph(PolyRing(4, 1)))
        assert res.planar is False
        part_a, part_b = k33_witness_mod4(PolyRing(4, 1))
        ring = PolyRing(4, 1)
        assert set(part_a) == {
            ring.index_of((0, 0)), ring.index_of((2, 0)), ring.index_of((0, 2))
        }
        assert set(part_b) == {
            ring.index_of((1, 0)), ring.index_of((3, 0)), ring.index_of((1, 2))
        }
        assert planarity_test(build_cayley_graph(PolyRing(7, 2))).planar is True
        assert planarity_test(build_cayley_graph(PolyRing(2, 4))).planar is True
        assert planarity_test(build_zn_graph(12)).planar is False

    _report(6, "planarity calls and the K_{3,3} witness at modulus 4", check)


def test_criterion_07_components():
    def check():
        for n, d in FULL_GRID:
            g = build_cayley_graph(PolyRing(n, d))
            comps = connected_components(g)
            fact = factorize(n)
            expected = (
                n**d if fact.two_exp <= 1 else (n // 2) ** d
            )
            assert comps.count == expected == predicted_component_count(n, d), (n, d)
            assert len(set(comps.sizes.tolist())) == 1, (n, d)
        for n in (3, 5, 7, 9, 11, 6, 10):
            assert is_cycle_modulus(n)
            for d in range(3):
                g = build_cayley_graph(PolyRing(n, d))
                comps = connected_components(g)
                # every component an n-cycle: size n, all degrees 2, connected
                assert set(comps.sizes.tolist()) == {n}, (n, d)
                assert set(g.degrees().tolist()) == {2}, (n, d)

    _report(7, "component counts match the formula; cycle components at p^k, 2p^k", check)


def test_criterion_08_crt_decomposition():
    def check():
        for n in (6, 12, 15, 10):
            for d in (0, 1):
                assert crt_isomorphism_check(PolyRing(n, d)).ok, (n, d)

    _report(8, "CRT tensor decomposition verified for n in {6, 12, 15, 10}", check)


def test_criterion_09_independence():
    def check():
        assert independence_number(build_zn_graph(6)) == 3
        assert independence_number(build_zn_graph(9)) == 4
        for n, d in FULL_GRID:
            if d >= 1:
                assert monomial_independent_check(PolyRing(n, d)), (n, d)

    _report(9, "independence numbers and the monomial independent set", check)


def test_criterion_10_self_complementarity():
    def check():
        assert is_self_complementary(build_zn_graph(5)) is True
        t9 = tensor_product(build_zn_graph(3), build_zn_graph(3))
        assert is_self_complementary(t9) is True
        assert is_self_complementary(build_zn_graph(4)) is False
        assert is_self_complementary(build_zn_graph(6)) is False
        assert is_self_complementary(build_cayley_graph(PolyRing(3, 1))) is False

    _report(10, "self-complementary exactly for C_5 and C_3 x C_3", check)


def test_criterion_11_infinity_shadows():
    def check():
        for n in range(2, 10):
            rows = growth_scan(n, 3)
            comps = [r.component_count for r in rows]
            assert all(a < b for a, b in zip(comps, comps[1:])), n
            invs = [r.inv_count for r in rows]
            if factorize(n).two_exp >= 2:
                assert all(a < b for a, b in zip(invs, invs[1:])), n
            else:
                assert len(set(invs)) == 1, n
            assert [r.alpha_lower_bound for r in rows] == [1, 2, 3, 4], n

    _report(11, "growth shadows: components strictly increase, involutions iff 4 | 2-part", check)
