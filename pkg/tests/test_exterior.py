from math import comb

import pytest

import brute
from flatcheck.exterior import (exterior_power, exterior_presentation, fitting_ideal,
                                invariant_factor, support_formula_check)
from flatcheck.ideals import Ideal, unit_ideal
from flatcheck.modules import PresentedModule, annihilator, direct_sum, enumerate_modules, flatness_oracle
from flatcheck.rings import ZMod

Z6 = ZMod(6)


def test_wedge_of_free():
    for k in range(4):
        for n in range(k + 2):
            w = exterior_power(PresentedModule.free(Z6, k), n)
            assert w.cardinality == 6 ** comb(k, n)


def test_wedge_examples():
    assert exterior_power(PresentedModule.free(Z6, 2), 2).cardinality == 6
    a, b = PresentedModule.cyclic(Z6, 2), PresentedModule.cyclic(Z6, 3)
    assert exterior_power(direct_sum(a, b), 2).is_zero
    w = exterior_power(direct_sum(a, a), 2)
    assert annihilator(w) == Ideal(Z6, [2]) and w.cardinality == 2


def test_invariant_factor_examples():
    m = direct_sum(PresentedModule.free(Z6, 1), PresentedModule.cyclic(Z6, 2))
    assert invariant_factor(m, 2) == Ideal(Z6, [2])
    assert invariant_factor(m, 0).is_zero
    # above the number of generators the power vanishes
    assert invariant_factor(m, 3) == unit_ideal(Z6)


def test_sign_convention():
    ep = exterior_presentation(PresentedModule(Z6, 3, [[1, 2, 3]]), 2)
    assert ep.subsets == ((0, 1), (0, 2), (1, 2))
    # sign (-1)^#{t in T : t < i}
    # T = {0}: -a_1 e01 - a_2 e02;  T = {1}: a_0 e01 - a_2 e12;  T = {2}: a_0 e02 + a_1 e12
    assert ep.result.relations == ((4, 3, 0), (1, 0, 3), (0, 1, 2))


@pytest.mark.parametrize("n", [4, 6, 9])
def test_wedge_sizes_brute(n):
    for m in enumerate_modules(ZMod(n), 2, 2):
        rels = [tuple(a) for a in m.relations]
        # degree 1 is M itself, counted in the module tests
        for d in range(2, m.k + 1):
            assert exterior_power(m, d).cardinality == brute.wedge_size(n, m.k, rels, d)


def test_fitting_ideal_conventions():
    m = PresentedModule(Z6, 2, [[2, 0], [0, 3]])
    assert fitting_ideal(m, 2) == unit_ideal(Z6)
    assert fitting_ideal(m, 1) == Ideal(Z6, [1])  # (2, 3) = R
    assert fitting_ideal(m, 0).is_zero  # det = 6 = 0
    assert fitting_ideal(PresentedModule.free(Z6, 2), 0).is_zero


def test_fitting_annihilator_radicals_agree_for_cyclic():
    # for a cyclic module Fitt_0 = Ann
    for n in (4, 6, 8, 9, 12):
        for a in ZMod(n).elements:
            m = PresentedModule.cyclic(ZMod(n), a)
            assert fitting_ideal(m, 0) == annihilator(m)


def test_support_formula_examples():
    assert support_formula_check(PresentedModule.free(Z6, 1), 1)
    m = PresentedModule.cyclic(Z6, 2)
    assert support_formula_check(m, 1) and support_formula_check(m, 2)


@pytest.mark.parametrize("n", [6, 12])
def test_support_formula_on_flat_modules(n):
    for m in enumerate_modules(ZMod(n), 2, 1):
        if flatness_oracle(m):
            assert all(support_formula_check(m, d) for d in range(m.k + 2))
