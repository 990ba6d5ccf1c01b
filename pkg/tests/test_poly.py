from fractions import Fraction

import pytest
from hypothesis import given, settings

from affhecke.poly import (GradedPoly, act_word, apply_map, bgen, const,
                           demazure, one, rho_map, sigma_map,
                           split_invariant, xvar, yvar, zero, Xroot)
from conftest import poly_strategy

R = 3
P = poly_strategy(R)


@given(P, P, P)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + zero(R) == a
    assert a * one(R) == a
    assert (a - a).is_zero()


@given(P)
def test_sigma_involutive(p):
    for i in range(1, R + 1):
        m = sigma_map(i, R)
        assert apply_map(apply_map(p, m), m) == p


@given(P)
def test_rho_inverse(p):
    fwd = apply_map(p, rho_map(R))
    assert apply_map(fwd, rho_map(R, inverse=True)) == p


def test_rho_images():
    assert apply_map(xvar(R, R), rho_map(R)) == xvar(1, R) - yvar(R)
    assert apply_map(xvar(1, R), sigma_map(R, R)) == xvar(R, R) + yvar(R)


@given(P)
def test_demazure_invariant(p):
    for i in range(1, R + 1):
        d = demazure(i, p)
        assert apply_map(d, sigma_map(i, R)) == d


@given(P)
def test_split_invariant_reconstructs(p):
    for i in range(1, R + 1):
        a, b = split_invariant(i, p)
        assert a + bgen(i, R) * b == p
        assert apply_map(a, sigma_map(i, R)) == a


@given(P)
def test_homogeneous_decomposition(p):
    total = zero(R)
    d = 0
    while not (p - total).is_zero():
        total = total + p.homogeneous_component(d)
        d += 2
        assert d < 100
    assert total == p


@given(P, P)
def test_divide_exact_roundtrip(p, d):
    if d.is_zero():
        with pytest.raises(ZeroDivisionError):
            p.divide_exact(d)
        return
    assert (p * d).divide_exact(d) == p


@given(P)
@settings(max_examples=30)
def test_act_word_composes(p):
    w1 = [1, "+", R]
    w2 = ["-", 2]
    assert act_word(w1 + w2, p) == act_word(w1, act_word(w2, p))


def test_root_against_demazure_denominator():
    # X_i is the polynomial that divides p - sigma_i p for every p
    for i in range(1, R + 1):
        p = xvar(i, R) ** 2
        diff = p - apply_map(p, sigma_map(i, R))
        assert diff.divide_exact(Xroot(i, R)) * Xroot(i, R) == diff


def test_const():
    assert const(R, Fraction(3, 2)) + const(R, Fraction(-3, 2)) == zero(R)
