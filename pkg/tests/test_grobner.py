import itertools
import random
from fractions import Fraction

import pytest

from singindex.errors import DegreeCapError, NotIsolatedError
from singindex.grobner import (
    INFINITE,
    Ideal,
    colength,
    is_zero_dimensional,
    localized_colength,
    quotient_algebra,
    staircase_monomials,
    standard_basis,
)
from singindex.poly import Polynomial, monomial_divides
from singindex.oracles import macaulay_colength

from helpers import random_polynomial, random_unimodular, substitute_all

CTX = ("x", "y")
X = Polynomial.variable(CTX, "x")
Y = Polynomial.variable(CTX, "y")


def test_monomial_ideal_is_its_own_basis():
    sb = standard_basis(Ideal([X**2, Y**3], "local"))
    assert sorted(sb.leading_monomials()) == [(0, 3), (2, 0)]
    assert set(sb.elements) == {X**2, Y**3}


def test_linear_reduction():
    sb = standard_basis(Ideal([X + Y, X - Y], "global"))
    assert set(sb.elements) == {X, Y}


def test_local_basis_leading_terms():
    sb = standard_basis(Ideal([X**2 + Y**3, X * Y], "local"))
    assert sorted(sb.leading_monomials()) == [(0, 4), (1, 1), (2, 0)]


def test_zero_dimensionality():
    assert is_zero_dimensional(standard_basis(Ideal([X**2, Y**3], "local")))
    assert not is_zero_dimensional(standard_basis(Ideal([X * Y], "local")))
    ctx3 = ("x", "y", "z")
    gens = [
        Polynomial.variable(ctx3, "x"),
        Polynomial.variable(ctx3, "y") ** 3,
        Polynomial.variable(ctx3, "z") ** 2,
    ]
    assert is_zero_dimensional(standard_basis(Ideal(gens, "local")))


def test_colength_examples():
    assert colength(Ideal([X, Y], "local")) == 1
    assert colength(Ideal([X**2, Y**3], "local")) == 6
    assert colength(Ideal([X**2 + Y**3, X * Y], "local")) == 5
    assert colength(Ideal([X * Y], "local")) is INFINITE


def test_membership_through_normal_form():
    sb = standard_basis(Ideal([X**2 + Y**3, X * Y], "local"))
    assert sb.contains(X**3)  # x^3 = x(x^2+y^3) - y^2(xy)
    assert not sb.contains(Y**3)


def test_colength_invariant_under_linear_change():
    rng = random.Random(23)
    instances = [
        [X**2, Y**3],
        [X**2 + Y**3, X * Y],
        [X**3 - Y**2, Y**3],
        [X**2 - Y**2, X * Y],
    ]
    for gens in instances:
        base = colength(Ideal(gens, "local"))
        for _ in range(5):
            u = random_unimodular(2, rng)
            moved = substitute_all(gens, CTX, u)
            assert colength(Ideal(moved, "local")) == base


def test_monomial_staircase_direct_count():
    rng = random.Random(31)
    for _ in range(10):
        exps = [
            tuple(rng.randint(0, 4) for _ in range(2))
            for _ in range(rng.randint(2, 4))
        ]
        exps = [e for e in exps if sum(e) > 0]
        if not all(any(e[i] > 0 and all(e[j] == 0 for j in range(2) if j != i) for e in exps) for i in range(2)):
            continue  # keep only zero-dimensional monomial ideals
        gens = [Polynomial(CTX, {e: Fraction(1)}) for e in exps]
        value = colength(Ideal(gens, "local"))
        direct = sum(
            1
            for a in range(6)
            for b in range(6)
            if not any(monomial_divides(e, (a, b)) for e in exps)
        )
        assert value == direct


def test_homogeneous_local_equals_global():
    rng = random.Random(37)
    trials = 0
    while trials < 6:
        gens = []
        for _ in range(2):
            deg = rng.randint(1, 3)
            terms = {}
            for a in range(deg + 1):
                c = rng.randint(-2, 2)
                if c:
                    terms[(a, deg - a)] = Fraction(c)
            if terms:
                gens.append(Polynomial(CTX, terms))
        if len(gens) < 2:
            continue
        local = colength(Ideal(gens, "local"))
        global_ = colength(Ideal(gens, "global"))
        assert local == global_
        trials += 1


def test_quotient_algebra_examples():
    q = quotient_algebra(Ideal([X, Y], "local"))
    assert q.dimension == 1 and q.basis == ((0, 0),)

    q = quotient_algebra(Ideal([X**2, Y**2], "local"))
    assert set(q.basis) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    xx = q.multiply_coords(q.coords(X), q.coords(X))
    assert all(c == 0 for c in xx)

    q = quotient_algebra(Ideal([X**2 - Y**3, Y**4], "local"))
    assert q.dimension == 8


def test_quotient_algebra_associative_and_unital():
    for gens in ([X**2, Y**2], [X**2 - Y**2, X * Y], [X**2 + Y**3, X * Y]):
        q = quotient_algebra(Ideal(gens, "local"))
        assert q.dimension <= 8
        unit = q.coords(Polynomial.one(CTX))
        vectors = [
            q.coords(Polynomial(CTX, {m: Fraction(1)})) for m in q.basis
        ]
        for u in vectors:
            assert q.multiply_coords(unit, u) == list(u)
        for a, b, c in itertools.product(vectors, repeat=3):
            left = q.multiply_coords(q.multiply_coords(a, b), c)
            right = q.multiply_coords(a, q.multiply_coords(b, c))
            assert left == right


def test_basis_spairs_reduce_to_zero():
    from singindex.grobner import _spoly

    for gens, locality in (
        ([X**2 + Y**3, X * Y], "local"),
        ([X**2 - Y**2, X * Y], "local"),
        ([X**3 - Y, Y**2 + X], "global"),
    ):
        sb = standard_basis(Ideal(gens, locality))
        elements = list(sb.elements)
        for i in range(len(elements)):
            lt_i, lc_i = elements[i].leading_term(sb.order)
            assert lc_i == 1
            for j in range(i):
                lt_j, _ = elements[j].leading_term(sb.order)
                s = _spoly(lt_i, elements[i], lt_j, elements[j], sb.order)
                if not s.is_zero:
                    assert sb.normal_form(s).is_zero


def test_normal_form_idempotent():
    rng = random.Random(41)
    q = quotient_algebra(Ideal([X**2 + Y**3, X * Y], "local"))
    for _ in range(10):
        p = random_polynomial(CTX, rng)
        once = q.reduce(p)
        assert q.reduce(once) == once


def test_quotient_rejects_non_isolated():
    with pytest.raises(NotIsolatedError):
        quotient_algebra(Ideal([X * Y], "local"))


def test_degree_cap_aborts():
    # a basis computation cannot even express the inputs under a tiny cap
    with pytest.raises(DegreeCapError):
        standard_basis(Ideal([X**2 + Y**3, X * Y], "local"), degree_cap=2)


def test_localized_colength():
    # (x^2 - 1/4, y): simple zeros at (1/2, 0) and (-1/2, 0)
    gens = [X**2 - Fraction(1, 4), Y]
    assert localized_colength(Ideal(gens, "local"), [Fraction(1, 2), Fraction(0)]) == 1
    assert localized_colength(Ideal(gens, "local"), [Fraction(-1, 2), Fraction(0)]) == 1
    # nothing vanishes at the origin
    assert localized_colength(Ideal(gens, "local"), [Fraction(0), Fraction(0)]) == 0


def test_engine_matches_macaulay_oracle_small():
    rng = random.Random(43)
    done = 0
    while done < 8:
        gens = [
            Polynomial(CTX, {(rng.randint(1, 3), 0): Fraction(1)})
            + random_polynomial(CTX, rng, max_degree=3, terms=2),
            Polynomial(CTX, {(0, rng.randint(1, 3)): Fraction(1)})
            + random_polynomial(CTX, rng, max_degree=3, terms=2),
        ]
        ideal = Ideal(gens, "local")
        value = colength(ideal)
        if value is INFINITE or value > 20:
            continue
        assert macaulay_colength(list(ideal.generators)) == value
        done += 1
