"""Groebner bases, ideal operations, dimension and length."""

import random

from syzkit.fields import QQ
from syzkit.groebner import (Ideal, LengthValue, ideal_intersection,
                             ideal_membership, ideal_quotient, krull_dim,
                             lead_ideal, minimal_primes_monomial, normal_form,
                             radical_membership, saturate,
                             vector_space_length)
from syzkit.ring import PolyRing, mono_div, mono_lcm

from oracles import monomial_quotient_length
from randgen import GF, random_monomial_ideal, random_poly

RQ = PolyRing(("x", "y"), QQ)
RP = PolyRing(("x", "y"), GF)
R3 = PolyRing(("x", "y", "z"), GF)


def gb_strings(I):
    return sorted(str(g) for g in I.groebner_basis())


def test_basic_groebner_examples():
    I = Ideal.parse(RQ, "x + y", "x - y")
    assert gb_strings(I) == ["x", "y"]
    J = Ideal.parse(RQ, "x^2 - 1")
    assert not J.is_unit()
    K = Ideal.parse(RQ, "x", "x + 1")
    assert K.is_unit()


def test_membership():
    I = Ideal.parse(RQ, "x^2", "x*y")
    assert ideal_membership(RQ.parse("x^2*y + x*y^2"), I)
    assert not ideal_membership(RQ.parse("x"), I)
    assert not ideal_membership(RQ.parse("y^2"), I)


def test_ideal_quotient_and_intersection():
    I = Ideal.parse(RQ, "x^2", "x*y")
    J = Ideal.parse(RQ, "y")
    assert ideal_quotient(I, J) == Ideal.parse(RQ, "x")
    A = Ideal.parse(RQ, "x")
    B = Ideal.parse(RQ, "y")
    assert ideal_intersection(A, B) == Ideal.parse(RQ, "x*y")


def test_saturation():
    I = Ideal.parse(RQ, "x^2", "x*y")
    m = Ideal.parse(RQ, "x", "y")
    assert saturate(I, m) == Ideal.parse(RQ, "x")
    # an already-saturated ideal is a fixed point
    J = Ideal.parse(RQ, "x*y")
    assert saturate(J, m) == J


def test_saturate_idempotent_random():
    rng = random.Random(31)
    m = Ideal([g for g in R3.gens()], R3)
    for _ in range(25):
        I = random_monomial_ideal(rng, R3)
        S1 = saturate(I, m)
        assert saturate(S1, m) == S1


def test_radical_membership():
    I = Ideal.parse(RQ, "x^2", "x*y")
    assert radical_membership(RQ.parse("x"), I)
    assert not radical_membership(RQ.parse("y"), I)
    assert radical_membership(RQ.zero(), I)


def test_krull_dim():
    assert krull_dim(Ideal.parse(RQ, "x^2", "x*y")) == 1
    assert krull_dim(Ideal.parse(RQ, "x*y")) == 1
    assert krull_dim(Ideal([], RQ)) == 2
    assert krull_dim(Ideal.parse(RQ, "x", "y")) == 0
    assert krull_dim(Ideal.parse(R3, "x*y")) == 2


def test_vector_space_length():
    assert vector_space_length(Ideal.parse(RQ, "x^2", "y^2")) \
        == LengthValue.finite(4)
    assert vector_space_length(Ideal.parse(RQ, "x", "y")) \
        == LengthValue.finite(1)
    assert not vector_space_length(Ideal.parse(RQ, "x^2", "x*y")).is_finite


def test_length_against_enumeration_oracle():
    rng = random.Random(404)
    for ring in (RP, R3):
        n = len(ring.names)
        for _ in range(40):
            I = random_monomial_ideal(rng, ring, maxdeg=3)
            expected = monomial_quotient_length(
                [g.lead_monomial() for g in I.generators], n)
            got = vector_space_length(I)
            if expected is None:
                assert not got.is_finite
            else:
                assert got == LengthValue.finite(expected)


def test_minimal_primes_monomial():
    I = Ideal.parse(RQ, "x^2", "x*y")
    assert minimal_primes_monomial(I) == [(0,)]
    J = Ideal.parse(RQ, "x*y")
    assert minimal_primes_monomial(J) == [(0,), (1,)]
    K = Ideal.parse(R3, "x*y", "x*z")
    assert minimal_primes_monomial(K) == [(0,), (1, 2)]


def _spoly(f, g):
    fm, gm = f.lead_monomial(), g.lead_monomial()
    l = mono_lcm(fm, gm)
    F = f.ring.field
    a = f.term_mul(F.inv(f.terms[fm]), mono_div(l, fm))
    b = g.term_mul(F.inv(g.terms[gm]), mono_div(l, gm))
    return a - b


def test_groebner_property_on_random_ideals():
    rng = random.Random(2024)
    for _ in range(30):
        gens = [random_poly(rng, RP, maxdeg=3, nterms=3) for _ in range(3)]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        I = Ideal(gens, RP)
        G = list(I.groebner_basis())
        # every input generator reduces to zero
        for g in gens:
            assert normal_form(g, G).is_zero()
        # every S-polynomial reduces to zero
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                assert normal_form(_spoly(G[i], G[j]), G).is_zero()


def test_reduced_basis_is_permutation_stable():
    rng = random.Random(55)
    for _ in range(20):
        gens = [random_poly(rng, RP, maxdeg=3, nterms=3) for _ in range(4)]
        gens = [g for g in gens if not g.is_zero()]
        if len(gens) < 2:
            continue
        I = Ideal(gens, RP)
        shuffled = gens[:]
        rng.shuffle(shuffled)
        J = Ideal(shuffled, RP)
        assert gb_strings(I) == gb_strings(J)


def test_colon_containments_random():
    rng = random.Random(66)
    for _ in range(15):
        I = random_monomial_ideal(rng, RP)
        J = random_monomial_ideal(rng, RP, ngens=1)
        Q = ideal_quotient(I, J)
        # I ⊆ (I : J), and (I : J)·J ⊆ I
        for g in I.generators:
            assert ideal_membership(g, Q)
        for q in Q.generators:
            for j in J.generators:
                assert ideal_membership(q * j, I)


def test_lead_ideal():
    I = Ideal.parse(RQ, "x^2 + y^2", "x*y")
    L = lead_ideal(I)
    assert L.is_monomial()
    assert krull_dim(L) == krull_dim(I)
