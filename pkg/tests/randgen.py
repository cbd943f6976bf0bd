"""Seeded random generators shared by the test modules."""

from syzkit.fields import DEFAULT_PRIME, FieldSpec
from syzkit.groebner import Ideal
from syzkit.resolution import FreeModule, ModuleMap, QuotientRing
from syzkit.ring import PolyRing

GF = FieldSpec(DEFAULT_PRIME)
NAMES = ("x", "y", "z", "w")


def random_coeff(rng, field):
    while True:
        c = field.of_int(rng.randint(-5, 5))
        if c != field.zero:
            return c


def random_monomial(rng, nvars, maxdeg, mindeg=0):
    d = rng.randint(mindeg, maxdeg)
    e = [0] * nvars
    for _ in range(d):
        e[rng.randrange(nvars)] += 1
    return tuple(e)


def random_poly(rng, ring, maxdeg=3, nterms=3):
    from syzkit.ring import Polynomial
    terms = {}
    for _ in range(rng.randint(0, nterms)):
        m = random_monomial(rng, len(ring.names), maxdeg)
        terms[m] = random_coeff(rng, ring.field)
    return Polynomial(ring, terms)


def random_homogeneous(rng, ring, deg, nterms=2):
    from syzkit.ring import Polynomial
    terms = {}
    for _ in range(rng.randint(1, nterms)):
        m = random_monomial(rng, len(ring.names), deg, mindeg=deg)
        terms[m] = random_coeff(rng, ring.field)
    return Polynomial(ring, terms)


def random_monomial_ideal(rng, ring, maxdeg=3, ngens=None):
    n = ngens if ngens is not None else rng.randint(1, 4)
    while True:
        gens = [ring.monomial(random_monomial(rng, len(ring.names),
                                              maxdeg, mindeg=1))
                for _ in range(n)]
        I = Ideal(gens, ring)
        if not I.is_unit() and not I.is_zero():
            return I


def random_quotient_ring(rng, nvars, maxdeg=3, field=GF):
    ring = PolyRing(NAMES[:nvars], field)
    return QuotientRing(ring, random_monomial_ideal(rng, ring, maxdeg))


def random_module_map(rng, R, max_target_rank=2, max_cols=3, maxdeg=2):
    """Random homogeneous map into a free module over R."""
    ring = R.ambient
    r = rng.randint(1, max_target_rank)
    shifts = tuple(rng.randint(0, 1) for _ in range(r))
    target = FreeModule(r, shifts)
    cols = []
    for _ in range(rng.randint(1, max_cols)):
        cdeg = rng.randint(max(shifts), max(shifts) + maxdeg)
        col = []
        for i in range(r):
            e = cdeg - shifts[i]
            if rng.random() < 0.3:
                col.append(ring.zero())
            else:
                col.append(R.reduce(random_homogeneous(rng, ring, e)))
        cols.append(tuple(col))
    cols = [c for c in cols if any(not p.is_zero() for p in c)]
    return ModuleMap(R, target, cols)
