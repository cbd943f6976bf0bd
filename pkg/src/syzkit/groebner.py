"""Buchberger engine and ideal-theoretic toolkit.

Everything downstream (resolutions, invariants, the harness) leans on the
reduced Groebner bases produced here.  Determinism is load-bearing: pair
selection is by lcm total degree then pair index, and the final basis is
inter-reduced, monic and sorted descending by the ring order, so a given
ideal always yields the identical basis.
"""

from __future__ import annotations

from itertools import combinations

from .fields import FieldSpec
from .ring import (GREVLEX, MonomialOrder, PolyRing, Polynomial, mono_coprime,
                   mono_deg, mono_div, mono_divides, mono_lcm, mono_mul)


class GroebnerBasis:
    """Reduced Groebner basis: monic, inter-reduced, sorted descending."""

    def __init__(self, elements, ring: PolyRing):
        self.elements = list(elements)
        self.ring = ring

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis)
                and self.ring == other.ring and self.elements == other.elements)

    def lead_monomials(self):
        return [g.lead_monomial() for g in self.elements]

    def contains_unit(self) -> bool:
        return any(g.degree() == 0 for g in self.elements)


class Ideal:
    """Ideal of a PolyRing with a lazily cached reduced Groebner basis."""

    def __init__(self, generators, ring: PolyRing | None = None):
        generators = list(generators)
        if ring is None:
            if not generators:
                raise ValueError("need a ring for the empty generator list")
            ring = generators[0].ring
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator over the wrong ring")
        self.ring = ring
        self.generators = [g for g in generators if not g.is_zero()]
        self._gb: GroebnerBasis | None = None

    @classmethod
    def parse(cls, ring: PolyRing, *texts: str) -> "Ideal":
        return cls([ring.parse(t) for t in texts], ring)

    def groebner_basis(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(self)
        return self._gb

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.groebner_basis().contains_unit()

    def is_monomial(self) -> bool:
        return all(len(g.terms) == 1 for g in self.generators)

    def __eq__(self, other):
        return (isinstance(other, Ideal) and self.ring == other.ring
                and self.groebner_basis().elements == other.groebner_basis().elements)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.generators) + ")"


# ---------------------------------------------------------------------------
# division and Buchberger

def normal_form(f: Polynomial, G) -> Polynomial:
    """Remainder of full multivariate division of f by the elements of G."""
    gs = list(G)
    if not gs:
        return f
    ring = f.ring
    F = ring.field
    leads = [(g.lead_monomial(), g.terms[g.lead_monomial()], g) for g in gs]
    rem = ring.zero()
    work = f
    while work.terms:
        lm = work.lead_monomial()
        lc = work.terms[lm]
        for glm, glc, g in leads:
            if mono_divides(glm, lm):
                work = work - g.term_mul(F.div(lc, glc), mono_div(lm, glm))
                break
        else:
            t = Polynomial(ring, {lm: lc})
            rem = rem + t
            work = work - t
    return rem


def _s_poly(f: Polynomial, g: Polynomial) -> Polynomial:
    F = f.ring.field
    lf, lg = f.lead_monomial(), g.lead_monomial()
    l = mono_lcm(lf, lg)
    a = f.term_mul(F.inv(f.terms[lf]), mono_div(l, lf))
    b = g.term_mul(F.inv(g.terms[lg]), mono_div(l, lg))
    return a - b


def buchberger(I: Ideal) -> GroebnerBasis:
    """Reduced Groebner basis of I, deterministically.

    Pairs are selected by (lcm total degree, pair index); the coprime-lead
    and chain criteria prune useless pairs.
    """
    G = [g.monic() for g in I.generators if not g.is_zero()]
    ring = I.ring
    if not G:
        return GroebnerBasis([], ring)
    pairs = {(i, j) for i, j in combinations(range(len(G)), 2)}
    done = set()
    while pairs:
        i, j = min(pairs, key=lambda p: (
            mono_deg(mono_lcm(G[p[0]].lead_monomial(), G[p[1]].lead_monomial())),
            p))
        pairs.discard((i, j))
        done.add((i, j))
        li, lj = G[i].lead_monomial(), G[j].lead_monomial()
        if mono_coprime(li, lj):
            continue
        lij = mono_lcm(li, lj)
        chain = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if not mono_divides(G[k].lead_monomial(), lij):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                chain = True
                break
        if chain:
            continue
        r = normal_form(_s_poly(G[i], G[j]), G)
        if r.is_zero():
            continue
        r = r.monic()
        for k in range(len(G)):
            pairs.add((k, len(G)))
        G.append(r)
    return GroebnerBasis(_interreduce(G, ring), ring)


def _interreduce(G, ring: PolyRing):
    """Minimalize and tail-reduce; output monic, sorted descending by order."""
    key = ring.order.key
    G = sorted((g for g in G if not g.is_zero()),
               key=lambda g: key(g.lead_monomial()))
    minimal = []
    for g in G:
        lm = g.lead_monomial()
        if not any(mono_divides(h.lead_monomial(), lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = normal_form(g, others)
        if not r.is_zero():
            reduced.append(r.monic())
    reduced.sort(key=lambda g: key(g.lead_monomial()), reverse=True)
    return reduced


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    return normal_form(f, I.groebner_basis()).is_zero()


# ---------------------------------------------------------------------------
# elimination machinery (internal auxiliary variable)

def _with_aux_var(ring: PolyRing, order_kind: str) -> PolyRing:
    name = "t_"
    while name in ring.names:
        name += "_"
    return PolyRing([name] + ring.names, ring.field, MonomialOrder(order_kind))


def _lift_to_aux(f: Polynomial, aux: PolyRing) -> Polynomial:
    return Polynomial(aux, {(0,) + m: c for m, c in f.terms.items()})


def _project_from_aux(f: Polynomial, ring: PolyRing) -> Polynomial | None:
    """Drop the auxiliary variable; None when f actually involves it."""
    out = {}
    for m, c in f.terms.items():
        if m[0] != 0:
            return None
        out[m[1:]] = c
    return Polynomial(ring, out)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I cap J via the one-auxiliary-variable elimination trick."""
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal([], ring)
    aux = _with_aux_var(ring, "elim1")
    t = aux.var(0)
    one = aux.one()
    gens = [t * _lift_to_aux(g, aux) for g in I.generators]
    gens += [(one - t) * _lift_to_aux(g, aux) for g in J.generators]
    gb = Ideal(gens, aux).groebner_basis()
    kept = []
    for g in gb:
        p = _project_from_aux(g, ring)
        if p is not None and not p.is_zero():
            kept.append(p)
    return Ideal(kept, ring)


def ideal_quotient(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = {f : f*J in I}; J must be nonzero."""
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    ring = I.ring
    result: Ideal | None = None
    for g in J.generators:
        if g.degree() == 0:
            part = Ideal(list(I.generators), ring)
        else:
            inter = ideal_intersection(I, Ideal([g], ring))
            from .ring import exact_div
            part = Ideal([exact_div(h, g) for h in inter.generators], ring)
        result = part if result is None else ideal_intersection(result, part)
    return result if result is not None else Ideal(list(I.generators), ring)


def saturate(I: Ideal, J: Ideal) -> Ideal:
    """(I : J^infinity): iterate the colon until the chain stabilizes."""
    if J.is_zero():
        raise ValueError("saturation by the zero ideal")
    cur = I
    while True:
        nxt = ideal_quotient(cur, J)
        if nxt.groebner_basis().elements == cur.groebner_basis().elements:
            return nxt
        cur = nxt


def radical_membership(f: Polynomial, I: Ideal) -> bool:
    """f in sqrt(I), by adjoining t and testing 1 in I + (1 - t*f)."""
    if f.is_zero():
        return True
    ring = I.ring
    aux = _with_aux_var(ring, "grevlex")
    t = aux.var(0)
    gens = [_lift_to_aux(g, aux) for g in I.generators]
    gens.append(aux.one() - t * _lift_to_aux(f, aux))
    return Ideal(gens, aux).is_unit()


# ---------------------------------------------------------------------------
# combinatorics of lead ideals

def lead_ideal(I: Ideal) -> Ideal:
    ring = I.ring
    return Ideal([ring.monomial(g.lead_monomial()) for g in I.groebner_basis()],
                 ring)


def _lead_supports(I: Ideal):
    """Variable-support sets of the lead monomials of GB(I)."""
    return [frozenset(i for i, e in enumerate(g.lead_monomial()) if e > 0)
            for g in I.groebner_basis()]


def krull_dim(I: Ideal) -> int:
    """dim S/I from independent variable sets of the lead ideal."""
    if I.is_unit():
        raise ValueError("unit ideal has empty spectrum")
    supports = _lead_supports(I)
    n = I.ring.nvars
    best = 0
    for size in range(n, 0, -1):
        for U in combinations(range(n), size):
            US = set(U)
            if all(not s <= US for s in supports):
                return size
    return best


class LengthValue:
    """Finite length (a k-dimension) or infinity."""

    __slots__ = ("value",)

    def __init__(self, value: int | None):
        self.value = value  # None means infinite

    @classmethod
    def finite(cls, n: int) -> "LengthValue":
        return cls(n)

    @classmethod
    def infinite(cls) -> "LengthValue":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __eq__(self, other):
        if isinstance(other, LengthValue):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "infinite" if self.value is None else f"finite({self.value})"

    def to_json(self):
        return "infinite" if self.value is None else self.value


def _standard_monomials_of_degree(lead_monos, nvars: int, d: int):
    """Monomials of total degree d outside the monomial ideal of lead_monos."""
    out = []

    def rec(prefix, remaining, slot):
        if slot == nvars - 1:
            m = prefix + (remaining,)
            if not any(mono_divides(l, m) for l in lead_monos):
                out.append(m)
            return
        for e in range(remaining + 1):
            rec(prefix + (e,), remaining - e, slot + 1)

    rec((), d, 0)
    return out


def vector_space_length(I: Ideal) -> LengthValue:
    """Count of standard monomials when S/I is artinian, else infinite."""
    if I.is_unit():
        raise ValueError("unit ideal")
    if krull_dim(I) > 0:
        return LengthValue.infinite()
    leads = [g.lead_monomial() for g in I.groebner_basis()]
    max_deg = max((mono_deg(l) for l in leads), default=0)
    total = 0
    d = 0
    while True:
        count = len(_standard_monomials_of_degree(leads, I.ring.nvars, d))
        total += count
        if count == 0 and d >= max_deg:
            return LengthValue.finite(total)
        d += 1


def minimal_primes_monomial(I: Ideal):
    """Minimal primes of a monomial ideal, each as a sorted variable tuple.

    These are the minimal hitting sets of the generator supports.
    """
    if not I.is_monomial():
        raise ValueError("not a monomial ideal")
    supports = []
    for g in I.generators:
        (m,) = g.terms
        supports.append(frozenset(i for i, e in enumerate(m) if e > 0))
    if not supports:
        return [tuple()]
    n = I.ring.nvars
    covers = []
    for size in range(0, n + 1):
        for C in combinations(range(n), size):
            CS = set(C)
            if all(s & CS for s in supports):
                if not any(set(prev) <= CS for prev in covers):
                    covers.append(C)
    return sorted(covers)
