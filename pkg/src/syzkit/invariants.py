"""Numerical invariants of presented modules: dimension, length, support,
zeroth local cohomology and depth-positivity.

Dimension and length go through the lead module of the full relation
submodule: the standard module terms outside it form a k-basis of the
module, so the quotient decomposes position by position into monomial
quotients of the ambient ring.  Support questions go through the zeroth
Fitting ideal, whose vanishing locus equals the support; for monomial
defining ideals the test is done per minimal prime by a fraction-free rank
computation, which avoids enumerating minors of large presentations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .groebner import (Ideal, LengthValue, krull_dim, minimal_primes_monomial,
                       normal_form, radical_membership, saturate,
                       vector_space_length)
from .modules import lead_module_position_ideals, vec_degree, vec_is_zero
from .resolution import (FreeModule, ModuleMap, PresentedModule, QuotientRing,
                         minimalize_generators, syzygy_kernel_columns)
from .ring import Polynomial, exact_div

MAX_MINORS = 3000


# ---------------------------------------------------------------------------
# lead-module decomposition

def _position_ideals(M: PresentedModule):
    """Monomial ideal of lead terms at each generator position."""
    S = M.ring.ambient
    rank = M.generators.rank
    vecs = M.full_relations()
    mono_lists = lead_module_position_ideals(vecs, rank, S)
    return [Ideal([S.monomial(m) for m in monos], S) for monos in mono_lists]


def module_is_zero(M: PresentedModule) -> bool:
    if M.generators.rank == 0:
        return True
    return all(L.is_unit() for L in _position_ideals(M))


def module_dim(M: PresentedModule) -> int:
    """Krull dimension of the support; -1 for the zero module."""
    if M.generators.rank == 0:
        return -1
    dims = []
    for L in _position_ideals(M):
        if not L.is_unit():
            dims.append(krull_dim(L))
    return max(dims) if dims else -1


def module_length(M: PresentedModule) -> LengthValue:
    """k-dimension of M when finite, else infinite."""
    if M.generators.rank == 0:
        return LengthValue.finite(0)
    total = 0
    for L in _position_ideals(M):
        if L.is_unit():
            continue
        piece = vector_space_length(L)
        if not piece.is_finite:
            return LengthValue.infinite()
        total += piece.value
    return LengthValue.finite(total)


# ---------------------------------------------------------------------------
# Fitting ideal and support

@dataclass
class FittingData:
    ideal: Ideal
    zero_module: bool


def _determinant(rows) -> Polynomial:
    n = len(rows)
    ring = rows[0][0].ring
    if n == 1:
        return rows[0][0]
    # cofactor expansion along the first column
    det = ring.zero()
    sign = 1
    for i in range(n):
        entry = rows[i][0]
        if not entry.is_zero():
            minor = [r[1:] for k, r in enumerate(rows) if k != i]
            term = entry * _determinant(minor)
            det = det + (term if sign > 0 else -term)
        sign = -sign
    return det


def fitting_ideal_0(M: PresentedModule) -> FittingData:
    """Pullback to S of Fitt_0(M): maximal minors of the presentation plus I.

    Mixed minors involving the defining-ideal relation columns land in I, so
    the presentation columns alone suffice.
    """
    ring = M.ring
    S = ring.ambient
    g = M.generators.rank
    if g == 0:
        return FittingData(Ideal([S.one()], S), zero_module=True)
    cols = M.presentation.columns
    s = len(cols)
    gens = list(ring.defining_ideal.generators)
    if s >= g:
        if comb(s, g) > MAX_MINORS:
            raise RuntimeError(
                f"too many maximal minors ({comb(s, g)}); "
                "use the monomial support path for large presentations")
        for chosen in combinations(range(s), g):
            rows = [[cols[j][i] for j in chosen] for i in range(g)]
            d = _determinant(rows)
            if not d.is_zero():
                gens.append(d)
    fitt = Ideal(gens, S)
    return FittingData(fitt, zero_module=fitt.is_unit())


def _kill_variables(f: Polynomial, dead) -> Polynomial:
    kept = {m: c for m, c in f.terms.items()
            if all(m[i] == 0 for i in dead)}
    return Polynomial(f.ring, kept)


def _poly_matrix_rank(rows) -> int:
    """Rank over the fraction field of the (domain) coefficient ring,
    by fraction-free (Bareiss) elimination."""
    if not rows or not rows[0]:
        return 0
    ring = None
    for r in rows:
        for p in r:
            ring = p.ring
            break
        break
    m, n = len(rows), len(rows[0])
    A = [list(r) for r in rows]
    prev = ring.one()
    rank = 0
    for c in range(n):
        piv = None
        for i in range(rank, m):
            if not A[i][c].is_zero():
                piv = i
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(rank + 1, m):
            for j in range(c + 1, n):
                num = A[rank][c] * A[i][j] - A[i][c] * A[rank][j]
                A[i][j] = exact_div(num, prev) if num.terms else num
            A[i][c] = ring.zero()
        prev = A[rank][c]
        rank += 1
        if rank == m:
            break
    return rank


def support_is_full(M: PresentedModule) -> bool:
    """True iff Supp(M) is all of Spec R, i.e. V(Fitt_0 M) covers V(I)."""
    ring = M.ring
    if module_is_zero(M):
        raise ValueError("support of the zero module is empty")
    I = ring.defining_ideal
    if I.is_monomial():
        # M_p != 0 at every minimal prime p of R: the presentation drops
        # rank modulo each p
        g = M.generators.rank
        full = M.full_relations()
        rows = [[c[i] for c in full] for i in range(g)]
        for prime in minimal_primes_monomial(I):
            dead = set(prime)
            reduced = [[_kill_variables(p, dead) for p in row] for row in rows]
            if _poly_matrix_rank(reduced) >= g:
                return False
        return True
    fitt = fitting_ideal_0(M)
    return all(radical_membership(f, I) for f in fitt.ideal.generators)


# ---------------------------------------------------------------------------
# zeroth local cohomology and depth

@dataclass
class H0Data:
    module: PresentedModule
    generators: list            # lifted generators in S
    is_zero: bool
    killed_by_m: bool
    length: LengthValue


def h0_local_cohomology(R: QuotientRing) -> H0Data:
    """H0 of R at the graded maximal ideal, as (I : m^infinity)/I."""
    S = R.ambient
    I = R.defining_ideal
    m = Ideal(S.maximal_ideal_gens(), S)
    J = saturate(I, m)
    candidates = [(u,) for u in J.groebner_basis()
                  if not R.reduce(u).is_zero()]
    target1 = FreeModule(1, (0,))
    gens = minimalize_generators(candidates, target1, R)
    if not gens:
        module = PresentedModule.zero(R)
        return H0Data(module, [], True, True, LengthValue.finite(0))
    lifted = [c[0] for c in gens]
    shifts = tuple(vec_degree(c, (0,)) for c in gens)
    target = FreeModule(len(gens), shifts)
    rel = syzygy_kernel_columns(R, target1, gens)
    module = PresentedModule(R, ModuleMap(R, target, rel))
    killed = all(ideal_zero_in_R(R, v * u) for u in lifted
                 for v in S.maximal_ideal_gens())
    return H0Data(module, lifted, False, killed, module_length(module))


def ideal_zero_in_R(R: QuotientRing, f: Polynomial) -> bool:
    return R.reduce(f).is_zero()


def quotient_by_h0(R: QuotientRing, h0: H0Data) -> PresentedModule:
    """R / H0 as a cyclic presented module."""
    return PresentedModule.cyclic(R, h0.generators)


def depth_is_positive(R: QuotientRing) -> bool:
    """Positive depth is equivalent to vanishing H0 in the graded model."""
    return h0_local_cohomology(R).is_zero


def is_regular_model(R: QuotientRing) -> bool:
    return R.is_regular_model()


def alternating_betti_sum(betti, r: int) -> int:
    """sum_(i=0..r) (-1)^(r-i) beta_i; the rank of the (r+1)-st syzygy off
    the closed point, hence non-negative for finite-length modules."""
    total = list(betti.total) if hasattr(betti, "total") else list(betti)
    if r < 0 or r >= len(total):
        raise IndexError(f"index {r} outside the Betti table")
    return sum(((-1) ** (r - i)) * total[i] for i in range(r + 1))


# ---------------------------------------------------------------------------
# report records

@dataclass
class SyzygyRecord:
    i: int
    betti: int
    dim: int
    length: LengthValue
    support_full: bool
    is_zero: bool


@dataclass
class InvariantReport:
    ring_dim: int
    betti: list
    terminated: bool
    per_index: list            # list[SyzygyRecord]
    h0_is_zero: bool
    h0_killed_by_m: bool
    h0_length: LengthValue
    depth_positive: bool
