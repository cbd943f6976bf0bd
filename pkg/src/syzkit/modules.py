"""Groebner machinery for submodules of free modules over the ambient ring.

Vectors are tuples of polynomials.  The module order is position-over-term:
lower basis index beats higher, ties broken by the ring's monomial order.
Because position dominates, a basis computed here doubles as an elimination
order on components: basis elements supported purely in a trailing block
generate the intersection with that block, which is how `module_syzygies`
reads off syzygies from an augmented module.
"""

from __future__ import annotations

from .ring import PolyRing, Polynomial, mono_deg, mono_div, mono_divides, mono_lcm

Vector = tuple  # tuple[Polynomial, ...]


def zero_vector(ring: PolyRing, rank: int) -> Vector:
    z = ring.zero()
    return tuple(z for _ in range(rank))


def unit_vector(ring: PolyRing, rank: int, pos: int) -> Vector:
    return tuple(ring.one() if i == pos else ring.zero() for i in range(rank))


def vec_is_zero(v: Vector) -> bool:
    return all(p.is_zero() for p in v)


def vec_add(v: Vector, w: Vector) -> Vector:
    return tuple(a + b for a, b in zip(v, w))


def vec_sub(v: Vector, w: Vector) -> Vector:
    return tuple(a - b for a, b in zip(v, w))


def vec_neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def vec_scale(v: Vector, c) -> Vector:
    return tuple(a.scale(c) for a in v)


def vec_term_mul(v: Vector, c, mono) -> Vector:
    return tuple(a.term_mul(c, mono) for a in v)


def vec_poly_mul(v: Vector, f: Polynomial) -> Vector:
    return tuple(a * f for a in v)


def vec_lead(v: Vector, ring: PolyRing):
    """(position, monomial, coeff) of the leading module term, POT order."""
    for i, p in enumerate(v):
        if not p.is_zero():
            m = p.lead_monomial()
            return i, m, p.terms[m]
    raise ValueError("zero vector has no lead term")


def vec_monic(v: Vector, ring: PolyRing) -> Vector:
    _, _, c = vec_lead(v, ring)
    return vec_scale(v, ring.field.inv(c))


def vec_degree(v: Vector, shifts) -> int | None:
    """Degree of a homogeneous vector under target shifts; None when zero."""
    degs = set()
    for p, s in zip(v, shifts):
        if not p.is_zero():
            if not p.is_homogeneous():
                raise ValueError(f"inhomogeneous entry {p}")
            degs.add(p.degree() + s)
    if not degs:
        return None
    if len(degs) > 1:
        raise ValueError(f"inhomogeneous column (degrees {sorted(degs)})")
    return degs.pop()


def module_normal_form(v: Vector, G, ring: PolyRing) -> Vector:
    """Full division remainder of v modulo the vectors in G."""
    gs = list(G)
    if not gs:
        return v
    rank = len(v)
    F = ring.field
    leads = [(vec_lead(g, ring), g) for g in gs]
    rem = [ring.zero()] * rank
    work = list(v)
    while not all(p.is_zero() for p in work):
        wi, wm, wc = vec_lead(tuple(work), ring)
        for (gi, gm, gc), g in leads:
            if gi == wi and mono_divides(gm, wm):
                c = F.div(wc, gc)
                m = mono_div(wm, gm)
                for k in range(rank):
                    if not g[k].is_zero():
                        work[k] = work[k] - g[k].term_mul(c, m)
                break
        else:
            t = Polynomial(ring, {wm: wc})
            rem[wi] = rem[wi] + t
            work[wi] = work[wi] - t
    return tuple(rem)


def _module_s_vector(f: Vector, g: Vector, ring: PolyRing) -> Vector:
    F = ring.field
    fi, fm, fc = vec_lead(f, ring)
    gi, gm, gc = vec_lead(g, ring)
    l = mono_lcm(fm, gm)
    a = vec_term_mul(f, F.inv(fc), mono_div(l, fm))
    b = vec_term_mul(g, F.inv(gc), mono_div(l, gm))
    return vec_sub(a, b)


def module_buchberger(vectors, ring: PolyRing, assume_groebner=None,
                      full_reduce: bool = True):
    """Groebner basis of the submodule generated by `vectors` (reduced when
    `full_reduce`, else only lead-minimal).

    Deterministic: pairs picked by (lcm degree, index pair); only the chain
    criterion is used (the coprime criterion is not valid for modules).
    `assume_groebner` seeds the basis with vectors already known to form a
    Groebner basis, whose internal S-vectors are skipped.
    """
    base = [vec_monic(v, ring) for v in (assume_groebner or [])
            if not vec_is_zero(v)]
    G = base + [vec_monic(v, ring) for v in vectors if not vec_is_zero(v)]
    if not G:
        return []
    nbase = len(base)
    leads = [vec_lead(g, ring) for g in G]
    pairs = set()
    for i in range(len(G)):
        for j in range(max(i + 1, nbase), len(G)):
            if leads[i][0] == leads[j][0]:
                pairs.add((i, j))
    done = set()

    def settled(p):
        return p in done or (p[0] < nbase and p[1] < nbase)

    while pairs:
        i, j = min(pairs, key=lambda p: (
            mono_deg(mono_lcm(leads[p[0]][1], leads[p[1]][1])), p))
        pairs.discard((i, j))
        done.add((i, j))
        pos = leads[i][0]
        lij = mono_lcm(leads[i][1], leads[j][1])
        chain = False
        for k in range(len(G)):
            if k in (i, j) or leads[k][0] != pos:
                continue
            if not mono_divides(leads[k][1], lij):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if settled(a) and settled(b):
                chain = True
                break
        if chain:
            continue
        r = module_normal_form(_module_s_vector(G[i], G[j], ring), G, ring)
        if vec_is_zero(r):
            continue
        r = vec_monic(r, ring)
        rl = vec_lead(r, ring)
        for k in range(len(G)):
            if leads[k][0] == rl[0]:
                pairs.add((k, len(G)))
        G.append(r)
        leads.append(rl)
    if full_reduce:
        return _module_interreduce(G, ring)
    return _module_lead_minimalize(G, ring)


def _module_lead_minimalize(G, ring: PolyRing):
    """Drop basis elements whose lead term is divisible by another's."""
    keyed = sorted(((vec_lead(g, ring), g) for g in G if not vec_is_zero(g)),
                   key=lambda t: (t[0][0], ring.order.key(t[0][1])))
    minimal = []
    for (gi, gm, _), g in keyed:
        if any(hi == gi and mono_divides(hm, gm)
               for (hi, hm, _), _ in minimal):
            continue
        minimal.append(((gi, gm, None), g))
    return [g for _, g in minimal]


def _module_interreduce(G, ring: PolyRing):
    def sort_key(g):
        i, m, _ = vec_lead(g, ring)
        return (i, tuple(x for x in ring.order.key(m)))

    G = sorted((g for g in G if not vec_is_zero(g)), key=sort_key)
    minimal = []
    for g in G:
        gi, gm, _ = vec_lead(g, ring)
        keep = True
        for h in minimal:
            hi, hm, _ = vec_lead(h, ring)
            if hi == gi and mono_divides(hm, gm):
                keep = False
                break
        if keep:
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = module_normal_form(g, others, ring)
        if not vec_is_zero(r):
            reduced.append(vec_monic(r, ring))
    reduced.sort(key=sort_key)
    return reduced


def module_member(v: Vector, basis, ring: PolyRing) -> bool:
    return vec_is_zero(module_normal_form(v, basis, ring))


def module_syzygies(vectors, rank: int, ring: PolyRing):
    """Generators of the syzygy module of `vectors` (each in S^rank).

    Augments each v_j to v_j + e_j in S^(rank+k) and reads syzygies off the
    basis elements whose first block vanishes.
    """
    k = len(vectors)
    if k == 0:
        return []
    z = ring.zero()
    augmented = []
    for j, v in enumerate(vectors):
        tag = [z] * k
        tag[j] = ring.one()
        augmented.append(tuple(v) + tuple(tag))
    basis = module_buchberger(augmented, ring)
    syz = []
    for b in basis:
        if all(p.is_zero() for p in b[:rank]):
            syz.append(b[rank:])
    return syz


def lead_module_position_ideals(vectors, rank: int, ring: PolyRing):
    """Per-position lead monomial ideals of the submodule span of `vectors`.

    Returns a list of `rank` lists of monomials: slot i holds the lead
    monomials (as exponent tuples) of basis elements leading at position i.
    The standard module terms outside these give a k-basis of the quotient,
    so dimensions and lengths of the cokernel decompose position by position.
    """
    out = [[] for _ in range(rank)]
    for b in module_buchberger(vectors, ring):
        i, m, _ = vec_lead(b, ring)
        out[i].append(m)
    return out
