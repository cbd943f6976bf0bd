"""Independent brute-force oracles for the test suite.

Everything here avoids the Groebner machinery under test: monomial-ideal
membership is plain divisibility, quotient bases are enumerated directly,
and kernels are computed degree by degree with Gaussian elimination over
the coefficient field."""

from itertools import combinations_with_replacement

from syzkit.ring import mono_divides


def all_monomials(nvars, d):
    """All exponent tuples of total degree d, deterministic order."""
    if d == 0:
        return [tuple([0] * nvars)]
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(set(out))


def standard_monomials(gen_monos, nvars, d):
    """Monomials of degree d outside the monomial ideal (gen_monos)."""
    return [m for m in all_monomials(nvars, d)
            if not any(mono_divides(g, m) for g in gen_monos)]


def monomial_quotient_length(gen_monos, nvars, cap=60):
    """k-dimension of S/(gen_monos) by direct enumeration; None if the count
    has not stabilized by degree `cap` (i.e. the quotient is infinite)."""
    total = 0
    d = 0
    while d <= cap:
        std = standard_monomials(gen_monos, nvars, d)
        if not std:
            return total
        total += len(std)
        d += 1
    return None


def reduce_mod_monomials(p, gen_monos):
    """Normal form modulo a monomial ideal: drop divisible terms."""
    from syzkit.ring import Polynomial
    kept = {m: c for m, c in p.terms.items()
            if not any(mono_divides(g, m) for g in gen_monos)}
    return Polynomial(p.ring, kept)


def matrix_rank(rows, field):
    """Rank of a dense matrix of field elements, Gaussian elimination."""
    if not rows:
        return 0
    A = [list(r) for r in rows]
    m, n = len(A), len(A[0])
    rank = 0
    for c in range(n):
        piv = None
        for i in range(rank, m):
            if A[i][c] != field.zero:
                piv = i
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = field.inv(A[rank][c])
        A[rank] = [field.mul(inv, x) for x in A[rank]]
        for i in range(m):
            if i != rank and A[i][c] != field.zero:
                f = A[i][c]
                A[i] = [field.sub(x, field.mul(f, y))
                        for x, y in zip(A[i], A[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def nullspace_dim(rows, field, ncols):
    return ncols - matrix_rank(rows, field)


def _slice_basis(gen_monos, nvars, rank, shifts, d):
    """Basis of the degree-d slice of (S/monomial ideal)^rank with shifts."""
    basis = []
    for j in range(rank):
        e = d - shifts[j]
        if e < 0:
            continue
        for m in standard_monomials(gen_monos, nvars, e):
            basis.append((j, m))
    return basis


def _vector_coords(vec, gen_monos, basis_index, field):
    """Coordinates of a reduced vector of polynomials in a slice basis."""
    coords = [field.zero] * len(basis_index)
    for j, p in enumerate(vec):
        for m, c in p.terms.items():
            coords[basis_index[(j, m)]] = field.add(
                coords[basis_index[(j, m)]], c)
    return coords


def degreewise_kernel_dim(columns, gen_monos, nvars, target_shifts,
                          source_shifts, d, field):
    """Dimension of the degree-d kernel slice of the map given by `columns`
    from (S/I)^s to (S/I)^r, I the monomial ideal (gen_monos)."""
    s = len(columns)
    src = _slice_basis(gen_monos, nvars, s, source_shifts, d)
    tgt = _slice_basis(gen_monos, nvars, len(target_shifts), target_shifts, d)
    tgt_index = {bm: i for i, bm in enumerate(tgt)}
    # matrix columns: image of each source basis element
    cols = []
    for j, m in src:
        vec = tuple(reduce_mod_monomials(p.term_mul(p.ring.field.one, m),
                                         gen_monos)
                    for p in columns[j])
        cols.append(_vector_coords(vec, gen_monos, tgt_index, field))
    rows = [[cols[c][r] for c in range(len(cols))] for r in range(len(tgt))]
    return len(src) - matrix_rank(rows, field)


def degreewise_span_dim(vectors, degrees, gen_monos, nvars, shifts, d, field):
    """Dimension of the degree-d slice of the submodule of (S/I)^rank
    generated by `vectors` (vector l homogeneous of degree degrees[l])."""
    rank = len(shifts)
    slice_basis = _slice_basis(gen_monos, nvars, rank, shifts, d)
    index = {bm: i for i, bm in enumerate(slice_basis)}
    rows = []
    for vec, dl in zip(vectors, degrees):
        e = d - dl
        if e < 0:
            continue
        for m in all_monomials(nvars, e):
            shifted = tuple(reduce_mod_monomials(
                p.term_mul(p.ring.field.one, m), gen_monos) for p in vec)
            rows.append(_vector_coords(shifted, gen_monos, index, field))
    return matrix_rank(rows, field)
