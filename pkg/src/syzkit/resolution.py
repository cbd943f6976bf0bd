"""Modules over graded quotient rings and their minimal free resolutions.

A quotient ring R = S/I is handled by lifting everything to S and appending
one relation column g*e_i per Groebner element g of I and basis vector e_i.
Kernels over R are then read off from syzygies over S, which keeps a single
Groebner engine for both levels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import GroebnerBasis, Ideal, krull_dim, normal_form
from .modules import (module_buchberger, module_member, module_normal_form,
                      module_syzygies, vec_degree, vec_is_zero, zero_vector)
from .ring import PolyRing, Polynomial


class QuotientRing:
    """R = S/I with I homogeneous and proper; the graded model of a local ring."""

    def __init__(self, ambient: PolyRing, defining_ideal: Ideal):
        if defining_ideal.ring != ambient:
            raise ValueError("defining ideal over the wrong ring")
        for g in defining_ideal.generators:
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous defining generator: {g}")
        if defining_ideal.is_unit():
            raise ValueError("defining ideal is the unit ideal")
        self.ambient = ambient
        self.defining_ideal = defining_ideal
        self.gb = defining_ideal.groebner_basis()
        self.dim = krull_dim(defining_ideal)

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.gb)

    def reduce_vector(self, v):
        return tuple(self.reduce(p) for p in v)

    def is_regular_model(self) -> bool:
        return not self.gb.elements

    def relation_columns(self, rank: int):
        """Columns g*e_i spanning I*S^rank, for lifting R-module questions to S."""
        cols = []
        for i in range(rank):
            for g in self.gb:
                col = [self.ambient.zero()] * rank
                col[i] = g
                cols.append(tuple(col))
        return cols

    def __eq__(self, other):
        return (isinstance(other, QuotientRing) and self.ambient == other.ambient
                and self.gb.elements == other.gb.elements)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.defining_ideal.generators) or "0"
        return f"{self.ambient!r}/({gens})"


@dataclass(frozen=True)
class FreeModule:
    rank: int
    shifts: tuple = ()

    def __post_init__(self):
        if len(self.shifts) != self.rank:
            raise ValueError("one degree shift per basis element required")


class ModuleMap:
    """Map of free R-modules, stored column-wise; columns must be homogeneous."""

    def __init__(self, ring: QuotientRing, target: FreeModule, columns,
                 source_shifts=None):
        self.ring = ring
        self.target = target
        self.columns = [ring.reduce_vector(c) for c in columns]
        for c in self.columns:
            if len(c) != target.rank:
                raise ValueError("column length does not match target rank")
        degs = []
        for j, c in enumerate(self.columns):
            d = vec_degree(c, target.shifts)
            if d is None:
                d = source_shifts[j] if source_shifts is not None else 0
            degs.append(d)
        if source_shifts is not None:
            degs = list(source_shifts)
            for j, c in enumerate(self.columns):
                d = vec_degree(c, target.shifts)
                if d is not None and d != degs[j]:
                    raise ValueError("column degree disagrees with given shift")
        self.source = FreeModule(len(self.columns), tuple(degs))

    @property
    def rows(self):
        """Entries as a rows x columns matrix."""
        return [[c[i] for c in self.columns] for i in range(self.target.rank)]

    def is_minimal(self) -> bool:
        F = self.ring.ambient.field
        return all(p.constant_coeff() == F.zero
                   for c in self.columns for p in c)

    def is_zero(self) -> bool:
        return all(vec_is_zero(c) for c in self.columns)

    def apply(self, coeffs):
        """Image of the source vector `coeffs` (length = source rank)."""
        out = list(zero_vector(self.ring.ambient, self.target.rank))
        for u, col in zip(coeffs, self.columns):
            for i in range(self.target.rank):
                out[i] = out[i] + u * col[i]
        return self.ring.reduce_vector(tuple(out))

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self o other; columns are images of other's columns."""
        if other.target.rank != self.source.rank:
            raise ValueError("shapes do not compose")
        return ModuleMap(self.ring, self.target,
                         [self.apply(c) for c in other.columns],
                         source_shifts=other.source.shifts)


class PresentedModule:
    """Finitely presented module over R: cokernel of `presentation`."""

    def __init__(self, ring: QuotientRing, presentation: ModuleMap):
        if presentation.ring != ring:
            raise ValueError("presentation over the wrong ring")
        self.ring = ring
        self.presentation = presentation

    @classmethod
    def cyclic(cls, ring: QuotientRing, relations) -> "PresentedModule":
        """R/J for the ideal J generated by `relations`."""
        target = FreeModule(1, (0,))
        cols = [(ring.reduce(r),) for r in relations if not ring.reduce(r).is_zero()]
        return cls(ring, ModuleMap(ring, target, cols))

    @classmethod
    def free(cls, ring: QuotientRing, rank: int, shifts=None) -> "PresentedModule":
        shifts = tuple(shifts) if shifts is not None else (0,) * rank
        return cls(ring, ModuleMap(ring, FreeModule(rank, shifts), []))

    @classmethod
    def zero(cls, ring: QuotientRing) -> "PresentedModule":
        return cls(ring, ModuleMap(ring, FreeModule(0, ()), []))

    @property
    def generators(self) -> FreeModule:
        return self.presentation.target

    def full_relations(self):
        """Presentation columns together with the defining-ideal columns, in S."""
        rank = self.generators.rank
        return list(self.presentation.columns) + self.ring.relation_columns(rank)


@dataclass
class BettiTable:
    total: list

    def __getitem__(self, i):
        return self.total[i]

    def __len__(self):
        return len(self.total)

    def __eq__(self, other):
        if isinstance(other, BettiTable):
            return self.total == other.total
        return self.total == list(other)


class FreeResolution:
    """Minimal free resolution data: maps[i] sends F_{i+1} to F_i."""

    def __init__(self, ring: QuotientRing, modules, maps, terminated: bool):
        self.ring = ring
        self.modules = modules            # [F_0, F_1, ...]
        self.maps = maps                  # [f_1, f_2, ...]
        self.terminated = terminated

    @property
    def betti(self):
        return [F.rank for F in self.modules]

    def free_module(self, i: int) -> FreeModule:
        if i < len(self.modules):
            return self.modules[i]
        return FreeModule(0, ())


# ---------------------------------------------------------------------------
# kernels over R

def syzygy_kernel_columns(ring: QuotientRing, target: FreeModule, columns,
                          keep: int | None = None):
    """Columns generating the kernel over R of the map given by `columns`.

    Lifts to S, appends the defining relation columns, computes syzygies
    there and projects onto the original column block.  `keep` restricts the
    projection to the first `keep` columns (the rest being auxiliary).
    """
    S = ring.ambient
    rank = target.rank
    if keep is None:
        keep = len(columns)
    if not columns:
        return []
    aug = list(columns) + ring.relation_columns(rank)
    syz = module_syzygies(aug, rank, S)
    out = []
    for s in syz:
        head = ring.reduce_vector(s[:keep])
        if not vec_is_zero(head):
            out.append(head)
    return out


def syzygy_generators(A: ModuleMap) -> ModuleMap:
    """A map whose columns generate ker(A) over R.

    Kernel vectors live in A's source; the result's target is A.source.
    Columns are not yet minimal: see `minimalize_generators`.
    """
    ring = A.ring
    if A.source.rank == 0:
        return ModuleMap(ring, A.source, [])
    if A.target.rank == 0:
        cols = [tuple(ring.ambient.one() if i == j else ring.ambient.zero()
                      for i in range(A.source.rank))
                for j in range(A.source.rank)]
        return ModuleMap(ring, A.source, cols)
    # syzygies of the columns of A (in S^target) project onto kernel vectors
    S = ring.ambient
    aug = list(A.columns) + ring.relation_columns(A.target.rank)
    syz = module_syzygies(aug, A.target.rank, S)
    cols = []
    for s in syz:
        head = ring.reduce_vector(s[:A.source.rank])
        if not vec_is_zero(head):
            cols.append(head)
    return ModuleMap(ring, A.source, cols)


def minimalize_generators(cols, target: FreeModule, ring: QuotientRing):
    """Graded-minimal subset of homogeneous columns spanning the same module.

    Columns are processed in increasing degree; one is dropped iff it lies in
    the R-span of those already retained.
    """
    S = ring.ambient
    degs = []
    for c in cols:
        d = vec_degree(c, target.shifts)
        if d is None:
            continue
        degs.append((d, c))
    order = sorted(range(len(degs)), key=lambda i: (degs[i][0], i))
    retained = []
    rel = ring.relation_columns(target.rank)
    basis = module_buchberger(rel, S, full_reduce=False) if rel else []
    for i in order:
        _, c = degs[i]
        if basis and module_member(c, basis, S):
            continue
        if not basis and vec_is_zero(c):
            continue
        retained.append(c)
        basis = module_buchberger([c], S, assume_groebner=basis,
                                  full_reduce=False)
    return retained


def _prune_presentation(M: PresentedModule) -> PresentedModule:
    """Remove redundant generators (relation entries that are nonzero scalars)."""
    ring = M.ring
    F = ring.ambient.field
    shifts = list(M.generators.shifts)
    cols = [list(c) for c in M.presentation.columns]
    changed = True
    while changed:
        changed = False
        for j, col in enumerate(cols):
            for i, entry in enumerate(col):
                c0 = entry.constant_coeff()
                if c0 == F.zero:
                    continue
                # generator i is a combination of the others; substitute it out
                inv = F.inv(c0)
                pivot = [p.scale(inv) for p in col]
                new_cols = []
                for jj, other in enumerate(cols):
                    if jj == j:
                        continue
                    coeff = other[i]
                    nc = [other[k] - coeff * pivot[k] for k in range(len(other))]
                    del nc[i]
                    new_cols.append([ring.reduce(p) for p in nc])
                del shifts[i]
                cols = new_cols
                changed = True
                break
            if changed:
                break
    target = FreeModule(len(shifts), tuple(shifts))
    kept = [tuple(c) for c in cols if not vec_is_zero(tuple(c))]
    return PresentedModule(ring, ModuleMap(ring, target, kept))


def resolve(M: PresentedModule, max_steps: int) -> FreeResolution:
    """Minimal free resolution of M out to homological degree max_steps.

    Computes maps f_1 .. f_(max_steps+1) (one past the last reported Betti
    number) so that Syz_max_steps still has a presentation available.
    """
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    ring = M.ring
    M = _prune_presentation(M)
    F0 = M.generators
    modules = [F0]
    maps = []
    terminated = False
    if F0.rank == 0:
        return FreeResolution(ring, modules, maps, True)
    # f_1: minimalized presentation
    cols = minimalize_generators(M.presentation.columns, F0, ring)
    current = ModuleMap(ring, F0, cols)
    for step in range(1, max_steps + 2):
        maps.append(current)
        modules.append(current.source)
        if current.source.rank == 0:
            terminated = True
            break
        if step == max_steps + 1:
            break
        ker = syzygy_generators(current)
        cols = minimalize_generators(ker.columns, current.source, ring)
        current = ModuleMap(ring, current.source, cols)
    betti_len = min(max_steps, len(modules) - 1)
    # drop the extra free module from the reported range but keep the maps
    res = FreeResolution(ring, modules[:max(betti_len + 1, 1)], maps, terminated)
    if terminated:
        # strip trailing zero ranks from the reported Betti numbers
        while res.modules and res.modules[-1].rank == 0:
            res.modules.pop()
    return res


def syzygy_module(res: FreeResolution, i: int) -> PresentedModule:
    """Syz_i(M): cokernel of f_(i+1); the zero module past termination."""
    if i < 1:
        raise ValueError("syzygy index must be >= 1")
    # f_(i+1) is maps[i]; its target F_i carries the generators of Syz_i
    if i < len(res.maps):
        return PresentedModule(res.ring, res.maps[i])
    if res.terminated:
        if i < len(res.modules):
            F = res.modules[i]
            return PresentedModule(res.ring, ModuleMap(res.ring, F, []))
        return PresentedModule.zero(res.ring)
    raise IndexError(f"syzygy index {i} beyond the computed range")


def betti_table(res: FreeResolution) -> BettiTable:
    return BettiTable(res.betti)


# ---------------------------------------------------------------------------
# homology and Tor

def _subquotient_presentation(ring: QuotientRing, ambient: FreeModule,
                              generator_cols, relation_image_cols):
    """Present (span of generator_cols)/(span of relation_image_cols).

    Both live in R^ambient; relation_image_cols must lie in the span of the
    generators.  The presentation is the projection, onto the generator
    block, of the syzygies of [generators | relation images].
    """
    gens = minimalize_generators(generator_cols, ambient, ring)
    if not gens:
        return PresentedModule.zero(ring)
    shifts = tuple(vec_degree(c, ambient.shifts) for c in gens)
    target = FreeModule(len(gens), shifts)
    combined = gens + [c for c in relation_image_cols
                       if not vec_is_zero(ring.reduce_vector(c))]
    syz = syzygy_kernel_columns(ring, ambient, combined, keep=len(gens))
    pres_cols = [s for s in syz if not vec_is_zero(s)]
    return PresentedModule(ring, ModuleMap(ring, target, pres_cols))


def homology(A: ModuleMap, B: ModuleMap) -> PresentedModule:
    """ker(B)/im(A) for free-module maps with B o A = 0 over R."""
    if A.target.rank != B.source.rank:
        raise ValueError("maps do not compose")
    if not B.compose(A).is_zero():
        raise ValueError("composition B o A is nonzero")
    ring = A.ring
    mid = B.source
    if B.target.rank == 0:
        kernel_cols = [tuple(ring.ambient.one() if i == j else ring.ambient.zero()
                             for i in range(mid.rank)) for j in range(mid.rank)]
    else:
        kernel_cols = syzygy_kernel_columns(ring, B.target, list(B.columns))
    return _subquotient_presentation(ring, mid, kernel_cols, list(A.columns))


def _tensor_map_columns(ring: QuotientRing, T: ModuleMap, N: PresentedModule):
    """Columns of T tensor identity on N's generators."""
    p = N.generators.rank
    b_t, b_s = T.target.rank, T.source.rank
    cols = []
    for c in range(b_s):
        for beta in range(p):
            col = [ring.ambient.zero()] * (b_t * p)
            for r in range(b_t):
                col[r * p + beta] = T.columns[c][r]
            cols.append(tuple(col))
    return cols


def _tensor_free(F: FreeModule, N: PresentedModule) -> FreeModule:
    shifts = []
    for s in F.shifts:
        for t in N.generators.shifts:
            shifts.append(s + t)
    return FreeModule(F.rank * N.generators.rank, tuple(shifts))


def _block_relations(ring: QuotientRing, F: FreeModule, N: PresentedModule):
    """Relations of N^rank(F): one copy of N's presentation per block."""
    p = N.generators.rank
    cols = []
    for r in range(F.rank):
        for q in N.presentation.columns:
            col = [ring.ambient.zero()] * (F.rank * p)
            for beta in range(p):
                col[r * p + beta] = q[beta]
            cols.append(tuple(col))
    return cols


def tor(M: PresentedModule, N: PresentedModule, i: int) -> PresentedModule:
    """Tor_i(M, N): resolve M, tensor with N, take homology at position i."""
    if i < 0:
        raise ValueError("negative Tor index")
    if M.ring != N.ring:
        raise ValueError("modules over different rings")
    ring = M.ring
    if N.generators.rank == 0 or M.generators.rank == 0:
        return PresentedModule.zero(ring)
    res = resolve(M, max(i, 0))
    F_i = res.free_module(i)
    if F_i.rank == 0:
        return PresentedModule.zero(ring)
    C = _tensor_free(F_i, N)
    rel_C = _block_relations(ring, F_i, N)
    # outgoing map (to F_(i-1) tensor N) and incoming map (from F_(i+1) tensor N)
    if i == 0:
        kernel_cols = [tuple(ring.ambient.one() if a == b else ring.ambient.zero()
                             for a in range(C.rank)) for b in range(C.rank)]
    else:
        t_map = res.maps[i - 1]          # f_i : F_i -> F_(i-1)
        F_prev = res.free_module(i - 1)
        t_cols = _tensor_map_columns(ring, t_map, N)
        D = _tensor_free(F_prev, N)
        rel_D = _block_relations(ring, F_prev, N)
        combined = t_cols + rel_D
        syz = syzygy_kernel_columns(ring, D, combined, keep=len(t_cols))
        kernel_cols = syz
        if not kernel_cols:
            return PresentedModule.zero(ring)
    if i < len(res.maps):
        s_map = res.maps[i]              # f_(i+1) : F_(i+1) -> F_i
        s_cols = _tensor_map_columns(ring, s_map, N)
    else:
        s_cols = []
    return _subquotient_presentation(ring, C, kernel_cols, s_cols + rel_C)
