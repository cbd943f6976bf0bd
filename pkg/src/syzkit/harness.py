"""Problem-file ingestion, invariant reports, property checks and the fuzzer."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .fields import DEFAULT_PRIME, FieldSpec
from .groebner import Ideal, LengthValue
from .invariants import (InvariantReport, SyzygyRecord, alternating_betti_sum,
                         h0_local_cohomology, module_dim, module_is_zero,
                         module_length, quotient_by_h0, support_is_full)
from .resolution import (FreeModule, ModuleMap, PresentedModule, QuotientRing,
                         betti_table, resolve, syzygy_module, tor)
from .ring import PolyRing


class ProblemError(ValueError):
    """Problem-file parse or validation error, with a line position."""

    def __init__(self, message, line=None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


@dataclass
class ProblemSpec:
    ring: QuotientRing
    module: PresentedModule
    steps: int
    label: str = ""

    def to_text(self) -> str:
        """Serialize back to the problem-file grammar (for reproducers)."""
        S = self.ring.ambient
        lines = []
        if S.field.p is None:
            lines.append("field rational")
        else:
            lines.append(f"field prime {S.field.p}")
        lines.append("ring " + " ".join(S.names))
        gens = self.ring.defining_ideal.generators
        lines.append("ideal " + ("; ".join(str(g) for g in gens) if gens else "0"))
        pres = self.module.presentation
        lines.append(f"module rows {pres.target.rank}")
        for row in pres.rows:
            lines.append("[ " + ", ".join(str(p) for p in row) + " ]")
        lines.append(f"steps {self.steps}")
        return "\n".join(lines) + "\n"


def _infer_row_shifts(entries, nrows, ncols):
    """Degree shifts making every column homogeneous; entries are reduced
    polynomials.  Rows in each connected component are anchored at shift 0
    for the first row encountered."""
    shifts = [None] * nrows
    col_deg = [None] * ncols
    for start in range(nrows):
        if shifts[start] is not None:
            continue
        shifts[start] = 0
        queue = [("row", start)]
        while queue:
            kind, idx = queue.pop()
            if kind == "row":
                for j in range(ncols):
                    e = entries[idx][j]
                    if e.is_zero():
                        continue
                    d = e.degree() + shifts[idx]
                    if col_deg[j] is None:
                        col_deg[j] = d
                        queue.append(("col", j))
                    elif col_deg[j] != d:
                        raise ProblemError(
                            f"matrix entry at row {idx + 1}, column {j + 1} "
                            "breaks column homogeneity")
            else:
                for i in range(nrows):
                    e = entries[i][idx]
                    if e.is_zero():
                        continue
                    d = col_deg[idx] - e.degree()
                    if shifts[i] is None:
                        shifts[i] = d
                        queue.append(("row", i))
                    elif shifts[i] != d:
                        raise ProblemError(
                            f"matrix entry at row {i + 1}, column {idx + 1} "
                            "breaks column homogeneity")
    return [s if s is not None else 0 for s in shifts]


def parse_problem(text: str, label: str = "") -> ProblemSpec:
    field_spec = FieldSpec(DEFAULT_PRIME)
    ring: PolyRing | None = None
    ideal_gens = None
    matrix_rows = None
    rows_expected = None
    steps = None
    lines = text.splitlines()
    lineno = 0
    for raw in lines:
        lineno += 1
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if matrix_rows is not None and len(matrix_rows) < rows_expected:
            if not (line.startswith("[") and line.endswith("]")):
                raise ProblemError("expected a matrix row '[ ... ]'", lineno)
            body = line[1:-1].strip()
            if not body:
                matrix_rows.append([])
                continue
            try:
                matrix_rows.append([ring.parse(p) for p in body.split(",")])
            except ValueError as e:
                raise ProblemError(str(e), lineno)
            continue
        parts = line.split()
        key = parts[0]
        if key == "field":
            if parts[1:2] == ["rational"]:
                field_spec = FieldSpec(None)
            elif parts[1:2] == ["prime"] and len(parts) == 3:
                try:
                    field_spec = FieldSpec(int(parts[2]))
                except ValueError as e:
                    raise ProblemError(str(e), lineno)
            else:
                raise ProblemError("field must be 'rational' or 'prime p'", lineno)
        elif key == "ring":
            if len(parts) < 2:
                raise ProblemError("ring needs at least one variable", lineno)
            try:
                ring = PolyRing(parts[1:], field_spec)
            except ValueError as e:
                raise ProblemError(str(e), lineno)
        elif key == "ideal":
            if ring is None:
                raise ProblemError("ideal before ring", lineno)
            body = line[len("ideal"):].strip()
            if body == "0":
                ideal_gens = []
            else:
                try:
                    ideal_gens = [ring.parse(p) for p in body.split(";")]
                except ValueError as e:
                    raise ProblemError(str(e), lineno)
                for g in ideal_gens:
                    if not g.is_homogeneous():
                        raise ProblemError(
                            f"inhomogeneous ideal generator: {g}", lineno)
        elif key == "module":
            if len(parts) != 3 or parts[1] != "rows":
                raise ProblemError("expected 'module rows N'", lineno)
            if ring is None:
                raise ProblemError("module before ring", lineno)
            rows_expected = int(parts[2])
            matrix_rows = []
        elif key == "steps":
            if len(parts) != 2 or not parts[1].isdigit():
                raise ProblemError("expected 'steps N'", lineno)
            steps = int(parts[1])
            if steps < 1:
                raise ProblemError("steps must be >= 1", lineno)
        else:
            raise ProblemError(f"unknown directive {key!r}", lineno)
    if ring is None:
        raise ProblemError("missing ring declaration")
    if ideal_gens is None:
        raise ProblemError("missing ideal declaration")
    if matrix_rows is None:
        raise ProblemError("missing module declaration")
    if len(matrix_rows) != rows_expected:
        raise ProblemError(
            f"expected {rows_expected} matrix rows, got {len(matrix_rows)}")
    try:
        R = QuotientRing(ring, Ideal(ideal_gens, ring))
    except ValueError as e:
        raise ProblemError(str(e))
    nrows = rows_expected
    ncols = max((len(r) for r in matrix_rows), default=0)
    zero = ring.zero()
    entries = [[R.reduce(r[j]) if j < len(r) else zero for j in range(ncols)]
               for r in matrix_rows]
    for r in matrix_rows:
        if len(r) not in (0, ncols):
            raise ProblemError("ragged matrix rows")
    for i in range(nrows):
        for j in range(ncols):
            if not entries[i][j].is_homogeneous():
                raise ProblemError(
                    f"inhomogeneous matrix entry at row {i + 1}, column {j + 1}")
    shifts = _infer_row_shifts(entries, nrows, ncols)
    target = FreeModule(nrows, tuple(shifts))
    cols = [tuple(entries[i][j] for i in range(nrows)) for j in range(ncols)]
    cols = [c for c in cols if any(not p.is_zero() for p in c)]
    module = PresentedModule(R, ModuleMap(R, target, cols))
    if steps is None:
        steps = R.dim + 3
    return ProblemSpec(R, module, steps, label)


def load_problem(path) -> ProblemSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_problem(fh.read(), label=str(path))


# ---------------------------------------------------------------------------
# reports

def invariant_report(spec: ProblemSpec) -> InvariantReport:
    R = spec.ring
    res = resolve(spec.module, spec.steps)
    records = []
    for i in range(1, spec.steps + 1):
        Z = syzygy_module(res, i)
        b = res.betti[i] if i < len(res.betti) else 0
        if module_is_zero(Z):
            records.append(SyzygyRecord(i, b, -1, LengthValue.finite(0),
                                        False, True))
        else:
            records.append(SyzygyRecord(i, b, module_dim(Z), module_length(Z),
                                        support_is_full(Z), False))
    h0 = h0_local_cohomology(R)
    return InvariantReport(
        ring_dim=R.dim,
        betti=list(res.betti),
        terminated=res.terminated,
        per_index=records,
        h0_is_zero=h0.is_zero,
        h0_killed_by_m=h0.killed_by_m,
        h0_length=h0.length,
        depth_positive=h0.is_zero,
    )


def report_to_dict(report: InvariantReport) -> dict:
    return {
        "ring_dim": report.ring_dim,
        "betti": list(report.betti),
        "terminated": report.terminated,
        "syzygies": [
            {"i": r.i, "dim": r.dim, "length": r.length.to_json(),
             "support_full": r.support_full}
            for r in report.per_index
        ],
        "h0": {"is_zero": report.h0_is_zero,
               "killed_by_m": report.h0_killed_by_m,
               "length": report.h0_length.to_json()},
        "depth_positive": report.depth_positive,
    }


def _format_length(l: LengthValue) -> str:
    return "inf" if not l.is_finite else str(l.value)


def report_to_text(report: InvariantReport) -> str:
    lines = []
    lines.append(f"ring dim : {report.ring_dim}")
    lines.append("β: " + " ".join(str(b) for b in report.betti))
    lines.append(f"terminated: {'yes' if report.terminated else 'no'}")
    lines.append(f"{'i':>3} {'dim':>4} {'length':>7} {'support':>8}")
    for r in report.per_index:
        supp = "full" if r.support_full else ("zero" if r.is_zero else "proper")
        lines.append(f"{r.i:>3} {r.dim:>4} {_format_length(r.length):>7} {supp:>8}")
    lines.append(
        "H0: " + ("0" if report.h0_is_zero else
                  f"length {_format_length(report.h0_length)}, "
                  f"killed by m: {'yes' if report.h0_killed_by_m else 'no'}"))
    lines.append(f"depth positive: {'yes' if report.depth_positive else 'no'}")
    return "\n".join(lines) + "\n"


def emit_report(report, fmt: str = "text") -> str:
    from .fuzz import FuzzReport  # local import to avoid a cycle
    if fmt not in ("text", "structured"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(report, InvariantReport):
        if fmt == "structured":
            return json.dumps(report_to_dict(report), indent=2) + "\n"
        return report_to_text(report)
    if isinstance(report, FuzzReport):
        if fmt == "structured":
            return json.dumps(report.to_dict(), indent=2) + "\n"
        return report.to_text()
    raise TypeError(f"cannot emit {type(report).__name__}")


# ---------------------------------------------------------------------------
# property checks

@dataclass
class CheckOutcome:
    check_id: str
    status: str                 # pass | fail | skipped
    details: str = ""
    reproducer: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        d = {"check_id": self.check_id, "status": self.status,
             "details": self.details}
        if self.reproducer:
            d["reproducer"] = self.reproducer
        return d


class CaseData:
    """Resolution plus per-index invariants for one problem, computed once."""

    def __init__(self, spec: ProblemSpec):
        self.spec = spec
        self.ring = spec.ring
        self.res = resolve(spec.module, spec.steps)
        self.betti = list(self.res.betti)
        self.steps = spec.steps
        self.syz = {}
        self.dims = {}
        self.lengths = {}
        self.support = {}
        self.zero = {}
        for i in range(1, spec.steps + 1):
            Z = syzygy_module(self.res, i)
            self.syz[i] = Z
            z = module_is_zero(Z)
            self.zero[i] = z
            if z:
                self.dims[i] = -1
                self.lengths[i] = LengthValue.finite(0)
                self.support[i] = False
            else:
                self.dims[i] = module_dim(Z)
                self.lengths[i] = module_length(Z)
                self.support[i] = support_is_full(Z)
        self.module_finite_length = module_length(spec.module).is_finite
        self.h0 = h0_local_cohomology(self.ring)

    def beta(self, i: int) -> int:
        return self.betti[i] if 0 <= i < len(self.betti) else 0


def check_equivalence(spec: ProblemSpec, data: CaseData | None = None) -> CheckOutcome:
    """Finite-length modules: infinite length, full support, full dimension
    and positive alternating Betti sum agree at every syzygy index."""
    data = data or CaseData(spec)
    if not data.module_finite_length:
        return CheckOutcome("length_support_dim_equivalence", "skipped",
                            "module not of finite length")
    if data.ring.dim <= 0:
        return CheckOutcome("length_support_dim_equivalence", "skipped",
                            "ring dimension is zero")
    for r in range(0, data.steps):
        i = r + 1
        if data.zero.get(i, True):
            continue
        if r >= len(data.betti):
            continue
        conds = {
            "alternating_sum_positive": alternating_betti_sum(data.betti, r) > 0,
            "length_infinite": not data.lengths[i].is_finite,
            "support_full": data.support[i],
            "dim_equals_ring_dim": data.dims[i] == data.ring.dim,
        }
        if len(set(conds.values())) != 1:
            return CheckOutcome(
                "length_support_dim_equivalence", "fail",
                f"disagreement at index {i}: {conds}",
                reproducer=spec.to_text())
    return CheckOutcome("length_support_dim_equivalence", "pass")


def check_vanishing(spec: ProblemSpec, data: CaseData | None = None) -> CheckOutcome:
    """Finite second page of the torsion test: whenever Syz_(i+1) has finite
    length (i >= 1), Tor_i(M, R/H0) must vanish."""
    data = data or CaseData(spec)
    if not data.module_finite_length:
        return CheckOutcome("tor_vanishing_h0", "skipped",
                            "module not of finite length")
    r_mod_h0 = quotient_by_h0(data.ring, data.h0)
    for i in range(1, data.steps):
        if data.zero.get(i + 1, True):
            continue
        if data.lengths[i + 1].is_finite:
            T = tor(spec.module, r_mod_h0, i)
            if not module_is_zero(T):
                return CheckOutcome(
                    "tor_vanishing_h0", "fail",
                    f"Tor_{i}(M, R/H0) nonzero although Syz_{i + 1} has "
                    "finite length",
                    reproducer=spec.to_text())
    return CheckOutcome("tor_vanishing_h0", "pass")


def check_new_intersection(spec: ProblemSpec, data: CaseData | None = None) -> CheckOutcome:
    """No finite-length module has a finite-length syzygy at index <= dim R."""
    data = data or CaseData(spec)
    if not data.module_finite_length:
        return CheckOutcome("new_intersection_bound", "skipped",
                            "module not of finite length")
    for i in range(1, min(data.ring.dim, data.steps) + 1):
        if data.zero.get(i, True):
            continue
        if data.lengths[i].is_finite:
            return CheckOutcome(
                "new_intersection_bound", "fail",
                f"Syz_{i} has finite length with i <= dim R = {data.ring.dim}",
                reproducer=spec.to_text())
    return CheckOutcome("new_intersection_bound", "pass")


def check_betti_descent(spec: ProblemSpec, data: CaseData | None = None) -> CheckOutcome:
    """Finite length of Syz_(i+1) with beta_i >= beta_(i-1) forces finite
    length of Syz_(i-1)."""
    data = data or CaseData(spec)
    if not data.module_finite_length:
        return CheckOutcome("betti_descent", "skipped",
                            "module not of finite length")
    for i in range(2, data.steps):
        if data.zero.get(i + 1, True):
            continue
        if (data.lengths[i + 1].is_finite
                and data.beta(i) >= data.beta(i - 1)
                and not data.zero.get(i - 1, True)
                and not data.lengths[i - 1].is_finite):
            return CheckOutcome(
                "betti_descent", "fail",
                f"Syz_{i + 1} finite, beta_{i} >= beta_{i - 1}, but "
                f"Syz_{i - 1} infinite",
                reproducer=spec.to_text())
    return CheckOutcome("betti_descent", "pass")


def check_betti_jump_support(spec: ProblemSpec, data: CaseData | None = None) -> CheckOutcome:
    """A strict Betti jump forces full support one step later (and a strict
    drop one step earlier)."""
    data = data or CaseData(spec)
    for i in range(1, data.steps):
        if i >= len(data.betti):
            break
        if data.beta(i) > data.beta(i - 1):
            j = i + 1
            if j <= data.steps and not data.zero.get(j, True) \
                    and not data.support[j]:
                return CheckOutcome(
                    "betti_jump_support", "fail",
                    f"beta_{i} > beta_{i - 1} but Syz_{j} lacks full support",
                    reproducer=spec.to_text())
        if data.beta(i) < data.beta(i - 1):
            j = i - 1
            if j >= 1 and not data.zero.get(j, True) and not data.support[j]:
                return CheckOutcome(
                    "betti_jump_support", "fail",
                    f"beta_{i} < beta_{i - 1} but Syz_{j} lacks full support",
                    reproducer=spec.to_text())
    return CheckOutcome("betti_jump_support", "pass")


def check_depth_positive_support(spec: ProblemSpec, data: CaseData | None = None) -> CheckOutcome:
    """Over a ring of positive depth, every nonzero syzygy of a finite-length
    module has infinite length and full support."""
    data = data or CaseData(spec)
    if not data.module_finite_length:
        return CheckOutcome("depth_positive_support", "skipped",
                            "module not of finite length")
    if not data.h0.is_zero:
        return CheckOutcome("depth_positive_support", "skipped",
                            "ring has depth zero")
    if data.ring.dim <= 0:
        return CheckOutcome("depth_positive_support", "skipped",
                            "ring dimension is zero")
    for i in range(1, data.steps + 1):
        if data.zero.get(i, True):
            continue
        if data.lengths[i].is_finite or not data.support[i]:
            return CheckOutcome(
                "depth_positive_support", "fail",
                f"positive depth but Syz_{i} has finite length or "
                "proper support",
                reproducer=spec.to_text())
    return CheckOutcome("depth_positive_support", "pass")


def check_odd_syzygy_support(spec: ProblemSpec, data: CaseData | None = None) -> CheckOutcome:
    """Non-decreasing Betti numbers (from beta_1 on) force full support at
    every odd syzygy index, window-limited."""
    data = data or CaseData(spec)
    if not data.module_finite_length:
        return CheckOutcome("odd_syzygy_support", "skipped",
                            "module not of finite length")
    if data.ring.dim <= 0:
        return CheckOutcome("odd_syzygy_support", "skipped",
                            "ring dimension is zero")
    for r in range(1, data.steps + 1, 2):
        if r >= len(data.betti):
            break
        if any(data.beta(j) > data.beta(j + 1) for j in range(1, r)):
            continue
        if not data.zero.get(r, True) and not data.support[r]:
            return CheckOutcome(
                "odd_syzygy_support", "fail",
                f"Betti numbers non-decreasing below {r} but Syz_{r} "
                "lacks full support",
                reproducer=spec.to_text())
    return CheckOutcome("odd_syzygy_support", "pass")


def check_buchsbaum_type_support(spec: ProblemSpec, data: CaseData | None = None) -> CheckOutcome:
    """m * H0 = 0 and dim R > 1 force full support at every syzygy index."""
    data = data or CaseData(spec)
    if not data.module_finite_length:
        return CheckOutcome("socle_h0_support", "skipped",
                            "module not of finite length")
    if data.ring.dim <= 1 or not data.h0.killed_by_m:
        return CheckOutcome("socle_h0_support", "skipped",
                            "hypotheses (dim > 1, m*H0 = 0) not met")
    if data.res.terminated:
        return CheckOutcome("socle_h0_support", "skipped",
                            "finite projective dimension")
    for i in range(1, data.steps + 1):
        if data.zero.get(i, True):
            continue
        if not data.support[i]:
            return CheckOutcome(
                "socle_h0_support", "fail",
                f"m*H0 = 0 and dim R > 1 but Syz_{i} lacks full support",
                reproducer=spec.to_text())
    return CheckOutcome("socle_h0_support", "pass")


def check_finite_second_syzygy_flag(spec: ProblemSpec, data: CaseData | None = None) -> CheckOutcome:
    """A finite-length second syzygy only happens over a 1-dimensional ring
    with a nonzero nilpotent."""
    data = data or CaseData(spec)
    if not data.module_finite_length:
        return CheckOutcome("finite_second_syzygy", "skipped",
                            "module not of finite length")
    if data.ring.dim == 0:
        return CheckOutcome("finite_second_syzygy", "skipped",
                            "zero-dimensional ring: every module has "
                            "finite length")
    if data.res.terminated:
        return CheckOutcome("finite_second_syzygy", "skipped",
                            "finite projective dimension")
    if data.zero.get(2, True) or not data.lengths[2].is_finite:
        return CheckOutcome("finite_second_syzygy", "pass",
                            "no finite-length second syzygy")
    problems = []
    if data.ring.dim != 1:
        problems.append(f"ring dimension is {data.ring.dim}, not 1")
    I = data.ring.defining_ideal
    if I.is_monomial():
        squarefree = all(all(e <= 1 for e in g.lead_monomial())
                         for g in I.groebner_basis())
        if squarefree:
            problems.append("defining ideal is radical (no nilpotents)")
    if problems:
        return CheckOutcome("finite_second_syzygy", "fail",
                            "; ".join(problems), reproducer=spec.to_text())
    return CheckOutcome(
        "finite_second_syzygy", "pass",
        "finite-length second syzygy found (1-dimensional, non-reduced ring)")


ALL_PROPERTY_CHECKS = [
    check_equivalence,
    check_new_intersection,
    check_betti_descent,
    check_vanishing,
    check_betti_jump_support,
    check_depth_positive_support,
    check_odd_syzygy_support,
    check_buchsbaum_type_support,
    check_finite_second_syzygy_flag,
]


def run_property_checks(spec: ProblemSpec, data: CaseData | None = None):
    data = data or CaseData(spec)
    return [chk(spec, data) for chk in ALL_PROPERTY_CHECKS]
