"""Randomized search over small graded quotient rings and finite-length
modules, replaying every structural check and flagging candidate
counterexamples to the open questions the checks encode."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .fields import DEFAULT_PRIME, FieldSpec
from .groebner import Ideal
from .harness import CaseData, ProblemSpec, run_property_checks
from .resolution import FreeModule, ModuleMap, PresentedModule, QuotientRing
from .ring import PolyRing

VAR_NAMES = ("x", "y", "z", "w", "u", "v")


@dataclass
class FuzzConfig:
    seed: int = 0
    cases: int = 100
    min_vars: int = 2
    max_vars: int = 3
    max_degree: int = 3
    steps: int = 4
    field: FieldSpec = field(default_factory=lambda: FieldSpec(DEFAULT_PRIME))


@dataclass
class FuzzReport:
    config: FuzzConfig
    cases_run: int
    violations: list              # list[CheckOutcome]
    candidates: list              # list[dict], finite syzygy lengths past dim+1
    d_values: list                # window-truncated first-infinite index stats

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "seed": self.config.seed,
            "cases_run": self.cases_run,
            "violations": [v.to_dict() for v in self.violations],
            "counterexample_candidates": self.candidates,
            "d_values": self.d_values,
        }

    def to_text(self) -> str:
        lines = [f"fuzz: seed {self.config.seed}, {self.cases_run} cases"]
        if self.violations:
            lines.append(f"violations: {len(self.violations)}")
            for v in self.violations:
                lines.append(f"  [{v.check_id}] {v.details}")
                if v.reproducer:
                    lines.append("  reproducer:")
                    for ln in v.reproducer.rstrip().splitlines():
                        lines.append("    " + ln)
        else:
            lines.append("violations: none")
        lines.append(f"counterexample candidates: {len(self.candidates)}")
        for c in self.candidates:
            lines.append(f"  case {c['case']}: finite syzygy lengths at "
                         f"indices {c['indices']} past dim+1 = {c['bound']}")
        hist = {}
        for d in self.d_values:
            hist[d] = hist.get(d, 0) + 1
        parts = [f"{k}:{hist[k]}" for k in sorted(hist)]
        lines.append("d-value histogram (window-truncated): "
                     + (" ".join(parts) if parts else "empty"))
        return "\n".join(lines) + "\n"


def _random_monomial(rng: random.Random, ring: PolyRing, maxdeg: int):
    n = len(ring.names)
    d = rng.randint(1, maxdeg)
    exps = [0] * n
    for _ in range(d):
        exps[rng.randrange(n)] += 1
    return ring.monomial(tuple(exps))


def _random_ideal(rng: random.Random, ring: PolyRing, maxdeg: int) -> Ideal:
    """Proper nonzero monomial ideal with 1-4 generators."""
    while True:
        gens = [_random_monomial(rng, ring, maxdeg)
                for _ in range(rng.randint(1, 4))]
        I = Ideal(gens, ring)
        if not I.is_unit() and not I.is_zero():
            return I


def random_case(rng: random.Random, config: FuzzConfig, label: str) -> ProblemSpec:
    """Random quotient ring with a random finite-length cyclic module.

    The module ideal always contains a power of each variable, so the
    finite-length hypothesis of the equivalence checks holds by construction.
    """
    nvars = rng.randint(config.min_vars, config.max_vars)
    ring = PolyRing(VAR_NAMES[:nvars], config.field)
    I = _random_ideal(rng, ring, config.max_degree)
    R = QuotientRing(ring, I)
    gens = []
    for v in ring.gens():
        t = rng.randint(1, config.max_degree + 1)
        p = ring.one()
        for _ in range(t):
            p = p * v
        gens.append(p)
    for _ in range(rng.randint(0, 2)):
        gens.append(_random_monomial(rng, ring, config.max_degree))
    module = PresentedModule.cyclic(R, gens)
    if module.generators.rank == 1 and not module.presentation.columns:
        # J reduced to zero mod I; fall back to the residue field
        module = PresentedModule.cyclic(R, list(ring.gens()))
    return ProblemSpec(R, module, config.steps, label)


def fuzz(config: FuzzConfig) -> FuzzReport:
    rng = random.Random(config.seed)
    violations = []
    candidates = []
    d_values = []
    for case_idx in range(config.cases):
        spec = random_case(rng, config, f"case-{case_idx}")
        data = CaseData(spec)
        for outcome in run_property_checks(spec, data):
            if outcome.status == "fail":
                outcome.details = f"case {case_idx}: {outcome.details}"
                violations.append(outcome)
        bound = spec.ring.dim + 1
        # over a 0-dimensional ring every module has finite length, so
        # nothing there is a candidate
        finite_past = [] if spec.ring.dim == 0 else \
            [i for i in range(bound + 1, spec.steps + 1)
             if not data.zero.get(i, True)
             and data.lengths[i].is_finite]
        if finite_past:
            candidates.append({
                "case": case_idx,
                "indices": finite_past,
                "bound": bound,
                "problem": spec.to_text(),
            })
        d = spec.steps + 1  # truncation marker: no infinite length in window
        for i in range(1, spec.steps + 1):
            if not data.zero.get(i, True) and not data.lengths[i].is_finite:
                d = i
                break
        d_values.append(d)
    return FuzzReport(config, config.cases, violations, candidates, d_values)
