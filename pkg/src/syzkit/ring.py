"""Sparse exact multivariate polynomials with graded monomial orders.

Monomials are exponent tuples, one slot per ambient variable.  Polynomials
are immutable-by-convention term maps (monomial -> coefficient) tied to a
`PolyRing`.  The public order is graded reverse lexicographic; an internal
single-variable elimination order exists for the colon/saturation machinery
in `groebner`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .fields import FieldSpec, QQ

Monomial = tuple  # exponent vector, one non-negative int per variable


# ---------------------------------------------------------------------------
# monomial helpers

def mono_deg(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """Total multiplicative order on monomials.

    kind 'grevlex' is the only public order.  kind 'elim1' (first variable
    counted before the grevlex tail) is internal, used to eliminate an
    auxiliary variable.
    """

    kind: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ("grevlex", "elim1"):
            raise ValueError(f"unsupported monomial order {self.kind!r}")

    def key(self, m: Monomial):
        """Sort key: ascending key order == ascending monomial order."""
        if self.kind == "grevlex":
            return (sum(m), tuple(-e for e in reversed(m)))
        # elim1: exponent of the first variable dominates, grevlex on the rest
        rest = m[1:]
        return (m[0], sum(rest), tuple(-e for e in reversed(rest)))

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise ValueError("monomial length mismatch")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


GREVLEX = MonomialOrder("grevlex")


def monomial_compare(a: Monomial, b: Monomial, order: MonomialOrder = GREVLEX) -> int:
    """-1, 0 or 1 according to the order; raises on length mismatch."""
    return order.compare(a, b)


# ---------------------------------------------------------------------------
# rings

class PolyRing:
    """Ambient polynomial ring: named variables over a field, with an order."""

    def __init__(self, names, field: FieldSpec = QQ, order: MonomialOrder = GREVLEX):
        names = list(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if not names:
            raise ValueError("need at least one variable")
        self.names = names
        self.nvars = len(names)
        self.field = field
        self.order = order
        self._index = {n: i for i, n in enumerate(names)}

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and self.names == other.names
                and self.field == other.field
                and self.order.kind == other.order.kind)

    def __hash__(self):
        return hash((tuple(self.names), self.field, self.order.kind))

    def __repr__(self):
        return f"{self.field}[{','.join(self.names)}]"

    # -- constructors -------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        v = self.field.of_int(c) if isinstance(c, int) else c
        if v == self.field.zero:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: v})

    def var(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, m: Monomial) -> "Polynomial":
        return Polynomial(self, {tuple(m): self.field.one})

    def from_terms(self, terms: dict) -> "Polynomial":
        zero = self.field.zero
        return Polynomial(self, {m: c for m, c in terms.items() if c != zero})

    def maximal_ideal_gens(self):
        """Generators of the graded maximal ideal: all the variables."""
        return self.gens()

    # -- parsing ------------------------------------------------------------

    _TOKEN = re.compile(r"\s*([+-]|\d+/\d+|\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*)")

    def parse(self, text: str) -> "Polynomial":
        """Parse '3*x^2*y - x + 5' style input; see the grammar in the README."""
        if not text or not text.strip():
            raise ValueError("empty polynomial")
        tokens = []
        pos = 0
        while pos < len(text):
            m = self._TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise ValueError(f"bad character at position {pos}: {text[pos:].strip()[0]!r}")
                break
            tokens.append(m.group(1))
            pos = m.end()
        result = self.zero()
        i = 0
        sign = 1
        expecting_term = True
        while i < len(tokens):
            tok = tokens[i]
            if tok in "+-":
                if expecting_term and tok == "-":
                    sign = -sign
                elif expecting_term:
                    pass
                else:
                    sign = 1 if tok == "+" else -1
                expecting_term = True
                i += 1
                continue
            # one term: coefficient and/or variable powers joined by '*'
            coeff = self.field.of_int(sign)
            exps = [0] * self.nvars
            saw_factor = False
            while i < len(tokens):
                tok = tokens[i]
                if tok.isdigit():
                    coeff = self.field.mul(coeff, self.field.of_int(int(tok)))
                    i += 1
                elif "/" in tok and tok.replace("/", "").isdigit():
                    num, den = tok.split("/")
                    if self.field.p is None:
                        coeff = self.field.mul(coeff, Fraction(int(num),
                                                               int(den)))
                    else:
                        coeff = self.field.mul(
                            coeff, self.field.div(self.field.of_int(int(num)),
                                                  self.field.of_int(int(den))))
                    i += 1
                elif tok == "*":
                    i += 1
                    continue
                elif re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", tok):
                    if tok not in self._index:
                        raise ValueError(f"unknown variable {tok!r}")
                    e = 1
                    i += 1
                    if i < len(tokens) and tokens[i] == "^":
                        i += 1
                        if i >= len(tokens) or not tokens[i].isdigit():
                            raise ValueError("malformed exponent")
                        e = int(tokens[i])
                        i += 1
                    exps[self._index[tok]] += e
                else:
                    break
                saw_factor = True
            if not saw_factor:
                raise ValueError(f"expected a term near token {tok!r}")
            result = result + self.from_terms({tuple(exps): coeff})
            sign = 1
            expecting_term = False
        if expecting_term:
            raise ValueError("dangling sign")
        return result


class Polynomial:
    """Sparse polynomial: dict of monomial -> nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.ring == other.ring and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_deg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {mono_deg(m) for m in self.terms}
        return len(degs) == 1

    def lead_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no lead monomial")
        return max(self.terms, key=self.ring.order.key)

    def lead_coeff(self):
        return self.terms[self.lead_monomial()]

    def constant_coeff(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def sorted_terms(self):
        """Terms in descending order."""
        return sorted(self.terms.items(), key=lambda t: self.ring.order.key(t[0]),
                      reverse=True)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("polynomials over different rings")

    def __add__(self, other):
        self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, F.zero), c)
            if s == F.zero:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out)

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        F = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = F.add(out.get(m, F.zero), F.mul(c1, c2))
                if s == F.zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    def scale(self, c):
        F = self.ring.field
        if c == F.zero:
            return self.ring.zero()
        return Polynomial(self.ring, {m: F.mul(cc, c) for m, cc in self.terms.items()})

    def term_mul(self, c, m: Monomial):
        """Multiply by the single term c*m."""
        F = self.ring.field
        if c == F.zero:
            return self.ring.zero()
        return Polynomial(self.ring, {mono_mul(mm, m): F.mul(cc, c)
                                      for mm, cc in self.terms.items()})

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff()))

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        F = self.ring.field
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(self.ring.names[i])
                elif e > 1:
                    factors.append(f"{self.ring.names[i]}^{e}")
            neg = (F.p is None and c < 0)
            mag = F.neg(c) if neg else c
            coeff_txt = F.format(mag)
            if factors and coeff_txt == "1":
                body = "*".join(factors)
            elif factors:
                body = coeff_txt + "*" + "*".join(factors)
            else:
                body = coeff_txt
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"<{self} over {self.ring!r}>"


# ---------------------------------------------------------------------------
# free functions mirroring the operation surface

def poly_op(f: Polynomial, g: Polynomial, kind: str) -> Polynomial:
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    raise ValueError(f"unknown operation {kind!r}")


def is_homogeneous(f: Polynomial) -> bool:
    return f.is_homogeneous()


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    return ring.parse(text)


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g when g divides f exactly; raises otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    ring = f.ring
    F = ring.field
    q = {}
    rem = f
    lg, cg = None, None
    if g.terms:
        lg = g.lead_monomial()
        cg = g.terms[lg]
    while rem.terms:
        lm = rem.lead_monomial()
        if not mono_divides(lg, lm):
            raise ArithmeticError("not exactly divisible")
        m = mono_div(lm, lg)
        c = F.div(rem.terms[lm], cg)
        q[m] = c
        rem = rem - g.term_mul(c, m)
    return Polynomial(ring, q)
