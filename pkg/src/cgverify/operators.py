"""Monomials, finite linear combinations, and linear operators.

Operators act on Laurent monomials in m variables (m = 2 or 3 here) and are
represented semantically: a ``LinOperator`` is its action on monomials,
extended linearly.  Equality of operators is always decided extensionally,
by comparing actions on every monomial of a finite window; a pass is an
exact proof of the identity restricted to that window's span.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .rings import RingMismatchError

Monomial = tuple[int, ...]


def _shell_key(mono: Monomial):
    return (max(abs(e) for e in mono), mono)


def render_monomial(mono: Monomial, prefix: str = "X") -> str:
    factors = []
    for pos, e in enumerate(mono, start=1):
        if e == 0:
            continue
        factors.append(f"{prefix}{pos}" if e == 1 else f"{prefix}{pos}^{e}")
    return "*".join(factors) if factors else "1"


class PolyVec:
    """Finite linear combination of monomials with coefficients in one ring."""

    __slots__ = ("arity", "ring", "terms")

    def __init__(self, arity: int, ring, terms=None):
        clean: dict[Monomial, object] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != arity:
                    raise ValueError(f"monomial {mono} has arity != {arity}")
                coeff = ring.coerce(coeff)
                if coeff:
                    clean[tuple(mono)] = coeff
        self.arity = arity
        self.ring = ring
        self.terms = clean

    @classmethod
    def monomial(cls, mono: Monomial, ring, coeff=1) -> "PolyVec":
        return cls(len(mono), ring, {tuple(mono): ring.coerce(coeff)})

    @classmethod
    def zero(cls, arity: int, ring) -> "PolyVec":
        return cls(arity, ring)

    def _check(self, other: "PolyVec"):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "PolyVec") -> "PolyVec":
        self._check(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            if mono in out:
                out[mono] = out[mono] + coeff
            else:
                out[mono] = coeff
        return PolyVec(self.arity, self.ring, out)

    def __neg__(self) -> "PolyVec":
        return PolyVec(self.arity, self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "PolyVec") -> "PolyVec":
        return self + (-other)

    def scaled(self, coeff) -> "PolyVec":
        coeff = self.ring.coerce(coeff)
        if not coeff:
            return PolyVec.zero(self.arity, self.ring)
        return PolyVec(
            self.arity, self.ring, {m: coeff * c for m, c in self.terms.items()}
        )

    def __mul__(self, other: "PolyVec") -> "PolyVec":
        """Polynomial product (monomial exponents add)."""
        self._check(other)
        out: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                coeff = c1 * c2
                if key in out:
                    out[key] = out[key] + coeff
                else:
                    out[key] = coeff
        return PolyVec(self.arity, self.ring, out)

    def coefficient(self, mono: Monomial):
        return self.terms.get(tuple(mono), self.ring.zero())

    def __eq__(self, other):
        if not isinstance(other, PolyVec):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return [(m, self.terms[m]) for m in sorted(self.terms, key=_shell_key)]

    def total_degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def render(self, prefix: str = "X") -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            mon = render_monomial(mono, prefix)
            parts.append(f"({self.ring.render(coeff)})*{mon}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PolyVec[{self.render()}]"


class LinOperator:
    """A linear operator given by its action on monomials.

    Closed under sum, scaling, composition (``A * B`` applies B first), and
    non-negative integer powers.  Per-monomial results are memoized, so
    shared subexpressions of large operator trees are evaluated once.
    """

    __slots__ = ("arity", "ring", "_fn", "_cache")

    def __init__(self, arity: int, ring, fn):
        self.arity = arity
        self.ring = ring
        self._fn = fn
        self._cache: dict[Monomial, PolyVec] = {}

    def on_monomial(self, mono: Monomial) -> PolyVec:
        mono = tuple(mono)
        hit = self._cache.get(mono)
        if hit is None:
            if len(mono) != self.arity:
                raise ValueError(f"monomial {mono} has arity != {self.arity}")
            hit = self._fn(mono)
            self._cache[mono] = hit
        return hit

    def __call__(self, v) -> PolyVec:
        """Apply to a PolyVec (or bare monomial tuple) by linear extension."""
        if isinstance(v, tuple):
            return self.on_monomial(v)
        if v.arity != self.arity:
            raise ValueError(f"arity mismatch: {v.arity} vs {self.arity}")
        if v.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {v.ring} vs {self.ring}")
        out = PolyVec.zero(self.arity, self.ring)
        for mono, coeff in v.terms.items():
            out = out + self.on_monomial(mono).scaled(coeff)
        return out

    def _check(self, other: "LinOperator"):
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "LinOperator") -> "LinOperator":
        self._check(other)
        return LinOperator(
            self.arity,
            self.ring,
            lambda m: self.on_monomial(m) + other.on_monomial(m),
        )

    def __sub__(self, other: "LinOperator") -> "LinOperator":
        self._check(other)
        return LinOperator(
            self.arity,
            self.ring,
            lambda m: self.on_monomial(m) - other.on_monomial(m),
        )

    def __neg__(self) -> "LinOperator":
        return LinOperator(self.arity, self.ring, lambda m: -self.on_monomial(m))

    def __mul__(self, other):
        if isinstance(other, LinOperator):
            self._check(other)
            return LinOperator(
                self.arity, self.ring, lambda m: self(other.on_monomial(m))
            )
        return self._scaled(other)

    def __rmul__(self, other):
        return self._scaled(other)

    def _scaled(self, scalar) -> "LinOperator":
        scalar = self.ring.coerce(scalar)
        return LinOperator(
            self.arity, self.ring, lambda m: self.on_monomial(m).scaled(scalar)
        )

    def __pow__(self, k: int) -> "LinOperator":
        if k < 0:
            raise ValueError("operator power must be >= 0")
        result = Ops(self.arity, self.ring).identity
        for _ in range(k):
            result = self * result
        return result

    def commutator(self, other: "LinOperator") -> "LinOperator":
        return self * other - other * self


class Ops:
    """Factory for the elementary operators over a fixed arity and ring.

    Variable indices are 1-based, matching the X1, X2, ... naming used in
    all formulas and reports.
    """

    def __init__(self, arity: int, ring):
        self.arity = arity
        self.ring = ring
        self.identity = LinOperator(
            arity, ring, lambda m: PolyVec.monomial(m, ring)
        )

    def _vec(self, mono, coeff=1) -> PolyVec:
        return PolyVec.monomial(mono, self.ring, coeff)

    def zero(self) -> LinOperator:
        return LinOperator(
            self.arity, self.ring, lambda m: PolyVec.zero(self.arity, self.ring)
        )

    def const(self, scalar) -> LinOperator:
        scalar = self.ring.coerce(scalar)
        return LinOperator(self.arity, self.ring, lambda m: self._vec(m, scalar))

    def _index(self, i: int) -> int:
        if not 1 <= i <= self.arity:
            raise ValueError(f"variable index {i} out of range 1..{self.arity}")
        return i - 1

    def mult(self, i: int, exp: int = 1) -> LinOperator:
        """Multiplication by X_i^exp (exp may be negative)."""
        pos = self._index(i)

        def act(mono):
            new = list(mono)
            new[pos] += exp
            return self._vec(tuple(new))

        return LinOperator(self.arity, self.ring, act)

    def swap(self, i: int, j: int) -> LinOperator:
        """The transposition (ij) of variables."""
        return self.perm((i, j))

    def perm(self, cycle: tuple[int, ...]) -> LinOperator:
        """Cyclic variable permutation X_{c1} -> X_{c2} -> ... -> X_{c1}.

        Substitution convention: the exponent of X_{c1} lands on X_{c2},
        so e.g. perm((1,2,3)) maps X1^a X2^b X3^c to X1^c X2^a X3^b.
        """
        positions = [self._index(i) for i in cycle]
        if len(set(positions)) != len(positions):
            raise ValueError(f"repeated index in cycle {cycle}")

        def act(mono):
            new = list(mono)
            for src, dst in zip(positions, positions[1:] + positions[:1]):
                new[dst] = mono[src]
            return self._vec(tuple(new))

        return LinOperator(self.arity, self.ring, act)

    def divided_difference(self, i: int, j: int) -> LinOperator:
        """S = (1 - (ij)) / (X_i - X_j), as a total function on monomials.

        On a monomial with exponents a at i and b at j this is the closed
        geometric sum: 0 if a = b; sum_{k=b}^{a-1} of the monomials with
        (a, b) replaced by (k, a+b-1-k) if a > b; and the negative of the
        mirrored sum if a < b.  Kills symmetric polynomials and lowers
        total degree by exactly 1 otherwise.
        """
        pi, pj = self._index(i), self._index(j)
        if pi == pj:
            raise ValueError("divided difference needs two distinct variables")

        def act(mono):
            a, b = mono[pi], mono[pj]
            if a == b:
                return PolyVec.zero(self.arity, self.ring)
            sign = 1 if a > b else -1
            lo, hi = (b, a) if a > b else (a, b)
            terms = {}
            for k in range(lo, hi):
                new = list(mono)
                new[pi] = k
                new[pj] = a + b - 1 - k
                terms[tuple(new)] = self.ring.coerce(sign)
            return PolyVec(self.arity, self.ring, terms)

        return LinOperator(self.arity, self.ring, act)

    # Short alias used throughout the representation formulas.
    S = divided_difference

    def shift(self, amounts: tuple[int, ...]) -> LinOperator:
        """The q-shift X_k -> q^{amounts[k]} X_k (rings containing q only)."""
        if len(amounts) != self.arity:
            raise ValueError(f"shift vector {amounts} has arity != {self.arity}")
        if not self.ring.has_q:
            raise RingMismatchError(
                f"q-shift requested over the q-free ring {self.ring}"
            )
        amounts = tuple(amounts)

        def act(mono):
            total = sum(a * e for a, e in zip(amounts, mono))
            return self._vec(mono, self.ring.q_power(total))

        return LinOperator(self.arity, self.ring, act)

    def deriv(self, i: int) -> LinOperator:
        """Partial derivative in X_i (Laurent power rule)."""
        pos = self._index(i)

        def act(mono):
            e = mono[pos]
            if e == 0:
                return PolyVec.zero(self.arity, self.ring)
            new = list(mono)
            new[pos] = e - 1
            return self._vec(tuple(new), e)

        return LinOperator(self.arity, self.ring, act)


# ---------------------------------------------------------------------------
# Windows and check reports.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Window:
    """A finite, deterministically enumerated set of monomials.

    ``laurent-box`` of size d: every exponent in [-d, d].
    ``box`` of size n: every exponent in [0, n-1].
    Enumeration order is by max-norm shell, then lexicographic; the first
    counterexample of a failing check is first in this order.
    """

    kind: str
    size: int
    arity: int = 2

    def monomials(self) -> list[Monomial]:
        if self.kind == "laurent-box":
            rng = range(-self.size, self.size + 1)
        elif self.kind == "box":
            rng = range(self.size)
        else:
            raise ValueError(f"unknown window kind {self.kind!r}")
        return sorted(itertools.product(rng, repeat=self.arity), key=_shell_key)

    def label(self) -> str:
        return f"{self.kind}({self.size})^{self.arity}"


def laurent_box(radius: int, arity: int = 2) -> Window:
    if radius < 0:
        raise ValueError("laurent-box radius must be >= 0")
    return Window("laurent-box", radius, arity)


def box_window(n: int, arity: int = 2) -> Window:
    if n < 1:
        raise ValueError("box size must be >= 1")
    return Window("box", n, arity)


@dataclass(frozen=True)
class Counterexample:
    monomial: Monomial
    residual: str


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one verified identity on one window."""

    identity: str
    window: str
    passed: bool
    counterexample: Counterexample | None = None

    def to_json(self) -> dict:
        ce = None
        if self.counterexample is not None:
            ce = {
                "monomial": list(self.counterexample.monomial),
                "residual": self.counterexample.residual,
            }
        return {
            "identity": self.identity,
            "window": self.window,
            "pass": self.passed,
            "counterexample": ce,
        }

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        msg = f"{status}  {self.identity}  on {self.window}"
        if self.counterexample is not None:
            msg += (
                f"  [counterexample {render_monomial(self.counterexample.monomial)}:"
                f" {self.counterexample.residual}]"
            )
        return msg


def equal_pairs_on_window(pairs, window: Window, identity: str) -> CheckReport:
    """Check A == B on the window for every (A, B) pair, reporting the first
    counterexample in (pair, monomial-enumeration) order."""
    for a, b in pairs:
        for mono in window.monomials():
            residual = a.on_monomial(mono) - b.on_monomial(mono)
            if residual:
                return CheckReport(
                    identity,
                    window.label(),
                    False,
                    Counterexample(mono, residual.render()),
                )
    return CheckReport(identity, window.label(), True)


def equal_on_window(a: LinOperator, b: LinOperator, window: Window, identity: str) -> CheckReport:
    return equal_pairs_on_window([(a, b)], window, identity)


def vanishes_on_window(op: LinOperator, window: Window, identity: str) -> CheckReport:
    """Check that an operator is identically zero on the window."""
    zero = Ops(op.arity, op.ring).zero()
    return equal_pairs_on_window([(op, zero)], window, identity)


def all_pass(reports) -> bool:
    return all(r.passed for r in reports)
