"""Exact coefficient rings used by the operator engine.

Four rings, all with exact arithmetic and canonical forms:

* ``Fraction``  -- arbitrary-precision rationals (stdlib).
* ``PolyC``     -- polynomials in the deformation parameter ``c`` over Q.
* ``QSLaurent`` -- Laurent polynomials in ``q`` and ``s``, where ``s``
  stands for ``t^(1/2)`` (so ``t = s^2`` everywhere).
* ``HJet``      -- truncated power series in ``h`` with ``PolyC``
  coefficients, the target of the substitution ``q = e^h``,
  ``s = e^(c*h/2)``.

Elements are immutable after construction; every operation returns a new
canonical value (no stored zero coefficients).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping


class RingMismatchError(TypeError):
    """Elements of different coefficient rings were combined."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise RingMismatchError(f"expected an exact rational, got {type(x).__name__}")


def _join_signed(parts: list[tuple[bool, str]]) -> str:
    """Join (negative?, abs-rendering) pairs into 'a - b + c' form."""
    if not parts:
        return "0"
    neg, text = parts[0]
    out = ("-" if neg else "") + text
    for neg, text in parts[1:]:
        out += (" - " if neg else " + ") + text
    return out


class PolyC:
    """Polynomial in ``c`` with rational coefficients, sparse by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction] | None = None):
        clean: dict[int, Fraction] = {}
        if coeffs:
            for deg, val in coeffs.items():
                val = _as_fraction(val)
                if val:
                    clean[int(deg)] = val
        self.coeffs = clean

    @classmethod
    def const(cls, x) -> "PolyC":
        return cls({0: _as_fraction(x)})

    @classmethod
    def c(cls, exp: int = 1) -> "PolyC":
        return cls({exp: Fraction(1)})

    def _coerce(self, other) -> "PolyC":
        if isinstance(other, PolyC):
            return other
        return PolyC.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for deg, val in other.coeffs.items():
            out[deg] = out.get(deg, Fraction(0)) + val
        return PolyC(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyC({d: -v for d, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyC.const(other)
        elif not isinstance(other, PolyC):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for d1, v1 in self.coeffs.items():
            for d2, v2 in other.coeffs.items():
                d = d1 + d2
                out[d] = out.get(d, Fraction(0)) + v1 * v2
        return PolyC(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = PolyC.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyC.const(other)
        if not isinstance(other, PolyC):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self) -> int:
        """Degree in c; -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def constant_value(self) -> Fraction:
        """The value of a degree-<=0 polynomial; error otherwise."""
        if self.degree() > 0:
            raise ValueError(f"not a constant: {self}")
        return self.coeffs.get(0, Fraction(0))

    def eval(self, value) -> Fraction:
        """Exact substitution c = value."""
        value = _as_fraction(value)
        total = Fraction(0)
        for deg, coef in self.coeffs.items():
            total += coef * value**deg
        return total

    def __str__(self):
        parts = []
        for deg in sorted(self.coeffs):
            coef = self.coeffs[deg]
            neg = coef < 0
            a = abs(coef)
            if deg == 0:
                text = str(a)
            else:
                cpart = "c" if deg == 1 else f"c^{deg}"
                text = cpart if a == 1 else f"{a}*{cpart}"
            parts.append((neg, text))
        return _join_signed(parts)

    def __repr__(self):
        return f"PolyC({self})"


#: The generator c as a ready-made element.
C = PolyC.c()


def eval_c(p: PolyC, value) -> Fraction:
    """Exact evaluation of a polynomial in c at a rational value."""
    return p.eval(value)


class QSLaurent:
    """Laurent polynomial in q and s (s = t^(1/2)), sparse by exponent pair."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], Fraction] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for (qe, se), val in coeffs.items():
                val = _as_fraction(val)
                if val:
                    clean[(int(qe), int(se))] = val
        self.coeffs = clean

    @classmethod
    def const(cls, x) -> "QSLaurent":
        return cls({(0, 0): _as_fraction(x)})

    @classmethod
    def q(cls, exp: int = 1) -> "QSLaurent":
        return cls({(exp, 0): Fraction(1)})

    @classmethod
    def s(cls, exp: int = 1) -> "QSLaurent":
        return cls({(0, exp): Fraction(1)})

    def _coerce(self, other) -> "QSLaurent":
        if isinstance(other, QSLaurent):
            return other
        return QSLaurent.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for key, val in other.coeffs.items():
            out[key] = out.get(key, Fraction(0)) + val
        return QSLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return QSLaurent({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSLaurent.const(other)
        elif not isinstance(other, QSLaurent):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (q1, s1), v1 in self.coeffs.items():
            for (q2, s2), v2 in other.coeffs.items():
                key = (q1 + q2, s1 + s2)
                out[key] = out.get(key, Fraction(0)) + v1 * v2
        return QSLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power; build the inverse monomial directly")
        result = QSLaurent.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSLaurent.const(other)
        if not isinstance(other, QSLaurent):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        parts = []
        for qe, se in sorted(self.coeffs):
            coef = self.coeffs[(qe, se)]
            neg = coef < 0
            a = abs(coef)
            factors = []
            if qe:
                factors.append("q" if qe == 1 else f"q^{qe}")
            if se:
                factors.append("s" if se == 1 else f"s^{se}")
            if not factors:
                text = str(a)
            else:
                mon = "*".join(factors)
                text = mon if a == 1 else f"{a}*{mon}"
            parts.append((neg, text))
        return _join_signed(parts)

    def __repr__(self):
        return f"QSLaurent({self})"


class HJet:
    """Jet of order N in h: a truncated series a0 + a1*h + ... + aN*h^N.

    Coefficients are PolyC values.  Arithmetic truncates at h^N and both
    operands of a binary operation must share the same order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise ValueError("jet order must be >= 0")
        self.order = order
        padded = list(coeffs)[: order + 1]
        padded += [PolyC()] * (order + 1 - len(padded))
        self.coeffs = tuple(
            p if isinstance(p, PolyC) else PolyC.const(p) for p in padded
        )

    @classmethod
    def const(cls, x, order: int) -> "HJet":
        x = x if isinstance(x, PolyC) else PolyC.const(x)
        return cls(order, [x])

    def _coerce(self, other) -> "HJet":
        if isinstance(other, HJet):
            if other.order != self.order:
                raise RingMismatchError(
                    f"jet order mismatch: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction, PolyC)):
            return HJet.const(other, self.order)
        raise RingMismatchError(f"cannot mix HJet with {type(other).__name__}")

    def part(self, k: int) -> PolyC:
        """The coefficient of h^k."""
        if not 0 <= k <= self.order:
            raise ValueError(f"no h^{k} part in an order-{self.order} jet")
        return self.coeffs[k]

    def __add__(self, other):
        other = self._coerce(other)
        return HJet(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return HJet(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except RingMismatchError:
            if isinstance(other, (int, Fraction, PolyC)):
                raise
            return NotImplemented
        out = [PolyC() for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return HJet(self.order, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a jet; use inverse()")
        result = HJet.const(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, PolyC)):
            other = HJet.const(other, self.order)
        if not isinstance(other, HJet):
            return NotImplemented
        if other.order != self.order:
            raise RingMismatchError(
                f"jet order mismatch: {self.order} vs {other.order}"
            )
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_invertible(self) -> bool:
        """Invertible iff the h^0 part is a nonzero rational constant."""
        head = self.coeffs[0]
        return bool(head) and head.degree() == 0

    def inverse(self) -> "HJet":
        if not self.is_invertible():
            raise ValueError(f"jet is not invertible: {self}")
        a0 = self.coeffs[0].constant_value()
        # self = a0*(1 + u) with u of valuation >= 1, so the Neumann series
        # for (1 + u)^(-1) terminates at the jet order.
        u = HJet(self.order, [PolyC()] + [p * (1 / a0) for p in self.coeffs[1:]])
        total = HJet.const(1, self.order)
        term = HJet.const(1, self.order)
        for _ in range(self.order):
            term = term * (-u)
            total = total + term
        return total * (Fraction(1) / a0)

    def __str__(self):
        parts = []
        for k, p in enumerate(self.coeffs):
            if not p and any(self.coeffs):
                continue
            hpart = "" if k == 0 else ("*h" if k == 1 else f"*h^{k}")
            parts.append((False, f"({p}){hpart}"))
        return _join_signed(parts)

    def __repr__(self):
        return f"HJet({self})"


def exp_jet(rate, order: int) -> HJet:
    """The jet of exp(rate*h): coefficient of h^k is rate^k / k!."""
    if order < 0:
        raise ValueError("jet order must be >= 0")
    rate = rate if isinstance(rate, PolyC) else PolyC.const(rate)
    coeffs = []
    power = PolyC.const(1)
    for k in range(order + 1):
        coeffs.append(power * Fraction(1, math.factorial(k)))
        power = power * rate
    return HJet(order, coeffs)


def embed_qs_jet(x: QSLaurent, order: int) -> HJet:
    """Substitute q = e^h and s = e^(c*h/2) into a Laurent polynomial.

    A term r*q^i*s^j maps to r*exp((i + j*c/2)*h), truncated at h^order;
    the map is a ring homomorphism on the Laurent subring.
    """
    total = HJet(order)
    for (qe, se), coef in x.coeffs.items():
        rate = PolyC({0: Fraction(qe), 1: Fraction(se, 2)})
        total = total + coef * exp_jet(rate, order)
    return total


# ---------------------------------------------------------------------------
# Ring descriptors: tags carried by operators and vectors so that scalar
# coercion, q-shifts, and t^(1/2) constants are available where they exist.
# ---------------------------------------------------------------------------


class RationalRing:
    name = "QQ"
    has_q = False

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise RingMismatchError(f"{self.name} cannot hold {type(x).__name__}")

    def render(self, x) -> str:
        return str(x)

    def q_power(self, exp: int):
        raise RingMismatchError("q-shift requested over a q-free ring (QQ)")

    def __repr__(self):
        return self.name


class PolyCRing:
    name = "QQ[c]"
    has_q = False

    def zero(self):
        return PolyC()

    def one(self):
        return PolyC.const(1)

    def coerce(self, x):
        if isinstance(x, PolyC):
            return x
        if isinstance(x, (int, Fraction)):
            return PolyC.const(x)
        raise RingMismatchError(f"{self.name} cannot hold {type(x).__name__}")

    def render(self, x) -> str:
        return str(x)

    def q_power(self, exp: int):
        raise RingMismatchError("q-shift requested over a q-free ring (QQ[c])")

    def __repr__(self):
        return self.name


class QSLaurentRing:
    name = "QQ[q^±1,s^±1]"
    has_q = True

    def zero(self):
        return QSLaurent()

    def one(self):
        return QSLaurent.const(1)

    def coerce(self, x):
        if isinstance(x, QSLaurent):
            return x
        if isinstance(x, (int, Fraction)):
            return QSLaurent.const(x)
        raise RingMismatchError(f"{self.name} cannot hold {type(x).__name__}")

    def render(self, x) -> str:
        return str(x)

    def q_power(self, exp: int):
        return QSLaurent.q(exp)

    def t_half(self, exp: int = 1):
        """s^exp, the formal t^(exp/2)."""
        return QSLaurent.s(exp)

    def __repr__(self):
        return self.name


class JetRing:
    """Truncated h-series with PolyC coefficients, at a fixed order."""

    has_q = True

    def __init__(self, order: int = 2):
        if order < 0:
            raise ValueError("jet order must be >= 0")
        self.order = order
        self.name = f"Jet(h^{order})"

    def zero(self):
        return HJet(self.order)

    def one(self):
        return HJet.const(1, self.order)

    def coerce(self, x):
        if isinstance(x, HJet):
            if x.order != self.order:
                raise RingMismatchError(
                    f"jet order mismatch: ring has {self.order}, value has {x.order}"
                )
            return x
        if isinstance(x, (int, Fraction, PolyC)):
            return HJet.const(x, self.order)
        raise RingMismatchError(f"{self.name} cannot hold {type(x).__name__}")

    def render(self, x) -> str:
        return str(x)

    def q_power(self, exp: int):
        return exp_jet(exp, self.order)

    def t_half(self, exp: int = 1):
        """The jet of t^(exp/2) = e^(exp*c*h/2)."""
        return exp_jet(PolyC({1: Fraction(exp, 2)}), self.order)

    def __eq__(self, other):
        return isinstance(other, JetRing) and other.order == self.order

    def __hash__(self):
        return hash(("JetRing", self.order))

    def __repr__(self):
        return self.name


QQ = RationalRing()
QC = PolyCRing()
QS = QSLaurentRing()


# ---------------------------------------------------------------------------
# Parsing of ring elements from CLI strings.
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[a-z]+)|(?P<op>[\^*+-]))")


def _tokenize(text: str):
    pos, tokens = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("var"):
            tokens.append(("var", m.group("var")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


def _parse_terms(text: str, variables: set[str]) -> list[tuple[Fraction, dict[str, int]]]:
    """Parse a sum of products of rationals and powers of the given variables."""
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty expression")
    terms = []
    i = 0

    def parse_exponent(i):
        sign = 1
        if i < len(tokens) and tokens[i] == ("op", "-"):
            sign, i = -1, i + 1
        if i >= len(tokens) or tokens[i][0] != "num" or "/" in tokens[i][1]:
            raise ValueError(f"expected an integer exponent in {text!r}")
        return sign * int(tokens[i][1]), i + 1

    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        coef = Fraction(sign)
        exps: dict[str, int] = {}
        expect_factor = True
        while expect_factor:
            if i >= len(tokens):
                raise ValueError(f"dangling operator in {text!r}")
            kind, val = tokens[i]
            if kind == "num":
                coef *= Fraction(val)
                i += 1
            elif kind == "var":
                if val not in variables:
                    raise ValueError(f"unknown symbol {val!r} in {text!r}")
                i += 1
                e = 1
                if i < len(tokens) and tokens[i] == ("op", "^"):
                    e, i = parse_exponent(i + 1)
                exps[val] = exps.get(val, 0) + e
            else:
                raise ValueError(f"unexpected {val!r} in {text!r}")
            expect_factor = i < len(tokens) and tokens[i] == ("op", "*")
            if expect_factor:
                i += 1
        terms.append((coef, exps))
    return terms


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational like '3', '-1/2'."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def parse_polyc(text: str) -> PolyC:
    """Parse a polynomial in c, e.g. 'c^2', '1 - 2*c', '3/2*c^2'."""
    total = PolyC()
    for coef, exps in _parse_terms(text, {"c"}):
        deg = exps.get("c", 0)
        if deg < 0:
            raise ValueError(f"negative power of c in {text!r}")
        total = total + PolyC({deg: coef})
    return total


def parse_qslaurent(text: str) -> QSLaurent:
    """Parse a Laurent polynomial in q and s; 't' is accepted for s^2."""
    total = QSLaurent()
    for coef, exps in _parse_terms(text, {"q", "s", "t"}):
        qe = exps.get("q", 0)
        se = exps.get("s", 0) + 2 * exps.get("t", 0)
        total = total + QSLaurent({(qe, se): coef})
    return total
