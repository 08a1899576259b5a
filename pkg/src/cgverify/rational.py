"""The rational level: Dunkl operators, the Jordanian family, nilpotency.

The Dunkl operators u1 = d/dx1 - c S and u2 = d/dx2 + c S act on the
polynomial (non-negative exponent) subspace.  The embedding into the
trigonometric level sends u1 to X1^(-1)(y1 + c/2 - c(12)) and u2 to
X2^(-1)(y2 + c/2), carrying the rational relations at parameter -c;
x1 u1 - x2 u2 maps to r.  The difference u1 - u2 = d1 - d2 - 2c S is a
triangular solution of the MCYBE; its box(n) restriction at c = n/2 is
nilpotent of index n for odd n and 2n - 1 for even n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .boxmatrix import MatrixOverC, nilpotency_of, restrict_to_box
from .operators import (
    CheckReport,
    Counterexample,
    LinOperator,
    Ops,
    PolyVec,
    Window,
    box_window,
    equal_on_window,
    equal_pairs_on_window,
    laurent_box,
    vanishes_on_window,
)
from .rings import C, QC, QQ, PolyC
from .trig import HALF_C, build_r_trig, build_trig_rep
from .yangbaxter import mcybe_residual_report


@dataclass(frozen=True)
class RationalRep:
    """Generators acting on the non-negative-exponent subspace."""

    u1: LinOperator
    u2: LinOperator
    x1: LinOperator
    x2: LinOperator
    transp: LinOperator

    @property
    def arity(self):
        return self.u1.arity

    @property
    def ring(self):
        return self.u1.ring


def build_rational_rep(i: int = 1, j: int = 2, arity: int = 2, c_value: Fraction | None = None) -> RationalRep:
    """Dunkl operators u1 = d_i - c S, u2 = d_j + c S on the pair (i, j).

    With c_value given, the deformation parameter is specialized and the
    operators live over plain rationals; otherwise c stays symbolic.
    """
    ring = QC if c_value is None else QQ
    c_coef = C if c_value is None else Fraction(c_value)
    ops = Ops(arity, ring)
    div = ops.S(i, j)
    return RationalRep(
        u1=ops.deriv(i) - c_coef * div,
        u2=ops.deriv(j) + c_coef * div,
        x1=ops.mult(i),
        x2=ops.mult(j),
        transp=ops.swap(i, j),
    )


def _relation_reports(rep: RationalRep, c_param, window: Window, prefix: str = "") -> list[CheckReport]:
    """The defining relations with deformation parameter c_param.

    Shared between the Dunkl representation (parameter c) and the images
    under the embedding into the trigonometric level (parameter -c).
    """
    ops = Ops(rep.arity, rep.ring)
    one = ops.identity
    u1, u2, x1, x2, sw = rep.u1, rep.u2, rep.x1, rep.x2, rep.transp
    c_swap = c_param * sw
    return [
        equal_on_window(sw * sw, one, window, f"{prefix}(12)^2 = 1"),
        equal_on_window(sw * x1 * sw, x2, window, f"{prefix}(12) x1 (12) = x2"),
        equal_on_window(sw * u1 * sw, u2, window, f"{prefix}(12) u1 (12) = u2"),
        vanishes_on_window(x1.commutator(x2), window, f"{prefix}[x1, x2] = 0"),
        vanishes_on_window(u1.commutator(u2), window, f"{prefix}[u1, u2] = 0"),
        equal_pairs_on_window(
            [
                (u1.commutator(x1), one - c_swap),
                (u2.commutator(x2), one - c_swap),
                (u1.commutator(x2), c_swap),
                (u2.commutator(x1), c_swap),
            ],
            window,
            f"{prefix}[u_i, x_j] = 1 - c (12) (i=j), c (12) (i<>j)",
        ),
    ]


def verify_rational_relations(window: Window | None = None, rep: RationalRep | None = None) -> list[CheckReport]:
    """Check the defining relations as Q[c] operator identities on a box."""
    if window is None:
        window = box_window(4, 2)
    if rep is None:
        rep = build_rational_rep(arity=window.arity)
    if rep.ring != QC:
        raise ValueError("relation checks need the symbolic-c representation")
    return _relation_reports(rep, C, window)


def suzuki_images() -> RationalRep:
    """Images of the rational generators inside the trigonometric level:

    u1 -> X1^(-1)(y1 + c/2 - c(12)),  u2 -> X2^(-1)(y2 + c/2),
    x_i -> X_i,  (12) -> (12),  all acting on Laurent polynomials.
    """
    trep = build_trig_rep()
    ops = Ops(2, QC)
    one = ops.identity
    return RationalRep(
        u1=trep.X1_inv * (trep.y1 + HALF_C * one - C * trep.transp),
        u2=trep.X2_inv * (trep.y2 + HALF_C * one),
        x1=trep.X1,
        x2=trep.X2,
        transp=trep.transp,
    )


def verify_suzuki(window: Window | None = None) -> list[CheckReport]:
    """The embedding carries the rational relations at parameter -c, and
    x1 u1 - x2 u2 lands exactly on r = y1 - y2 - c (12)."""
    if window is None:
        window = laurent_box(3, 2)
    images = suzuki_images()
    reports = _relation_reports(images, -C, window, prefix="image ")
    reports.append(
        equal_on_window(
            images.x1 * images.u1 - images.x2 * images.u2,
            build_r_trig(),
            window,
            "psi(x1 u1 - x2 u2) = y1 - y2 - c (12)",
        )
    )
    return reports


def build_rj(i: int = 1, j: int = 2, arity: int = 2) -> LinOperator:
    """The Jordanian generator u1 - u2 over Q[c]."""
    rep = build_rational_rep(i, j, arity)
    return rep.u1 - rep.u2


def rj_closed_form(i: int = 1, j: int = 2, arity: int = 2) -> LinOperator:
    """The equivalent presentation d_i - d_j - 2c S."""
    ops = Ops(arity, QC)
    return ops.deriv(i) - ops.deriv(j) - (C + C) * ops.S(i, j)


def _rj_pair(i, j, arity, ring):
    if ring != QC:
        raise ValueError("the Jordanian generator lives over Q[c]")
    return build_rj(i, j, arity)


def _flow_pair(i, j, arity, ring):
    """x_i u_i - x_j u_j + (u_i - u_j): the adjoint flow of the quasitriangular
    solution at time 1."""
    if ring != QC:
        raise ValueError("the flow operator lives over Q[c]")
    rep = build_rational_rep(i, j, arity)
    return rep.x1 * rep.u1 - rep.x2 * rep.u2 + (rep.u1 - rep.u2)


def jordanian_flow_check(window: Window | None = None, window3: Window | None = None) -> list[CheckReport]:
    """The bracket identities behind the exponential adjoint flow
    exp(tau ad(u1+u2)).(x1 u1 - x2 u2) = x1 u1 - x2 u2 + tau (u1 - u2),
    plus the flow consequence at tau = 1."""
    if window is None:
        window = box_window(4, 2)
    if window3 is None:
        window3 = box_window(3, 3)
    rep = build_rational_rep(arity=window.arity)
    quasi = rep.x1 * rep.u1 - rep.x2 * rep.u2
    total = rep.u1 + rep.u2
    diff = rep.u1 - rep.u2
    return [
        equal_on_window(
            total.commutator(quasi), diff, window, "[u1+u2, x1 u1 - x2 u2] = u1 - u2"
        ),
        vanishes_on_window(total.commutator(diff), window, "[u1+u2, u1-u2] = 0"),
        mcybe_residual_report(
            _flow_pair,
            C * C,
            window3,
            QC,
            "MCYBE_(c^2)(x1 u1 - x2 u2 + (u1 - u2)) = 0",
        ),
    ]


def jordanian_suite(window: Window | None = None, window3: Window | None = None) -> list[CheckReport]:
    """Presentations of u1 - u2, skew-symmetry, and triangularity MCYBE_0."""
    if window is None:
        window = box_window(4, 2)
    if window3 is None:
        window3 = box_window(3, 3)
    rj = build_rj()
    sw = Ops(2, QC).swap(1, 2)
    return [
        equal_on_window(rj, rj_closed_form(), window, "u1 - u2 = d1 - d2 - 2c S"),
        equal_on_window(sw * rj * sw, -rj, window, "(12)(u1 - u2)(12) = -(u1 - u2)"),
        mcybe_residual_report(
            _rj_pair, PolyC(), window3, QC, "MCYBE_0(u1 - u2) = 0"
        ),
    ]


# ---------------------------------------------------------------------------
# Nilpotency of the Jordanian family on box(n).
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NilpotencyResult:
    """Outcome of an exact nilpotency-index computation.

    index is None when no power up to the n^2 + 1 dimension bound vanished;
    otherwise M^index = 0 and witness is the first nonzero entry of
    M^(index-1), certifying minimality.
    """

    n: int
    c_value: Fraction
    index: int | None
    witness: tuple[int, int, Fraction] | None

    def to_json(self, predicted: int | None = None) -> dict:
        return {
            "n": self.n,
            "c": str(self.c_value),
            "index": self.index,
            "predicted": predicted,
            "match": None if predicted is None else self.index == predicted,
        }


def jordanian_box_matrix(n: int) -> MatrixOverC:
    """Matrix of u1 - u2 on box(n) over Q[c] (box-invariance checked)."""
    return restrict_to_box(build_rj(), n)


def cremmer_gervais_box_matrix(n: int) -> MatrixOverC:
    """Matrix of r on box(n) over Q[c]; alias used by the nilpotency CLI."""
    from .trig import restrict_rn

    return restrict_rn(n)


def nilpotency_index(n: int, c_value, kind: str = "jordanian") -> NilpotencyResult:
    """Exact nilpotency index of the box(n) matrix at a rational parameter.

    Powers are taken by iterated multiplication with early zero detection up
    to the dimension bound n^2 + 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    c_value = Fraction(c_value)
    if kind == "jordanian":
        matrix = jordanian_box_matrix(n)
    elif kind == "cg":
        matrix = cremmer_gervais_box_matrix(n)
    else:
        raise ValueError(f"unknown matrix kind {kind!r}")
    idx, witness = nilpotency_of(matrix.eval_c(c_value), n * n + 1)
    return NilpotencyResult(n, c_value, idx, witness)


def predicted_index(n: int) -> int:
    """n for odd n, 2n - 1 for even n."""
    return n if n % 2 == 1 else 2 * n - 1


def _constant_value(vec: PolyVec) -> Fraction | None:
    """The constant coefficient when the vector is a rational constant."""
    if set(vec.terms) <= {(0,) * vec.arity}:
        coeff = vec.terms.get((0,) * vec.arity, Fraction(0))
        return coeff if isinstance(coeff, Fraction) else None
    return None


def _apply_power(op: LinOperator, vec: PolyVec, k: int) -> PolyVec:
    for _ in range(k):
        vec = op(vec)
    return vec


def verify_gg_theorem(n_max: int = 8) -> list[CheckReport]:
    """Indices of the Jordanian matrices at c = n/2 against the predicted
    n (odd) / 2n-1 (even), with the nonzero proof witnesses, and the
    refutation of the old constant-3 conjecture for n >= 4."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    reports = []
    indices = {}
    for n in range(1, n_max + 1):
        result = nilpotency_index(n, Fraction(n, 2))
        indices[n] = result.index
        expected = predicted_index(n)
        ok = result.index == expected
        reports.append(
            CheckReport(
                f"nilpotency index at c={n}/2, n={n}: computed {result.index},"
                f" predicted {expected}",
                box_window(n).label(),
                ok,
            )
        )
        rep = build_rational_rep(c_value=Fraction(n, 2))
        diff = rep.u1 - rep.u2
        if n % 2 == 1:
            witness_vec = _apply_power(
                diff, PolyVec.monomial((0, n - 1), QQ), n - 1
            )
            label = f"(u1-u2)^{n - 1} x2^{n - 1} != 0 at c={n}/2"
        else:
            witness_vec = _apply_power(
                diff, PolyVec.monomial((n - 1, n - 1), QQ), 2 * (n - 1)
            )
            label = f"(u1-u2)^{2 * (n - 1)} (x1 x2)^{n - 1} != 0 at c={n}/2"
        value = _constant_value(witness_vec)
        ok = value is not None and value != 0
        ce = None if ok else Counterexample((), witness_vec.render(prefix="x"))
        reports.append(CheckReport(label, box_window(n).label(), ok, ce))
    wrong = [n for n in range(4, n_max + 1) if indices[n] is None or indices[n] <= 3]
    if n_max >= 4:
        reports.append(
            CheckReport(
                f"index exceeds the conjectured 3 for every 4 <= n <= {n_max}",
                f"n=4..{n_max}",
                not wrong,
                None if not wrong else Counterexample((), f"n={wrong[0]}"),
            )
        )
    return reports


# ---------------------------------------------------------------------------
# The (x, x') change of variables and the proof identities.
# ---------------------------------------------------------------------------


def xxprime_to_x12(a: int, b: int, ring=QQ) -> PolyVec:
    """x^a x'^b expanded in x1, x2, with x = (x1-x2)/2, x' = (x1+x2)/2."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be non-negative")
    half = Fraction(1, 2)
    x_vec = PolyVec(2, ring, {(1, 0): half, (0, 1): -half})
    xp_vec = PolyVec(2, ring, {(1, 0): half, (0, 1): half})
    out = PolyVec.monomial((0, 0), ring)
    for _ in range(a):
        out = out * x_vec
    for _ in range(b):
        out = out * xp_vec
    return out


def x12_to_xxprime(i: int, j: int, ring=QQ) -> PolyVec:
    """x1^i x2^j expanded in the (x, x') monomial basis, exponents keyed as
    (x-exponent, x'-exponent); inverse of xxprime_to_x12."""
    if i < 0 or j < 0:
        raise ValueError("exponents must be non-negative")
    x1_vec = PolyVec(2, ring, {(1, 0): 1, (0, 1): 1})  # x' + x
    x2_vec = PolyVec(2, ring, {(1, 0): -1, (0, 1): 1})  # x' - x
    out = PolyVec.monomial((0, 0), ring)
    for _ in range(i):
        out = out * x1_vec
    for _ in range(j):
        out = out * x2_vec
    return out


def proof_identities_check(n: int, window: Window | None = None) -> list[CheckReport]:
    """The operator identities behind the nilpotency theorem at c = n/2:

    (a) u1 - u2 commutes with multiplication by x' = (x1+x2)/2
        (checked symbolically in c);
    (b) (u1-u2) x^m = (m - n[[m]]) x^(m-1) for 0 <= m <= 2n-1, where
        [[m]] = 1 for odd m and 0 otherwise;
    (c) for odd n the vector x^n is annihilated (the singular vector).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if window is None:
        window = box_window(2 * n, 2)
    reports = []

    rep_sym = build_rational_rep()
    xprime_mult = Fraction(1, 2) * (rep_sym.x1 + rep_sym.x2)
    reports.append(
        vanishes_on_window(
            (rep_sym.u1 - rep_sym.u2).commutator(xprime_mult),
            window,
            f"[u1-u2, (x1+x2)/2] = 0 (n={n})",
        )
    )

    rep = build_rational_rep(c_value=Fraction(n, 2))
    diff = rep.u1 - rep.u2
    failure = None
    for m in range(2 * n):
        lhs = diff(xxprime_to_x12(m, 0))
        factor = m - (n if m % 2 == 1 else 0)
        rhs = (
            xxprime_to_x12(m - 1, 0).scaled(factor)
            if m >= 1
            else PolyVec.zero(2, QQ)
        )
        residual = lhs - rhs
        if residual:
            failure = Counterexample((m, 0), residual.render(prefix="x"))
            break
    reports.append(
        CheckReport(
            f"(u1-u2) x^m = (m - n[[m]]) x^(m-1), 0 <= m < {2 * n} (c={n}/2)",
            window.label(),
            failure is None,
            failure,
        )
    )

    if n % 2 == 1:
        image = diff(xxprime_to_x12(n, 0))
        ce = None if not image else Counterexample((n, 0), image.render(prefix="x"))
        reports.append(
            CheckReport(
                f"singular vector: (u1-u2) x^{n} = 0 (odd n={n}, c={n}/2)",
                window.label(),
                not image,
                ce,
            )
        )
    return reports
