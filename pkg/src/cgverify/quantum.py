"""The quantum level: GL2 double affine Hecke algebra and its R-matrix.

The polynomial representation on Laurent polynomials in X1, X2 is generated
by

  T  = t^(1/2) (12) - (t^(1/2) - t^(-1/2)) X2 S,      S = (1-(12))/(X1-X2)
  Y1 = T Gamma_{0,1} (12),   Y2 = Gamma_{0,1} (12) T^(-1)

with Gamma_{a,b} the q-shift f(X1, X2) -> f(q^a X1, q^b X2) and t^(1/2)
kept as the formal variable s.  The operator R = (12) Y2 (12) Y2^(-1) is
unitary and solves the modified quantum Yang-Baxter equation with
inhomogeneity (1 - t^(-1))^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .operators import (
    CheckReport,
    LinOperator,
    Ops,
    Window,
    equal_on_window,
    equal_pairs_on_window,
    laurent_box,
    vanishes_on_window,
)
from .rings import QS
from .yangbaxter import mcybe_residual_report, mqybe_residual_report


@dataclass(frozen=True)
class DahaRep:
    """Generators of the polynomial representation on one variable pair."""

    T: LinOperator
    T_inv: LinOperator
    X1: LinOperator
    X1_inv: LinOperator
    X2: LinOperator
    X2_inv: LinOperator
    Y1: LinOperator
    Y1_inv: LinOperator
    Y2: LinOperator
    Y2_inv: LinOperator
    transp: LinOperator

    @property
    def ring(self):
        return self.T.ring

    @property
    def arity(self):
        return self.T.arity


def build_daha_rep(i: int = 1, j: int = 2, arity: int = 2, ring=QS) -> DahaRep:
    """Assemble the generators acting on the variable pair (i, j) inside an
    arity-variable Laurent space; other variables are untouched.

    The ring must provide q and t^(1/2) (QSLaurent, or a jet ring under the
    substitution q = e^h, t^(1/2) = e^(c*h/2)).  T^(-1) is T - (s - 1/s),
    forced by the quadratic relation, and Y2^(-1) = T (ij) Gamma_down.
    """
    ops = Ops(arity, ring)
    s = ring.t_half(1)
    s_inv = ring.t_half(-1)
    swap = ops.swap(i, j)
    div = ops.S(i, j)
    T = s * swap - (s - s_inv) * (ops.mult(j) * div)
    T_inv = T - (s - s_inv) * ops.identity
    up = [0] * arity
    up[j - 1] = 1
    gamma_up = ops.shift(tuple(up))
    gamma_dn = ops.shift(tuple(-a for a in up))
    return DahaRep(
        T=T,
        T_inv=T_inv,
        X1=ops.mult(i),
        X1_inv=ops.mult(i, -1),
        X2=ops.mult(j),
        X2_inv=ops.mult(j, -1),
        Y1=T * gamma_up * swap,
        Y1_inv=swap * gamma_dn * T_inv,
        Y2=gamma_up * swap * T_inv,
        Y2_inv=T * swap * gamma_dn,
        transp=swap,
    )


def verify_daha_relations(window: Window | None = None, rep: DahaRep | None = None) -> list[CheckReport]:
    """Check the nine defining relations as operator identities on a window."""
    if window is None:
        window = laurent_box(3, 2)
    if rep is None:
        rep = build_daha_rep(arity=window.arity)
    ops = Ops(rep.arity, rep.ring)
    one = ops.identity
    q = rep.ring.q_power(1)
    s = rep.ring.t_half(1)
    s_inv = rep.ring.t_half(-1)
    T, Y1, Y2 = rep.T, rep.Y1, rep.Y2
    X1, X2 = rep.X1, rep.X2

    inverse_pairs = [
        (X1 * rep.X1_inv, one),
        (rep.X1_inv * X1, one),
        (X2 * rep.X2_inv, one),
        (rep.X2_inv * X2, one),
        (Y1 * rep.Y1_inv, one),
        (rep.Y1_inv * Y1, one),
        (Y2 * rep.Y2_inv, one),
        (rep.Y2_inv * Y2, one),
    ]
    reports = [
        equal_pairs_on_window(inverse_pairs, window, "X_j X_j^-1 = Y_j Y_j^-1 = 1"),
        vanishes_on_window(
            (T - s * one) * (T + s_inv * one),
            window,
            "(T - t^1/2)(T + t^-1/2) = 0",
        ),
        equal_on_window(T * X1 * T, X2, window, "T X1 T = X2"),
        equal_on_window(T * Y2 * T, Y1, window, "T Y2 T = Y1"),
        equal_on_window(
            rep.Y2_inv * X1 * Y2 * rep.X1_inv, T * T, window, "Y2^-1 X1 Y2 X1^-1 = T^2"
        ),
        equal_pairs_on_window(
            [
                (Y1 * Y2 * X1, q * (X1 * Y1 * Y2)),
                (Y1 * Y2 * X2, q * (X2 * Y1 * Y2)),
            ],
            window,
            "Y1 Y2 X_j = q X_j Y1 Y2",
        ),
        equal_pairs_on_window(
            [
                (Y1 * X1 * X2, q * (X1 * X2 * Y1)),
                (Y2 * X1 * X2, q * (X1 * X2 * Y2)),
            ],
            window,
            "Y_j X1 X2 = q X1 X2 Y_j",
        ),
        vanishes_on_window(Y1.commutator(Y2), window, "[Y1, Y2] = 0"),
        vanishes_on_window(X1.commutator(X2), window, "[X1, X2] = 0"),
    ]
    return reports


def build_R(i: int = 1, j: int = 2, arity: int = 2, ring=QS, rep: DahaRep | None = None) -> LinOperator:
    """R = (ij) Y2 (ij) Y2^(-1) on the variable pair (i, j)."""
    if rep is None:
        rep = build_daha_rep(i, j, arity, ring)
    return rep.transp * rep.Y2 * rep.transp * rep.Y2_inv


def theorem_lambda():
    """The MQYBE inhomogeneity (1 - t^(-1))^2 with t^(-1) = s^(-2)."""
    from .rings import QSLaurent

    return (QSLaurent.const(1) - QSLaurent.s(-2)) ** 2


def verify_unitarity(window: Window | None = None, R_op: LinOperator | None = None) -> CheckReport:
    """Check R (12) R (12) = 1."""
    if window is None:
        window = laurent_box(3, 2)
    if R_op is None:
        R_op = build_R()
    ops = Ops(R_op.arity, R_op.ring)
    swap = ops.swap(1, 2)
    return equal_on_window(
        R_op * swap * R_op * swap, ops.identity, window, "R (12) R (12) = 1"
    )


def mqybe_residual(pair_builder=None, lam=None, window: Window | None = None) -> CheckReport:
    """MQYBE residual of the R family; defaults to R with (1 - t^-1)^2."""
    if pair_builder is None:
        pair_builder = build_R
    if lam is None:
        lam = theorem_lambda()
    if window is None:
        window = laurent_box(2, 3)
    return mqybe_residual_report(
        pair_builder,
        lam,
        window,
        QS,
        "R12 R13 R23 - R23 R13 R12 = (1-t^-1)^2 (P123 R12 - P213 R23)",
    )


def r13_convention_check(window: Window | None = None) -> CheckReport:
    """Cross-check the index convention: R13 built on the pair (1,3) equals
    P23 R12 P23."""
    if window is None:
        window = laurent_box(2, 3)
    r12 = build_R(1, 2, 3)
    r13 = build_R(1, 3, 3)
    p23 = Ops(3, QS).swap(2, 3)
    return equal_on_window(r13, p23 * r12 * p23, window, "R13 = P23 R12 P23")


def mqybe_suite(window2: Window | None = None, window3: Window | None = None) -> list[CheckReport]:
    """Unitarity, the MQYBE residual, and the index-convention check."""
    return [
        verify_unitarity(window2),
        mqybe_residual(window=window3),
        r13_convention_check(window3),
    ]


def _v_pair(i, j, arity, ring):
    """v = (X_i + X_j) S on the pair; nilpotent of square zero."""
    ops = Ops(arity, ring)
    return (ops.mult(i) + ops.mult(j)) * ops.S(i, j)


def _f_pair(i, j, arity, ring):
    """F = Gamma_{0,-1} on the pair: X_j -> q^(-1) X_j."""
    ops = Ops(arity, ring)
    amounts = [0] * arity
    amounts[j - 1] = -1
    return ops.shift(tuple(amounts))


def verify_twist(window2: Window | None = None, window3: Window | None = None) -> list[CheckReport]:
    """The twist decomposition of R.

    With v = (X1 + X2) S, F = Gamma_{0,-1}, lam = 1 - t^(-1), and
    Rhat = exp(lam*v) = 1 + lam*v (exact since v^2 = 0), checks:
    v^2 = 0; MQYBE_1(v) = 0; MCYBE_1(v) = 0; MQYBE_{lam^2}(1 + lam*v) = 0;
    the three F/Rhat exchange identities; and R = F21^(-1) Rhat F12.
    """
    from .rings import QSLaurent

    if window2 is None:
        window2 = laurent_box(3, 2)
    if window3 is None:
        window3 = laurent_box(2, 3)
    lam = QSLaurent.const(1) - QSLaurent.s(-2)
    one = QSLaurent.const(1)

    ops2 = Ops(2, QS)
    v = _v_pair(1, 2, 2, QS)

    def rhat_pair(i, j, arity, ring):
        return Ops(arity, ring).identity + lam * _v_pair(i, j, arity, ring)

    ops3 = Ops(3, QS)
    f12 = _f_pair(1, 2, 3, QS)
    f13 = _f_pair(1, 3, 3, QS)
    f23 = _f_pair(2, 3, 3, QS)
    rhat12 = rhat_pair(1, 2, 3, QS)
    rhat23 = rhat_pair(2, 3, 3, QS)

    # Two-variable pieces of the decomposition R = F21^(-1) Rhat F12.
    f12_two = ops2.shift((0, -1))
    f21_inv = ops2.shift((1, 0))
    rhat_two = ops2.identity + lam * v

    return [
        vanishes_on_window(v * v, window2, "v^2 = 0"),
        mqybe_residual_report(_v_pair, one, window3, QS, "MQYBE_1(v) = 0"),
        mcybe_residual_report(_v_pair, one, window3, QS, "MCYBE_1(v) = 0"),
        mqybe_residual_report(
            rhat_pair,
            lam * lam,
            window3,
            QS,
            "MQYBE_{lam^2}(1 + lam v) = 0, lam = 1 - t^-1",
        ),
        equal_on_window(
            f12 * f13 * f23, f23 * f13 * f12, window3, "(i) F12 F13 F23 = F23 F13 F12"
        ),
        equal_on_window(
            rhat12 * f23 * f13,
            f13 * f23 * rhat12,
            window3,
            "(ii) Rhat12 F23 F13 = F13 F23 Rhat12",
        ),
        equal_on_window(
            rhat23 * f12 * f13,
            f13 * f12 * rhat23,
            window3,
            "(iii) Rhat23 F12 F13 = F13 F12 Rhat23",
        ),
        equal_on_window(
            build_R(), f21_inv * rhat_two * f12_two, window2, "R = F21^-1 Rhat F12"
        ),
    ]
