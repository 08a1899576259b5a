"""Documented single-sign/term mutations of the generator formulas.

Each mutation corrupts exactly one term or sign in one generator and names
the verification suite that must then fail with a concrete counterexample
monomial.  They guard the whole harness against vacuous passes: a checker
that accepted one of these would be accepting anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .operators import CheckReport, Ops, Window, box_window, laurent_box
from .quantum import DahaRep, verify_daha_relations
from .rational import RationalRep, verify_rational_relations
from .rings import C, QC, QS, PolyC, QSLaurent
from .trig import (
    HALF_C,
    TrigRep,
    WedgeTerm,
    build_trig_rep,
    closed_formula_suite,
    rn_wedge_terms,
    verify_trig_relations,
)


def _assemble_daha_from_T(T, up=(0, 1)) -> DahaRep:
    """Rebuild the derived generators from a (possibly corrupted) T and
    q-shift slot, mirroring the production assembly."""
    ops = Ops(2, QS)
    s = QSLaurent.s()
    s_inv = QSLaurent.s(-1)
    swap = ops.swap(1, 2)
    T_inv = T - (s - s_inv) * ops.identity
    gamma_up = ops.shift(tuple(up))
    gamma_dn = ops.shift(tuple(-a for a in up))
    return DahaRep(
        T=T,
        T_inv=T_inv,
        X1=ops.mult(1),
        X1_inv=ops.mult(1, -1),
        X2=ops.mult(2),
        X2_inv=ops.mult(2, -1),
        Y1=T * gamma_up * swap,
        Y1_inv=swap * gamma_dn * T_inv,
        Y2=gamma_up * swap * T_inv,
        Y2_inv=T * swap * gamma_dn,
        transp=swap,
    )


def _daha_t_missing_x2s(window: Window) -> list[CheckReport]:
    # T = s (12), dropping the -(s - 1/s) X2 S term entirely.
    ops = Ops(2, QS)
    T = QSLaurent.s() * ops.swap(1, 2)
    return verify_daha_relations(window, _assemble_daha_from_T(T))


def _daha_t_flipped_x2s(window: Window) -> list[CheckReport]:
    # T = s (12) + (s - 1/s) X2 S, with the divided-difference term's sign flipped.
    ops = Ops(2, QS)
    s, s_inv = QSLaurent.s(), QSLaurent.s(-1)
    T = s * ops.swap(1, 2) + (s - s_inv) * (ops.mult(2) * ops.S(1, 2))
    return verify_daha_relations(window, _assemble_daha_from_T(T))


def _daha_shift_wrong_slot(window: Window) -> list[CheckReport]:
    # Correct T, but Gamma_{1,0} instead of Gamma_{0,1} in the Y generators.
    ops = Ops(2, QS)
    s, s_inv = QSLaurent.s(), QSLaurent.s(-1)
    T = s * ops.swap(1, 2) - (s - s_inv) * (ops.mult(2) * ops.S(1, 2))
    return verify_daha_relations(window, _assemble_daha_from_T(T, up=(1, 0)))


def _trig_rep(y1, y2) -> TrigRep:
    ops = Ops(2, QC)
    return TrigRep(
        y1=y1,
        y2=y2,
        X1=ops.mult(1),
        X1_inv=ops.mult(1, -1),
        X2=ops.mult(2),
        X2_inv=ops.mult(2, -1),
        transp=ops.swap(1, 2),
    )


def _trig_y1_missing_half(window: Window) -> list[CheckReport]:
    # y1 = X1 d1 + c X2 S, dropping the +c/2 constant term.
    ops = Ops(2, QC)
    xj_s = ops.mult(2) * ops.S(1, 2)
    y1 = ops.mult(1) * ops.deriv(1) + C * xj_s
    return verify_trig_relations(window, _trig_rep(y1, build_trig_rep().y2))


def _trig_y2_flipped_s(window: Window) -> list[CheckReport]:
    # y2 = X2 d2 + c X2 S - c/2, with the divided-difference sign flipped.
    ops = Ops(2, QC)
    xj_s = ops.mult(2) * ops.S(1, 2)
    y2 = ops.mult(2) * ops.deriv(2) + C * xj_s - HALF_C * ops.identity
    return verify_trig_relations(window, _trig_rep(build_trig_rep().y1, y2))


def _rational_u1_flipped_s(window: Window) -> list[CheckReport]:
    # u1 = d1 + c S instead of d1 - c S.
    ops = Ops(2, QC)
    div = ops.S(1, 2)
    rep = RationalRep(
        u1=ops.deriv(1) + C * div,
        u2=ops.deriv(2) + C * div,
        x1=ops.mult(1),
        x2=ops.mult(2),
        transp=ops.swap(1, 2),
    )
    return verify_rational_relations(window, rep)


def _wedge_exchange_halved(n_max: int) -> list[CheckReport]:
    # The exchange sum of the closed formula with coefficient c instead of 2c.
    def mutated_terms(n: int) -> list[WedgeTerm]:
        terms = []
        for t in rn_wedge_terms(n):
            is_exchange = t.j == t.k and t.i == t.l and t.i != t.k
            if is_exchange:
                terms.append(WedgeTerm(t.i, t.j, t.k, t.l, t.coeff * Fraction(1, 2)))
            else:
                terms.append(t)
        return terms

    return closed_formula_suite(n_max, terms_fn=mutated_terms)


@dataclass(frozen=True)
class Mutation:
    name: str
    target: str  # the suite that must fail
    description: str
    run: Callable[..., list[CheckReport]]


def _window_for(target: str, size: int) -> Window:
    return box_window(size, 2) if target == "rational" else laurent_box(size, 2)


MUTATIONS: dict[str, Mutation] = {
    m.name: m
    for m in [
        Mutation(
            "daha-T-missing-X2S",
            "daha",
            "T = s(12) with the -(s - 1/s) X2 S term dropped",
            _daha_t_missing_x2s,
        ),
        Mutation(
            "daha-T-flipped-X2S",
            "daha",
            "the X2 S term of T carries + instead of - sign",
            _daha_t_flipped_x2s,
        ),
        Mutation(
            "daha-shift-wrong-slot",
            "daha",
            "the Y generators use the q-shift Gamma_{1,0} instead of Gamma_{0,1}",
            _daha_shift_wrong_slot,
        ),
        Mutation(
            "trig-y1-missing-c-half",
            "trig",
            "y1 = X1 d1 + c X2 S with the +c/2 constant dropped",
            _trig_y1_missing_half,
        ),
        Mutation(
            "trig-y2-flipped-S",
            "trig",
            "the c X2 S term of y2 carries + instead of - sign",
            _trig_y2_flipped_s,
        ),
        Mutation(
            "rational-u1-flipped-S",
            "rational",
            "u1 = d1 + c S instead of d1 - c S",
            _rational_u1_flipped_s,
        ),
        Mutation(
            "wedge-exchange-halved",
            "closed-formula",
            "the e_kl^e_lk sum of the closed formula uses c instead of 2c",
            _wedge_exchange_halved,
        ),
    ]
}


def run_mutation(name: str, size: int = 2) -> list[CheckReport]:
    """Run the suite the named mutation corrupts, at a small window size."""
    mutation = MUTATIONS[name]
    if mutation.target == "closed-formula":
        return mutation.run(max(size, 2))
    return mutation.run(_window_for(mutation.target, size))
