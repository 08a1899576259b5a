"""The semiclassical level: degenerate generators, r, and its box matrices.

Under q = e^h, t = e^(c*h) the Y-generators expand as 1 + h*y_i + O(h^2)
with

  y1 = X1 d/dX1 + c X2 S + c/2,      y2 = X2 d/dX2 - c X2 S - c/2,

and R expands as 1 + h*r + O(h^2) where r = y1 - y2 - c (12), a skew
quasitriangular solution of MCYBE_{c^2}.  Restricting r to the box of
monomials X1^a X2^b with 0 <= a, b < n yields an (n^2)x(n^2) matrix r_n
with a closed wedge-operator expansion; the anti-diagonal transform of
r_n at c = -n/2, scaled by -1/n, is the Cremmer-Gervais normalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .boxmatrix import (
    MatrixOverC,
    RationalMatrix,
    permutation_matrix,
    restrict_to_box,
)
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
from .quantum import build_R, build_daha_rep
from .rings import C, QC, JetRing, PolyC
from .yangbaxter import mcybe_matrix_residual, mcybe_residual_report

HALF_C = PolyC({1: Fraction(1, 2)})


@dataclass(frozen=True)
class TrigRep:
    """Degenerate generators acting on Laurent polynomials over Q[c]."""

    y1: LinOperator
    y2: LinOperator
    X1: LinOperator
    X1_inv: LinOperator
    X2: LinOperator
    X2_inv: LinOperator
    transp: LinOperator

    @property
    def arity(self):
        return self.y1.arity


def build_trig_rep(i: int = 1, j: int = 2, arity: int = 2) -> TrigRep:
    """y1 = X_i d_i + c X_j S + c/2 and y2 = X_j d_j - c X_j S - c/2 on the
    variable pair (i, j)."""
    ops = Ops(arity, QC)
    xj_s = ops.mult(j) * ops.S(i, j)
    y1 = ops.mult(i) * ops.deriv(i) + C * xj_s + HALF_C * ops.identity
    y2 = ops.mult(j) * ops.deriv(j) - C * xj_s - HALF_C * ops.identity
    return TrigRep(
        y1=y1,
        y2=y2,
        X1=ops.mult(i),
        X1_inv=ops.mult(i, -1),
        X2=ops.mult(j),
        X2_inv=ops.mult(j, -1),
        transp=ops.swap(i, j),
    )


def verify_trig_relations(window: Window | None = None, rep: TrigRep | None = None) -> list[CheckReport]:
    """Check the degenerate-algebra relations as Q[c] operator identities."""
    if window is None:
        window = laurent_box(3, 2)
    if rep is None:
        rep = build_trig_rep(arity=window.arity)
    ops = Ops(rep.arity, QC)
    one = ops.identity
    y1, y2, X1, X2, sw = rep.y1, rep.y2, rep.X1, rep.X2, rep.transp
    swap_x1 = sw * X1  # the operator (12) X1
    return [
        equal_on_window(sw * sw, one, window, "(12)^2 = 1"),
        vanishes_on_window(X1.commutator(X2), window, "[X1, X2] = 0"),
        equal_on_window(sw * X1 * sw, X2, window, "(12) X1 (12) = X2"),
        equal_on_window(sw * y1 - y2 * sw, C * one, window, "(12) y1 - y2 (12) = c"),
        vanishes_on_window(y1.commutator(y2), window, "[y1, y2] = 0"),
        equal_pairs_on_window(
            [
                (y1.commutator(X1), X1 + C * swap_x1),
                (y2.commutator(X2), X2 + C * swap_x1),
                (y1.commutator(X2), -(C * swap_x1)),
                (y2.commutator(X1), -(C * swap_x1)),
            ],
            window,
            "[y_i, X_j] = X_i + c (12) X1 (i=j), -c (12) X1 (i<>j)",
        ),
    ]


def build_r_trig(i: int = 1, j: int = 2, arity: int = 2) -> LinOperator:
    """r = y1 - y2 - c (ij) on the variable pair, over Q[c]."""
    rep = build_trig_rep(i, j, arity)
    return rep.y1 - rep.y2 - C * rep.transp


def r_closed_form(i: int = 1, j: int = 2, arity: int = 2) -> LinOperator:
    """The equivalent presentation X_i d_i - X_j d_j + c (X_i + X_j) S."""
    ops = Ops(arity, QC)
    return (
        ops.mult(i) * ops.deriv(i)
        - ops.mult(j) * ops.deriv(j)
        + C * ((ops.mult(i) + ops.mult(j)) * ops.S(i, j))
    )


def _r_pair(i, j, arity, ring):
    if ring != QC:
        raise ValueError("the semiclassical r lives over Q[c]")
    return build_r_trig(i, j, arity)


def mcybe_residual(pair_builder=None, lam: PolyC | None = None, window: Window | None = None) -> CheckReport:
    """MCYBE residual over Q[c]; pass only if the residual is the zero
    polynomial in c on every window monomial.  Defaults to r with c^2."""
    if pair_builder is None:
        pair_builder = _r_pair
    if lam is None:
        lam = C * C
    if window is None:
        window = laurent_box(2, 3)
    return mcybe_residual_report(
        pair_builder, lam, window, QC, f"MCYBE_({lam})(r) = 0"
    )


def r_properties_suite(window2: Window | None = None, window3: Window | None = None,
                       lam: PolyC | None = None) -> list[CheckReport]:
    """Skew-symmetry, equality of the two presentations of r, and MCYBE."""
    if window2 is None:
        window2 = laurent_box(3, 2)
    r = build_r_trig()
    sw = Ops(2, QC).swap(1, 2)
    return [
        equal_on_window(sw * r * sw, -r, window2, "(12) r (12) = -r"),
        equal_on_window(
            r, r_closed_form(), window2, "r = X1 d1 - X2 d2 + c (X1+X2) S"
        ),
        mcybe_residual(lam=lam, window=window3),
    ]


# ---------------------------------------------------------------------------
# Semiclassical expansion checks.
# ---------------------------------------------------------------------------


def jet_part(vec: PolyVec, k: int) -> PolyVec:
    """Extract the h^k coefficient of a jet-valued vector, over Q[c]."""
    return PolyVec(vec.arity, QC, {m: coeff.part(k) for m, coeff in vec.terms.items()})


def semiclassical_check(order: int = 2, window: Window | None = None) -> list[CheckReport]:
    """Rebuild Y1, Y2, R over h-jets and match the h^0 and h^1 parts.

    The h^0 parts must be the identity; the h^1 parts must equal y1, y2,
    and r = y1 - y2 - c (12) respectively, as polynomials in c.
    """
    if order < 1:
        raise ValueError("jet order must be >= 1 to read off the h^1 part")
    if window is None:
        window = laurent_box(3, 2)
    ring = JetRing(order)
    qrep = build_daha_rep(ring=ring)
    trep = build_trig_rep()
    ident = Ops(2, QC).identity
    targets = [
        ("Y1", qrep.Y1, trep.y1),
        ("Y2", qrep.Y2, trep.y2),
        ("R", build_R(ring=ring), build_r_trig()),
    ]
    reports = []
    for name, jet_op, h1_expected in targets:
        for k, expected in ((0, ident), (1, h1_expected)):
            label = (
                f"h^{k} part of {name} = " + ("1" if k == 0 else f"semiclassical {name}")
            )
            failure = None
            for mono in window.monomials():
                got = jet_part(jet_op.on_monomial(mono), k)
                residual = got - expected.on_monomial(mono)
                if residual:
                    failure = Counterexample(mono, residual.render())
                    break
            reports.append(
                CheckReport(label, window.label(), failure is None, failure)
            )
    return reports


# ---------------------------------------------------------------------------
# Box restriction, the closed wedge formula, and the CG normalization.
# ---------------------------------------------------------------------------


def restrict_rn(n: int) -> MatrixOverC:
    """Matrix of r on the box of monomials X1^a X2^b, 0 <= a, b < n.

    Box-invariance holds because r is homogeneous and degree-preserving;
    it is still checked, and a violation raises WindowEscapeError.
    """
    return restrict_to_box(build_r_trig(), n)


@dataclass(frozen=True)
class WedgeTerm:
    """One summand coeff * e_{ij} ^ e_{kl} of a wedge expansion.

    The wedge operator acts on the box basis by
    X1^a X2^b -> 1/2 (d_{j,a+1} d_{l,b+1} X1^{i-1} X2^{k-1}
                      - d_{l,a+1} d_{j,b+1} X1^{k-1} X2^{i-1}).
    """

    i: int
    j: int
    k: int
    l: int
    coeff: PolyC

    def to_json(self) -> dict:
        return {"coeff": str(self.coeff), "ijkl": [self.i, self.j, self.k, self.l]}


def rn_wedge_terms(n: int) -> list[WedgeTerm]:
    """The closed expansion of r_n:

    2 sum_{k<l} (k-l-c) e_kk^e_ll + 2c sum_{k<l} e_kl^e_lk
    + 4c sum_{i<k<j} e_{i+j-k,j}^e_{ki},  all indices in 1..n.
    """
    if n < 1:
        raise ValueError("box size must be >= 1")
    terms = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            terms.append(
                WedgeTerm(a, a, b, b, PolyC({0: Fraction(2 * (a - b)), 1: Fraction(-2)}))
            )
            terms.append(WedgeTerm(a, b, b, a, PolyC({1: Fraction(2)})))
    for i in range(1, n + 1):
        for k in range(i + 1, n + 1):
            for j in range(k + 1, n + 1):
                terms.append(WedgeTerm(i + j - k, j, k, i, PolyC({1: Fraction(4)})))
    return terms


def wedge_matrix(terms: list[WedgeTerm], n: int) -> MatrixOverC:
    """Assemble a wedge expansion into a matrix on the box(n) basis."""
    out = MatrixOverC.zero(n)
    for t in terms:
        if not all(1 <= x <= n for x in (t.i, t.j, t.k, t.l)):
            raise ValueError(f"wedge indices {t} out of range 1..{n}")
        half = t.coeff * Fraction(1, 2)
        col = (t.j - 1) * n + (t.l - 1)
        row = (t.i - 1) * n + (t.k - 1)
        out.entries[row][col] = out.entries[row][col] + half
        col = (t.l - 1) * n + (t.j - 1)
        row = (t.k - 1) * n + (t.i - 1)
        out.entries[row][col] = out.entries[row][col] - half
    return out


def build_rn_closed(n: int) -> MatrixOverC:
    """r_n assembled from the closed wedge formula (equals restrict_rn(n))."""
    return wedge_matrix(rn_wedge_terms(n), n)


def matrix_equal_report(a: MatrixOverC, b: MatrixOverC, identity: str) -> CheckReport:
    """Entrywise equality of two box matrices, reported like a window check.

    On failure the counterexample monomial is the column's basis monomial
    (a, b) and the residual names the first differing entry.
    """
    label = box_window(a.n).label()
    if a.n != b.n:
        return CheckReport(
            identity, label, False, Counterexample((), f"sizes differ: {a.n} vs {b.n}")
        )
    diff = a.first_difference(b)
    if diff is None:
        return CheckReport(identity, label, True)
    row, col = diff
    residual = a.entries[row][col] - b.entries[row][col]
    return CheckReport(
        identity,
        label,
        False,
        Counterexample(divmod(col, a.n), f"entry ({row},{col}) differs by {residual}"),
    )


def closed_formula_suite(n_max: int = 6, terms_fn=rn_wedge_terms) -> list[CheckReport]:
    """restrict_rn(n) = wedge formula entrywise over Q[c], n = 1..n_max."""
    return [
        matrix_equal_report(
            restrict_rn(n),
            wedge_matrix(terms_fn(n), n),
            f"restrict_rn({n}) = closed wedge formula",
        )
        for n in range(1, n_max + 1)
    ]


def cg_transform(matrix: MatrixOverC, n: int) -> RationalMatrix:
    """Cremmer-Gervais normalization of a box matrix.

    Applies the anti-diagonal automorphism e_ij -> -e_{n+1-j,n+1-i} on both
    tensor legs (the two signs cancel, leaving conjugation-transpose across
    the anti-diagonal), scales by -1/n, and specializes c = -n/2.
    """
    if matrix.n != n:
        raise ValueError(f"matrix has n={matrix.n}, expected {n}")
    out = MatrixOverC.zero(n)

    def rev(a):
        return n - 1 - a

    for ap in range(n):
        for bp in range(n):
            for a in range(n):
                for b in range(n):
                    out.entries[ap * n + bp][a * n + b] = matrix.entries[
                        rev(a) * n + rev(b)
                    ][rev(ap) * n + rev(bp)]
    return out.scale(Fraction(-1, n)).eval_c(Fraction(-n, 2))


def cg_transform_wedge(terms: list[WedgeTerm], n: int) -> RationalMatrix:
    """The same normalization computed on the wedge expansion: each term
    (i,j,k,l) maps to (n+1-j, n+1-i, n+1-l, n+1-k) with overall scale -1/n,
    then c = -n/2."""
    mapped = [
        WedgeTerm(
            n + 1 - t.j,
            n + 1 - t.i,
            n + 1 - t.l,
            n + 1 - t.k,
            t.coeff * Fraction(-1, n),
        )
        for t in terms
    ]
    return wedge_matrix(mapped, n).eval_c(Fraction(-n, 2))


def cg_normalized(n: int) -> RationalMatrix:
    """The normalized matrix -1/n * antidiag(r_n) at c = -n/2."""
    return cg_transform(restrict_rn(n), n)


def _rational_matrix_report(identity: str, n: int, passed: bool, detail: str | None) -> CheckReport:
    ce = None if passed else Counterexample((), detail or "")
    return CheckReport(identity, box_window(n).label(), passed, ce)


def partial_traces_vanish(m: RationalMatrix, n: int):
    """Both partial traces of a pair matrix; zero iff it lies in sl_n^sl_n.

    Returns (ok, detail) with the first nonzero trace entry on failure.
    """
    for k in range(n):
        for l in range(n):
            left = sum((m.entry(i * n + k, i * n + l) for i in range(n)), Fraction(0))
            if left:
                return False, f"tr_1 at (k={k},l={l}) is {left}"
            right = sum((m.entry(k * n + i, l * n + i) for i in range(n)), Fraction(0))
            if right:
                return False, f"tr_2 at (i={k},k={l}) is {right}"
    return True, None


def cg_structure_suite(ns=(2, 3)) -> list[CheckReport]:
    """Structural checks of the normalized matrix: the wedge and operator
    routes agree; it is skew under (12); both partial traces vanish; and it
    satisfies MCYBE with inhomogeneity 1/4."""
    reports = []
    for n in ns:
        via_op = cg_transform(restrict_rn(n), n)
        via_wedge = cg_transform_wedge(rn_wedge_terms(n), n)
        reports.append(
            _rational_matrix_report(
                f"cg(n={n}): operator route = wedge route",
                n,
                via_op == via_wedge,
                None if via_op == via_wedge else "routes disagree",
            )
        )
        p12 = permutation_matrix(n * n, lambda idx: (idx % n) * n + idx // n)
        skew = p12 * via_op * p12 == -via_op
        reports.append(
            _rational_matrix_report(
                f"cg(n={n}): (12) m (12) = -m", n, skew, None if skew else "not skew"
            )
        )
        ok, detail = partial_traces_vanish(via_op, n)
        reports.append(
            _rational_matrix_report(
                f"cg(n={n}): partial traces vanish (sl_n membership at c=-{n}/2)",
                n,
                ok,
                detail,
            )
        )
        residual = mcybe_matrix_residual(via_op, n, Fraction(1, 4))
        ok = residual.is_zero()
        detail = None
        if not ok:
            where = residual.first_nonzero()
            detail = f"residual entry {where}"
        reports.append(
            _rational_matrix_report(f"cg(n={n}): MCYBE_(1/4) = 0", n, ok, detail)
        )
    return reports


# ---------------------------------------------------------------------------
# Non-nilpotency of r_n away from the boundary parameter.
# ---------------------------------------------------------------------------


def non_nilpotency_probe() -> list[CheckReport]:
    """The two eigen-identities of r^2 as Q[c] identities, nilpotency of the
    (n, c) = (2, -1/2) boundary case, and non-nilpotency at (2, -1) and
    (3, -3/2), certified by a nonzero n^2-th power."""
    r = build_r_trig()
    reports = []

    diff1 = PolyVec(2, QC, {(1, 0): 1, (0, 1): -1})  # X1 - X2
    diff2 = PolyVec(2, QC, {(2, 0): 1, (0, 2): -1})  # X1^2 - X2^2
    cases = [
        ("r^2 (X1 - X2) = (1+2c)(X1 - X2)", diff1, PolyC({0: 1, 1: 2})),
        ("r^2 (X1^2 - X2^2) = 4(1+c)(X1^2 - X2^2)", diff2, PolyC({0: 4, 1: 4})),
    ]
    for identity, vec, factor in cases:
        residual = r(r(vec)) - vec.scaled(factor)
        ce = None if not residual else Counterexample((), residual.render())
        reports.append(CheckReport(identity, "explicit vectors", not residual, ce))

    from .boxmatrix import nilpotency_of

    boundary = restrict_rn(2).eval_c(Fraction(-1, 2))
    idx, _ = nilpotency_of(boundary, 2 * 2 + 1)
    reports.append(
        _rational_matrix_report(
            "r_2 at c=-1/2 is nilpotent",
            2,
            idx is not None,
            None if idx is not None else "no power up to the bound vanished",
        )
    )
    for n, c_val in ((2, Fraction(-1)), (3, Fraction(-3, 2))):
        m = restrict_rn(n).eval_c(c_val)
        power = RationalMatrix.identity(n * n)
        for _ in range(n * n):
            power = power * m
        ok = not power.is_zero()
        reports.append(
            _rational_matrix_report(
                f"r_{n} at c={c_val} is not nilpotent (m^{n * n} != 0)",
                n,
                ok,
                None if ok else f"m^{n * n} = 0",
            )
        )
    return reports
