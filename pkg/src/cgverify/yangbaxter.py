"""Modified Yang-Baxter residuals, at the operator and matrix levels.

For an operator built on a variable pair, the three-variable residuals are

  MQYBE_l(R): R12 R13 R23 - R23 R13 R12 - l*(P123 R12 - P213 R23)
  MCYBE_l(r): [r12,r13] + [r12,r23] + [r13,r23] - l*(P123 - P213)

where P123 (resp. P213) permutes the variables X1 -> X2 -> X3 -> X1
(resp. X2 -> X1 -> X3 -> X2).  A residual check passes only if the
residual operator is exactly zero on every monomial of the window.
"""

from __future__ import annotations

from fractions import Fraction

from .boxmatrix import RationalMatrix, permutation_matrix
from .operators import CheckReport, Ops, Window, vanishes_on_window


def _pair_ops(pair_builder, ring):
    r12 = pair_builder(1, 2, 3, ring)
    r13 = pair_builder(1, 3, 3, ring)
    r23 = pair_builder(2, 3, 3, ring)
    return r12, r13, r23


def mqybe_residual_report(pair_builder, lam, window: Window, ring, identity: str) -> CheckReport:
    """Check MQYBE_lam for the pair-indexed operator family on the window."""
    if window.arity != 3:
        raise ValueError("MQYBE residual needs a 3-variable window")
    r12, r13, r23 = _pair_ops(pair_builder, ring)
    ops = Ops(3, ring)
    lhs = r12 * r13 * r23 - r23 * r13 * r12
    rhs = lam * (ops.perm((1, 2, 3)) * r12 - ops.perm((2, 1, 3)) * r23)
    return vanishes_on_window(lhs - rhs, window, identity)


def mcybe_residual_report(pair_builder, lam, window: Window, ring, identity: str) -> CheckReport:
    """Check MCYBE_lam for the pair-indexed operator family on the window."""
    if window.arity != 3:
        raise ValueError("MCYBE residual needs a 3-variable window")
    r12, r13, r23 = _pair_ops(pair_builder, ring)
    ops = Ops(3, ring)
    lhs = (
        r12.commutator(r13) + r12.commutator(r23) + r13.commutator(r23)
    )
    rhs = lam * (ops.perm((1, 2, 3)) - ops.perm((2, 1, 3)))
    return vanishes_on_window(lhs - rhs, window, identity)


def _triple_index(n: int):
    def encode(a, b, c):
        return (a * n + b) * n + c

    def decode(idx):
        ab, c = divmod(idx, n)
        a, b = divmod(ab, n)
        return a, b, c

    return encode, decode


def mcybe_matrix_residual(r: RationalMatrix, n: int, lam: Fraction) -> RationalMatrix:
    """MCYBE_lam residual for an (n^2)x(n^2) matrix, on the triple box basis.

    The embeddings follow the box index layout X1^a X2^b X3^c at
    (a*n + b)*n + c, so r12 = r (x) I, r23 = I (x) r, and
    r13 = P23 r12 P23.
    """
    if r.dim != n * n:
        raise ValueError(f"matrix of dim {r.dim} is not an n={n} pair matrix")
    encode, decode = _triple_index(n)
    eye = RationalMatrix.identity(n)
    r12 = r.kron(eye)
    r23 = eye.kron(r)
    dim3 = n**3

    def perm(mapping):
        return permutation_matrix(dim3, lambda j: encode(*mapping(*decode(j))))

    p23 = perm(lambda a, b, c: (a, c, b))
    p123 = perm(lambda a, b, c: (c, a, b))
    p213 = perm(lambda a, b, c: (b, c, a))
    r13 = p23 * r12 * p23

    def comm(x, y):
        return x * y - y * x

    residual = comm(r12, r13) + comm(r12, r23) + comm(r13, r23)
    return residual - (p123 - p213).scale(lam)
