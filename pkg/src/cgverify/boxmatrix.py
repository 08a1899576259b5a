"""Exact matrices: restrictions of operators to finite monomial boxes.

``MatrixOverC`` is the (n^2)x(n^2) matrix of a window-invariant operator in
the basis X1^a X2^b with row/column index a*n + b.  ``RationalMatrix`` is a
sparse matrix over Q used for specialized-parameter work (nilpotency powers,
Kronecker products, permutation conjugation).
"""

from __future__ import annotations

from fractions import Fraction

from .operators import LinOperator, render_monomial
from .rings import QC, PolyC

BASIS_DOC = "X1^a X2^b, index = a*n+b"


class WindowEscapeError(ValueError):
    """An operator mapped a box monomial outside the box."""

    def __init__(self, source, escaped, coeff):
        self.source = tuple(source)
        self.escaped = tuple(escaped)
        self.coeff = coeff
        super().__init__(
            f"operator is not box-invariant: {render_monomial(source)} produced "
            f"the escaping term ({coeff})*{render_monomial(escaped)}"
        )


class MatrixOverC:
    """Square matrix over Q[c] on the box(n) monomial basis."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries):
        self.n = n
        dim = n * n
        if len(entries) != dim or any(len(row) != dim for row in entries):
            raise ValueError(f"expected a {dim}x{dim} entry array")
        self.entries = [[QC.coerce(v) for v in row] for row in entries]

    @property
    def dim(self) -> int:
        return self.n * self.n

    @classmethod
    def zero(cls, n: int) -> "MatrixOverC":
        dim = n * n
        return cls(n, [[PolyC() for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def identity(cls, n: int) -> "MatrixOverC":
        m = cls.zero(n)
        for i in range(m.dim):
            m.entries[i][i] = PolyC.const(1)
        return m

    def entry(self, row: int, col: int) -> PolyC:
        return self.entries[row][col]

    def __mul__(self, other: "MatrixOverC") -> "MatrixOverC":
        if not isinstance(other, MatrixOverC):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")
        dim = self.dim
        out = MatrixOverC.zero(self.n)
        for i in range(dim):
            row = self.entries[i]
            for k in range(dim):
                a = row[k]
                if not a:
                    continue
                brow = other.entries[k]
                orow = out.entries[i]
                for j in range(dim):
                    b = brow[j]
                    if b:
                        orow[j] = orow[j] + a * b
        return out

    def __pow__(self, k: int) -> "MatrixOverC":
        if k < 0:
            raise ValueError("matrix power must be >= 0")
        result = MatrixOverC.identity(self.n)
        for _ in range(k):
            result = result * self
        return result

    def __add__(self, other: "MatrixOverC") -> "MatrixOverC":
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")
        return MatrixOverC(
            self.n,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __neg__(self) -> "MatrixOverC":
        return self.scale(-1)

    def __sub__(self, other: "MatrixOverC") -> "MatrixOverC":
        return self + (-other)

    def scale(self, coeff) -> "MatrixOverC":
        coeff = QC.coerce(coeff)
        return MatrixOverC(
            self.n, [[coeff * v for v in row] for row in self.entries]
        )

    def transpose(self) -> "MatrixOverC":
        return MatrixOverC(
            self.n,
            [[self.entries[j][i] for j in range(self.dim)] for i in range(self.dim)],
        )

    def trace(self) -> PolyC:
        total = PolyC()
        for i in range(self.dim):
            total = total + self.entries[i][i]
        return total

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    def __eq__(self, other):
        if not isinstance(other, MatrixOverC):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def first_difference(self, other: "MatrixOverC"):
        """First (row, col) with differing entries, in (row, col) order."""
        for i in range(self.dim):
            for j in range(self.dim):
                if self.entries[i][j] != other.entries[i][j]:
                    return i, j
        return None

    def eval_c(self, value) -> "RationalMatrix":
        """Specialize c = value, returning a sparse exact-rational matrix."""
        out = RationalMatrix.zero(self.dim)
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                if v:
                    val = v.eval(value)
                    if val:
                        out.rows[i][j] = val
        return out

    def to_json(self) -> dict:
        entries = []
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.entries[i][j]
                if v:
                    entries.append({"row": i, "col": j, "value": str(v)})
        return {"n": self.n, "basis": BASIS_DOC, "entries": entries}


def restrict_to_box(op: LinOperator, n: int) -> MatrixOverC:
    """Matrix of a box(n)-invariant operator over Q[c] in the fixed basis.

    Invariance is checked, not assumed: any output term outside the box
    raises WindowEscapeError naming the source monomial and escaping term.
    """
    if n < 1:
        raise ValueError("box size must be >= 1")
    if op.arity != 2:
        raise ValueError("box restriction is defined for 2-variable operators")
    if op.ring != QC:
        raise ValueError("box restriction requires PolyC coefficients")
    out = MatrixOverC.zero(n)
    for a in range(n):
        for b in range(n):
            col = a * n + b
            image = op.on_monomial((a, b))
            for (i, j), coeff in image.terms.items():
                if not (0 <= i < n and 0 <= j < n):
                    raise WindowEscapeError((a, b), (i, j), coeff)
                out.entries[i * n + j][col] = coeff
    return out


class RationalMatrix:
    """Sparse square matrix over Q: rows are {col: nonzero Fraction} maps."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, rows=None):
        self.dim = dim
        self.rows: list[dict[int, Fraction]] = (
            [dict(r) for r in rows] if rows is not None else [{} for _ in range(dim)]
        )

    @classmethod
    def zero(cls, dim: int) -> "RationalMatrix":
        return cls(dim)

    @classmethod
    def identity(cls, dim: int) -> "RationalMatrix":
        m = cls(dim)
        for i in range(dim):
            m.rows[i][i] = Fraction(1)
        return m

    @classmethod
    def from_entries(cls, dim: int, entries) -> "RationalMatrix":
        m = cls(dim)
        for (i, j), v in entries.items():
            v = Fraction(v)
            if v:
                m.rows[i][j] = v
        return m

    def _check_dim(self, other: "RationalMatrix"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __mul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        self._check_dim(other)
        out = RationalMatrix.zero(self.dim)
        for i, row in enumerate(self.rows):
            acc: dict[int, Fraction] = {}
            for k, a in row.items():
                for j, b in other.rows[k].items():
                    val = acc.get(j, Fraction(0)) + a * b
                    if val:
                        acc[j] = val
                    elif j in acc:
                        del acc[j]
            out.rows[i] = acc
        return out

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_dim(other)
        out = RationalMatrix(self.dim, self.rows)
        for i, row in enumerate(other.rows):
            for j, v in row.items():
                val = out.rows[i].get(j, Fraction(0)) + v
                if val:
                    out.rows[i][j] = val
                elif j in out.rows[i]:
                    del out.rows[i][j]
        return out

    def __neg__(self) -> "RationalMatrix":
        return self.scale(Fraction(-1))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self + (-other)

    def scale(self, coeff) -> "RationalMatrix":
        coeff = Fraction(coeff)
        if not coeff:
            return RationalMatrix.zero(self.dim)
        return RationalMatrix(
            self.dim, [{j: coeff * v for j, v in row.items()} for row in self.rows]
        )

    def transpose(self) -> "RationalMatrix":
        out = RationalMatrix.zero(self.dim)
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                out.rows[j][i] = v
        return out

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        """Kronecker product; index layout (i, k) -> i*other.dim + k."""
        q = other.dim
        out = RationalMatrix.zero(self.dim * q)
        for i, row in enumerate(self.rows):
            for j, a in row.items():
                for k, brow in enumerate(other.rows):
                    orow = out.rows[i * q + k]
                    for l, b in brow.items():
                        orow[j * q + l] = a * b
        return out

    def entry(self, row: int, col: int) -> Fraction:
        return self.rows[row].get(col, Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.rows)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def first_nonzero(self):
        """First (row, col, value) in (row, col) order, or None if zero."""
        for i, row in enumerate(self.rows):
            if row:
                j = min(row)
                return i, j, row[j]
        return None

    def to_json(self, n: int) -> dict:
        if n * n != self.dim:
            raise ValueError(f"matrix of dim {self.dim} is not a box({n}) restriction")
        entries = []
        for i in range(self.dim):
            row = self.rows[i]
            for j in sorted(row):
                entries.append({"row": i, "col": j, "value": str(row[j])})
        return {"n": n, "basis": BASIS_DOC, "entries": entries}


def permutation_matrix(dim: int, index_map) -> RationalMatrix:
    """Matrix sending basis vector j to basis vector index_map(j)."""
    out = RationalMatrix.zero(dim)
    for j in range(dim):
        out.rows[index_map(j)][j] = Fraction(1)
    return out


def nilpotency_of(matrix: RationalMatrix, bound: int):
    """Least k <= bound with M^k = 0, by iterated multiplication.

    Returns (index, witness) where witness is the first nonzero entry of
    M^(index-1), certifying minimality; (None, witness_of_M^bound) if no
    power up to the bound vanishes.
    """
    witness = (0, 0, Fraction(1))  # M^0 = identity
    power = matrix
    for k in range(1, bound + 1):
        if power.is_zero():
            return k, witness
        witness = power.first_nonzero()
        power = power * matrix
    return None, witness
