"""Exact scalars and dense matrices.

Scalars are either :class:`fractions.Fraction` or :class:`QuadScalar`
(``a + b*sqrt(d)`` with rational ``a, b``).  Every matrix routine here is
written against the field operations only, so both kinds work wherever a
division is needed.  Nothing in this module touches floating point.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


def _is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


class QuadScalar:
    """An element ``a + b*sqrt(d)`` of the real quadratic field Q(sqrt d).

    ``d = 0`` marks a pure rational that can combine with any radicand.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            d = 0
        elif not _is_squarefree(d):
            raise ValueError(f"radicand must be square-free and >= 2, got {d}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadScalar is immutable")

    @staticmethod
    def sqrt(d: int) -> "QuadScalar":
        return QuadScalar(0, 1, d)

    def _coerce(self, other) -> "QuadScalar | None":
        if isinstance(other, QuadScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadScalar(other)
        return None

    def _radicand(self, other: "QuadScalar") -> int:
        if self.d and other.d and self.d != other.d:
            raise ValueError(f"mixed radicands {self.d} and {other.d}")
        return self.d or other.d

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a + o.a, self.b + o.b, self._radicand(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a - o.a, self.b - o.b, self._radicand(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._radicand(o)
        return QuadScalar(self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadScalar":
        return QuadScalar(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        num = self * o.conjugate()
        return QuadScalar(num.a / n, num.b / n, num.d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite signs: compare a^2 against d*b^2
        diff = self.a * self.a - self.d * self.b * self.b
        return sa * _sign(diff)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * (self.d ** 0.5)

    def __repr__(self):
        if self.b == 0:
            return f"QuadScalar({self.a})"
        return f"QuadScalar({self.a} + {self.b}*sqrt({self.d}))"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt({self.d})"


def sign(x) -> int:
    """Exact sign of a Fraction, int or QuadScalar."""
    if isinstance(x, QuadScalar):
        return x.sign()
    return _sign(Fraction(x))


def to_scalar(x):
    """Parse ints, Fractions and strings such as ``"3/4"`` into Fractions."""
    if isinstance(x, (QuadScalar, Fraction)):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point entries are not accepted")
    return Fraction(x)


class Matrix:
    """Immutable dense matrix over Fractions or QuadScalars."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(to_scalar(v) for v in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        return cls([[v] for v in values], 1)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def transpose(self) -> "Matrix":
        if not self.nrows:
            return Matrix([[] for _ in range(self.ncols)], 0)
        return Matrix(zip(*self.rows), self.nrows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(([a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(([a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix(([-a for a in r] for r in self.rows), self.ncols)

    def scale(self, c) -> "Matrix":
        return Matrix(([c * a for a in r] for r in self.rows), self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.transpose().rows if other.ncols else ()
        out = []
        for r in self.rows:
            out.append([sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols])
        return Matrix(out, other.ncols)

    def is_zero(self) -> bool:
        return all(not v for r in self.rows for v in r)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]


def _rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of a mutable copy; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [v / piv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    rows, piv = _rref(list(M.rows))
    return Matrix(rows, M.ncols), piv


def rank(M: Matrix) -> int:
    return len(_rref(list(M.rows))[1])


def nullspace(M: Matrix) -> list[Matrix]:
    """Exact basis of ``{x : M x = 0}`` as column vectors.

    One basis vector per free column of the reduced echelon form, with a 1
    in that free position.
    """
    n = M.ncols
    if M.nrows == 0:
        return [Matrix.column([int(i == j) for i in range(n)]) for j in range(n)]
    rows, pivots = _rref(list(M.rows))
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        x = [Fraction(0)] * n
        x[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -rows[r][free]
        basis.append(Matrix.column(x))
    return basis


def inverse(M: Matrix) -> Matrix:
    """Inverse of a square matrix by Gauss-Jordan; raises on singular input."""
    if not M.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = M.nrows
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M.rows)]
    rows, piv = _rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix((r[n:] for r in rows), n)


def unitriangular_inverse(M: Matrix) -> Matrix:
    """Inverse of an upper unitriangular integer matrix by back substitution.

    Stays in the integers; the result is again upper unitriangular.
    """
    n = M.nrows
    a = [[int(v) for v in r] for r in M.rows]
    for i in range(n):
        if a[i][i] != 1 or any(a[i][j] for j in range(i)):
            raise ValueError("matrix is not upper unitriangular with integer entries")
    inv = [[0] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        inv[i][i] = 1
        for j in range(i + 1, n):
            # row i of (A * inv) at column j must vanish
            s = 0
            for k in range(i + 1, j + 1):
                if a[i][k] and inv[k][j]:
                    s += a[i][k] * inv[k][j]
            inv[i][j] = -s
    return Matrix(inv, n)


def determinant(M: Matrix):
    if not M.is_square():
        raise ValueError("determinant of a non-square matrix")
    m = [list(r) for r in M.rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        piv = m[c][c]
        det = det * piv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def char_poly(M: Matrix) -> tuple[int, ...]:
    """Characteristic polynomial ``det(xI - M)`` of an integer matrix.

    Coefficients are returned highest degree first, so the leading entry is
    always 1.  Reduction to upper Hessenberg form by similarity, then the
    standard determinant recurrence on the Hessenberg matrix.
    """
    if not M.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = M.nrows
    h = [[Fraction(v) if not isinstance(v, QuadScalar) else v for v in r] for r in M.rows]
    for v in (x for r in h for x in r):
        if isinstance(v, QuadScalar) or v.denominator != 1:
            raise ValueError("char_poly expects an integer matrix")
    for c in range(n - 2):
        p = next((i for i in range(c + 1, n) if h[i][c]), None)
        if p is None:
            continue
        if p != c + 1:
            h[c + 1], h[p] = h[p], h[c + 1]
            for row in h:
                row[c + 1], row[p] = row[p], row[c + 1]
        piv = h[c + 1][c]
        for i in range(c + 2, n):
            if not h[i][c]:
                continue
            f = h[i][c] / piv
            # row_i -= f * row_{c+1}; then col_{c+1} += f * col_i keeps similarity
            ri, rp = h[i], h[c + 1]
            for k in range(n):
                if rp[k]:
                    ri[k] -= f * rp[k]
            for row in h:
                if row[i]:
                    row[c + 1] += f * row[i]
    # p_k(x) = det(xI - H_k) for the leading k x k block, low-degree-first lists
    polys: list[list[Fraction]] = [[Fraction(1)]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        # (x - h[k-1][k-1]) * p_{k-1}
        cur = [Fraction(0)] + prev
        for i, c in enumerate(prev):
            cur[i] -= h[k - 1][k - 1] * c
        prod = Fraction(1)
        for i in range(1, k):
            prod *= h[k - i][k - i - 1]
            if not prod:
                break
            coef = prod * h[k - i - 1][k - 1]
            if coef:
                for j, c in enumerate(polys[k - i - 1]):
                    cur[j] -= coef * c
        polys.append(cur)
    out = polys[n]
    if any(c.denominator != 1 for c in out):
        raise ArithmeticError("non-integral characteristic polynomial coefficient")
    return tuple(int(c) for c in reversed(out))


def poly_eval_matrix(coeffs: Sequence[int], M: Matrix) -> Matrix:
    """Evaluate a polynomial (highest degree first) at a square matrix by Horner."""
    n = M.nrows
    acc = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for c in coeffs:
        acc = acc @ M + ident.scale(c)
    return acc


def poly_str(coeffs: Sequence[int], var: str = "x") -> str:
    deg = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        p = deg - i
        if c == 0:
            continue
        mag = abs(c)
        if p == 0:
            body = str(mag)
        elif p == 1:
            body = var if mag == 1 else f"{mag}{var}"
        else:
            body = f"{var}^{p}" if mag == 1 else f"{mag}{var}^{p}"
        sgn = "-" if c < 0 else "+"
        terms.append((sgn, body))
    if not terms:
        return "0"
    first_sgn, first = terms[0]
    out = ("-" if first_sgn == "-" else "") + first
    for sgn, body in terms[1:]:
        out += f" {sgn} {body}"
    return out


class DefKind(enum.Enum):
    POSITIVE_DEFINITE = "positive_definite"
    POSITIVE_SEMIDEFINITE = "positive_semidefinite"
    INDEFINITE = "indefinite"


@dataclass(frozen=True)
class Definiteness:
    kind: DefKind
    corank: int = 0


def definiteness(S: Matrix) -> Definiteness:
    """Classify a symmetric rational matrix as PD, PSD (with corank) or not PSD.

    Symmetric elimination with diagonal pivots.  A zero pivot whose row is not
    zero, or any negative pivot, means the form takes a negative value.  The
    PSD corank is counted from the zero pivots and cross-checked against the
    nullspace dimension.
    """
    if not S.is_symmetric():
        raise ValueError("definiteness expects a symmetric matrix")
    n = S.nrows
    m = [list(r) for r in S.rows]
    alive = list(range(n))
    zeros = 0
    while alive:
        k = alive[0]
        piv = m[k][k]
        s = sign(piv)
        if s < 0:
            return Definiteness(DefKind.INDEFINITE)
        if s == 0:
            if any(m[k][j] for j in alive):
                return Definiteness(DefKind.INDEFINITE)
            zeros += 1
            alive.pop(0)
            continue
        alive.pop(0)
        rk = m[k]
        for i in alive:
            if not rk[i]:
                continue
            f = rk[i] / piv
            ri = m[i]
            for j in alive:
                if rk[j]:
                    ri[j] -= f * rk[j]
    if zeros == 0:
        return Definiteness(DefKind.POSITIVE_DEFINITE)
    kernel = len(nullspace(S))
    if kernel != zeros:
        raise ArithmeticError(f"corank mismatch: {zeros} zero pivots vs kernel {kernel}")
    return Definiteness(DefKind.POSITIVE_SEMIDEFINITE, zeros)


def int_definiteness(rows: Sequence[Sequence[int]]) -> Definiteness:
    """Same classification as :func:`definiteness` for symmetric integer matrices.

    Fraction-free (Bareiss) elimination: the pivots are leading principal
    minors, so they stay integral and have the signs of the rational pivots.
    Rows that are entirely zero are dropped and counted toward the corank.
    """
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m) or any(m[i][j] != m[j][i] for i in range(n) for j in range(i)):
        raise ValueError("int_definiteness expects a symmetric square matrix")
    alive = list(range(n))
    prev = 1
    zeros = 0
    while alive:
        k = alive.pop(0)
        rk = m[k]
        piv = rk[k]
        if piv < 0:
            return Definiteness(DefKind.INDEFINITE)
        if piv == 0:
            if any(rk[j] for j in alive):
                return Definiteness(DefKind.INDEFINITE)
            zeros += 1
            continue
        for i in alive:
            ri = m[i]
            a = ri[k]
            for j in alive:
                ri[j] = (piv * ri[j] - a * rk[j]) // prev
        prev = piv
    if zeros == 0:
        return Definiteness(DefKind.POSITIVE_DEFINITE)
    return Definiteness(DefKind.POSITIVE_SEMIDEFINITE, zeros)
