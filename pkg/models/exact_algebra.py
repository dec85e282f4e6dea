"""Exact rational linear algebra over numpy object arrays of Fractions.

Every matrix entry is a ``fractions.Fraction``; nothing in this module touches
floating point. Dense matrices wrap a read-only numpy array with ``dtype=object``
so that numpy's vectorised operators (``@``, slicing, ``np.roll``, ``np.outer``)
do the bookkeeping while Python's big integers keep the arithmetic exact.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

logger = logging.getLogger(__name__)

_RATIONAL_PATTERN = re.compile(r"^-?\d+(/[1-9]\d*)?$")
_to_fraction = np.frompyfunc(Fraction, 1, 1)


class InvalidInputError(ValueError):
    """Raised when an operation is called outside its domain."""


class IdentityViolation(AssertionError):
    """Raised when a computed quantity disagrees with its closed form."""

    def __init__(self, check, message):
        super().__init__(f"{check}: {message}")
        self.check = check


def rat_str(x):
    """Serialize a rational as ``p/q`` (``q`` omitted when it is 1)."""
    return str(Fraction(x))


def parse_rat(text):
    """Parse the ``p/q`` form written by :func:`rat_str`."""
    if not isinstance(text, str):
        raise InvalidInputError(f"Rationals are written as strings, got {text!r}")
    text = text.strip()
    if not _RATIONAL_PATTERN.match(text):
        raise InvalidInputError(f"Not a rational in p/q form: {text!r}")
    return Fraction(text)


def vec(values):
    """Row or column vectors are plain tuples of Fractions."""
    return tuple(Fraction(x) for x in values)


class RatMatrix:
    """Dense immutable matrix of Fractions."""

    __slots__ = ("_a",)

    def __init__(self, values):
        arr = values if isinstance(values, np.ndarray) else np.array(values, dtype=object)
        if arr.dtype != object:
            # numpy scalars would leak fixed-width integers into the Fractions
            arr = np.array(arr.tolist(), dtype=object)
        if arr.ndim != 2:
            raise InvalidInputError(f"RatMatrix needs a 2-d array, got shape {arr.shape}")
        arr = _to_fraction(arr) if arr.size else arr.astype(object)
        arr.flags.writeable = False
        self._a = arr

    # construction -------------------------------------------------------
    @classmethod
    def zeros(cls, rows, cols):
        return cls(np.full((rows, cols), Fraction(0), dtype=object))

    @classmethod
    def ones(cls, rows, cols):
        return cls(np.full((rows, cols), Fraction(1), dtype=object))

    @classmethod
    def identity(cls, n):
        arr = np.full((n, n), Fraction(0), dtype=object)
        arr[np.diag_indices(n)] = Fraction(1)
        return cls(arr)

    @classmethod
    def diag(cls, values):
        n = len(values)
        arr = np.full((n, n), Fraction(0), dtype=object)
        arr[np.diag_indices(n)] = list(vec(values))
        return cls(arr)

    @classmethod
    def column(cls, values):
        return cls([[x] for x in vec(values)])

    @classmethod
    def row_vector(cls, values):
        return cls([list(vec(values))])

    @classmethod
    def outer(cls, a, b):
        return cls(np.outer(np.array(vec(a), dtype=object), np.array(vec(b), dtype=object)))

    @classmethod
    def bordered(cls, corner, top, left, block):
        """Assemble ``[[corner, top], [left, block]]`` with the hub at index 0."""
        if len(top) != block.cols or len(left) != block.rows:
            raise InvalidInputError("border lengths do not match the block")
        arr = np.empty((block.rows + 1, block.cols + 1), dtype=object)
        arr[0, 0] = Fraction(corner)
        arr[0, 1:] = list(vec(top))
        arr[1:, 0] = list(vec(left))
        arr[1:, 1:] = block.array
        return cls(arr)

    # access -------------------------------------------------------------
    @property
    def array(self):
        return self._a

    @property
    def rows(self):
        return self._a.shape[0]

    @property
    def cols(self):
        return self._a.shape[1]

    @property
    def shape(self):
        return self._a.shape

    @property
    def entries(self):
        return tuple(self._a.flat)

    @property
    def T(self):
        return RatMatrix(self._a.T.copy())

    def transpose(self):
        return self.T

    def __getitem__(self, index):
        item = self._a[index]
        if isinstance(item, np.ndarray):
            return RatMatrix(item.copy()) if item.ndim == 2 else tuple(item)
        return item

    def row(self, i):
        return tuple(self._a[i])

    def col(self, j):
        return tuple(self._a[:, j])

    def to_rows(self):
        return [list(r) for r in self._a]

    def with_entry(self, i, j, value):
        arr = self._a.copy()
        arr[i, j] = Fraction(value)
        return RatMatrix(arr)

    # arithmetic ---------------------------------------------------------
    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise InvalidInputError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same_shape(other)
        return RatMatrix(self._a + other._a)

    def __sub__(self, other):
        self._check_same_shape(other)
        return RatMatrix(self._a - other._a)

    def __neg__(self):
        return RatMatrix(-self._a)

    def scale(self, c):
        return RatMatrix(self._a * Fraction(c))

    def __mul__(self, c):
        if isinstance(c, RatMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise InvalidInputError(f"cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0:
            return RatMatrix.zeros(self.rows, other.cols)
        return RatMatrix(self._a @ other._a)

    def apply(self, vector):
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise InvalidInputError(f"vector of length {len(vector)} against {self.shape}")
        return tuple(self._a @ np.array(vec(vector), dtype=object))

    def left_apply(self, vector):
        """Row vector times matrix."""
        if len(vector) != self.rows:
            raise InvalidInputError(f"vector of length {len(vector)} against {self.shape}")
        return tuple(np.array(vec(vector), dtype=object) @ self._a)

    # predicates ---------------------------------------------------------
    @property
    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        return self.is_square and bool(np.array_equal(self._a, self._a.T))

    def is_zero(self):
        return all(x == 0 for x in self._a.flat)

    def max_abs(self):
        return max((abs(x) for x in self._a.flat), default=Fraction(0))

    def denominator_lcm(self):
        return lcm(1, *(x.denominator for x in self._a.flat))

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._a, other._a))

    __hash__ = None

    def __repr__(self):
        body = "; ".join(", ".join(rat_str(x) for x in r) for r in self._a)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"


def block_diag_zero(block):
    """blockdiag(0, block)."""
    zeros = [Fraction(0)] * block.rows
    return RatMatrix.bordered(0, zeros, zeros, block)


@dataclass(frozen=True)
class Circulant:
    """Circulant matrix stored by its first row."""

    first_row: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.first_row) == 0:
            raise InvalidInputError("a circulant needs a nonempty first row")
        object.__setattr__(self, "first_row", vec(self.first_row))

    @property
    def order(self):
        return len(self.first_row)

    def dense(self):
        return circ_to_dense(self)

    def __matmul__(self, other):
        return Circulant(circ_mul_row(self.first_row, other))


def circ_to_dense(c):
    """Row i of the result is the first row cyclically shifted i places to the right."""
    first = np.array(c.first_row, dtype=object)
    return RatMatrix(np.array([np.roll(first, i) for i in range(c.order)], dtype=object))


def circ_mul_row(a, b):
    """Return ``a · dense(b)``; the first row of Circ(a)·b."""
    if len(a) != b.order:
        raise InvalidInputError(f"row of length {len(a)} against circulant of order {b.order}")
    return b.dense().left_apply(a)


def _integer_rows(m):
    """Scale each row by the lcm of its denominators; rank is unchanged."""
    out = np.empty(m.shape, dtype=object)
    for i, r in enumerate(m.array):
        s = lcm(1, *(x.denominator for x in r))
        out[i] = [(x * s).numerator for x in r]
    return out


def rank(m):
    """Exact rank by fraction-free (Bareiss) elimination.

    The pivot is the first nonzero entry of the current column at or below the
    pivot row; every division by the previous pivot is exact.
    """
    a = _integer_rows(m)
    rows, cols = a.shape
    r, prev = 0, 1
    for c in range(cols):
        if r == rows:
            break
        nonzero = [i for i in range(r, rows) if a[i, c] != 0]
        if not nonzero:
            continue
        p = nonzero[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        piv = a[r, c]
        if r + 1 < rows and c + 1 < cols:
            a[r + 1:, c + 1:] = (piv * a[r + 1:, c + 1:] - np.outer(a[r + 1:, c], a[r, c + 1:])) // prev
        a[r + 1:, c] = 0
        prev = piv
        r += 1
    return r


def charpoly(m):
    """Coefficients of det(λI − m), highest degree first (leading 1).

    Faddeev–LeVerrier runs on the integer matrix ``s·m`` (``s`` the lcm of all
    denominators) so the recurrence divides exactly; coefficient k is then
    rescaled by ``s**k``.
    """
    if not m.is_square:
        raise InvalidInputError(f"charpoly needs a square matrix, got {m.shape}")
    n = m.rows
    s = m.denominator_lcm()
    b = np.frompyfunc(lambda x: (x * s).numerator, 1, 1)(m.array) if n else m.array
    eye = np.zeros((n, n), dtype=object)
    eye[np.diag_indices(n)] = 1
    coeffs = [1]
    acc = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        acc = b @ acc + coeffs[-1] * eye
        trace = (b @ acc).diagonal().sum()
        coeffs.append(-trace // k)
    return tuple(Fraction(c, s ** k) for k, c in enumerate(coeffs))


def is_psd_symmetric(m):
    """Decide positive semidefiniteness of a symmetric matrix exactly.

    Writing the characteristic polynomial as λⁿ − c₁λⁿ⁻¹ + c₂λⁿ⁻² − …, the cₖ are
    the elementary symmetric functions of the (real) eigenvalues, and all
    eigenvalues are nonnegative iff every cₖ is.
    """
    if not m.is_symmetric():
        raise InvalidInputError("is_psd_symmetric needs a symmetric matrix")
    coeffs = charpoly(m)
    return all((-1) ** k * a >= 0 for k, a in enumerate(coeffs))


def rref(m):
    """Reduced row echelon form and the pivot columns."""
    a = m.array.copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = [i for i in range(r, rows) if a[i, c] != 0]
        if not nonzero:
            continue
        p = nonzero[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = a[r] / a[r, c]
        others = [i for i in range(rows) if i != r and a[i, c] != 0]
        if others:
            a[others] = a[others] - np.outer(a[others, c], a[r])
        pivots.append(c)
        r += 1
    return RatMatrix(a), tuple(pivots)


def inverse(m):
    """Exact Gauss–Jordan inverse."""
    if not m.is_square:
        raise InvalidInputError(f"inverse needs a square matrix, got {m.shape}")
    n = m.rows
    reduced, pivots = rref(RatMatrix(np.hstack([m.array, RatMatrix.identity(n).array])))
    if pivots[:n] != tuple(range(n)):
        raise InvalidInputError("matrix is singular")
    return reduced[:, n:]


def pinv_oracle_stages(m):
    """Every intermediate of the rank-factorization pseudoinverse, keyed by name.

    F holds the pivot columns of m and G the nonzero rows of its reduced row
    echelon form, so m† = G′(GG′)⁻¹(F′F)⁻¹F′. The result is under ``"pinv"``.
    """
    reduced, pivots = rref(m)
    r = len(pivots)
    if r == 0:
        return {"rref": reduced, "pinv": RatMatrix.zeros(m.cols, m.rows)}
    f = m[:, list(pivots)]
    g = reduced[:r, :]
    stages = {"rref": reduced, "GG'": g @ g.T, "F'F": f.T @ f}
    stages["(GG')^-1"] = inverse(stages["GG'"])
    stages["(F'F)^-1"] = inverse(stages["F'F"])
    stages["G'(GG')^-1"] = g.T @ stages["(GG')^-1"]
    stages["(F'F)^-1F'"] = stages["(F'F)^-1"] @ f.T
    stages["pinv"] = stages["G'(GG')^-1"] @ stages["(F'F)^-1F'"]
    logger.debug(f"oracle pseudoinverse of {m.shape} matrix with rank {r}")
    return stages


def mp_pinv_oracle(m):
    """Moore–Penrose inverse from a rank factorization m = F·G."""
    return pinv_oracle_stages(m)["pinv"]


@dataclass(frozen=True)
class PinvReport:
    p1: bool
    p2: bool
    p3: bool
    p4: bool
    max_abs_residual: Fraction

    @property
    def ok(self):
        return self.p1 and self.p2 and self.p3 and self.p4


def penrose_check(a, k):
    """Evaluate AKA = A, KAK = K, (AK)′ = AK and (KA)′ = KA exactly."""
    if k.shape != (a.cols, a.rows):
        raise InvalidInputError(f"candidate of shape {k.shape} for matrix of shape {a.shape}")
    ak = a @ k
    ka = k @ a
    residuals = [ak @ a - a, ka @ k - k, ak.T - ak, ka.T - ka]
    flags = [res.is_zero() for res in residuals]
    return PinvReport(*flags, max_abs_residual=max(res.max_abs() for res in residuals))
