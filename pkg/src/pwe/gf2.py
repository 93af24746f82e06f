"""Bit-packed GF(2) vectors, polynomials and matrices.

Everything is stored LSB-first in Python integers: bit i of the integer is
coordinate i of a vector, or the coefficient of x^i of a polynomial.  Row i
of a matrix is one such integer.  All values are immutable after
construction, so they can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "BitWord",
    "GF2Poly",
    "GF2Matrix",
    "poly_mul",
    "poly_divmod",
    "poly_gcd",
    "rref",
    "systematic_form",
    "parity_check_from_generator",
]


@dataclass(frozen=True)
class BitWord:
    """A fixed-length binary word; bit i of ``value`` is coordinate i."""

    length: int
    value: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if not 0 <= self.value < (1 << self.length):
            raise ValueError(f"value out of range for length {self.length}")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitWord":
        value = 0
        n = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError("bits must be 0 or 1")
            value |= b << n
            n += 1
        return cls(n, value)

    @classmethod
    def from_support(cls, length: int, positions: Iterable[int]) -> "BitWord":
        value = 0
        for p in positions:
            if not 0 <= p < length:
                raise IndexError(f"position {p} outside [0, {length})")
            value |= 1 << p
        return cls(length, value)

    def bit(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"bit index {i} outside [0, {self.length})")
        return (self.value >> i) & 1

    def bits(self) -> list[int]:
        return [(self.value >> i) & 1 for i in range(self.length)]

    def weight(self) -> int:
        return self.value.bit_count()

    def __xor__(self, other: "BitWord") -> "BitWord":
        if self.length != other.length:
            raise ValueError("length mismatch in XOR")
        return BitWord(self.length, self.value ^ other.value)

    def __and__(self, other: "BitWord") -> "BitWord":
        if self.length != other.length:
            raise ValueError("length mismatch in AND")
        return BitWord(self.length, self.value & other.value)

    def lex_key(self) -> tuple[int, ...]:
        """Sort key ordering words by their bit sequence (b_0, b_1, ...)."""
        return tuple(self.bits())

    def to_hex(self) -> str:
        """Lowercase hex, ceil(length/4) digits, most significant digit first."""
        ndigits = max(1, (self.length + 3) // 4)
        return format(self.value, f"0{ndigits}x")

    @classmethod
    def from_hex(cls, length: int, text: str) -> "BitWord":
        return cls(length, int(text, 16))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits())


@dataclass(frozen=True)
class GF2Poly:
    """Polynomial over GF(2); bit i of ``value`` is the coefficient of x^i."""

    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("polynomial value must be non-negative")

    @classmethod
    def zero(cls) -> "GF2Poly":
        return cls(0)

    @classmethod
    def one(cls) -> "GF2Poly":
        return cls(1)

    @classmethod
    def x_pow(cls, n: int) -> "GF2Poly":
        return cls(1 << n)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "GF2Poly":
        value = 0
        for e in exponents:
            value |= 1 << e
        return cls(value)

    def exponents(self) -> list[int]:
        return [i for i in range(self.value.bit_length()) if (self.value >> i) & 1]

    @property
    def degree(self) -> Optional[int]:
        """Degree, or None for the zero polynomial."""
        if self.value == 0:
            return None
        return self.value.bit_length() - 1

    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other: "GF2Poly") -> "GF2Poly":
        return GF2Poly(self.value ^ other.value)

    __sub__ = __add__

    def __str__(self) -> str:
        if self.value == 0:
            return "0"
        terms = []
        for e in self.exponents():
            terms.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
        return " + ".join(terms)


def poly_mul(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    """Carry-less product of two GF(2) polynomials."""
    av, bv = a.value, b.value
    if av == 0 or bv == 0:
        return GF2Poly(0)
    out = 0
    while bv:
        low = bv & -bv
        out ^= av * low  # multiplying by a power of two is a shift
        bv ^= low
    return GF2Poly(out)


def poly_divmod(a: GF2Poly, b: GF2Poly) -> tuple[GF2Poly, GF2Poly]:
    """Quotient and remainder of GF(2) polynomial long division."""
    if b.value == 0:
        raise ZeroDivisionError("division by zero polynomial")
    r = a.value
    bv = b.value
    db = bv.bit_length() - 1
    q = 0
    while r.bit_length() - 1 >= db and r:
        shift = (r.bit_length() - 1) - db
        q |= 1 << shift
        r ^= bv << shift
    return GF2Poly(q), GF2Poly(r)


def poly_mod(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    return poly_divmod(a, b)[1]


def poly_gcd(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    """Greatest common divisor by the Euclidean algorithm."""
    if a.value == 0 and b.value == 0:
        raise ValueError("gcd of two zero polynomials is undefined")
    x, y = a, b
    while y.value != 0:
        x, y = y, poly_mod(x, y)
    return x


def x_n_plus_1(n: int) -> GF2Poly:
    """x^n + 1 (equal to x^n - 1 over GF(2))."""
    return GF2Poly((1 << n) | 1)


@dataclass(frozen=True)
class GF2Matrix:
    """Dense binary matrix; row i is the integer ``rows[i]``, LSB = column 0."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        limit = 1 << self.ncols
        for r in self.rows:
            if not 0 <= r < limit:
                raise ValueError("row value exceeds column count")

    @classmethod
    def from_rows(cls, rows: Sequence[int], ncols: int) -> "GF2Matrix":
        return cls(tuple(rows), ncols)

    @classmethod
    def from_bit_lists(cls, rows: Sequence[Sequence[int]]) -> "GF2Matrix":
        ncols = len(rows[0]) if rows else 0
        packed = []
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            packed.append(sum(b << i for i, b in enumerate(row)))
        return cls(tuple(packed), ncols)

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        if not 0 <= j < self.ncols:
            raise IndexError("column index out of range")
        return (self.rows[i] >> j) & 1

    def row_word(self, i: int) -> BitWord:
        return BitWord(self.ncols, self.rows[i])

    def to_bit_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def mul_vector(self, v: int) -> int:
        """v (row vector of nrows bits) times this matrix, over GF(2)."""
        out = 0
        vv = v
        i = 0
        while vv:
            if vv & 1:
                out ^= self.rows[i]
            vv >>= 1
            i += 1
        return out

    def syndrome(self, word: int) -> int:
        """word · rowsᵀ: bit i of the result is parity(word AND rows[i])."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((word & r).bit_count() & 1) << i
        return out


def rref(M: GF2Matrix) -> tuple[GF2Matrix, int, list[int]]:
    """Reduced row-echelon form over GF(2).

    Returns (R, rank, pivot_columns).  Pivots are chosen at the lowest
    available row/column index so the output is deterministic.
    """
    rows = list(M.rows)
    nrows = len(rows)
    pivot_cols: list[int] = []
    pr = 0
    for col in range(M.ncols):
        if pr == nrows:
            break
        mask = 1 << col
        found = -1
        for i in range(pr, nrows):
            if rows[i] & mask:
                found = i
                break
        if found < 0:
            continue
        rows[pr], rows[found] = rows[found], rows[pr]
        piv = rows[pr]
        for i in range(nrows):
            if i != pr and rows[i] & mask:
                rows[i] ^= piv
        pivot_cols.append(col)
        pr += 1
    return GF2Matrix(tuple(rows), M.ncols), len(pivot_cols), pivot_cols


def permute_columns(M: GF2Matrix, perm: Sequence[int]) -> GF2Matrix:
    """Column j of the result is column perm[j] of M."""
    rows = tuple(permute_word(r, perm) for r in M.rows)
    return GF2Matrix(rows, M.ncols)


def permute_word(value: int, perm: Sequence[int]) -> int:
    """Bit j of the result is bit perm[j] of value."""
    out = 0
    for j, p in enumerate(perm):
        out |= ((value >> p) & 1) << j
    return out


def invert_permutation(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for j, p in enumerate(perm):
        inv[p] = j
    return inv


def systematic_form(G: GF2Matrix) -> tuple[GF2Matrix, list[int]]:
    """Bring a full-rank generator matrix to [I_k | P] form.

    Returns (G_sys, column_permutation) where column j of the permuted code
    is column column_permutation[j] of the original; pivot columns are moved
    to the front in order.  Raises ValueError on rank-deficient input.
    """
    R, rank, pivots = rref(G)
    if rank != G.nrows:
        raise ValueError(f"generator matrix is rank-deficient: rank {rank} < {G.nrows} rows")
    nonpivots = [j for j in range(G.ncols) if j not in set(pivots)]
    perm = list(pivots) + nonpivots
    return permute_columns(R, perm), perm


def parity_check_from_generator(G_sys: GF2Matrix) -> GF2Matrix:
    """H = [Pᵀ | I_{n-k}] for G_sys = [I_k | P]; G_sys · Hᵀ = 0."""
    k = G_sys.nrows
    n = G_sys.ncols
    for i in range(k):
        if (G_sys.rows[i] & ((1 << k) - 1)) != (1 << i):
            raise ValueError("generator matrix is not in [I | P] systematic form")
    m = n - k
    h_rows = []
    for j in range(m):
        # Column k+j of G_sys becomes the first k bits of H row j.
        row = 0
        for i in range(k):
            row |= ((G_sys.rows[i] >> (k + j)) & 1) << i
        row |= 1 << (k + j)
        h_rows.append(row)
    return GF2Matrix(tuple(h_rows), n)
