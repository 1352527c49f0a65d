"""Reduced Burau matrices and the Conway polynomial of a braid closure.

A word on n strands maps to an (n-1)x(n-1) matrix over the Laurent ring
in s.  The Conway polynomial of its closure is a normalized determinant:

    conway = laurent_to_z( (-1)^(n+1) * s^(-e) * det(M - Id) / bracket(n) )

where e is the exponent sum of the word and bracket(n) is the quantum
bracket.  For any actual braid word the division is exact and the
quotient is a polynomial in z = s^-1 - s, so a failure of either step
means the matrices or the normalization are wrong; it surfaces as
InternalInconsistency rather than a value error.  The sign, the monomial
and the bracket are pinned by fixed two-, three- and six-strand closures
in the test suite.
"""

from __future__ import annotations

import dataclasses
from functools import lru_cache

from .braid import ArtinWord, BandWord, IndexOutOfRange
from .polyring import (
    LaurentPoly,
    NotDivisible,
    NotInImage,
    ZPoly,
    fibonacci_poly,
    laurent_to_z,
    quantum_bracket,
)

__all__ = [
    "BurauMatrix",
    "InternalInconsistency",
    "burau_generator",
    "burau_rep",
    "conway_from_matrix",
    "conway_via_burau",
    "full_twist_difference",
]


class InternalInconsistency(RuntimeError):
    """A step that must succeed on braid input failed; the code is at fault."""


@dataclasses.dataclass(frozen=True)
class BurauMatrix:
    """A square matrix over the Laurent ring, tagged with its strand count.

    The size is n - 1, so the 2-strand group gets 1x1 matrices.
    """

    n: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self) -> None:
        size = self.n - 1
        if size < 1:
            raise ValueError(f"need at least 2 strands, got {self.n}")
        if len(self.entries) != size or any(len(row) != size for row in self.entries):
            raise ValueError(f"entries must form a {size}x{size} matrix")

    @property
    def size(self) -> int:
        return self.n - 1

    @classmethod
    def identity(cls, n: int) -> BurauMatrix:
        one = LaurentPoly.term(1)
        zero = LaurentPoly()
        size = n - 1
        return cls(
            n,
            tuple(
                tuple(one if r == c else zero for c in range(size))
                for r in range(size)
            ),
        )

    def __mul__(self, other: BurauMatrix) -> BurauMatrix:
        if not isinstance(other, BurauMatrix):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(
                f"cannot multiply matrices for {self.n} and {other.n} strands"
            )
        size = self.size
        cols = tuple(zip(*other.entries))
        rows = []
        for r in range(size):
            row = []
            for c in range(size):
                acc = LaurentPoly()
                for k in range(size):
                    a = self.entries[r][k]
                    if a:
                        acc = acc + a * cols[c][k]
                row.append(acc)
            rows.append(tuple(row))
        return BurauMatrix(self.n, tuple(rows))

    def __sub__(self, other: BurauMatrix) -> BurauMatrix:
        if not isinstance(other, BurauMatrix):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(
                f"cannot subtract matrices for {self.n} and {other.n} strands"
            )
        return BurauMatrix(
            self.n,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def det(self) -> LaurentPoly:
        """Cofactor expansion; the matrices here never exceed 5x5."""
        return _det(self.entries)


def _det(rows: tuple[tuple[LaurentPoly, ...], ...]) -> LaurentPoly:
    k = len(rows)
    if k == 1:
        return rows[0][0]
    total = LaurentPoly()
    for r in range(k):
        c = rows[r][0]
        if not c:
            continue
        minor = tuple(row[1:] for i, row in enumerate(rows) if i != r)
        term = c * _det(minor)
        total = total + term if r % 2 == 0 else total - term
    return total


def _adjugate_inverse(m: BurauMatrix) -> BurauMatrix:
    # Entries of the inverse are adj(m)/det(m); for a braid matrix every
    # division is exact over the Laurent ring.
    d = m.det()
    size = m.size
    if size == 1:
        return BurauMatrix(m.n, ((LaurentPoly.term(1).div_exact(d),),))
    rows = []
    for r in range(size):
        row = []
        for c in range(size):
            minor = tuple(
                tuple(entry for j, entry in enumerate(mrow) if j != r)
                for i, mrow in enumerate(m.entries)
                if i != c
            )
            cof = _det(minor)
            if (r + c) % 2:
                cof = -cof
            row.append(cof.div_exact(d))
        rows.append(tuple(row))
    return BurauMatrix(m.n, tuple(rows))


@lru_cache(maxsize=None)
def burau_generator(i: int, n: int, sign: int = 1) -> BurauMatrix:
    """The reduced Burau matrix of sigma_i^sign on n strands.

    The positive matrix is the identity outside column i: entry (i, i) is
    -s^2, flanked by s^2 above and 1 below where those rows exist.  The
    inverse is computed exactly and checked against the identity before
    being cached.
    """
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator index {i} out of range on {n} strands")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if sign == 1:
        grid = [
            [LaurentPoly({0: 1}) if r == c else LaurentPoly() for c in range(n - 1)]
            for r in range(n - 1)
        ]
        col = i - 1
        grid[col][col] = LaurentPoly({2: -1})
        if col - 1 >= 0:
            grid[col - 1][col] = LaurentPoly({2: 1})
        if col + 1 <= n - 2:
            grid[col + 1][col] = LaurentPoly.term(1)
        return BurauMatrix(n, tuple(tuple(row) for row in grid))
    forward = burau_generator(i, n, 1)
    inverse = _adjugate_inverse(forward)
    if forward * inverse != BurauMatrix.identity(n):
        raise InternalInconsistency(
            f"inverse of generator {i} on {n} strands failed its identity check"
        )
    return inverse


@lru_cache(maxsize=None)
def _band_letter_matrix(i: int, j: int, sign: int, n: int) -> BurauMatrix:
    word = BandWord(n, ((i, j, sign),)).to_artin()
    m = BurauMatrix.identity(n)
    for idx, s in word.letters:
        m = m * burau_generator(idx, n, s)
    return m


def burau_rep(word: ArtinWord | BandWord) -> BurauMatrix:
    """The matrix of a word: the product of its letters' matrices.

    The empty word maps to the identity.  Band letters go through their
    Artin expansion, cached per letter.
    """
    m = BurauMatrix.identity(word.n)
    if isinstance(word, BandWord):
        for i, j, s in word.letters:
            m = m * _band_letter_matrix(i, j, s, word.n)
        return m
    for i, s in word.letters:
        m = m * burau_generator(i, word.n, s)
    return m


def conway_from_matrix(m: BurauMatrix, exponent_sum: int) -> ZPoly:
    """Normalize a word's matrix into the Conway polynomial of its closure."""
    n = m.n
    numerator = (m - BurauMatrix.identity(n)).det() * LaurentPoly.term(
        (-1) ** (n + 1), -exponent_sum
    )
    try:
        quotient = numerator.div_exact(quantum_bracket(n))
        return laurent_to_z(quotient)
    except (NotDivisible, NotInImage) as exc:
        raise InternalInconsistency(
            f"Conway normalization failed on {n} strands: {exc}"
        ) from exc


def conway_via_burau(word: ArtinWord | BandWord) -> ZPoly:
    """The Conway polynomial of the closure of a braid word."""
    return conway_from_matrix(burau_rep(word), word.exponent_sum())


def full_twist_difference(e: int, k: int) -> ZPoly:
    """Conway shift caused by k full twists on 3 strands.

    For a 3-strand word with exponent sum e, appending the k-th power of
    the full twist changes the closure's Conway polynomial by

        z * sum_{i<k} (F_{e+6i+4} + F_{e+6i+2})

    in Fibonacci polynomials.  Checked against the matrix route in the
    tests for both signs of e.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    total = ZPoly()
    for i in range(k):
        total = total + fibonacci_poly(e + 6 * i + 4) + fibonacci_poly(e + 6 * i + 2)
    return ZPoly((0, 1)) * total
