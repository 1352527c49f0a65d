"""Braid words on n strands, in Artin and in band generators.

Artin letters are (index, sign) pairs for the adjacent transpositions
sigma_1 .. sigma_{n-1}.  Band letters are (i, j, sign) triples with
1 <= i < j <= n; the band generator on strands i and j is the conjugate

    sigma_{i,j} = (sigma_{j-2} ... sigma_i)^-1 sigma_{j-1} (sigma_{j-2} ... sigma_i)

which ``BandWord.to_artin`` expands letter by letter.  Words are stored
exactly as written; no free reduction or normal form is ever applied.
"""

from __future__ import annotations

import dataclasses

__all__ = [
    "ArtinWord",
    "BandWord",
    "ParseError",
    "IndexOutOfRange",
    "NotOrdered",
    "StrandMismatch",
    "parse_artin",
    "parse_band",
    "half_twist",
]


class ParseError(ValueError):
    """A word token could not be read."""


class IndexOutOfRange(ValueError):
    """A generator index does not fit the strand count."""


class NotOrdered(ValueError):
    """A band generator needs strand indices i < j."""


class StrandMismatch(ValueError):
    """Operands live in braid groups with different strand counts."""


@dataclasses.dataclass(frozen=True)
class ArtinWord:
    """A word in the Artin generators of the n-strand braid group."""

    n: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise IndexOutOfRange(f"need at least 2 strands, got {self.n}")
        object.__setattr__(self, "letters", tuple((i, s) for i, s in self.letters))
        for i, s in self.letters:
            if not 1 <= i <= self.n - 1:
                raise IndexOutOfRange(
                    f"generator index {i} out of range on {self.n} strands"
                )
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")

    def __len__(self) -> int:
        return len(self.letters)

    def exponent_sum(self) -> int:
        return sum(s for _, s in self.letters)

    def inverse(self) -> ArtinWord:
        return ArtinWord(self.n, tuple((i, -s) for i, s in reversed(self.letters)))

    def rotated(self, k: int) -> ArtinWord:
        """Cyclic left rotation by k letters; the closure is unchanged."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return ArtinWord(self.n, self.letters[k:] + self.letters[:k])

    def __mul__(self, other: ArtinWord) -> ArtinWord:
        if not isinstance(other, ArtinWord):
            return NotImplemented
        if other.n != self.n:
            raise StrandMismatch(
                f"cannot concatenate words on {self.n} and {other.n} strands"
            )
        return ArtinWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> ArtinWord:
        base = self if k >= 0 else self.inverse()
        return ArtinWord(self.n, base.letters * abs(k))

    def __str__(self) -> str:
        return " ".join(str(i * s) for i, s in self.letters)


@dataclasses.dataclass(frozen=True)
class BandWord:
    """A word in the band generators of the n-strand braid group."""

    n: int
    letters: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise IndexOutOfRange(f"need at least 2 strands, got {self.n}")
        object.__setattr__(
            self, "letters", tuple((i, j, s) for i, j, s in self.letters)
        )
        for i, j, s in self.letters:
            if i >= j:
                raise NotOrdered(f"band generator needs i < j, got {i}:{j}")
            if i < 1 or j > self.n:
                raise IndexOutOfRange(
                    f"band generator {i}:{j} out of range on {self.n} strands"
                )
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")

    def __len__(self) -> int:
        return len(self.letters)

    def is_positive(self) -> bool:
        return all(s == 1 for _, _, s in self.letters)

    def exponent_sum(self) -> int:
        # Each band letter is a conjugate of a single Artin letter, so the
        # conjugating parts cancel and only the middle sign counts.
        return sum(s for _, _, s in self.letters)

    def inverse(self) -> BandWord:
        return BandWord(self.n, tuple((i, j, -s) for i, j, s in reversed(self.letters)))

    def rotated(self, k: int) -> BandWord:
        """Cyclic left rotation by k letters; the closure is unchanged."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BandWord(self.n, self.letters[k:] + self.letters[:k])

    def __mul__(self, other: BandWord) -> BandWord:
        if not isinstance(other, BandWord):
            return NotImplemented
        if other.n != self.n:
            raise StrandMismatch(
                f"cannot concatenate words on {self.n} and {other.n} strands"
            )
        return BandWord(self.n, self.letters + other.letters)

    def to_artin(self) -> ArtinWord:
        """Expand every band letter into its Artin conjugate."""
        out: list[tuple[int, int]] = []
        for i, j, s in self.letters:
            out.extend((k, -1) for k in range(i, j - 1))
            out.append((j - 1, s))
            out.extend((k, 1) for k in range(j - 2, i - 1, -1))
        return ArtinWord(self.n, tuple(out))

    def __str__(self) -> str:
        return " ".join(
            (f"{i}:{j}" if s > 0 else f"-{i}:{j}") for i, j, s in self.letters
        )


def parse_artin(text: str, n: int) -> ArtinWord:
    """Read a whitespace-separated list of signed generator indices.

    "1 -2 1" on 3 strands is sigma_1 sigma_2^-1 sigma_1.  An empty string
    is the empty word.
    """
    letters: list[tuple[int, int]] = []
    for token in text.split():
        try:
            k = int(token)
        except ValueError:
            raise ParseError(f"bad Artin letter {token!r}") from None
        if k == 0:
            raise ParseError("bad Artin letter '0'")
        i = abs(k)
        if i > n - 1:
            raise IndexOutOfRange(
                f"letter {token!r} out of range on {n} strands"
            )
        letters.append((i, 1 if k > 0 else -1))
    return ArtinWord(n, tuple(letters))


def parse_band(text: str, n: int) -> BandWord:
    """Read a whitespace-separated list of band letters 'i:j' or '-i:j'.

    "1:6 -2:5" on 6 strands is sigma_{1,6} sigma_{2,5}^-1.
    """
    letters: list[tuple[int, int, int]] = []
    for token in text.split():
        body = token
        sign = 1
        if body.startswith("-"):
            sign = -1
            body = body[1:]
        i_text, colon, j_text = body.partition(":")
        if not colon:
            raise ParseError(f"bad band letter {token!r}: expected i:j")
        try:
            i, j = int(i_text), int(j_text)
        except ValueError:
            raise ParseError(f"bad band letter {token!r}") from None
        if i >= j:
            raise NotOrdered(f"band letter {token!r} needs i < j")
        if i < 1 or j > n:
            raise IndexOutOfRange(
                f"band letter {token!r} out of range on {n} strands"
            )
        letters.append((i, j, sign))
    return BandWord(n, tuple(letters))


def half_twist(n: int) -> ArtinWord:
    """The positive half twist (sigma_1)(sigma_2 sigma_1)...(sigma_{n-1} ... sigma_1).

    Its square generates the center of the braid group; on 3 strands the
    word is sigma_1 sigma_2 sigma_1.
    """
    letters = [(i, 1) for k in range(1, n) for i in range(k, 0, -1)]
    return ArtinWord(n, tuple(letters))
