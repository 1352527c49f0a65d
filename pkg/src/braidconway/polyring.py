"""Exact integer polynomial arithmetic for braid-closure invariants.

Two coefficient domains appear throughout the package:

* ``LaurentPoly``: Laurent polynomials in the matrix variable s with
  integer coefficients, stored sparsely as exponent -> coefficient.
* ``ZPoly``: ordinary polynomials in the skein variable z, stored as a
  dense ascending coefficient tuple.

The two are linked by the substitution z = s^-1 - s.  ``laurent_to_z``
rewrites a Laurent polynomial as a polynomial in z when one exists, and
``fibonacci_poly`` supplies the Fibonacci polynomials whose shifted sums
express the symmetric combinations s^-n + (-s)^n in the z variable.

Coefficients are Python ints throughout, so nothing overflows or rounds.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = [
    "LaurentPoly",
    "ZPoly",
    "NotDivisible",
    "NotInImage",
    "Z",
    "Z_IN_S",
    "quantum_bracket",
    "fibonacci_poly",
    "laurent_to_z",
    "zpoly_to_laurent",
]


class NotDivisible(ArithmeticError):
    """Exact Laurent division left a nonzero remainder."""


class NotInImage(ArithmeticError):
    """The Laurent polynomial is not a polynomial in s^-1 - s."""


class LaurentPoly:
    """An integer Laurent polynomial in s.

    The coefficient map is canonical (zero coefficients are never stored),
    so two values are equal exactly when their maps are equal.  Instances
    are immutable by convention; every operation returns a new object.

    >>> p = LaurentPoly({-1: 1, 1: -1})
    >>> str(p * p)
    's^-2 - 2 + s^2'
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self._coeffs: dict[int, int] = (
            {e: c for e, c in coeffs.items() if c} if coeffs else {}
        )

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> LaurentPoly:
        """The monomial coeff * s^exp."""
        return cls({exp: coeff})

    def __getitem__(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def items(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return max(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) - c
        return LaurentPoly(out)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers are not defined here")
        out = LaurentPoly.term(1)
        for _ in range(k):
            out = out * self
        return out

    def div_exact(self, den: LaurentPoly) -> LaurentPoly:
        """Exact quotient q with q * den == self.

        Long division from the lowest exponent.  Each step cancels the
        remainder's lowest term, so its minimum exponent strictly rises
        while its maximum never does; the spread shrinks to a point or
        drops below den's spread, and the latter raises NotDivisible.
        """
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly()
        den_lo = den.min_exp
        den_spread = den.max_exp - den_lo
        den_lead = den[den_lo]
        quot: dict[int, int] = {}
        rem = self
        while rem:
            lo = rem.min_exp
            if rem.max_exp - lo < den_spread:
                raise NotDivisible(f"({self}) is not divisible by ({den})")
            c, r = divmod(rem[lo], den_lead)
            if r:
                raise NotDivisible(f"({self}) is not divisible by ({den})")
            e = lo - den_lo
            quot[e] = c
            rem = rem - den * LaurentPoly({e: c})
        return LaurentPoly(quot)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "s" if e == 1 else f"s^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


class ZPoly:
    """An integer polynomial in z: dense ascending coefficients.

    Trailing zeros are trimmed on construction, so the zero polynomial is
    the empty tuple and reports degree -1.

    >>> ZPoly((1, 0, -1)).render()
    '1 - z^2'
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: tuple[int, ...] | list[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree as length - 1; the zero polynomial reports -1."""
        return len(self._coeffs) - 1

    def is_nonneg(self) -> bool:
        """True when every coefficient is >= 0."""
        return all(c >= 0 for c in self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> ZPoly:
        return ZPoly([-c for c in self._coeffs])

    def __add__(self, other: ZPoly) -> ZPoly:
        if not isinstance(other, ZPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ZPoly(out)

    def __sub__(self, other: ZPoly) -> ZPoly:
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: ZPoly | int) -> ZPoly:
        if isinstance(other, int):
            return ZPoly([c * other for c in self._coeffs])
        if not isinstance(other, ZPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return ZPoly()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return ZPoly(out)

    __rmul__ = __mul__

    def render(self) -> str:
        """Human form in ascending degree, e.g. '1 - z^2 + 2z^3'."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for d, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "z" if d == 1 else f"z^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"ZPoly('{self.render()}')"


#: The polynomial z itself.
Z = ZPoly((0, 1))

#: The Laurent image of z under the substitution z = s^-1 - s.
Z_IN_S = LaurentPoly({-1: 1, 1: -1})


def quantum_bracket(n: int) -> LaurentPoly:
    """The balanced geometric sum s^(1-n) + s^(3-n) + ... + s^(n-1).

    Satisfies quantum_bracket(n) * (s^-1 - s) == s^-n - s^n, which is how
    the tests pin it down.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return LaurentPoly({2 * i - (n - 1): 1 for i in range(n)})


_FIB: list[ZPoly] = [ZPoly(), ZPoly((1,))]


def fibonacci_poly(n: int) -> ZPoly:
    """The n-th Fibonacci polynomial, defined for every integer n.

    F_0 = 0, F_1 = 1, F_n = z*F_{n-1} + F_{n-2}; negative indices follow
    the reflection F_{-n} = (-1)^(n+1) * F_n.
    """
    if n < 0:
        flipped = fibonacci_poly(-n)
        return flipped if n % 2 else -flipped
    while len(_FIB) <= n:
        _FIB.append(Z * _FIB[-1] + _FIB[-2])
    return _FIB[n]


@lru_cache(maxsize=None)
def _z_in_s_power(d: int) -> LaurentPoly:
    if d == 0:
        return LaurentPoly.term(1)
    return _z_in_s_power(d - 1) * Z_IN_S


def laurent_to_z(p: LaurentPoly) -> ZPoly:
    """Rewrite p as a polynomial in z = s^-1 - s, if one exists.

    Greedy elimination: the lowest term c*s^-d of the remainder can only
    come from c*z^d, so emit that and subtract c*(s^-1 - s)^d.  The
    remainder's minimum exponent strictly rises each round; if it ever
    becomes positive no cancellation is possible and NotInImage is raised.
    """
    coeffs: dict[int, int] = {}
    rem = p
    while rem:
        lo = rem.min_exp
        if lo > 0:
            raise NotInImage(f"leftover ({rem}) has only positive powers of s")
        d = -lo
        c = rem[lo]
        coeffs[d] = c
        rem = rem - _z_in_s_power(d) * c
    if not coeffs:
        return ZPoly()
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return ZPoly(out)


def zpoly_to_laurent(q: ZPoly) -> LaurentPoly:
    """Expand q at z = s^-1 - s (the section inverted by laurent_to_z)."""
    total = LaurentPoly()
    for d, c in enumerate(q.coeffs):
        if c:
            total = total + _z_in_s_power(d) * c
    return total
