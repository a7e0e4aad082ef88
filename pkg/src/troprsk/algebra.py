"""The two evaluation algebras and the values that live in them.

Every formula in this package is written once against the small semifield
interface of :class:`Algebra` and then evaluated either over exact positive
rationals or over the max-plus semifield.  Payloads are always
:class:`fractions.Fraction`; in max-plus the payload is the tropical exponent.

Min-plus is not a third algebra.  It is obtained from max-plus by negating the
inputs, evaluating, and negating the result (see :func:`min_plus_dual`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalNumber

from .errors import AlgebraMismatch, BoundsError, LengthMismatch, PositivityViolation

__all__ = [
    "Algebra",
    "RationalAlgebra",
    "MaxPlusAlgebra",
    "RATIONAL",
    "MAXPLUS",
    "get_algebra",
    "Scalar",
    "make_positive_rational",
    "make_maxplus",
    "min_plus_dual",
    "parse_fraction",
    "TransportMatrix",
]


def parse_fraction(obj) -> Fraction:
    """Exact conversion of an int, Fraction or ``"num/den"`` string.

    Floats are refused on purpose: they would smuggle rounding into results
    that are otherwise exact.
    """
    if isinstance(obj, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(obj, Fraction):
        return obj
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, _RationalNumber):
        return Fraction(obj.numerator, obj.denominator)
    if isinstance(obj, str):
        text = obj.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational literal: {obj!r}")
        return Fraction(text)
    raise TypeError(f"cannot read {type(obj).__name__} as an exact rational")


class Algebra:
    """Semifield interface shared by both algebras."""

    name = "abstract"
    one: Fraction

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        raise NotImplementedError

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        raise NotImplementedError

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        raise NotImplementedError

    def power(self, a: Fraction, k: int) -> Fraction:
        """``a`` multiplied with itself ``k`` times; ``k`` may be negative."""
        raise NotImplementedError

    def inv(self, a: Fraction) -> Fraction:
        return self.div(self.one, a)

    def sum(self, values) -> Fraction:
        it = iter(values)
        try:
            acc = next(it)
        except StopIteration:
            raise ValueError("empty semifield sum has no value") from None
        for v in it:
            acc = self.add(acc, v)
        return acc

    def prod(self, values) -> Fraction:
        acc = self.one
        for v in values:
            acc = self.mul(acc, v)
        return acc

    def compare(self, a: Fraction, b: Fraction) -> int:
        return (a > b) - (a < b)

    def validate(self, obj) -> Fraction:
        """Coerce a user value into a payload, enforcing the domain."""
        raise NotImplementedError

    def encode(self, value: Fraction):
        """JSON form of a payload."""
        raise NotImplementedError

    def decode(self, obj) -> Fraction:
        return self.validate(obj)

    def __repr__(self):
        return f"<algebra {self.name}>"

    def __reduce__(self):
        return (get_algebra, (self.name,))


class RationalAlgebra(Algebra):
    """Exact positive rationals: plus, times, divide."""

    name = "rational"
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def power(self, a, k):
        return a**k

    def sum(self, values):
        acc = None
        for v in values:
            acc = v if acc is None else acc + v
        if acc is None:
            raise ValueError("empty semifield sum has no value")
        return acc

    def validate(self, obj):
        if isinstance(obj, Scalar):
            if obj.algebra is not self:
                raise AlgebraMismatch(f"expected a rational scalar, got {obj.algebra.name}")
            return obj.value
        value = parse_fraction(obj)
        if value <= 0:
            raise PositivityViolation(f"rational entries must be positive, got {value}")
        return value

    def encode(self, value):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"


class MaxPlusAlgebra(Algebra):
    """Max-plus semifield: max, plus, minus.  The unit is 0."""

    name = "maxplus"
    one = Fraction(0)

    def add(self, a, b):
        return a if a >= b else b

    def mul(self, a, b):
        return a + b

    def div(self, a, b):
        return a - b

    def power(self, a, k):
        return a * k

    def sum(self, values):
        return max(values)

    def prod(self, values):
        return sum(values, Fraction(0))

    def validate(self, obj):
        if isinstance(obj, Scalar):
            if obj.algebra is not self:
                raise AlgebraMismatch(f"expected a maxplus scalar, got {obj.algebra.name}")
            return obj.value
        return parse_fraction(obj)

    def encode(self, value):
        # integers stay JSON numbers; a genuine fraction needs a string
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"


RATIONAL = RationalAlgebra()
MAXPLUS = MaxPlusAlgebra()
_ALGEBRAS = {RATIONAL.name: RATIONAL, MAXPLUS.name: MAXPLUS}


def get_algebra(name) -> Algebra:
    if isinstance(name, Algebra):
        return name
    try:
        return _ALGEBRAS[str(name).lower()]
    except KeyError:
        raise ValueError(f"unknown algebra {name!r}; use 'rational' or 'maxplus'") from None


@dataclass(frozen=True)
class Scalar:
    """An element of one of the two algebras.

    The arithmetic operators are the semifield ones: ``+`` is the semifield
    sum, ``*`` the product and ``/`` the quotient.  In max-plus that means
    ``make_maxplus(3) + make_maxplus(5) == make_maxplus(5)``.
    """

    algebra: Algebra
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "algebra", get_algebra(self.algebra))
        object.__setattr__(self, "value", parse_fraction(self.value))

    def _other(self, other) -> Fraction:
        if isinstance(other, Scalar):
            if other.algebra is not self.algebra:
                raise AlgebraMismatch(
                    f"cannot combine {self.algebra.name} with {other.algebra.name}"
                )
            return other.value
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Scalar(self.algebra, self.algebra.add(self.value, v))

    def __mul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Scalar(self.algebra, self.algebra.mul(self.value, v))

    def __truediv__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Scalar(self.algebra, self.algebra.div(self.value, v))

    def __pow__(self, k: int):
        return Scalar(self.algebra, self.algebra.power(self.value, int(k)))

    def __lt__(self, other):
        v = self._other(other)
        return v if v is NotImplemented else self.value < v

    def __le__(self, other):
        v = self._other(other)
        return v if v is NotImplemented else self.value <= v

    @property
    def is_one(self) -> bool:
        return self.value == self.algebra.one

    def one(self) -> "Scalar":
        return Scalar(self.algebra, self.algebra.one)

    def to_json(self):
        return self.algebra.encode(self.value)

    def __repr__(self):
        return f"Scalar({self.algebra.name}, {self.algebra.encode(self.value)!r})"


def make_positive_rational(numerator: int, denominator: int = 1) -> Scalar:
    """Positive rational scalar ``numerator/denominator`` in lowest terms."""
    if isinstance(numerator, bool) or isinstance(denominator, bool):
        raise TypeError("booleans are not numbers here")
    if numerator <= 0 or denominator <= 0:
        raise PositivityViolation(
            f"numerator and denominator must be positive, got {numerator}/{denominator}"
        )
    return Scalar(RATIONAL, Fraction(numerator, denominator))


def make_maxplus(value) -> Scalar:
    return Scalar(MAXPLUS, parse_fraction(value))


def min_plus_dual(inputs, evaluator) -> Scalar:
    """Min-plus value of a subtraction-free expression.

    ``evaluator`` takes max-plus scalars and combines them with the semifield
    operators.  It is run on the negated inputs and the result is negated, so
    that every ``+`` in the expression behaves as a minimum.

    >>> min_plus_dual([make_maxplus(1), make_maxplus(2)], lambda x, y: x + y)
    Scalar(maxplus, 1)
    """
    negated = []
    for s in inputs:
        if not isinstance(s, Scalar) or s.algebra is not MAXPLUS:
            raise AlgebraMismatch("min_plus_dual works on max-plus scalars only")
        negated.append(Scalar(MAXPLUS, -s.value))
    out = evaluator(*negated)
    if not isinstance(out, Scalar) or out.algebra is not MAXPLUS:
        raise AlgebraMismatch("the evaluator must return a max-plus scalar")
    return Scalar(MAXPLUS, -out.value)


@dataclass(frozen=True)
class TransportMatrix:
    """An ``m x n`` grid of payloads in one algebra.

    Indices in the public methods are 1-based, rows top to bottom.  Rational
    entries are strictly positive.
    """

    algebra: Algebra
    rows: tuple
    n: int

    def __init__(self, algebra, rows, n=None):
        alg = get_algebra(algebra)
        data = tuple(tuple(alg.validate(v) for v in row) for row in rows)
        if n is None:
            if not data:
                raise LengthMismatch("the column count of an empty matrix must be given")
            n = len(data[0])
        for row in data:
            if len(row) != n:
                raise LengthMismatch(f"ragged matrix: expected rows of length {n}")
        object.__setattr__(self, "algebra", alg)
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "n", int(n))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def shape(self):
        return (self.m, self.n)

    def x(self, i: int, j: int) -> Fraction:
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise BoundsError(f"({i}, {j}) outside a {self.m}x{self.n} matrix")
        return self.rows[i - 1][j - 1]

    def row(self, i: int):
        return self.rows[i - 1]

    def column(self, j: int):
        return tuple(r[j - 1] for r in self.rows)

    def transpose(self) -> "TransportMatrix":
        return TransportMatrix(self.algebra, list(zip(*self.rows)) if self.m else [], self.m)

    def flip_rows(self) -> "TransportMatrix":
        """Left multiplication by the order-reversing permutation ``J_m``."""
        return TransportMatrix(self.algebra, self.rows[::-1], self.n)

    def flip_cols(self) -> "TransportMatrix":
        return TransportMatrix(self.algebra, [r[::-1] for r in self.rows], self.n)

    def conjugate_J(self) -> "TransportMatrix":
        """``J_m X J_n``: both index orders reversed."""
        return TransportMatrix(self.algebra, [r[::-1] for r in self.rows[::-1]], self.n)

    def replace(self, rows) -> "TransportMatrix":
        return TransportMatrix(self.algebra, rows, self.n)

    def scalar(self, i: int, j: int) -> Scalar:
        return Scalar(self.algebra, self.x(i, j))

    def to_json(self):
        enc = self.algebra.encode
        return {"algebra": self.algebra.name, "rows": [[enc(v) for v in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj, n=None) -> "TransportMatrix":
        rows = obj["rows"]
        return cls(get_algebra(obj["algebra"]), rows, n if rows == [] else None)

    def __repr__(self):
        enc = self.algebra.encode
        body = [[enc(v) for v in r] for r in self.rows]
        return f"TransportMatrix({self.algebra.name}, {body})"
