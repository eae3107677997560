"""Computable fields, embedded extension pairs K ⊆ L and their predicates.

Supported kinds: GF(p^n) as GF(p)[y]/(modulus), the rationals, number fields
Q[y]/(minpoly) of degree at most 6, the rational function field F_p(t) and its
perfect-power subfields F_p(t^(p^e)). Elements are immutable and arithmetic is
exact throughout.
"""

import abc
import enum
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np
import sympy
from sympy import QQ, ZZ, Matrix, Poly, Rational, Symbol
from sympy.polys import galoistools as gt

from composites import config
from composites.errors import (
    FieldMismatch,
    IncompatibleFields,
    InvalidField,
    NotAlgebraic,
    NotAMember,
    UnsupportedPredicate,
)
from composites.linalg import solve_mod_p

logger = logging.getLogger(__name__)

_Y = Symbol("y")


class FieldKind(enum.Enum):
    PRIME_FIELD = "prime-field"
    FINITE_FIELD = "finite-field"
    RATIONALS = "rationals"
    NUMBER_FIELD = "number-field"
    RATIONAL_FUNCTION_FIELD = "rational-function-field"
    PERFECT_POWER_SUBFIELD = "perfect-power-subfield"


class Cardinality(enum.Enum):
    INFINITE = "infinite"

    def __str__(self):
        return self.value


INFINITE = Cardinality.INFINITE


# galoistools works on dense high-to-low lists; fields store low-to-high tuples.
def _dense(low):
    return gt.gf_strip([ZZ(int(c)) for c in reversed(low)])


def _low(dense, length=None):
    coeffs = [int(c) for c in reversed(gt.gf_strip(list(dense)))]
    if length is not None:
        coeffs += [0] * (length - len(coeffs))
    return tuple(coeffs)


def _to_rational(value):
    return Rational(value.numerator, value.denominator)


def _from_rational(value):
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def _format_terms(terms, var):
    """terms: (exponent, coefficient string) pairs, high exponent first."""
    parts = []
    for exp, coeff in terms:
        if exp == 0:
            parts.append(coeff)
            continue
        mono = var if exp == 1 else f"{var}^{exp}"
        parts.append(mono if coeff == "1" else f"{coeff}*{mono}")
    return " + ".join(parts) if parts else "0"


class FieldDescriptor(abc.ABC):
    """A computable field. Subclasses do raw arithmetic on canonical values."""

    kind: FieldKind

    @property
    @abc.abstractmethod
    def characteristic(self) -> int: ...

    @property
    def order(self):
        return None

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @property
    def is_perfect(self) -> bool:
        return True

    @property
    @abc.abstractmethod
    def label(self) -> str: ...

    def __str__(self):
        return self.label

    @abc.abstractmethod
    def _zero(self): ...

    @abc.abstractmethod
    def _one(self): ...

    @abc.abstractmethod
    def _from_int(self, n): ...

    @abc.abstractmethod
    def _add(self, a, b): ...

    @abc.abstractmethod
    def _neg(self, a): ...

    @abc.abstractmethod
    def _mul(self, a, b): ...

    @abc.abstractmethod
    def _inv(self, a): ...

    @abc.abstractmethod
    def _format(self, a) -> str: ...

    @abc.abstractmethod
    def _sort_key(self, a): ...

    @abc.abstractmethod
    def random_element(self, rng) -> "FieldElement": ...

    def element(self, raw) -> "FieldElement":
        return FieldElement(self, raw)

    def zero(self) -> "FieldElement":
        return FieldElement(self, self._zero())

    def one(self) -> "FieldElement":
        return FieldElement(self, self._one())

    def generator(self) -> "FieldElement":
        return self.one()

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.parent != self:
                raise FieldMismatch(f"{value} lies in {value.parent}, not {self}", operation="coerce")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return FieldElement(self, self._from_int(value))
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        raise FieldMismatch(f"cannot coerce {value!r} into {self}", operation="coerce")

    def from_fraction(self, value: Fraction) -> "FieldElement":
        num, den = self(value.numerator), self(value.denominator)
        if den.is_zero():
            raise FieldMismatch(f"{value} has no image in {self}", operation="coerce")
        return num / den

    def elements(self):
        raise UnsupportedPredicate(f"{self} is infinite", operation="elements")

    def is_pth_power(self, raw) -> bool:
        return True

    def pth_root(self, raw):
        raise UnsupportedPredicate(f"no p-th roots in {self}", operation="pth_root")


@dataclass(frozen=True)
class FieldElement:
    parent: FieldDescriptor
    value: object

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.parent != self.parent:
                raise FieldMismatch(f"{other} ∉ {self.parent}", operation="arithmetic")
            return other
        return self.parent(other)

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.parent, self.parent._add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.parent, self.parent._neg(self.value))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.parent, self.parent._mul(self.value, other.value))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError(f"{self} has no inverse in {self.parent}")
        return FieldElement(self.parent, self.parent._inv(self.value))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError(f"exponent must be an int, got {n!r}")
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self.parent.one()
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return self.value == self.parent._zero()

    def is_one(self) -> bool:
        return self.value == self.parent._one()

    def __bool__(self):
        return not self.is_zero()

    def sort_key(self):
        return self.parent._sort_key(self.value)

    def __str__(self):
        return self.parent._format(self.value)


@dataclass(frozen=True)
class FiniteField(FieldDescriptor):
    """GF(p^n) = GF(p)[y]/(modulus); values are coefficient tuples of length n."""

    p: int
    n: int
    modulus: tuple

    def __post_init__(self):
        if not sympy.isprime(self.p):
            raise InvalidField(f"{self.p} is not prime", operation="gf")
        if self.n < 1 or len(self.modulus) != self.n + 1 or self.modulus[-1] != 1:
            raise InvalidField(f"modulus {self.modulus} is not monic of degree {self.n}", operation="gf")
        if not gt.gf_irreducible_p(_dense(self.modulus), self.p, ZZ):
            raise InvalidField(f"modulus {self.modulus} is reducible over GF({self.p})", operation="gf")

    @property
    def kind(self):
        return FieldKind.PRIME_FIELD if self.n == 1 else FieldKind.FINITE_FIELD

    @property
    def characteristic(self):
        return self.p

    @property
    def order(self):
        return self.p ** self.n

    @property
    def label(self):
        return f"GF({self.order})"

    @cached_property
    def _modulus_dense(self):
        return _dense(self.modulus)

    def _zero(self):
        return (0,) * self.n

    def _one(self):
        return (1,) + (0,) * (self.n - 1)

    def _from_int(self, n):
        return (n % self.p,) + (0,) * (self.n - 1)

    def _add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _neg(self, a):
        return tuple((-x) % self.p for x in a)

    @lru_cache(maxsize=config.CACHE_SIZE)
    def _mul(self, a, b):
        if self.n == 1:
            return ((a[0] * b[0]) % self.p,)
        product = gt.gf_mul(_dense(a), _dense(b), self.p, ZZ)
        return _low(gt.gf_rem(product, self._modulus_dense, self.p, ZZ), self.n)

    @lru_cache(maxsize=config.CACHE_SIZE)
    def _inv(self, a):
        if self.n == 1:
            return (pow(a[0], -1, self.p),)
        s, _, _ = gt.gf_gcdex(_dense(a), self._modulus_dense, self.p, ZZ)
        return _low(s, self.n)

    def _format(self, a):
        terms = [(i, str(c)) for i, c in reversed(list(enumerate(a))) if c]
        return _format_terms(terms, "w")

    def _sort_key(self, a):
        return tuple(reversed(a))

    def generator(self):
        if self.n == 1:
            return self.one()
        return FieldElement(self, (0, 1) + (0,) * (self.n - 2))

    def elements(self):
        for digits in itertools.product(range(self.p), repeat=self.n):
            yield FieldElement(self, tuple(reversed(digits)))

    def random_element(self, rng):
        return FieldElement(self, tuple(int(c) for c in rng.integers(0, self.p, size=self.n)))

    def pth_root(self, raw):
        return (FieldElement(self, raw) ** (self.p ** (self.n - 1))).value

    def coordinates(self, x: FieldElement):
        return np.array(x.value, dtype=np.int64)

    def from_coordinates(self, coords):
        return FieldElement(self, tuple(int(c) % self.p for c in coords))


def least_irreducible(p: int, n: int) -> tuple:
    """Lexicographically least monic irreducible of degree n over GF(p), low-to-high."""
    for lower in itertools.product(range(p), repeat=n):
        candidate = [ZZ(1)] + [ZZ(c) for c in lower]
        if gt.gf_irreducible_p(candidate, p, ZZ):
            return _low(candidate, n + 1)
    raise InvalidField(f"no irreducible of degree {n} over GF({p})", operation="gf")


def gf(p: int, n: int = 1, modulus=None) -> FiniteField:
    if not sympy.isprime(p):
        raise InvalidField(f"{p} is not prime", operation="gf")
    if modulus is None:
        modulus = least_irreducible(p, n)
        logger.debug("GF(%d^%d) modulus auto-selected: %s", p, n, modulus)
    return FiniteField(p, n, tuple(int(c) % p for c in modulus))


@dataclass(frozen=True)
class RationalField(FieldDescriptor):
    kind = FieldKind.RATIONALS

    @property
    def characteristic(self):
        return 0

    @property
    def label(self):
        return "Q"

    def _zero(self):
        return Fraction(0)

    def _one(self):
        return Fraction(1)

    def _from_int(self, n):
        return Fraction(n)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _format(self, a):
        return str(a)

    def _sort_key(self, a):
        return (a,)

    def from_fraction(self, value):
        return FieldElement(self, Fraction(value))

    def random_element(self, rng):
        num = int(rng.integers(-9, 10))
        den = int(rng.integers(1, 6))
        return FieldElement(self, Fraction(num, den))


def q() -> RationalField:
    return RationalField()


@dataclass(frozen=True)
class NumberField(FieldDescriptor):
    """Q[y]/(minpoly) with minpoly monic, irreducible, of degree at most 6."""

    minpoly: tuple
    kind = FieldKind.NUMBER_FIELD

    def __post_init__(self):
        degree = len(self.minpoly) - 1
        if not 1 <= degree <= config.NUMBER_FIELD_DEGREE_CAP:
            raise InvalidField(
                f"defining degree {degree} outside 1..{config.NUMBER_FIELD_DEGREE_CAP}", operation="numberfield"
            )
        if self.minpoly[-1] != 1:
            raise InvalidField("minimal polynomial must be monic", operation="numberfield")
        if not self._sympy(self.minpoly).is_irreducible:
            raise InvalidField(f"{self.label} has a reducible defining polynomial", operation="numberfield")

    @staticmethod
    def _sympy(low):
        return Poly([_to_rational(c) for c in reversed(low)], _Y, domain=QQ)

    @property
    def degree(self):
        return len(self.minpoly) - 1

    @property
    def characteristic(self):
        return 0

    @property
    def label(self):
        terms = [(i, str(c)) for i, c in reversed(list(enumerate(self.minpoly))) if c]
        return f"Q(w), {_format_terms(terms, 'w')} = 0"

    def _zero(self):
        return (Fraction(0),) * self.degree

    def _one(self):
        return (Fraction(1),) + (Fraction(0),) * (self.degree - 1)

    def _from_int(self, n):
        return (Fraction(n),) + (Fraction(0),) * (self.degree - 1)

    def from_fraction(self, value):
        return FieldElement(self, (Fraction(value),) + (Fraction(0),) * (self.degree - 1))

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        d = self.degree
        product = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    product[i + j] += x * y
        for k in range(len(product) - 1, d - 1, -1):
            c = product[k]
            if c:
                for i in range(d + 1):
                    product[k - d + i] -= c * self.minpoly[i]
        return tuple(product[:d])

    def _inv(self, a):
        inverse = self._sympy(a).invert(self._sympy(self.minpoly))
        coeffs = [_from_rational(c) for c in reversed(inverse.all_coeffs())]
        return tuple(coeffs + [Fraction(0)] * (self.degree - len(coeffs)))

    def _format(self, a):
        terms = [(i, str(c)) for i, c in reversed(list(enumerate(a))) if c]
        return _format_terms(terms, "w")

    def _sort_key(self, a):
        return tuple(reversed(a))

    def generator(self):
        if self.degree == 1:
            return self.one()
        return FieldElement(self, (Fraction(0), Fraction(1)) + (Fraction(0),) * (self.degree - 2))

    def random_element(self, rng):
        return FieldElement(
            self, tuple(Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4))) for _ in range(self.degree))
        )

    def coordinates(self, x: FieldElement):
        return [_to_rational(c) for c in x.value]


def numberfield(minpoly) -> NumberField:
    coeffs = [Fraction(c) for c in minpoly]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise InvalidField("zero minimal polynomial", operation="numberfield")
    lead = coeffs[-1]
    return NumberField(tuple(c / lead for c in coeffs))


@dataclass(frozen=True)
class RationalFunctionField(FieldDescriptor):
    """F_p(t^(p^e)); e = 0 is F_p(t) itself.

    Values are reduced pairs (numerator, denominator) of low-to-high GF(p)
    coefficient tuples in the field's own variable, denominator monic.
    """

    p: int
    e: int = 0

    def __post_init__(self):
        if not sympy.isprime(self.p):
            raise InvalidField(f"{self.p} is not prime", operation="funcfield")
        if self.e < 0:
            raise InvalidField("negative exponent", operation="funcsub")

    @property
    def kind(self):
        return FieldKind.RATIONAL_FUNCTION_FIELD if self.e == 0 else FieldKind.PERFECT_POWER_SUBFIELD

    @property
    def characteristic(self):
        return self.p

    @property
    def is_perfect(self):
        return False

    @property
    def variable(self):
        return "t" if self.e == 0 else "u"

    @property
    def label(self):
        if self.e == 0:
            return f"F_{self.p}(t)"
        return f"F_{self.p}(t^{self.p ** self.e})"

    def _reduce(self, num, den):
        p = self.p
        num, den = gt.gf_strip(num), gt.gf_strip(den)
        if not num:
            return ((), (1,))
        g = gt.gf_gcd(num, den, p, ZZ)
        num, den = gt.gf_quo(num, g, p, ZZ), gt.gf_quo(den, g, p, ZZ)
        lead, den = gt.gf_monic(den, p, ZZ)
        num = gt.gf_mul_ground(num, ZZ(pow(int(lead), -1, p)), p, ZZ)
        return (_low(num), _low(den))

    def _zero(self):
        return ((), (1,))

    def _one(self):
        return ((1,), (1,))

    def _from_int(self, n):
        n %= self.p
        return ((n,), (1,)) if n else self._zero()

    def _add(self, a, b):
        p = self.p
        num = gt.gf_add(gt.gf_mul(_dense(a[0]), _dense(b[1]), p, ZZ), gt.gf_mul(_dense(b[0]), _dense(a[1]), p, ZZ), p, ZZ)
        return self._reduce(num, gt.gf_mul(_dense(a[1]), _dense(b[1]), p, ZZ))

    def _neg(self, a):
        return (tuple((-c) % self.p for c in a[0]), a[1])

    @lru_cache(maxsize=config.CACHE_SIZE)
    def _mul(self, a, b):
        p = self.p
        return self._reduce(gt.gf_mul(_dense(a[0]), _dense(b[0]), p, ZZ), gt.gf_mul(_dense(a[1]), _dense(b[1]), p, ZZ))

    def _inv(self, a):
        return self._reduce(_dense(a[1]), _dense(a[0]))

    def _poly_str(self, low):
        terms = [(i, str(c)) for i, c in reversed(list(enumerate(low))) if c]
        return _format_terms(terms, self.variable)

    def _format(self, a):
        num, den = a
        if den == (1,):
            return self._poly_str(num)
        return f"({self._poly_str(num)})/({self._poly_str(den)})"

    def _sort_key(self, a):
        return (len(a[1]), tuple(reversed(a[1])), len(a[0]), tuple(reversed(a[0])))

    def generator(self):
        return FieldElement(self, ((0, 1), (1,)))

    def from_polynomials(self, num, den=(1,)):
        return FieldElement(self, self._reduce(_dense(num), _dense(den)))

    def random_element(self, rng, max_degree=2):
        num = tuple(int(c) for c in rng.integers(0, self.p, size=int(rng.integers(0, max_degree + 1)) + 1))
        den = tuple(int(c) for c in rng.integers(0, self.p, size=int(rng.integers(0, max_degree))))
        den = den + (1,)
        return self.from_polynomials(num, den)

    def is_pth_power(self, raw):
        return all(not c or i % self.p == 0 for part in raw for i, c in enumerate(part))

    def pth_root(self, raw):
        if not self.is_pth_power(raw):
            raise NotAMember(f"{self._format(raw)} is not a {self.p}-th power", operation="pth_root")
        return tuple(part[:: self.p] for part in raw)


def funcfield(p: int) -> RationalFunctionField:
    return RationalFunctionField(p, 0)


def funcsub(p: int, e: int) -> RationalFunctionField:
    return RationalFunctionField(p, e)


def frobenius(x: FieldElement, k: int = 1) -> FieldElement:
    return x ** (x.parent.characteristic ** k)


def _inflate(low, q):
    out = [0] * ((len(low) - 1) * q + 1) if low else []
    for i, c in enumerate(low):
        out[i * q] = c
    return tuple(out)


@dataclass(frozen=True)
class ExtensionPair:
    """An embedded pair K ⊆ L.

    generator_image is the image of K's generator when K is a proper
    extension of its prime field inside a finite L; every other supported
    pair embeds canonically.
    """

    small: FieldDescriptor
    big: FieldDescriptor
    generator_image: FieldElement = None

    @property
    def is_identity(self) -> bool:
        return self.small == self.big

    @property
    def is_finite(self) -> bool:
        return self.small.is_finite and self.big.is_finite

    @property
    def label(self):
        return f"{self.small} ⊆ {self.big}"

    def __str__(self):
        return self.label

    def embed(self, a: FieldElement) -> FieldElement:
        if a.parent != self.small:
            raise FieldMismatch(f"{a} ∉ {self.small}", operation="embed")
        if self.is_identity:
            return a
        small, big = self.small, self.big
        if isinstance(small, FiniteField) and small.n == 1:
            return big(a.value[0])
        if isinstance(small, FiniteField):
            result = big.zero()
            for c in reversed(a.value):
                result = result * self.generator_image + c
            return result
        if isinstance(small, RationalField):
            return big.from_fraction(a.value)
        if isinstance(small, RationalFunctionField):
            step = self.small.p ** (small.e - big.e)
            return FieldElement(big, (_inflate(a.value[0], step), _inflate(a.value[1], step)))
        raise IncompatibleFields(f"no embedding {self.label}", operation="embed")

    @cached_property
    def _preimages(self):
        return {self.embed(a): a for a in self.small.elements()}

    def contains(self, x: FieldElement) -> bool:
        """Whether x lies in the embedded copy of K."""
        if x.parent != self.big:
            raise FieldMismatch(f"{x} ∉ {self.big}", operation="contains")
        if self.is_identity:
            return True
        small, big = self.small, self.big
        if self.is_finite:
            return x in self._preimages
        if isinstance(small, RationalField):
            return all(c == 0 for c in x.value[1:])
        if isinstance(small, FiniteField):
            num, den = x.value
            return den == (1,) and len(num) <= 1
        step = small.p ** (small.e - big.e)
        return all(not c or i % step == 0 for part in x.value for i, c in enumerate(part))

    def pullback(self, x: FieldElement) -> FieldElement:
        if not self.contains(x):
            raise NotAMember(f"{x} ∉ {self.small}", operation="pullback")
        if self.is_identity:
            return x
        small = self.small
        if self.is_finite:
            return self._preimages[x]
        if isinstance(small, RationalField):
            return small.from_fraction(x.value[0])
        if isinstance(small, FiniteField):
            num = x.value[0]
            return small(num[0] if num else 0)
        step = small.p ** (small.e - self.big.e)
        return FieldElement(small, tuple(part[::step] for part in x.value))

    @cached_property
    def degree(self):
        return degree(self)


def _find_root(modulus, big: FiniteField):
    for x in big.elements():
        acc = big.zero()
        for c in reversed(modulus):
            acc = acc * x + c
        if acc.is_zero():
            return x
    return None


def _check_embedding(pair: ExtensionPair):
    small, big = pair.small, pair.big
    if not pair.embed(small.zero()).is_zero() or not pair.embed(small.one()).is_one():
        raise IncompatibleFields(f"embedding {pair.label} does not fix 0 and 1", operation="make_extension")
    gens = [small.one(), small.generator()]
    for a, b in itertools.product(gens, repeat=2):
        if pair.embed(a + b) != pair.embed(a) + pair.embed(b) or pair.embed(a * b) != pair.embed(a) * pair.embed(b):
            raise IncompatibleFields(f"embedding {pair.label} is not a homomorphism", operation="make_extension")
    logger.debug("embedding %s verified on generators", pair.label)


def make_extension(small: FieldDescriptor, big: FieldDescriptor) -> ExtensionPair:
    if small.characteristic != big.characteristic:
        raise IncompatibleFields(
            f"characteristic {small.characteristic} ≠ {big.characteristic}", operation="make_extension"
        )
    if small == big:
        return ExtensionPair(small, big)
    pair = None
    if isinstance(small, FiniteField) and isinstance(big, FiniteField):
        if big.n % small.n:
            raise IncompatibleFields(f"{small.n} ∤ {big.n}: {small} is not a subfield of {big}", operation="make_extension")
        image = None if small.n == 1 else _find_root(small.modulus, big)
        pair = ExtensionPair(small, big, image)
    elif isinstance(small, RationalField) and isinstance(big, NumberField):
        pair = ExtensionPair(small, big)
    elif isinstance(small, FiniteField) and small.n == 1 and isinstance(big, RationalFunctionField):
        pair = ExtensionPair(small, big)
    elif isinstance(small, RationalFunctionField) and isinstance(big, RationalFunctionField):
        if small.e < big.e:
            raise IncompatibleFields(f"{small} does not lie inside {big}", operation="make_extension")
        pair = ExtensionPair(small, big)
    if pair is None:
        raise IncompatibleFields(f"unsupported pair {small} ⊆ {big}", operation="make_extension")
    _check_embedding(pair)
    return pair


def degree(pair: ExtensionPair):
    small, big = pair.small, pair.big
    if pair.is_identity:
        return 1
    if isinstance(small, FiniteField) and isinstance(big, FiniteField):
        return big.n // small.n
    if isinstance(big, NumberField):
        return big.degree
    if isinstance(small, RationalFunctionField):
        return small.p ** (small.e - big.e)
    return INFINITE


@dataclass(frozen=True)
class ExtensionPredicates:
    algebraic: bool | None
    separable: bool | None
    normal: bool | None
    galois: bool | None
    purely_inseparable: bool | None

    def as_dict(self):
        return {
            "algebraic": self.algebraic,
            "separable": self.separable,
            "normal": self.normal,
            "galois": self.galois,
            "purely_inseparable": self.purely_inseparable,
        }


def _finite_predicates(pair: ExtensionPair) -> ExtensionPredicates:
    big, p = pair.big, pair.big.characteristic
    # x^(p^n) - x is squarefree iff its gcd with the derivative is 1
    field_poly = gt.gf_sub([ZZ(1)] + [ZZ(0)] * big.order, [ZZ(1), ZZ(0)], p, ZZ)
    separable = gt.gf_gcd(field_poly, gt.gf_diff(field_poly, p, ZZ), p, ZZ) == [ZZ(1)]
    gen = big.generator()
    q_small = pair.small.order
    orbit = []
    x = gen
    while x not in orbit:
        orbit.append(x)
        x = x ** q_small
    mp = minimal_polynomial(pair, gen)
    closed = all(mp_eval_in_big(pair, mp, y).is_zero() for y in orbit) and len(orbit) == mp.degree
    inseparable_power = any(pair.contains(gen ** (p ** k)) for k in range(big.n + 1))
    return ExtensionPredicates(True, separable, closed, separable and closed, inseparable_power)


def mp_eval_in_big(pair: ExtensionPair, poly, x: FieldElement) -> FieldElement:
    acc = pair.big.zero()
    for c in reversed(poly.coeffs):
        acc = acc * x + pair.embed(c)
    return acc


def extension_predicates(pair: ExtensionPair, strict: bool = False) -> ExtensionPredicates:
    from composites.polyring import Polynomial, factor

    small, big = pair.small, pair.big
    if pair.is_identity:
        result = ExtensionPredicates(True, True, True, True, True)
    elif pair.is_finite:
        result = _finite_predicates(pair)
    elif isinstance(small, RationalField) and isinstance(big, NumberField):
        f = NumberField._sympy(big.minpoly)
        separable = sympy.gcd(f, f.diff(_Y)).degree() == 0
        lifted = Polynomial(big, tuple(big.from_fraction(c) for c in big.minpoly))
        normal = all(g.degree == 1 for g, _ in factor(lifted).factors)
        result = ExtensionPredicates(True, separable, normal, separable and normal, False)
    elif isinstance(small, RationalFunctionField):
        gen = big.generator()
        mp = minimal_polynomial(pair, gen)
        separable = not mp.derivative().is_zero()
        purely = pair.contains(gen ** pair.degree)
        # a purely inseparable generator has a single conjugate, so L is normal
        result = ExtensionPredicates(True, separable, purely, separable and purely, purely)
    elif isinstance(small, FiniteField) and isinstance(big, RationalFunctionField):
        result = ExtensionPredicates(False, None, None, None, None)
    else:
        result = ExtensionPredicates(None, None, None, None, None)
    unknown = [name for name, v in result.as_dict().items() if v is None]
    if unknown:
        logger.warning("predicates %s undecided for %s", ", ".join(unknown), pair.label)
        if strict:
            raise UnsupportedPredicate(
                f"{', '.join(unknown)} not decidable for {pair.label}", operation="extension_predicates"
            )
    return result


@dataclass(frozen=True)
class Automorphism:
    """x ↦ x^exponent, a power of the Frobenius of K."""

    pair: ExtensionPair
    exponent: int

    def __call__(self, x: FieldElement) -> FieldElement:
        return x ** self.exponent

    def __str__(self):
        return "identity" if self.exponent == 1 else f"x -> x^{self.exponent}"


def automorphism_group(pair: ExtensionPair) -> list:
    if not pair.is_finite:
        raise UnsupportedPredicate(
            f"automorphism groups are computed for finite fields only, not {pair.label}",
            operation="automorphism_group",
        )
    q_small = pair.small.order
    return [Automorphism(pair, q_small ** i if i else 1) for i in range(pair.degree)]


def fixed_field(pair: ExtensionPair, group) -> list:
    """Elements of L fixed by every automorphism in the group, canonical order."""
    return [x for x in pair.big.elements() if all(sigma(x) == x for sigma in group)]


@dataclass(frozen=True)
class CosetIndex:
    index: object
    representatives: tuple


def unit_coset_index(pair: ExtensionPair) -> CosetIndex:
    if pair.is_identity:
        return CosetIndex(1, (pair.big.one(),))
    if not pair.is_finite:
        return CosetIndex(INFINITE, ())
    small_units = [pair.embed(k) for k in pair.small.elements() if not k.is_zero()]
    covered, reps = set(), []
    for x in pair.big.elements():
        if x.is_zero() or x in covered:
            continue
        reps.append(x)
        covered.update(k * x for k in small_units)
    return CosetIndex(len(reps), tuple(reps))


def _finite_minimal_polynomial(pair: ExtensionPair, alpha: FieldElement):
    from composites.polyring import Polynomial

    small, big = pair.small, pair.big
    p = big.characteristic
    basis = [FieldElement(small, tuple(int(i == j) for i in range(small.n))) for j in range(small.n)]
    images = [pair.embed(b) for b in basis]
    powers = [big.one()]
    for d in range(1, pair.degree + 1):
        powers.append(powers[-1] * alpha)
        columns = [big.coordinates(img * powers[i]) for i in range(d) for img in images]
        solution = solve_mod_p(np.array(columns).T, big.coordinates(powers[d]), p)
        if solution is None:
            continue
        coeffs = []
        for i in range(d):
            chunk = solution[i * small.n:(i + 1) * small.n]
            coeffs.append(-FieldElement(small, tuple(int(c) for c in chunk)))
        return Polynomial(small, tuple(coeffs) + (small.one(),))
    raise NotAlgebraic(f"{alpha} has no dependence over {small}", operation="minimal_polynomial")


def _rational_minimal_polynomial(pair: ExtensionPair, alpha: FieldElement):
    from composites.polyring import Polynomial

    big = pair.big
    vectors = [big.coordinates(big.one())]
    power = big.one()
    for d in range(1, big.degree + 1):
        power = power * alpha
        vectors.append(big.coordinates(power))
        kernel = Matrix(vectors).T.nullspace()
        if kernel:
            v = kernel[0] / kernel[0][d]
            return Polynomial(pair.small, tuple(pair.small.from_fraction(_from_rational(c)) for c in v))
    raise NotAlgebraic(f"{alpha} has no dependence over Q", operation="minimal_polynomial")


def minimal_polynomial(pair: ExtensionPair, alpha: FieldElement):
    """Monic irreducible polynomial over K with alpha as a root."""
    from composites.polyring import Polynomial

    if alpha.parent != pair.big:
        raise FieldMismatch(f"{alpha} ∉ {pair.big}", operation="minimal_polynomial")
    small = pair.small
    if pair.contains(alpha):
        return Polynomial(small, (-pair.pullback(alpha), small.one()))
    if pair.is_finite:
        return _finite_minimal_polynomial(pair, alpha)
    if isinstance(small, RationalField) and isinstance(pair.big, NumberField):
        return _rational_minimal_polynomial(pair, alpha)
    if isinstance(small, RationalFunctionField):
        p = small.p
        for j in range(1, small.e - pair.big.e + 1):
            power = alpha ** (p ** j)
            if pair.contains(power):
                coeffs = [small.zero()] * (p ** j) + [small.one()]
                coeffs[0] = -pair.pullback(power)
                return Polynomial(small, tuple(coeffs))
    raise NotAlgebraic(f"{alpha} is not algebraic over {small}", operation="minimal_polynomial")
