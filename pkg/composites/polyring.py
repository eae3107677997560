"""Dense univariate polynomials over the fields of fieldtower.

Coefficients are stored low-to-high with trailing zeros trimmed. Factoring is
exact: Cantor-Zassenhaus over finite fields, sympy over Q, Trager's norm
method over number fields, and square-free splitting with p-th root
extraction over rational function fields.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy
from sympy import QQ, Poly, Rational, Symbol

from composites import config
from composites.errors import DivisionByZeroPoly, FieldMismatch, UnsupportedFactorization
from composites.fieldtower import (
    FieldDescriptor,
    FieldElement,
    FiniteField,
    NumberField,
    RationalField,
    RationalFunctionField,
)

logger = logging.getLogger(__name__)

_X = Symbol("X")
_Y = Symbol("y")


def _coeff_str(c: FieldElement) -> str:
    text = str(c)
    if any(op in text for op in (" + ", "/")) or text.startswith("-"):
        return f"({text})"
    return text


@dataclass(frozen=True)
class Polynomial:
    field: FieldDescriptor
    coeffs: tuple = ()

    def __post_init__(self):
        coeffs = [self.field(c) for c in self.coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one(),))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, c, k):
        return cls(field, (field.zero(),) * k + (field(c),))

    @classmethod
    def x(cls, field):
        return cls.monomial(field, field.one(), 1)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.degree == 0 and self.coeffs[0].is_one()

    def coeff(self, i) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero()

    @property
    def leading(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    @property
    def constant_term(self) -> FieldElement:
        return self.coeff(0)

    @property
    def order(self) -> int:
        """Lowest exponent with a nonzero coefficient; -1 for zero."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return -1

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial.constant(self.field, other)
        if other.field != self.field:
            raise FieldMismatch(f"{other} is over {other.field}, not {self.field}", operation="polyring")
        return other

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.field, tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int, Fraction)):
            c = self.field(other)
            return Polynomial(self.field, tuple(a * c for a in self.coeffs))
        other = self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field)
        zero = self.field.zero()
        product = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] = product[i + j] + a * b
        return Polynomial(self.field, tuple(product))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result, base = Polynomial.one(self.field), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        return divmod_poly(self, other)

    def __floordiv__(self, other):
        return divmod_poly(self, other)[0]

    def __mod__(self, other):
        return divmod_poly(self, other)[1]

    def __call__(self, x):
        return evaluate(self, x)

    def shift(self, k: int):
        """Multiply by X^k."""
        if self.is_zero():
            return self
        return Polynomial(self.field, (self.field.zero(),) * k + self.coeffs)

    def monic(self):
        """(leading coefficient, monic associate)."""
        if self.is_zero():
            return self.field.one(), self
        lead = self.leading
        return lead, self * lead.inverse()

    def derivative(self):
        return Polynomial(self.field, tuple(c * i for i, c in enumerate(self.coeffs))[1:])

    def map(self, fn, field):
        return Polynomial(field, tuple(fn(c) for c in self.coeffs))

    def sort_key(self):
        return (self.degree, tuple(c.sort_key() for c in reversed(self.coeffs)))

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if not mono:
                terms.append(str(c))
            elif c.is_one():
                terms.append(mono)
            else:
                terms.append(f"{_coeff_str(c)}*{mono}")
        return " + ".join(terms)


def divmod_poly(a: Polynomial, b: Polynomial):
    if b.is_zero():
        raise DivisionByZeroPoly(f"division of {a} by the zero polynomial", operation="divmod")
    b = a._check(b)
    field = a.field
    remainder = list(a.coeffs)
    if len(remainder) < len(b.coeffs):
        return Polynomial.zero(field), a
    inv_lead = b.leading.inverse()
    db = b.degree
    quotient = [field.zero()] * (len(remainder) - db)
    for k in range(len(remainder) - 1, db - 1, -1):
        c = remainder[k]
        if c.is_zero():
            continue
        q = c * inv_lead
        quotient[k - db] = q
        for i, bc in enumerate(b.coeffs):
            remainder[k - db + i] = remainder[k - db + i] - q * bc
    return Polynomial(field, tuple(quotient)), Polynomial(field, tuple(remainder[:db]))


def gcd_extended(a: Polynomial, b: Polynomial):
    """(g, s, t) with s*a + t*b = g, g monic or zero."""
    field = a.field
    b = a._check(b)
    r0, r1 = a, b
    s0, s1 = Polynomial.one(field), Polynomial.zero(field)
    t0, t1 = Polynomial.zero(field), Polynomial.one(field)
    while not r1.is_zero():
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, Polynomial.one(field), Polynomial.zero(field)
    inv = r0.leading.inverse()
    return r0 * inv, s0 * inv, t0 * inv


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    return gcd_extended(a, b)[0]


def evaluate(a: Polynomial, x: FieldElement, pair=None) -> FieldElement:
    """Horner evaluation; pair embeds a's coefficients when x lies in a larger field."""
    if x.parent == a.field:
        embed = None
    elif pair is not None and pair.small == a.field and pair.big == x.parent:
        embed = pair.embed
    else:
        raise FieldMismatch(f"{x} is not in {a.field} or a declared extension of it", operation="evaluate")
    acc = x.parent.zero()
    for c in reversed(a.coeffs):
        acc = acc * x + (embed(c) if embed else c)
    return acc


def compose_linear(f: Polynomial, a, b) -> Polynomial:
    """f(a*X + b)."""
    field = f.field
    inner = Polynomial(field, (field(b), field(a)))
    result = Polynomial.zero(field)
    for c in reversed(f.coeffs):
        result = result * inner + c
    return result


def powmod(base: Polynomial, exponent: int, modulus: Polynomial) -> Polynomial:
    result = Polynomial.one(base.field) % modulus
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        exponent >>= 1
    return result


def _pth_root_poly(f: Polynomial):
    """g with g(X)^p = f(X) when f is a polynomial in X^p with p-th power coefficients, else None."""
    field, p = f.field, f.field.characteristic
    if not p:
        return None
    if any(not c.is_zero() for i, c in enumerate(f.coeffs) if i % p):
        return None
    if not all(field.is_pth_power(c.value) for c in f.coeffs):
        return None
    return Polynomial(field, tuple(field.element(field.pth_root(c.value)) for c in f.coeffs[::p]))


def squarefree_decomposition(f: Polynomial):
    """Pairs (g, m): f = lc * prod g^m, each g monic and square-free.

    Over an imperfect field a part with vanishing derivative whose
    coefficients are not all p-th powers is returned whole.
    """
    if f.is_zero():
        raise UnsupportedFactorization("square-free decomposition of zero", operation="squarefree_decomposition")
    _, f = f.monic()
    parts = {}

    def split(g, mult):
        c = gcd(g, g.derivative())
        w = g // c
        i = 1
        while w.degree > 0:
            y = gcd(w, c)
            z = w // y
            if z.degree > 0:
                parts[z] = parts.get(z, 0) + i * mult
            i += 1
            w = y
            c = c // y
        if c.degree > 0:
            root = _pth_root_poly(c)
            if root is None:
                parts[c] = parts.get(c, 0) + mult
            else:
                split(root, mult * f.field.characteristic)

    split(f, 1)
    return sorted(parts.items(), key=lambda item: item[0].sort_key())


@dataclass(frozen=True)
class PolyFactorization:
    unit: FieldElement
    factors: tuple
    seed: int = None

    def expand(self) -> Polynomial:
        field = self.unit.parent
        result = Polynomial.constant(field, self.unit)
        for g, m in self.factors:
            result = result * g ** m
        return result

    def __str__(self):
        parts = [f"({g})" + (f"^{m}" if m > 1 else "") for g, m in self.factors]
        if not self.unit.is_one() or not parts:
            parts.insert(0, str(self.unit))
        return " * ".join(parts)


def _random_poly(field, degree, rng):
    return Polynomial(field, tuple(field.random_element(rng) for _ in range(degree + 1)))


def _distinct_degree(f: Polynomial):
    """Split monic square-free f into (product of all degree-d irreducible factors, d)."""
    q = f.field.order
    x = Polynomial.x(f.field)
    out, rest = [], f
    h = x % rest
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = powmod(h, q, rest)
        g = gcd(rest, h - x)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _equal_degree(f: Polynomial, d: int, rng):
    if f.degree == d:
        return [f]
    field = f.field
    q = field.order
    while True:
        a = _random_poly(field, f.degree - 1, rng)
        if a.degree < 1:
            continue
        if q % 2:
            b = powmod(a, (q ** d - 1) // 2, f) - 1
        else:
            # trace map to GF(2)
            b, power = Polynomial.zero(field), a % f
            for _ in range(field.n * d):
                b = b + power
                power = (power * power) % f
        g = gcd(f, b)
        if 0 < g.degree < f.degree:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def _factor_finite(f: Polynomial, rng):
    found = {}
    for part, mult in squarefree_decomposition(f):
        for block, d in _distinct_degree(part):
            for g in _equal_degree(block, d, rng):
                found[g] = found.get(g, 0) + mult
    return found


def _to_sympy(f: Polynomial, var=_X):
    return Poly([Rational(c.value.numerator, c.value.denominator) for c in reversed(f.coeffs)], var, domain=QQ)


def _from_sympy(poly: Poly, field) -> Polynomial:
    coeffs = [Rational(c) for c in reversed(poly.all_coeffs())]
    return Polynomial(field, tuple(field.from_fraction(Fraction(int(c.p), int(c.q))) for c in coeffs))


def _factor_rational(f: Polynomial):
    _, pairs = _to_sympy(f).factor_list()
    return {_from_sympy(g.monic(), f.field): m for g, m in pairs}


def _number_field_expr(f: Polynomial, shift: int):
    """f(X - shift*y) with y the generator, as a sympy expression in X and y."""
    expr = 0
    for k, c in enumerate(f.coeffs):
        coeff = sum(Rational(v.numerator, v.denominator) * _Y ** j for j, v in enumerate(c.value))
        expr += coeff * (_X - shift * _Y) ** k
    return sympy.expand(expr)


def _norm(f: Polynomial, shift: int) -> Poly:
    nf = f.field
    minpoly = sum(Rational(c.numerator, c.denominator) * _Y ** j for j, c in enumerate(nf.minpoly))
    return Poly(sympy.resultant(minpoly, _number_field_expr(f, shift), _Y), _X, domain=QQ)


def _squarefree_norm(f: Polynomial):
    """Smallest shift s (0, 1, -1, 2, ...) whose norm of f(X - s*y) is square-free."""
    for k in range(0, 4 * f.degree * f.field.degree + 2):
        shift = (k + 1) // 2 * (1 if k % 2 else -1)
        norm = _norm(f, shift)
        if sympy.gcd(norm, norm.diff(_X)).degree() == 0:
            logger.debug("square-free norm found with shift %d", shift)
            return shift, norm
    raise UnsupportedFactorization(f"no square-free norm for {f}", operation="factor")


def _trager(f: Polynomial):
    """Irreducible monic factors of monic square-free f over a number field."""
    nf = f.field
    if f.degree <= 1:
        return [f]
    shift, norm = _squarefree_norm(f)
    y = nf.generator()
    shifted = compose_linear(f, nf.one(), -y * shift)
    factors = []
    for n_i, _ in norm.factor_list()[1]:
        h = gcd(shifted, _from_sympy(n_i.monic(), nf))
        factors.append(compose_linear(h, nf.one(), y * shift))
    return factors


def _factor_number_field(f: Polynomial):
    found = {}
    for part, mult in squarefree_decomposition(f):
        for g in _trager(part):
            found[g] = found.get(g, 0) + mult
    return found


def _binomial_root(f: Polynomial):
    """For monic f = X^(p^k) - a return (p^k, a), else None."""
    p = f.field.characteristic
    n = f.degree
    if n < 2 or any(not c.is_zero() for c in f.coeffs[1:-1]):
        return None
    k = n
    while k % p == 0:
        k //= p
    if k != 1:
        return None
    return n, -f.coeffs[0]


def _factor_function_field(f: Polynomial):
    found = {}
    for part, mult in squarefree_decomposition(f):
        if part.degree > 1 and not is_irreducible(part):
            raise UnsupportedFactorization(
                f"{part} over {f.field}: only square-free splitting and root extraction are supported",
                operation="factor",
            )
        found[part] = found.get(part, 0) + mult
    return found


def factor(a: Polynomial, seed: int = None) -> PolyFactorization:
    """Unit times monic irreducible factors with multiplicities, in canonical order."""
    if a.is_zero():
        raise UnsupportedFactorization("the zero polynomial has no factorization", operation="factor")
    field = a.field
    unit, monic = a.monic()
    if monic.degree == 0:
        return PolyFactorization(unit, (), seed)
    if isinstance(field, FiniteField):
        seed = config.DEFAULT_SEED if seed is None else seed
        found = _factor_finite(monic, np.random.default_rng(seed))
    elif isinstance(field, (RationalField, NumberField)):
        if monic.degree > config.RATIONAL_FACTOR_DEGREE_CAP:
            raise UnsupportedFactorization(
                f"degree {monic.degree} exceeds {config.RATIONAL_FACTOR_DEGREE_CAP} over {field}", operation="factor"
            )
        found = _factor_rational(monic) if isinstance(field, RationalField) else _factor_number_field(monic)
    elif isinstance(field, RationalFunctionField):
        found = _factor_function_field(monic)
    else:
        raise UnsupportedFactorization(f"no factoring over {field}", operation="factor")
    factors = tuple(sorted(found.items(), key=lambda item: item[0].sort_key()))
    result = PolyFactorization(unit, factors, seed)
    for g, _ in factors:
        if not is_irreducible(g):
            raise UnsupportedFactorization(f"factor {g} failed the irreducibility re-check", operation="factor")
    if result.expand() != a:
        raise UnsupportedFactorization(f"factorization of {a} does not expand back", operation="factor")
    return result


def _rabin_irreducible(f: Polynomial) -> bool:
    _, f = f.monic()
    n, q = f.degree, f.field.order
    x = Polynomial.x(f.field)
    if powmod(x, q ** n, f) != x % f:
        return False
    for r in sympy.primefactors(n):
        if gcd(powmod(x, q ** (n // r), f) - x, f).degree > 0:
            return False
    return True


def is_irreducible(a: Polynomial) -> bool:
    field = a.field
    if a.degree < 1:
        return False
    if a.degree == 1:
        return True
    if isinstance(field, FiniteField):
        return _rabin_irreducible(a)
    if isinstance(field, RationalField):
        if a.degree > config.RATIONAL_FACTOR_DEGREE_CAP:
            raise UnsupportedFactorization(f"degree {a.degree} exceeds the cap over Q", operation="is_irreducible")
        return _to_sympy(a).is_irreducible
    if isinstance(field, NumberField):
        if a.degree > config.RATIONAL_FACTOR_DEGREE_CAP:
            raise UnsupportedFactorization(f"degree {a.degree} exceeds the cap over {field}", operation="is_irreducible")
        _, monic = a.monic()
        if gcd(monic, monic.derivative()).degree > 0:
            return False
        _, norm = _squarefree_norm(monic)
        return norm.is_irreducible
    if isinstance(field, RationalFunctionField):
        _, monic = a.monic()
        binomial = _binomial_root(monic)
        if binomial is None:
            raise UnsupportedFactorization(
                f"irreducibility of {a} over {field} is decided for binomials X^(p^k) - a only",
                operation="is_irreducible",
            )
        return not field.is_pth_power(binomial[1].value)
    raise UnsupportedFactorization(f"no irreducibility test over {field}", operation="is_irreducible")
