"""Integer-valued style rings I(B, A) and their composite covers."""

import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from composites import config
from composites.composite import CompositeRing, contains, field_composite, z_in_q
from composites.errors import FieldMismatch, IncompatibleFields, NotEmbedded, UnitOrZeroModulus
from composites.fieldtower import FieldDescriptor, FieldElement, make_extension, q
from composites.polyring import Polynomial, evaluate

logger = logging.getLogger(__name__)


class CoverVariant(enum.Enum):
    RESIDUE_FINITE = "residue-finite"
    FINITE_SUBRING = "finite-subring"


@dataclass(frozen=True)
class CoverInstance:
    variant: CoverVariant
    witness: Polynomial
    cover: CompositeRing
    modulus: int = None
    pair: object = None


@dataclass(frozen=True)
class CoverCertificate:
    """The cover ring, its witness, and the witness coefficient that escapes the smaller ring."""

    cover: CompositeRing
    witness: Polynomial
    escape_degree: int = None
    escape_coefficient: FieldElement = None

    @property
    def minimal(self) -> bool:
        return self.escape_coefficient is not None


def residue_transversal(r: int) -> list:
    return list(range(abs(r)))


def residue_witness(r: int) -> Polynomial:
    """(1/r)·∏(X − r_i) over the transversal 0..|r|−1; maps Z into Z."""
    if abs(r) <= 1:
        raise UnitOrZeroModulus(
            f"r = {r} is zero or a unit", operation="residue_witness", citation="Let $r$ be a nonzero nonunit of $R$"
        )
    field = q()
    f = Polynomial.constant(field, Fraction(1, r))
    for r_i in residue_transversal(r):
        f = f * Polynomial(field, (-r_i, 1))
    bad = [a for a in config.INTEGER_SAMPLE_RANGE if evaluate(f, field(a)).value.denominator != 1]
    if bad:
        raise UnitOrZeroModulus(f"witness for r = {r} is not integer-valued at {bad}", operation="residue_witness")
    return f


def finite_subring_witness(small: FieldDescriptor, big: FieldDescriptor, b: FieldElement) -> Polynomial:
    """b·∏_{a∈A}(X − a), vanishing on A."""
    if not small.is_finite:
        raise NotEmbedded(f"{small} is not finite", operation="finite_subring_witness")
    try:
        pair = make_extension(small, big)
    except IncompatibleFields as exc:
        raise NotEmbedded(str(exc), operation="finite_subring_witness") from exc
    if b.parent != big:
        raise FieldMismatch(f"{b} ∉ {big}", operation="finite_subring_witness")
    f = Polynomial.constant(big, b)
    for a in small.elements():
        f = f * Polynomial(big, (-pair.embed(a), big.one()))
    for a in small.elements():
        if not evaluate(f, a, pair).is_zero():
            raise NotEmbedded(f"witness does not vanish at {a}", operation="finite_subring_witness")
    return f


def int_valued_membership(variant: CoverVariant, f: Polynomial, pair=None) -> bool:
    """f(A) ⊆ A, with A = Z (residue-finite) or A = pair.small (finite-subring)."""
    if variant is CoverVariant.RESIDUE_FINITE:
        period = math.lcm(*(c.value.denominator for c in f.coeffs)) if f.coeffs else 1
        # f(a + period) − f(a) is integral, so residues mod period suffice
        return all(evaluate(f, f.field(a)).value.denominator == 1 for a in range(period))
    return all(pair.contains(evaluate(f, a, pair)) for a in pair.small.elements())


def residue_cover(r: int) -> CoverInstance:
    return CoverInstance(CoverVariant.RESIDUE_FINITE, residue_witness(r), z_in_q(), modulus=r)


def finite_subring_cover(small: FieldDescriptor, big: FieldDescriptor, b: FieldElement) -> CoverInstance:
    witness = finite_subring_witness(small, big, b)
    ring = field_composite(small, big)
    return CoverInstance(CoverVariant.FINITE_SUBRING, witness, ring, pair=ring.pair)


def composite_cover(instance: CoverInstance) -> CoverCertificate:
    """The composite cover with the witness coefficient lying outside the smaller candidate ring."""
    witness, ring = instance.witness, instance.cover
    if not contains(ring, witness):
        raise NotEmbedded(f"witness {witness} ∉ {ring}", operation="composite_cover")
    for k in range(witness.degree, 0, -1):
        c = witness.coeff(k)
        if instance.variant is CoverVariant.RESIDUE_FINITE:
            escapes = c.value.denominator != 1
        else:
            escapes = not c.is_zero() and not instance.pair.contains(c)
        if escapes:
            return CoverCertificate(ring, witness, k, c)
    logger.info("witness %s has every coefficient in the small ring; the cover is %s", witness, ring)
    return CoverCertificate(ring, witness)
