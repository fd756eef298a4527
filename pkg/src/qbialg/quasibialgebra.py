"""Quasi-bialgebra presentations on Laurent polynomial group algebras.

A presentation packages the coalgebra data (coproduct and counit, given
on generators) together with the associativity constraint phi and the
unit constraints lambda and rho, all living in tensor powers of k[Z^r].
The checks here are exact: a presentation either satisfies an axiom on
the nose or the report carries both sides as a witness.

Generator-level checking suffices because every map involved is an
algebra map and the generators generate: an identity between algebra
maps that holds on each g_i holds everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .laurent import (
    AlgebraMapSpec,
    CounitSpec,
    LegMismatch,
    NotAUnit,
    RankMismatch,
    TensorElement,
    UnitElement,
    apply_algebra_map_on_leg,
    apply_counit_on_leg,
    as_unit,
    invert_unit,
    tensor_concat,
)
from .reports import AxiomCheck, VerificationReport, compare


class NotForcedForm(ValueError):
    """Coproduct is not of the shape that group-likeness forces."""


class NoMonomialTwist(ValueError):
    """No invertible monomial twist carries the input to the ordinary form."""


def _basis_vector(rank: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(rank))


@dataclass(frozen=True)
class QuasiBialgebraPresentation:
    """The full datum (coproduct, counit, phi, lambda, rho) over k[Z^r]."""

    rank: int
    coproduct: AlgebraMapSpec
    counit: CounitSpec
    phi: TensorElement
    lam: TensorElement
    rho: TensorElement

    def __post_init__(self):
        r = self.rank
        if self.coproduct.rank != r or self.counit.rank != r:
            raise RankMismatch("coproduct/counit rank does not match the presentation")
        if self.coproduct.target_legs != 2:
            raise LegMismatch("a coproduct must have two output legs")
        for name, elem, legs in (("phi", self.phi, 3), ("lambda", self.lam, 1), ("rho", self.rho, 1)):
            if elem.rank != r:
                raise RankMismatch(f"{name} has rank {elem.rank}, expected {r}")
            if elem.legs != legs:
                raise LegMismatch(f"{name} has {elem.legs} legs, expected {legs}")
            as_unit(elem)  # raises NotAUnit when the constraint is not invertible

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "coproduct": [im.to_tensor().to_dict() for im in self.coproduct.images],
            "counit": [str(v) for v in self.counit.values],
            "phi": self.phi.to_dict(),
            "lambda": self.lam.to_dict(),
            "rho": self.rho.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "QuasiBialgebraPresentation":
        rank = int(data["rank"])
        images = tuple(as_unit(TensorElement.from_dict(d)) for d in data["coproduct"])
        counit = CounitSpec(rank, tuple(Fraction(str(v)) for v in data["counit"]))
        return cls(
            rank,
            AlgebraMapSpec(rank, 2, images),
            counit,
            TensorElement.from_dict(data["phi"]),
            TensorElement.from_dict(data["lambda"]),
            TensorElement.from_dict(data["rho"]),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, text: str) -> "QuasiBialgebraPresentation":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class CanonicalTriple:
    """Parameters (q, h, g) of a canonical quasi-bialgebra structure."""

    q: Fraction
    h: tuple[int, ...]
    g: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if not self.q:
            raise NotAUnit("the scalar q of a canonical triple must be nonzero")
        object.__setattr__(self, "h", tuple(int(c) for c in self.h))
        object.__setattr__(self, "g", tuple(int(c) for c in self.g))
        if len(self.h) != len(self.g) or not self.h:
            raise RankMismatch("h and g must be exponent vectors of the same rank >= 1")

    @property
    def rank(self) -> int:
        return len(self.h)


@dataclass(frozen=True)
class BialgebraIso:
    """An algebra automorphism of k[Z^r] scaling each generator."""

    rank: int
    generator_images: tuple[UnitElement, ...]

    def as_map(self) -> AlgebraMapSpec:
        return AlgebraMapSpec(self.rank, 1, self.generator_images)

    def apply(self, x: TensorElement) -> TensorElement:
        """Apply the automorphism to every leg of x."""
        amap = self.as_map()
        for leg in range(1, x.legs + 1):
            x = apply_algebra_map_on_leg(amap, x, leg)
        return x


def ordinary(rank: int) -> QuasiBialgebraPresentation:
    """The standard bialgebra: diagonal coproduct, trivial constraints."""
    images = tuple(
        UnitElement(rank, Fraction(1), (_basis_vector(rank, i), _basis_vector(rank, i)))
        for i in range(rank)
    )
    return QuasiBialgebraPresentation(
        rank,
        AlgebraMapSpec(rank, 2, images),
        CounitSpec(rank, (Fraction(1),) * rank),
        TensorElement.one(rank, 3),
        TensorElement.one(rank, 1),
        TensorElement.one(rank, 1),
    )


def canonical(triple: CanonicalTriple) -> QuasiBialgebraPresentation:
    """The structure with phi = h (x) 1 (x) g, lambda = q g^-1, rho = q h.

    The coalgebra part stays ordinary; only the constraints move.  These
    are exactly the presentations that exhaust, up to twisting, all
    quasi-bialgebra structures available on k[Z^r].
    """
    r = triple.rank
    base = ordinary(r)
    zero = (0,) * r
    phi = TensorElement.single(1, (triple.h, zero, triple.g))
    lam = TensorElement.single(triple.q, (tuple(-c for c in triple.g),))
    rho = TensorElement.single(triple.q, (triple.h,))
    return QuasiBialgebraPresentation(r, base.coproduct, base.counit, phi, lam, rho)


def is_ordinary_coalgebra(p: QuasiBialgebraPresentation) -> bool:
    """True when the coproduct is diagonal and the counit is constant 1."""
    r = p.rank
    for i, im in enumerate(p.coproduct.images):
        e = _basis_vector(r, i)
        if im.scalar != 1 or im.monomial != (e, e):
            return False
    return all(v == 1 for v in p.counit.values)


def verify(p: QuasiBialgebraPresentation) -> VerificationReport:
    """Check every quasi-bialgebra axiom exactly; witnesses on failure."""
    r = p.rank
    delta = p.coproduct
    eps = p.counit
    phi, lam, rho = p.phi, p.lam, p.rho
    one1 = TensorElement.one(r, 1)
    checks: list[AxiomCheck] = []

    # (i) the 3-cocycle identity for phi in four legs
    lhs = apply_algebra_map_on_leg(delta, phi, 3) * apply_algebra_map_on_leg(delta, phi, 1)
    rhs = (
        tensor_concat(one1, phi)
        * apply_algebra_map_on_leg(delta, phi, 2)
        * tensor_concat(phi, one1)
    )
    checks.append(compare("cocycle", lhs, rhs))

    # (ii) counit applied to the middle leg of phi matches the unit constraints
    checks.append(
        compare(
            "counital",
            apply_counit_on_leg(eps, phi, 2),
            tensor_concat(rho, invert_unit(lam)),
        )
    )

    phi_inv = invert_unit(phi)
    lam_inv = invert_unit(lam)
    rho_inv = invert_unit(rho)
    for i in range(r):
        gen = TensorElement.generator(r, i + 1)
        d = delta.images[i].to_tensor()

        # (iii) coassociativity up to conjugation by phi
        lhs = apply_algebra_map_on_leg(delta, d, 2)
        rhs = phi * apply_algebra_map_on_leg(delta, d, 1) * phi_inv
        checks.append(compare(f"quasi_coassociativity[g{i + 1}]", lhs, rhs))

        # (iv) counit laws, one per side
        checks.append(
            compare(
                f"counit_left[g{i + 1}]",
                apply_counit_on_leg(eps, d, 1),
                lam_inv * gen * lam,
            )
        )
        checks.append(
            compare(
                f"counit_right[g{i + 1}]",
                apply_counit_on_leg(eps, d, 2),
                rho_inv * gen * rho,
            )
        )

    # (v) the constraints are invertible; construction already enforces
    # this, so the entry documents the fact rather than re-deriving it.
    checks.append(AxiomCheck("invertibility", True))
    return VerificationReport(tuple(checks))


def twist(p: QuasiBialgebraPresentation, alpha: TensorElement) -> QuasiBialgebraPresentation:
    """Conjugate the presentation by an invertible alpha in two legs.

    The coproduct is conjugated, the constraint phi picks up the usual
    boundary-like correction, and lambda, rho absorb the counit of the
    inverse.  Twisting by alpha and then by its inverse is the identity.
    """
    if alpha.rank != p.rank:
        raise RankMismatch(f"alpha rank {alpha.rank} vs presentation rank {p.rank}")
    if alpha.legs != 2:
        raise LegMismatch(f"a twist lives in two legs, got {alpha.legs}")
    alpha_inv = invert_unit(alpha)  # NotAUnit propagates for bad alpha
    r = p.rank
    delta = p.coproduct
    one1 = TensorElement.one(r, 1)

    new_images = tuple(
        as_unit(alpha * im.to_tensor() * alpha_inv) for im in delta.images
    )
    new_phi = (
        tensor_concat(one1, alpha)
        * apply_algebra_map_on_leg(delta, alpha, 2)
        * p.phi
        * apply_algebra_map_on_leg(delta, alpha_inv, 1)
        * tensor_concat(alpha_inv, one1)
    )
    new_lam = p.lam * apply_counit_on_leg(p.counit, alpha_inv, 1)
    new_rho = p.rho * apply_counit_on_leg(p.counit, alpha_inv, 2)
    return QuasiBialgebraPresentation(
        r, AlgebraMapSpec(r, 2, new_images), p.counit, new_phi, new_lam, new_rho
    )


def normalize(p: QuasiBialgebraPresentation) -> tuple[BialgebraIso, QuasiBialgebraPresentation]:
    """Rescale generators so the coalgebra part becomes the ordinary one.

    Group-likeness forces the coproduct of each generator to be
    (1 / counit(g_i)) * g_i (x) g_i; anything else raises NotForcedForm.
    The returned automorphism sends g_i to counit(g_i) * g_i and the
    returned presentation carries the constraints across it.
    """
    r = p.rank
    images = []
    for i in range(r):
        e = _basis_vector(r, i)
        v = p.counit.values[i]
        forced = TensorElement(r, 2, {(e, e): 1 / v})
        if p.coproduct.images[i].to_tensor() != forced:
            raise NotForcedForm(
                f"coproduct of g{i + 1} is not (1/counit) * g{i + 1} (x) g{i + 1}"
            )
        images.append(UnitElement(r, v, (e,)))
    iso = BialgebraIso(r, tuple(images))
    base = ordinary(r)
    result = QuasiBialgebraPresentation(
        r,
        base.coproduct,
        base.counit,
        iso.apply(p.phi),
        iso.apply(p.lam),
        iso.apply(p.rho),
    )
    return iso, result


def find_trivializing_twist(p: QuasiBialgebraPresentation) -> TensorElement:
    """Solve for the monomial twist that turns p into the ordinary bialgebra.

    Writing the candidate as t * g^x (x) g^y, the twisted constraints are
    again monomials whose scalar and exponents are affine in (t, x, y),
    so the constraint equations read off a unique candidate: x from the
    first leg of phi, y from minus its third leg, t from the scalar of
    lambda.  Because every invertible element of the two-fold tensor
    power is such a monomial, failure of the candidate proves there is
    no twist at all.
    """
    if not is_ordinary_coalgebra(p):
        raise NotForcedForm("coalgebra part must be ordinary; run normalize first")
    phi_u = as_unit(p.phi)
    lam_u = as_unit(p.lam)
    first, _middle, third = phi_u.monomial
    candidate = TensorElement(
        p.rank, 2, {(first, tuple(-c for c in third)): lam_u.scalar}
    )
    if twist(p, candidate) != ordinary(p.rank):
        raise NoMonomialTwist(
            "no invertible monomial twist carries this presentation to the ordinary one"
        )
    return candidate
