"""R-matrices: quasi-triangular and triangular structure over k[Z^r].

An R-matrix candidate is an invertible element of the two-fold tensor
power.  The two coproduct identities it must satisfy mix the
associativity constraint phi through all six leg orders, so the
implementation leans on exact leg permutation and identity-leg
insertion; no floating point, no normalization by convention.
"""

from __future__ import annotations

from .laurent import (
    LegMismatch,
    RankMismatch,
    TensorElement,
    apply_algebra_map_on_leg,
    as_unit,
    insert_unit_leg,
    invert_unit,
    permute_legs,
)
from .quasibialgebra import (
    NotForcedForm,
    QuasiBialgebraPresentation,
    find_trivializing_twist,
    is_ordinary_coalgebra,
)
from .reports import AxiomCheck, VerificationReport, compare


def check_rmatrix_shape(r_elem: TensorElement, rank: int) -> None:
    """An R-matrix lives in two legs over the right rank and is a unit."""
    if r_elem.rank != rank:
        raise RankMismatch(f"R has rank {r_elem.rank}, expected {rank}")
    if r_elem.legs != 2:
        raise LegMismatch(f"R must have 2 legs, got {r_elem.legs}")
    as_unit(r_elem)


def verify_R(p: QuasiBialgebraPresentation, r_elem: TensorElement) -> VerificationReport:
    """Check the quasi-triangular axioms plus triangularity, exactly.

    The two coproduct identities are checked in the three-leg power with
    every phi factor permuted into the leg order the identity calls for;
    the opposite-coproduct identity is checked on each generator.
    """
    check_rmatrix_shape(r_elem, p.rank)
    delta = p.coproduct
    phi = p.phi
    r_inv = invert_unit(r_elem)
    checks: list[AxiomCheck] = []

    # (1) coproduct on the first leg of R
    lhs = apply_algebra_map_on_leg(delta, r_elem, 1)
    rhs = (
        permute_legs(phi, (2, 3, 1))
        * insert_unit_leg(r_elem, 2)
        * invert_unit(permute_legs(phi, (1, 3, 2)))
        * insert_unit_leg(r_elem, 1)
        * phi
    )
    checks.append(compare("coproduct_first_leg", lhs, rhs))

    # (2) coproduct on the second leg of R
    lhs = apply_algebra_map_on_leg(delta, r_elem, 2)
    rhs = (
        invert_unit(permute_legs(phi, (3, 1, 2)))
        * insert_unit_leg(r_elem, 2)
        * permute_legs(phi, (2, 1, 3))
        * insert_unit_leg(r_elem, 3)
        * invert_unit(phi)
    )
    checks.append(compare("coproduct_second_leg", lhs, rhs))

    # (3) R conjugates the coproduct to its opposite, generator by generator
    for i in range(p.rank):
        d = delta.images[i].to_tensor()
        checks.append(
            compare(
                f"opposite_coproduct[g{i + 1}]",
                permute_legs(d, (2, 1)),
                r_elem * d * r_inv,
            )
        )

    # (4) triangularity: the flip of R is its inverse
    checks.append(compare("triangularity", permute_legs(r_elem, (2, 1)), r_inv))
    return VerificationReport(tuple(checks))


def twist_R(r_elem: TensorElement, alpha: TensorElement) -> TensorElement:
    """Carry an R-matrix along a twist: flip(alpha) * R * alpha^-1."""
    if r_elem.rank != alpha.rank:
        raise RankMismatch(f"R rank {r_elem.rank} vs alpha rank {alpha.rank}")
    if r_elem.legs != 2 or alpha.legs != 2:
        raise LegMismatch("R and alpha must both have 2 legs")
    as_unit(r_elem)
    return permute_legs(alpha, (2, 1)) * r_elem * invert_unit(alpha)


def solve_R(p: QuasiBialgebraPresentation) -> list[TensorElement]:
    """All R-matrices of a presentation in the classified family.

    Every invertible element of the two-leg power is a monomial
    t * g^x (x) g^y, so the search space is (t, x, y) and nothing else.
    For the ordinary bialgebra the two coproduct identities collapse to
    t = t^2 on scalars and x = 2x, y = 2y on exponents, whose only
    solution is the identity.  A general presentation is first carried
    to the ordinary one by its trivializing twist, and solutions are
    carried back; twisting is a bijection on R-matrices, so the list is
    complete.
    """
    if not is_ordinary_coalgebra(p):
        raise NotForcedForm("coalgebra part must be ordinary; run normalize first")
    trivializer = find_trivializing_twist(p)
    ordinary_solutions = [TensorElement.one(p.rank, 2)]
    back = invert_unit(trivializer)
    solutions = [twist_R(s, back) for s in ordinary_solutions]
    solutions.sort(key=lambda s: s.terms())
    return solutions
