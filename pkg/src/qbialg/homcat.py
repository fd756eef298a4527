"""Monoidal categories of vector spaces carrying a marked automorphism.

An object is a pair (V, f) with f an invertible rational matrix on V;
morphisms are linear maps commuting with the marked automorphisms.  A
nonzero scalar q and integers (a, b) index a family of symmetric
monoidal structures on this category:

    associator   f_X^a (x) Id (x) f_Z^b
    left unitor  q f_X^(-b)     right unitor  q f_X^a
    braiding     flip after f_X^(a+b) (x) f_Y^(-(a+b))

The checker does not trust any of the coherence claims: it composes
both sides of each axiom on sampled objects and compares the matrices
entry by entry, exactly.  Tensor factors are tracked leg by leg so that
compositions cost products of small matrices, and a full matrix is only
materialized to compare the two sides.

Flattening convention everywhere: row-major with the left tensor factor
slowest.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from . import matrices as mat
from .matrices import Matrix, NotInvertible


@dataclass(frozen=True)
class MonoidalParams:
    """The scalar q != 0 and the pair of integer exponents (a, b)."""

    q: Fraction
    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if not self.q:
            raise ValueError("the unit constraint scalar q must be nonzero")
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "b", int(self.b))

    def to_dict(self) -> dict:
        return {"q": str(self.q), "a": self.a, "b": self.b}


@dataclass(frozen=True)
class HomObject:
    """A vector space dimension together with an invertible automorphism."""

    dim: int
    matrix: Matrix

    def __post_init__(self):
        m = mat.from_rows(self.matrix)
        if mat.shape(m) != (self.dim, self.dim):
            raise ValueError(f"automorphism must be {self.dim}x{self.dim}")
        mat.inverse(m)  # NotInvertible propagates
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class HomMorphism:
    """A linear map intertwining the marked automorphisms, checked exactly."""

    source: HomObject
    target: HomObject
    matrix: Matrix

    def __post_init__(self):
        m = mat.from_rows(self.matrix)
        if mat.shape(m) != (self.target.dim, self.source.dim):
            raise ValueError(
                f"map must be {self.target.dim}x{self.source.dim}, got {mat.shape(m)}"
            )
        if mat.mul(self.target.matrix, m) != mat.mul(m, self.source.matrix):
            raise ValueError("map does not intertwine the marked automorphisms")
        object.__setattr__(self, "matrix", m)


def unit_object() -> HomObject:
    return HomObject(1, ((Fraction(1),),))


def tensor_obj(x: HomObject, y: HomObject) -> HomObject:
    """Tensor product: dimensions multiply, automorphisms Kronecker."""
    return HomObject(x.dim * y.dim, mat.kron(x.matrix, y.matrix))


def from_module_action(matrix) -> HomObject:
    """Wrap the action of the group generator on a module as an object.

    The module structure over the Laurent ring is exactly an invertible
    operator, so this is a bijection on data; tensoring modules matches
    tensoring objects because the generator acts diagonally.
    """
    m = mat.from_rows(matrix)
    rows, cols = mat.shape(m)
    if rows != cols:
        raise NotInvertible(f"action matrix is {rows}x{cols}, not square")
    return HomObject(rows, m)


@dataclass(frozen=True)
class StructureMaps:
    """Evaluation data of one monoidal structure in the family.

    Constraints are powers of the object automorphisms: the associator
    applies ``assoc_exp`` across the three factors, each unitor is a
    scalar times a power, and the braiding applies ``braid_exp`` before
    the flip.  Both the parameterized structures and the directly
    defined modified structure fit this shape.
    """

    assoc_exp: tuple[int, int, int]
    left_scalar: Fraction
    left_exp: int
    right_scalar: Fraction
    right_exp: int
    braid_exp: tuple[int, int]


def structure_maps(p) -> StructureMaps:
    if isinstance(p, StructureMaps):
        return p
    if isinstance(p, MonoidalParams):
        return StructureMaps(
            assoc_exp=(p.a, 0, p.b),
            left_scalar=p.q,
            left_exp=-p.b,
            right_scalar=p.q,
            right_exp=p.a,
            braid_exp=(p.a + p.b, -(p.a + p.b)),
        )
    raise TypeError(f"expected MonoidalParams or StructureMaps, got {type(p).__name__}")


# The modified structure written out directly: associator twists the outer
# factors by f and f^-1, both unitors are the automorphism itself, and the
# braiding is the plain flip.
HTILDE_STRUCTURE = StructureMaps((1, 0, -1), Fraction(1), 1, Fraction(1), 1, (0, 0))

# The unmodified vector space structure with the identity constraints.
PLAIN_STRUCTURE = StructureMaps((0, 0, 0), Fraction(1), 0, Fraction(1), 0, (0, 0))


# -- public constraint morphisms ------------------------------------------


def associator(p, x: HomObject, y: HomObject, z: HomObject) -> HomMorphism:
    s = structure_maps(p)
    src = tensor_obj(tensor_obj(x, y), z)
    tgt = tensor_obj(x, tensor_obj(y, z))
    m = mat.kron(
        mat.power(x.matrix, s.assoc_exp[0]),
        mat.kron(mat.power(y.matrix, s.assoc_exp[1]), mat.power(z.matrix, s.assoc_exp[2])),
    )
    return HomMorphism(src, tgt, m)


def left_unitor(p, x: HomObject) -> HomMorphism:
    s = structure_maps(p)
    src = tensor_obj(unit_object(), x)
    m = mat.scale(s.left_scalar, mat.power(x.matrix, s.left_exp))
    return HomMorphism(src, x, m)


def right_unitor(p, x: HomObject) -> HomMorphism:
    s = structure_maps(p)
    src = tensor_obj(x, unit_object())
    m = mat.scale(s.right_scalar, mat.power(x.matrix, s.right_exp))
    return HomMorphism(src, x, m)


def braiding(p, x: HomObject, y: HomObject) -> HomMorphism:
    s = structure_maps(p)
    src = tensor_obj(x, y)
    tgt = tensor_obj(y, x)
    m = mat.mul(
        mat.flip(x.dim, y.dim),
        mat.kron(mat.power(x.matrix, s.braid_exp[0]), mat.power(y.matrix, s.braid_exp[1])),
    )
    return HomMorphism(src, tgt, m)


# -- leg-structured composition --------------------------------------------


@dataclass(frozen=True)
class _LegMap:
    """scalar * (leg permutation) * (legwise matrices), composed cheaply.

    ``perm[i]`` is the output slot receiving input leg i; ``mats[i]`` is
    the square matrix applied to leg i before the permutation.  Axiom
    sides are built entirely out of these, so composition never touches
    a full Kronecker matrix until the final comparison.
    """

    scalar: Fraction
    perm: tuple[int, ...]
    mats: tuple[Matrix, ...]

    def after(self, other: "_LegMap") -> "_LegMap":
        """Composite self . other (other runs first)."""
        perm = tuple(self.perm[other.perm[i]] for i in range(len(other.perm)))
        mats = tuple(
            mat.mul(self.mats[other.perm[i]], other.mats[i]) for i in range(len(other.mats))
        )
        return _LegMap(self.scalar * other.scalar, perm, mats)

    def to_matrix(self) -> Matrix:
        mats = list(self.mats)
        mats[0] = mat.scale(self.scalar, mats[0])
        k = reduce(mat.kron, mats)
        n = len(self.perm)
        if self.perm == tuple(range(n)):
            return k
        dims = [len(m) for m in mats]
        out_dims = [0] * n
        for i, p in enumerate(self.perm):
            out_dims[p] = dims[i]
        rows = []
        total = 1
        for d in out_dims:
            total *= d
        for flat in range(total):
            rem = flat
            idx = [0] * n
            for j in range(n - 1, -1, -1):
                idx[j] = rem % out_dims[j]
                rem //= out_dims[j]
            src = 0
            for i in range(n):
                src = src * dims[i] + idx[self.perm[i]]
            rows.append(k[src])
        return tuple(rows)


def _legs(objs: Sequence[HomObject], exps: Sequence[int], scalar=Fraction(1), perm=None) -> _LegMap:
    n = len(objs)
    return _LegMap(
        Fraction(scalar),
        tuple(range(n)) if perm is None else tuple(perm),
        tuple(mat.power(o.matrix, e) for o, e in zip(objs, exps)),
    )


def _identity_legs(objs: Sequence[HomObject]) -> _LegMap:
    return _legs(objs, [0] * len(objs))


# -- the coherence axioms, one pair of sides each ---------------------------


def pentagon_sides(p, u, v, w, x) -> tuple[Matrix, Matrix]:
    s = structure_maps(p)
    e1, e2, e3 = s.assoc_exp
    objs = (u, v, w, x)
    lhs = (
        _legs(objs, (0, e1, e2, e3))
        .after(_legs(objs, (e1, e2, e2, e3)))
        .after(_legs(objs, (e1, e2, e3, 0)))
    )
    rhs = _legs(objs, (e1, e2, e3, e3)).after(_legs(objs, (e1, e1, e2, e3)))
    return lhs.to_matrix(), rhs.to_matrix()


def triangle_sides(p, v, w) -> tuple[Matrix, Matrix]:
    s = structure_maps(p)
    e1, e2, e3 = s.assoc_exp
    k = unit_object()
    objs = (v, k, w)
    lhs = _legs(objs, (0, 0, s.left_exp), scalar=s.left_scalar).after(
        _legs(objs, (e1, e2, e3))
    )
    rhs = _legs(objs, (s.right_exp, 0, 0), scalar=s.right_scalar)
    return lhs.to_matrix(), rhs.to_matrix()


def hexagon_forward_sides(p, u, v, w) -> tuple[Matrix, Matrix]:
    s = structure_maps(p)
    e1, e2, e3 = s.assoc_exp
    b1, b2 = s.braid_exp
    lhs = (
        _legs((v, w, u), (e1, e2, e3))
        .after(_legs((u, v, w), (b1, b2, b2), perm=(2, 0, 1)))
        .after(_legs((u, v, w), (e1, e2, e3)))
    )
    rhs = (
        _legs((v, u, w), (0, b1, b2), perm=(0, 2, 1))
        .after(_legs((v, u, w), (e1, e2, e3)))
        .after(_legs((u, v, w), (b1, b2, 0), perm=(1, 0, 2)))
    )
    return lhs.to_matrix(), rhs.to_matrix()


def hexagon_backward_sides(p, u, v, w) -> tuple[Matrix, Matrix]:
    s = structure_maps(p)
    e1, e2, e3 = s.assoc_exp
    b1, b2 = s.braid_exp
    lhs = (
        _legs((w, u, v), (-e1, -e2, -e3))
        .after(_legs((u, v, w), (b1, b1, b2), perm=(1, 2, 0)))
        .after(_legs((u, v, w), (-e1, -e2, -e3)))
    )
    rhs = (
        _legs((u, w, v), (b1, b2, 0), perm=(1, 0, 2))
        .after(_legs((u, w, v), (-e1, -e2, -e3)))
        .after(_legs((u, v, w), (0, b1, b2), perm=(0, 2, 1)))
    )
    return lhs.to_matrix(), rhs.to_matrix()


def symmetry_sides(p, u, v) -> tuple[Matrix, Matrix]:
    s = structure_maps(p)
    b1, b2 = s.braid_exp
    lhs = _legs((v, u), (b1, b2), perm=(1, 0)).after(
        _legs((u, v), (b1, b2), perm=(1, 0))
    )
    return lhs.to_matrix(), _identity_legs((u, v)).to_matrix()


def naturality_associator_sides(p, sources, targets, maps) -> tuple[Matrix, Matrix]:
    s = structure_maps(p)
    xi = _LegMap(Fraction(1), (0, 1, 2), tuple(maps))
    lhs = _legs(targets, s.assoc_exp).after(xi)
    rhs = xi.after(_legs(sources, s.assoc_exp))
    return lhs.to_matrix(), rhs.to_matrix()


def naturality_unitor_sides(p, source, target, m, side: str) -> tuple[Matrix, Matrix]:
    s = structure_maps(p)
    exp = s.left_exp if side == "left" else s.right_exp
    scal = s.left_scalar if side == "left" else s.right_scalar
    one = ((Fraction(1),),)
    unit = unit_object()
    if side == "left":
        xi = _LegMap(Fraction(1), (0, 1), (one, m))
        src, tgt, exps = (unit, source), (unit, target), (0, exp)
    else:
        xi = _LegMap(Fraction(1), (0, 1), (m, one))
        src, tgt, exps = (source, unit), (target, unit), (exp, 0)
    lhs = _legs(tgt, exps, scalar=scal).after(xi)
    rhs = xi.after(_legs(src, exps, scalar=scal))
    return lhs.to_matrix(), rhs.to_matrix()


def naturality_braiding_sides(p, sources, targets, maps) -> tuple[Matrix, Matrix]:
    s = structure_maps(p)
    b1, b2 = s.braid_exp
    lhs = _legs(targets, (b1, b2), perm=(1, 0)).after(
        _LegMap(Fraction(1), (0, 1), tuple(maps))
    )
    rhs = _LegMap(Fraction(1), (0, 1), (maps[1], maps[0])).after(
        _legs(sources, (b1, b2), perm=(1, 0))
    )
    return lhs.to_matrix(), rhs.to_matrix()


# -- random sampling, all through one seeded generator ----------------------


def random_unimodular(rng: random.Random, n: int, ops: int = 6) -> Matrix:
    """A product of elementary integer matrices, so every power is exact."""
    rows = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for _ in range(ops):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.choice((-1, 1))
            rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
        elif kind == 1 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == 2:
            rows[i] = [-x for x in rows[i]]
    return tuple(tuple(r) for r in rows)


def random_object(rng: random.Random, max_dim: int = 4) -> HomObject:
    n = rng.randint(1, max_dim)
    return HomObject(n, random_unimodular(rng, n))


def random_morphism(rng: random.Random, x: HomObject) -> tuple[HomObject, Matrix]:
    """A target object and an intertwiner from x to it.

    The target automorphism is a unimodular conjugate of the source one
    and the map is that conjugation times a small polynomial in f, which
    commutes with f; intertwining therefore holds by construction and is
    still asserted by HomMorphism wherever these get wrapped.
    """
    n = x.dim
    u = random_unimodular(rng, n)
    f = x.matrix
    coeffs = [rng.randint(-1, 1) for _ in range(3)]
    if not any(coeffs):
        coeffs[rng.randrange(3)] = 1
    poly = mat.scale(coeffs[0], mat.identity(n))
    fp = f
    for c in coeffs[1:]:
        if c:
            poly = tuple(
                tuple(a + Fraction(c) * b for a, b in zip(ra, rb)) for ra, rb in zip(poly, fp)
            )
        fp = mat.mul(fp, f)
    target = HomObject(n, mat.mul(mat.mul(u, f), mat.inverse(u)))
    return target, mat.mul(u, poly)


# -- reports ----------------------------------------------------------------


@dataclass(frozen=True)
class InstanceResult:
    dims: tuple[int, ...]
    passed: bool
    witness: tuple | None = None  # lhs - rhs, stringified, on failure only

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "pass": self.passed,
            "witness": [list(r) for r in self.witness] if self.witness else None,
        }


@dataclass(frozen=True)
class CoherenceReport:
    params: dict
    seed: int
    trials: int
    axioms: tuple[tuple[str, tuple[InstanceResult, ...]], ...]

    @property
    def ok(self) -> bool:
        return all(inst.passed for _, group in self.axioms for inst in group)

    def to_dict(self) -> dict:
        return {
            "params": self.params,
            "seed": self.seed,
            "trials": self.trials,
            "ok": self.ok,
            "axioms": [
                {"axiom": name, "instances": [i.to_dict() for i in group]}
                for name, group in self.axioms
            ],
        }


COHERENCE_AXIOMS = (
    "pentagon",
    "triangle",
    "hexagon_forward",
    "hexagon_backward",
    "symmetry",
    "naturality_associator",
    "naturality_unitors",
    "naturality_braiding",
)


def _instance(sides) -> InstanceResult:
    lhs, rhs = sides
    if lhs == rhs:
        return InstanceResult((), True)
    diff = mat.sub(lhs, rhs)
    return InstanceResult((), False, tuple(tuple(str(x) for x in row) for row in diff))


def check_coherence(
    p,
    objects: Sequence[HomObject] = (),
    trials: int = 25,
    seed: int = 0,
    max_dim: int = 4,
) -> CoherenceReport:
    """Exercise every axiom of the structure on sampled objects.

    Sampling is driven entirely by the seed, so reports are reproducible
    byte for byte.  User-supplied objects, when given, are cycled
    through deterministically and mixed with random picks.
    """
    s = structure_maps(p)
    rng = random.Random(seed)
    pool = list(objects)

    def pick(t: int, slot: int) -> HomObject:
        if pool:
            if slot == 0:
                return pool[t % len(pool)]
            return rng.choice(pool)
        return random_object(rng, max_dim)

    groups = []
    for axiom in COHERENCE_AXIOMS:
        results = []
        for t in range(trials):
            if axiom == "pentagon":
                objs = tuple(pick(t, i) for i in range(4))
                res = _instance(pentagon_sides(s, *objs))
            elif axiom == "triangle":
                objs = tuple(pick(t, i) for i in range(2))
                res = _instance(triangle_sides(s, *objs))
            elif axiom == "hexagon_forward":
                objs = tuple(pick(t, i) for i in range(3))
                res = _instance(hexagon_forward_sides(s, *objs))
            elif axiom == "hexagon_backward":
                objs = tuple(pick(t, i) for i in range(3))
                res = _instance(hexagon_backward_sides(s, *objs))
            elif axiom == "symmetry":
                objs = tuple(pick(t, i) for i in range(2))
                res = _instance(symmetry_sides(s, *objs))
            elif axiom == "naturality_associator":
                objs = tuple(pick(t, i) for i in range(3))
                mors = [random_morphism(rng, o) for o in objs]
                res = _instance(
                    naturality_associator_sides(
                        s, objs, tuple(m[0] for m in mors), tuple(m[1] for m in mors)
                    )
                )
            elif axiom == "naturality_unitors":
                obj = pick(t, 0)
                target, m = random_morphism(rng, obj)
                left = naturality_unitor_sides(s, obj, target, m, "left")
                right = naturality_unitor_sides(s, obj, target, m, "right")
                res_l = _instance(left)
                res_r = _instance(right)
                res = res_l if not res_l.passed else res_r
                objs = (obj,)
            else:
                objs = tuple(pick(t, i) for i in range(2))
                mors = [random_morphism(rng, o) for o in objs]
                res = _instance(
                    naturality_braiding_sides(
                        s, objs, tuple(m[0] for m in mors), tuple(m[1] for m in mors)
                    )
                )
            results.append(InstanceResult(tuple(o.dim for o in objs), res.passed, res.witness))
        groups.append((axiom, tuple(results)))
    params_desc = p.to_dict() if isinstance(p, MonoidalParams) else {
        "assoc_exp": list(s.assoc_exp),
        "left": [str(s.left_scalar), s.left_exp],
        "right": [str(s.right_scalar), s.right_exp],
        "braid_exp": list(s.braid_exp),
    }
    return CoherenceReport(params_desc, seed, trials, tuple(groups))


@dataclass(frozen=True)
class ConstraintComparison:
    constraint: str
    dims: tuple[int, ...]
    equal: bool
    ratio: tuple | None = None  # second composed with inverse of first

    def to_dict(self) -> dict:
        return {
            "constraint": self.constraint,
            "dims": list(self.dims),
            "equal": self.equal,
            "ratio": [list(r) for r in self.ratio] if self.ratio else None,
        }


@dataclass(frozen=True)
class ComparisonReport:
    seed: int
    trials: int
    entries: tuple[ConstraintComparison, ...]

    @property
    def identical(self) -> bool:
        return all(e.equal for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "identical": self.identical,
            "entries": [e.to_dict() for e in self.entries],
        }


def compare_structures(
    p1,
    p2,
    objects: Sequence[HomObject] = (),
    trials: int = 25,
    seed: int = 0,
    max_dim: int = 4,
) -> ComparisonReport:
    """Evaluate both structures' constraints on shared sampled objects.

    Entries record exact equality per constraint per instance; when the
    matrices differ, the ratio (second against first) is attached so a
    reader can see the twist relating the two structures.
    """
    s1 = structure_maps(p1)
    s2 = structure_maps(p2)
    rng = random.Random(seed)
    pool = list(objects)

    def pick(t: int, slot: int) -> HomObject:
        if pool:
            if slot == 0:
                return pool[t % len(pool)]
            return rng.choice(pool)
        return random_object(rng, max_dim)

    entries = []

    def record(name, dims, m1, m2):
        if m1 == m2:
            entries.append(ConstraintComparison(name, dims, True))
        else:
            ratio = mat.mul(m2, mat.inverse(m1))
            entries.append(
                ConstraintComparison(
                    name, dims, False, tuple(tuple(str(x) for x in row) for row in ratio)
                )
            )

    for t in range(trials):
        x, y, z = (pick(t, i) for i in range(3))
        record(
            "associator",
            (x.dim, y.dim, z.dim),
            associator(s1, x, y, z).matrix,
            associator(s2, x, y, z).matrix,
        )
        record("left_unitor", (x.dim,), left_unitor(s1, x).matrix, left_unitor(s2, x).matrix)
        record("right_unitor", (x.dim,), right_unitor(s1, x).matrix, right_unitor(s2, x).matrix)
        record(
            "braiding",
            (x.dim, y.dim),
            braiding(s1, x, y).matrix,
            braiding(s2, x, y).matrix,
        )
    return ComparisonReport(seed, trials, tuple(entries))
