"""Exact arithmetic in tensor powers of Laurent polynomial group algebras.

The base ring is the group algebra k[Z^r] over the rationals: Laurent
polynomials in r commuting invertible generators g_1, ..., g_r.  An
element of the m-fold tensor power k[Z^r]^(x m) is stored sparsely as a
map from m-tuples of integer exponent vectors to nonzero rational
coefficients.  All arithmetic is exact; nothing here ever rounds.

Group-like monomials q * g^(v_1) (x) ... (x) g^(v_m) with q != 0 are
exactly the invertible elements of the tensor power, which is why
``as_unit`` / ``invert_unit`` ask for a single term and nothing more.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain
from typing import Iterable, Mapping

Vector = tuple[int, ...]
TermKey = tuple[Vector, ...]


class RankMismatch(ValueError):
    """Operands live over group algebras of different rank."""


class LegMismatch(ValueError):
    """Operands have a different number of tensor legs."""


class LegOutOfRange(ValueError):
    """A leg index falls outside 1..legs."""


class NotAUnit(ValueError):
    """Element is not invertible (it is not a single nonzero monomial)."""


def _as_vector(v: Iterable[int], rank: int) -> Vector:
    vec = tuple(int(c) for c in v)
    if len(vec) != rank:
        raise RankMismatch(f"exponent vector {vec} has length {len(vec)}, expected {rank}")
    return vec


def _vadd(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _vneg(a: Vector) -> Vector:
    return tuple(-x for x in a)


def _vscale(c: int, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def _zero_vector(rank: int) -> Vector:
    return (0,) * rank


def _coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact rational coefficient")


class TensorElement:
    """A sparse element of k[Z^r]^(x legs) with exact rational coefficients.

    Terms are kept in a dict keyed by tuples of exponent vectors; zero
    coefficients are dropped on construction, so the zero element is the
    one with no terms at all.  Serialization and printing list terms in
    a canonical order (lexicographic on the concatenated exponents), so
    equal elements always produce byte-identical output.
    """

    __slots__ = ("rank", "legs", "_terms")

    def __init__(self, rank: int, legs: int, terms: Mapping[TermKey, Fraction] | None = None):
        if rank < 1:
            raise RankMismatch(f"rank must be >= 1, got {rank}")
        if legs < 1:
            raise LegMismatch(f"legs must be >= 1, got {legs}")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "legs", legs)
        clean: dict[TermKey, Fraction] = {}
        for key, value in (terms or {}).items():
            if len(key) != legs:
                raise LegMismatch(f"term {key} has {len(key)} legs, expected {legs}")
            vecs = tuple(_as_vector(v, rank) for v in key)
            c = _coeff(value)
            if c:
                clean[vecs] = clean.get(vecs, Fraction(0)) + c
                if not clean[vecs]:
                    del clean[vecs]
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TensorElement is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, rank: int, legs: int) -> "TensorElement":
        return cls(rank, legs, {})

    @classmethod
    def one(cls, rank: int, legs: int) -> "TensorElement":
        """The multiplicative identity 1 (x) ... (x) 1."""
        return cls(rank, legs, {(_zero_vector(rank),) * legs: Fraction(1)})

    @classmethod
    def single(cls, coeff, exps: Iterable[Iterable[int]]) -> "TensorElement":
        """One monomial term coeff * g^(e_1) (x) ... (x) g^(e_m)."""
        key = tuple(tuple(int(c) for c in e) for e in exps)
        if not key:
            raise LegMismatch("a tensor element needs at least one leg")
        rank = len(key[0])
        return cls(rank, len(key), {key: _coeff(coeff)})

    @classmethod
    def generator(cls, rank: int, index: int) -> "TensorElement":
        """The one-leg generator g_index (1-based index)."""
        if not 1 <= index <= rank:
            raise RankMismatch(f"generator index {index} outside 1..{rank}")
        vec = tuple(1 if j == index - 1 else 0 for j in range(rank))
        return cls(rank, 1, {(vec,): Fraction(1)})

    # -- inspection --------------------------------------------------

    def terms(self) -> list[tuple[TermKey, Fraction]]:
        """Terms in canonical order (lex on concatenated exponents)."""
        return sorted(self._terms.items(), key=lambda kv: tuple(chain.from_iterable(kv[0])))

    def coefficient(self, key: TermKey) -> Fraction:
        return self._terms.get(tuple(tuple(v) for v in key), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def term_count(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.rank == other.rank
            and self.legs == other.legs
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.rank, self.legs, tuple(self.terms())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- ring structure ----------------------------------------------

    def _check_compatible(self, other: "TensorElement") -> None:
        if not isinstance(other, TensorElement):
            raise TypeError(f"expected TensorElement, got {type(other).__name__}")
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")
        if self.legs != other.legs:
            raise LegMismatch(f"{self.legs} legs vs {other.legs}")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check_compatible(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return _raw(self.rank, self.legs, out)

    def __neg__(self) -> "TensorElement":
        return _raw(self.rank, self.legs, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __mul__(self, other) -> "TensorElement":
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if not c:
                return TensorElement.zero(self.rank, self.legs)
            return _raw(self.rank, self.legs, {k: c * v for k, v in self._terms.items()})
        self._check_compatible(other)
        out: dict[TermKey, Fraction] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                key = tuple(_vadd(a, b) for a, b in zip(ka, kb))
                s = out.get(key, Fraction(0)) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return _raw(self.rank, self.legs, out)

    __rmul__ = __mul__

    # -- printing and serialization -----------------------------------

    def _leg_str(self, vec: Vector) -> str:
        if all(c == 0 for c in vec):
            return "1"
        if self.rank == 1:
            e = vec[0]
            return "g" if e == 1 else f"g^{e}"
        return "g^(" + ",".join(str(c) for c in vec) + ")"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key, c in self.terms():
            mono = " (x) ".join(self._leg_str(v) for v in key)
            parts.append(mono if c == 1 else f"{c} * {mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TensorElement(rank={self.rank}, legs={self.legs}, <{len(self._terms)} terms>)"

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "legs": self.legs,
            "terms": [
                {"c": str(c), "e": [list(v) for v in key]} for key, c in self.terms()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "TensorElement":
        rank = int(data["rank"])
        legs = int(data["legs"])
        terms: dict[TermKey, Fraction] = {}
        for entry in data["terms"]:
            key = tuple(tuple(int(c) for c in vec) for vec in entry["e"])
            c = Fraction(str(entry["c"]))
            terms[key] = terms.get(key, Fraction(0)) + c
        return cls(rank, legs, terms)

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, text: str) -> "TensorElement":
        return cls.from_dict(json.loads(text))


def _raw(rank: int, legs: int, terms: dict[TermKey, Fraction]) -> TensorElement:
    """Internal constructor that skips per-term validation."""
    elem = object.__new__(TensorElement)
    object.__setattr__(elem, "rank", rank)
    object.__setattr__(elem, "legs", legs)
    object.__setattr__(elem, "_terms", terms)
    return elem


@dataclass(frozen=True)
class UnitElement:
    """An invertible element q * g^(v_1) (x) ... (x) g^(v_m), q != 0.

    ``monomial`` may be empty (zero legs); that degenerate shape is the
    scalar group k* itself and is used by cochains of degree zero.
    """

    rank: int
    scalar: Fraction
    monomial: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "scalar", _coeff(self.scalar))
        if not self.scalar:
            raise NotAUnit("scalar part of a unit must be nonzero")
        object.__setattr__(
            self, "monomial", tuple(_as_vector(v, self.rank) for v in self.monomial)
        )

    @property
    def legs(self) -> int:
        return len(self.monomial)

    @classmethod
    def identity(cls, rank: int, legs: int) -> "UnitElement":
        return cls(rank, Fraction(1), ((_zero_vector(rank),) * legs))

    def inverse(self) -> "UnitElement":
        return UnitElement(self.rank, 1 / self.scalar, tuple(_vneg(v) for v in self.monomial))

    def power(self, n: int) -> "UnitElement":
        return UnitElement(self.rank, self.scalar ** n, tuple(_vscale(n, v) for v in self.monomial))

    def __mul__(self, other: "UnitElement") -> "UnitElement":
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")
        if self.legs != other.legs:
            raise LegMismatch(f"{self.legs} legs vs {other.legs}")
        return UnitElement(
            self.rank,
            self.scalar * other.scalar,
            tuple(_vadd(a, b) for a, b in zip(self.monomial, other.monomial)),
        )

    def to_tensor(self) -> TensorElement:
        if not self.monomial:
            raise LegMismatch("a zero-leg unit has no tensor element form")
        return TensorElement(self.rank, self.legs, {self.monomial: self.scalar})

    def __str__(self) -> str:
        if not self.monomial:
            return str(self.scalar)
        return str(self.to_tensor())


# -- the operation surface ------------------------------------------------


def multiply(x: TensorElement, y: TensorElement) -> TensorElement:
    """Componentwise product in k[Z^r]^(x m); exponents add per leg."""
    return x * y


def add(x: TensorElement, y: TensorElement) -> TensorElement:
    return x + y


def as_unit(x: TensorElement) -> UnitElement:
    """Certify x as invertible.  Exactly the one-term elements qualify."""
    if len(x._terms) != 1:
        raise NotAUnit(f"element has {len(x._terms)} terms, units have exactly 1")
    ((key, c),) = x._terms.items()
    return UnitElement(x.rank, c, key)


def invert_unit(x: TensorElement) -> TensorElement:
    """Inverse of an invertible element; raises NotAUnit otherwise."""
    return as_unit(x).inverse().to_tensor()


def tensor_concat(x: TensorElement, y: TensorElement) -> TensorElement:
    """Place x and y side by side: legs concatenate, coefficients multiply."""
    if x.rank != y.rank:
        raise RankMismatch(f"rank {x.rank} vs {y.rank}")
    out: dict[TermKey, Fraction] = {}
    for ka, ca in x._terms.items():
        for kb, cb in y._terms.items():
            key = ka + kb
            s = out.get(key, Fraction(0)) + ca * cb
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return _raw(x.rank, x.legs + y.legs, out)


def permute_legs(x: TensorElement, perm: tuple[int, ...]) -> TensorElement:
    """Reorder legs: new leg k is old leg perm[k] (1-based source list).

    permute_legs(x, (2, 3, 1)) realizes x^(2) (x) x^(3) (x) x^(1).
    """
    if sorted(perm) != list(range(1, x.legs + 1)):
        raise LegOutOfRange(f"{perm} is not a permutation of 1..{x.legs}")
    out = {}
    for key, c in x._terms.items():
        out[tuple(key[p - 1] for p in perm)] = c
    return _raw(x.rank, x.legs, out)


def insert_unit_leg(x: TensorElement, position: int) -> TensorElement:
    """Insert an identity leg so that it becomes leg ``position`` (1-based)."""
    if not 1 <= position <= x.legs + 1:
        raise LegOutOfRange(f"position {position} outside 1..{x.legs + 1}")
    z = _zero_vector(x.rank)
    out = {}
    for key, c in x._terms.items():
        out[key[: position - 1] + (z,) + key[position - 1 :]] = c
    return _raw(x.rank, x.legs + 1, out)


@dataclass(frozen=True)
class AlgebraMapSpec:
    """An algebra map k[Z^r] -> k[Z^r]^(x target_legs), by generator images.

    Each generator must land on an invertible element, so the whole map
    is determined by exact unit arithmetic: g^e goes to the product of
    the images raised to the matching exponents.
    """

    rank: int
    target_legs: int
    images: tuple[UnitElement, ...]

    def __post_init__(self):
        if self.target_legs < 1:
            raise LegMismatch(f"target_legs must be >= 1, got {self.target_legs}")
        imgs = []
        for im in self.images:
            if isinstance(im, TensorElement):
                im = as_unit(im)
            if im.rank != self.rank:
                raise RankMismatch(f"image rank {im.rank}, expected {self.rank}")
            if im.legs != self.target_legs:
                raise LegMismatch(f"image has {im.legs} legs, expected {self.target_legs}")
            imgs.append(im)
        if len(imgs) != self.rank:
            raise RankMismatch(f"need {self.rank} generator images, got {len(imgs)}")
        object.__setattr__(self, "images", tuple(imgs))

    def image_of_vector(self, e: Vector) -> UnitElement:
        """Image of the monomial g^e, as a unit of the target power."""
        scalar = Fraction(1)
        legs = [_zero_vector(self.rank)] * self.target_legs
        for j, c in enumerate(e):
            if not c:
                continue
            im = self.images[j]
            scalar *= im.scalar ** c
            legs = [_vadd(v, _vscale(c, w)) for v, w in zip(legs, im.monomial)]
        return UnitElement(self.rank, scalar, tuple(legs))

    def image_tensors(self) -> list[TensorElement]:
        return [im.to_tensor() for im in self.images]


@dataclass(frozen=True)
class CounitSpec:
    """A character k[Z^r] -> k given by a nonzero rational per generator."""

    rank: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(_coeff(v) for v in self.values)
        if len(vals) != self.rank:
            raise RankMismatch(f"need {self.rank} generator values, got {len(vals)}")
        if not all(vals):
            raise NotAUnit("counit values must be nonzero")
        object.__setattr__(self, "values", vals)

    def value_of_vector(self, e: Vector) -> Fraction:
        out = Fraction(1)
        for v, c in zip(self.values, e):
            if c:
                out *= v ** c
        return out


def apply_algebra_map_on_leg(amap: AlgebraMapSpec, x: TensorElement, leg: int) -> TensorElement:
    """Apply an algebra map to one leg, splicing its output legs in place."""
    if amap.rank != x.rank:
        raise RankMismatch(f"map rank {amap.rank} vs element rank {x.rank}")
    if not 1 <= leg <= x.legs:
        raise LegOutOfRange(f"leg {leg} outside 1..{x.legs}")
    out: dict[TermKey, Fraction] = {}
    for key, c in x._terms.items():
        u = amap.image_of_vector(key[leg - 1])
        new_key = key[: leg - 1] + u.monomial + key[leg:]
        s = out.get(new_key, Fraction(0)) + c * u.scalar
        if s:
            out[new_key] = s
        else:
            out.pop(new_key, None)
    return _raw(x.rank, x.legs - 1 + amap.target_legs, out)


# A coproduct is just an algebra map with two output legs; the alias keeps
# call sites readable.
apply_coproduct_on_leg = apply_algebra_map_on_leg


def apply_counit_on_leg(eps: CounitSpec, x: TensorElement, leg: int) -> TensorElement:
    """Evaluate the counit on one leg and drop it (needs legs >= 2)."""
    if eps.rank != x.rank:
        raise RankMismatch(f"counit rank {eps.rank} vs element rank {x.rank}")
    if x.legs < 2:
        raise LegMismatch("cannot drop the only leg; counit application needs legs >= 2")
    if not 1 <= leg <= x.legs:
        raise LegOutOfRange(f"leg {leg} outside 1..{x.legs}")
    out: dict[TermKey, Fraction] = {}
    for key, c in x._terms.items():
        new_key = key[: leg - 1] + key[leg:]
        s = out.get(new_key, Fraction(0)) + c * eps.value_of_vector(key[leg - 1])
        if s:
            out[new_key] = s
        else:
            out.pop(new_key, None)
    return _raw(x.rank, x.legs - 1, out)
