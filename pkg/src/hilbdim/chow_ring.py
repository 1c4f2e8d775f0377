"""Exact intersection rings for the three ambient geometries.

Each supported ambient is the projectivization of a split vector bundle:

* ``ScrollP2``  -- the 3-fold P(E) for a rank-2 bundle E on the projective
  plane, with c1(E) = e1 * h and c2(E) = e2 * h^2;
* ``ScrollQ``   -- the 3-fold P(E) for a rank-2 bundle E on a smooth quadric
  surface, with c1(E) of bidegree (e11, e12) and c2(E) = e2;
* ``BundleP1``  -- the 4-fold P(E) for a rank-4 split bundle E on the line,
  inside which the fibration 3-folds sit as divisors of class alpha*H + b*f.

A cycle class is an integer combination of normal-form monomials in the
generators.  The normal form keeps the exponent of the tautological class
below the rank of the bundle and kills powers of base classes above the base
dimension; higher tautological powers are rewritten through the defining
relation of the projectivized bundle (for rank-2 E on a surface,
xi^2 = c1(E)*xi - c2(E); for rank-4 E on the line, H^4 = deg(E)*H^3*f since
the higher Chern classes of E vanish on the line).  All coefficients are
exact integers: no division ever happens inside a ring, and the geometric
series used for the fibration tangent classes terminates because every
generator is nilpotent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Tuple, Union

from .errors import DegreeOverflowError, NotTopDegreeError, RingMismatchError

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class ScrollP2:
    """Rank-2 bundle data on the plane: c1 degree ``e1``, c2 degree ``e2``."""

    e1: int
    e2: int


@dataclass(frozen=True)
class ScrollQ:
    """Rank-2 bundle data on the quadric surface: c1 bidegree ``(e11, e12)``, c2 = ``e2``."""

    e11: int
    e12: int
    e2: int


@dataclass(frozen=True)
class BundleP1:
    """Rank-4 split bundle on the line plus the divisor class alpha*H + b*f.

    ``a`` holds the four splitting degrees (stored sorted ascending) and
    ``alpha`` is the fiber degree of the divisor: 2 for quadric fibers,
    3 for cubic Del Pezzo fibers.
    """

    a: Tuple[int, int, int, int]
    alpha: int
    b: int

    def __post_init__(self) -> None:
        degrees = tuple(sorted(self.a))
        if len(degrees) != 4:
            raise ValueError(
                f"splitting list must have exactly 4 degrees, got {len(degrees)}"
            )
        if self.alpha not in (2, 3):
            raise ValueError(f"fiber degree alpha must be 2 or 3, got {self.alpha}")
        object.__setattr__(self, "a", degrees)

    @property
    def e(self) -> int:
        return sum(self.a)


AmbientPreset = Union[ScrollP2, ScrollQ, BundleP1]


class CycleClass:
    """A homogeneous cycle class: exact integer coefficients on normal-form monomials.

    Instances are immutable; all arithmetic returns new objects.  Classes
    from rings built over equal presets are interoperable.
    """

    __slots__ = ("ring", "terms", "degree")

    def __init__(self, ring: "Ring", terms: Mapping[Monomial, int]):
        clean = {m: c for m, c in terms.items() if c}
        degrees = {sum(m) for m in clean}
        if len(degrees) > 1:
            raise ValueError(f"inhomogeneous class: degrees {sorted(degrees)}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "degree", degrees.pop() if degrees else None)

    def __setattr__(self, name, value):
        raise AttributeError("CycleClass is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def _require_same_ring(self, other: "CycleClass") -> None:
        if self.ring.preset != other.ring.preset:
            raise RingMismatchError(
                f"classes live in different rings: {self.ring.preset} vs {other.ring.preset}"
            )

    def __add__(self, other: "CycleClass") -> "CycleClass":
        if not isinstance(other, CycleClass):
            return NotImplemented
        self._require_same_ring(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError(
                f"cannot add classes of degrees {self.degree} and {other.degree}"
            )
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return CycleClass(self.ring, out)

    def __sub__(self, other: "CycleClass") -> "CycleClass":
        return self + (-other)

    def __neg__(self) -> "CycleClass":
        return CycleClass(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "CycleClass":
        if isinstance(other, int):
            return CycleClass(self.ring, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, CycleClass):
            return NotImplemented
        self._require_same_ring(other)
        if self.is_zero() or other.is_zero():
            return self.ring.zero()
        if self.degree + other.degree > self.ring.dim:
            raise DegreeOverflowError(
                f"product degree {self.degree + other.degree} exceeds ring dimension {self.ring.dim}"
            )
        out: Dict[Monomial, int] = {}
        reduce = self.ring.reduce_monomial
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                raw = tuple(x + y for x, y in zip(m1, m2))
                w = c1 * c2
                for m, c in reduce(raw).items():
                    out[m] = out.get(m, 0) + w * c
        return CycleClass(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycleClass":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = self.ring.unit()
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self) -> int:
        """Degree map: the coefficient of the evaluation monomial in top degree."""
        if self.is_zero():
            return 0
        if self.degree != self.ring.dim:
            raise NotTopDegreeError(
                f"class has degree {self.degree}, expected top degree {self.ring.dim}"
            )
        return self.terms.get(self.ring.evaluation_monomial, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleClass):
            return NotImplemented
        return self.ring.preset == other.ring.preset and self.terms == other.terms

    __hash__ = None  # mutable-looking mapping inside; never hash

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        bits = []
        for mono in sorted(self.terms, reverse=True):
            coeff = self.terms[mono]
            names = [
                g if p == 1 else f"{g}^{p}"
                for g, p in zip(self.ring.gens, mono)
                if p
            ]
            body = "*".join(names) if names else "1"
            if coeff == 1 and names:
                bits.append(body)
            elif coeff == -1 and names:
                bits.append(f"-{body}")
            else:
                bits.append(f"{coeff}*{body}" if names else str(coeff))
        return " + ".join(bits).replace("+ -", "- ")


class Ring:
    """A graded quotient ring with a finite normal-form monomial basis."""

    gens: Tuple[str, ...]
    dim: int
    evaluation_monomial: Monomial

    def __init__(self, preset: AmbientPreset):
        self.preset = preset
        self._cache: Dict[Monomial, Dict[Monomial, int]] = {}

    def reduce_monomial(self, mono: Monomial) -> Dict[Monomial, int]:
        """Rewrite a raw exponent vector into normal form (degree-preserving)."""
        cached = self._cache.get(mono)
        if cached is None:
            cached = self._reduce(mono)
            self._cache[mono] = cached
        return cached

    def _rewrite(self, pairs) -> Dict[Monomial, int]:
        out: Dict[Monomial, int] = {}
        for mono, coeff in pairs:
            for m, c in self.reduce_monomial(mono).items():
                out[m] = out.get(m, 0) + coeff * c
        return {m: c for m, c in out.items() if c}

    def _reduce(self, mono: Monomial) -> Dict[Monomial, int]:
        raise NotImplementedError

    # class constructors -------------------------------------------------

    def zero(self) -> CycleClass:
        return CycleClass(self, {})

    def unit(self, coeff: int = 1) -> CycleClass:
        return CycleClass(self, {(0,) * len(self.gens): coeff})

    def gen(self, name: str) -> CycleClass:
        i = self.gens.index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(self.gens)))
        return CycleClass(self, {mono: 1})

    def from_terms(self, terms: Mapping[Monomial, int]) -> CycleClass:
        """Build a class from raw monomials, reducing each to normal form."""
        out: Dict[Monomial, int] = {}
        for mono, coeff in terms.items():
            for m, c in self.reduce_monomial(tuple(mono)).items():
                out[m] = out.get(m, 0) + coeff * c
        return CycleClass(self, out)


class ScrollP2Ring(Ring):
    """Generators xi, h with h^3 = 0 and xi^2 = e1*xi*h - e2*h^2; deg(xi*h^2) = 1."""

    gens = ("xi", "h")
    dim = 3
    evaluation_monomial = (1, 2)

    def _reduce(self, mono: Monomial) -> Dict[Monomial, int]:
        a, b = mono
        if b >= 3:
            return {}
        if a <= 1:
            return {mono: 1}
        e1, e2 = self.preset.e1, self.preset.e2
        return self._rewrite([((a - 1, b + 1), e1), ((a - 2, b + 2), -e2)])


class ScrollQRing(Ring):
    """Generators xi, h1, h2 with h_i^2 = 0 and
    xi^2 = e11*xi*h1 + e12*xi*h2 - e2*h1*h2; deg(xi*h1*h2) = 1."""

    gens = ("xi", "h1", "h2")
    dim = 3
    evaluation_monomial = (1, 1, 1)

    def _reduce(self, mono: Monomial) -> Dict[Monomial, int]:
        a, b1, b2 = mono
        if b1 >= 2 or b2 >= 2:
            return {}
        if a <= 1:
            return {mono: 1}
        p = self.preset
        return self._rewrite(
            [
                ((a - 1, b1 + 1, b2), p.e11),
                ((a - 1, b1, b2 + 1), p.e12),
                ((a - 2, b1 + 1, b2 + 1), -p.e2),
            ]
        )


class BundleP1Ring(Ring):
    """Generators H, f on the 4-fold with f^2 = 0 and H^4 = e*H^3*f; deg(H^3*f) = 1."""

    gens = ("H", "f")
    dim = 4
    evaluation_monomial = (3, 1)

    def _reduce(self, mono: Monomial) -> Dict[Monomial, int]:
        a, b = mono
        if b >= 2:
            return {}
        if a <= 3:
            return {mono: 1}
        return self._rewrite([((a - 1, b + 1), self.preset.e)])


@lru_cache(maxsize=None)
def make_ring(preset: AmbientPreset) -> Ring:
    """Instantiate the intersection ring for an ambient preset.

    Rings are cached per preset so the normal-form rewrite tables are shared
    across repeated computations.
    """
    if isinstance(preset, ScrollP2):
        return ScrollP2Ring(preset)
    if isinstance(preset, ScrollQ):
        return ScrollQRing(preset)
    if isinstance(preset, BundleP1):
        return BundleP1Ring(preset)
    raise TypeError(f"unknown ambient preset: {preset!r}")


def mul(x: CycleClass, y: CycleClass) -> CycleClass:
    return x * y


def evaluate(x: CycleClass) -> int:
    return x.evaluate()


def canonical_class(ring: Ring) -> CycleClass:
    """Canonical class of the projectivized bundle.

    For the two scroll presets this is the canonical class of the 3-fold
    itself.  For ``BundleP1`` it is the canonical class of the ambient
    4-fold; combine it with :func:`divisor_class` (adjunction) to compute
    canonical intersections on the embedded 3-fold.
    """
    p = ring.preset
    if isinstance(p, ScrollP2):
        return ring.from_terms({(1, 0): -2, (0, 1): p.e1 - 3})
    if isinstance(p, ScrollQ):
        return ring.from_terms({(1, 0, 0): -2, (0, 1, 0): p.e11 - 2, (0, 0, 1): p.e12 - 2})
    return ring.from_terms({(1, 0): -4, (0, 1): p.e - 2})


def divisor_class(ring: Ring) -> CycleClass:
    """The class alpha*H + b*f cutting out the fibration 3-fold (4-fold preset only)."""
    p = ring.preset
    if not isinstance(p, BundleP1):
        raise TypeError("divisor_class is only defined for the rank-4 bundle preset")
    return ring.from_terms({(1, 0): p.alpha, (0, 1): p.b})


def threefold_canonical(ring: Ring) -> CycleClass:
    """The class computing canonical intersections of the 3-fold.

    Equal to :func:`canonical_class` for the scroll presets; for the
    fibration preset it is the adjunction class K + X on the 4-fold, whose
    restriction to the divisor is the canonical class of the 3-fold.
    """
    k = canonical_class(ring)
    if isinstance(ring.preset, BundleP1):
        return k + divisor_class(ring)
    return k


@dataclass(frozen=True)
class ChernRecord:
    """Degree-1..3 pieces of the total Chern class of the tangent sheaf.

    For the scroll presets these are classes on the 3-fold itself; for the
    fibration preset they are classes on the ambient 4-fold whose
    restrictions to the divisor are the tangent Chern classes.
    """

    c1: CycleClass
    c2: CycleClass
    c3: CycleClass


def _series_mul(ring: Ring, s: List[CycleClass], t: List[CycleClass]) -> List[CycleClass]:
    # graded truncated product; pieces beyond the ring dimension are dropped
    top = ring.dim
    out = [ring.zero() for _ in range(top + 1)]
    for i, p in enumerate(s):
        if p.is_zero():
            continue
        for j, q in enumerate(t):
            if i + j > top:
                break
            if q.is_zero():
                continue
            out[i + j] = out[i + j] + p * q
    return out


def _one_plus(ring: Ring, *pieces: CycleClass) -> List[CycleClass]:
    out = [ring.zero() for _ in range(ring.dim + 1)]
    out[0] = ring.unit()
    for piece in pieces:
        if not piece.is_zero():
            out[piece.degree] = out[piece.degree] + piece
    return out


def tangent_chern(ring: Ring) -> ChernRecord:
    """Total tangent Chern class by the Whitney formula.

    ScrollP2:  c(T) = (1 + 3h + 3h^2) * (1 + 2xi - e1*h),
    ScrollQ:   c(T) = (1 + 2h1) * (1 + 2h2) * (1 + 2xi - e11*h1 - e12*h2),
    BundleP1:  c(T) = (1 + 2f) * prod_i (1 + H - a_i*f) / (1 + alpha*H + b*f),

    where the last division is the terminating geometric series for the
    normal-sheaf correction of the divisor.
    """
    p = ring.preset
    if isinstance(p, ScrollP2):
        base = _one_plus(
            ring,
            ring.from_terms({(0, 1): 3}),
            ring.from_terms({(0, 2): 3}),
        )
        rel = _one_plus(ring, ring.from_terms({(1, 0): 2, (0, 1): -p.e1}))
        series = _series_mul(ring, base, rel)
    elif isinstance(p, ScrollQ):
        series = _one_plus(ring, ring.from_terms({(0, 1, 0): 2}))
        series = _series_mul(ring, series, _one_plus(ring, ring.from_terms({(0, 0, 1): 2})))
        rel = _one_plus(
            ring,
            ring.from_terms({(1, 0, 0): 2, (0, 1, 0): -p.e11, (0, 0, 1): -p.e12}),
        )
        series = _series_mul(ring, series, rel)
    else:
        series = _one_plus(ring, ring.from_terms({(0, 1): 2}))
        for ai in p.a:
            factor = _one_plus(ring, ring.from_terms({(1, 0): 1, (0, 1): -ai}))
            series = _series_mul(ring, series, factor)
        # multiply by (1 + X)^(-1) = 1 - X + X^2 - X^3 + X^4 (exact: X is nilpotent)
        neg_x = -divisor_class(ring)
        inverse = [ring.unit()]
        power = ring.unit()
        for _ in range(ring.dim):
            power = power * neg_x
            inverse.append(power)
        series = _series_mul(ring, series, inverse)
    return ChernRecord(series[1], series[2], series[3])


def invariants_from_ring(preset: AmbientPreset) -> Dict[str, int]:
    """The seven intersection numbers of the 3-fold, by pure ring reduction.

    Returns L^3, K*L^2, K^2*L, K^3, c2*L, K*c2, c3 keyed by name.  For the
    fibration preset every product is multiplied by the divisor class before
    evaluating, so the numbers are honest intersection numbers on the 3-fold.
    """
    ring = make_ring(preset)
    chern = tangent_chern(ring)
    k = threefold_canonical(ring)
    if isinstance(preset, BundleP1):
        ell = ring.gen("H")
        x = divisor_class(ring)

        def top(cls: CycleClass) -> int:
            return (cls * x).evaluate()

    else:
        ell = ring.gen("xi")

        def top(cls: CycleClass) -> int:
            return cls.evaluate()

    return {
        "L3": top(ell * ell * ell),
        "KL2": top(k * ell * ell),
        "K2L": top(k * k * ell),
        "K3": top(k * k * k),
        "c2L": top(chern.c2 * ell),
        "Kc2": top(k * chern.c2),
        "c3": top(chern.c3),
    }
