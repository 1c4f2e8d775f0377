"""Closed-form numerical invariants for the four threefold families.

The four families are scrolls over the plane, scrolls over the smooth
quadric surface, quadric (hyperquadric) fibrations over the line, and cubic
Del Pezzo fibrations over the line.  Every intersection number here is given
by a printed closed-form polynomial in the family parameters; the
independent cross-check is :func:`hilbdim.chow_ring.invariants_from_ring`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .chow_ring import AmbientPreset, BundleP1, ScrollP2, ScrollQ
from .errors import InvalidFamilyError, NonIntegralError
from .p1_bundles import cohomology, derive_eb, SplitBundle


class Family(str, Enum):
    SCROLL_P2 = "scroll-p2"
    SCROLL_Q = "scroll-q"
    HQF = "hqf"
    DEL_PEZZO3 = "del-pezzo3"

    @property
    def is_fibration(self) -> bool:
        return self in (Family.HQF, Family.DEL_PEZZO3)

    @property
    def alpha(self) -> Optional[int]:
        if self is Family.HQF:
            return 2
        if self is Family.DEL_PEZZO3:
            return 3
        return None


@dataclass(frozen=True)
class FamilyDescriptor:
    """One polarized 3-fold instance: family tag, degree, sectional genus,
    ambient projective dimension, and the matching bundle data.

    ``pg_s`` is the geometric genus of a general surface section (0 except
    for Del Pezzo fibrations); ``a1_lower`` is an optional certified lower
    bound for the smallest splitting degree of the fibration bundle.
    """

    family: Family
    d: int
    g: int
    n: int
    params: AmbientPreset
    pg_s: int = 0
    a1_lower: Optional[int] = None


@dataclass(frozen=True)
class InvariantSet:
    """The seven intersection numbers plus Euler characteristics and h1(L)."""

    L3: int
    KL2: int
    K2L: int
    K3: int
    c2L: int
    Kc2: int
    c3: int
    chi_OX: int
    chi_OS: int
    h1L: int

    def seven(self) -> Dict[str, int]:
        return {
            "L3": self.L3,
            "KL2": self.KL2,
            "K2L": self.K2L,
            "K3": self.K3,
            "c2L": self.c2L,
            "Kc2": self.Kc2,
            "c3": self.c3,
        }


ZERO_INVARIANTS = InvariantSet(0, 0, 0, 0, 0, 0, 0, 0, 0, 0)


def balanced_split(e: int, rank: int = 4) -> Tuple[int, ...]:
    """The most balanced ascending degree vector of total degree e."""
    q, r = divmod(e, rank)
    return (q,) * (rank - r) + (q + 1,) * r


def scroll_p2_genus(e1: int) -> int:
    # 2g - 2 = KL^2 + 2d collapses to a function of e1 alone
    return (e1 - 1) * (e1 - 2) // 2


def scroll_q_genus(e11: int, e12: int) -> int:
    return (e11 - 1) * (e12 - 1)


def fibration_genus(e: int, alpha: int, b: int) -> int:
    d = alpha * e + b
    two_g_minus_2 = alpha * (e + b - 2) + (alpha - 2) * d
    return two_g_minus_2 // 2 + 1


# descriptor constructors ----------------------------------------------------


def scroll_p2(n: int, e1: int, e2: int) -> FamilyDescriptor:
    return FamilyDescriptor(
        Family.SCROLL_P2, e1 * e1 - e2, scroll_p2_genus(e1), n, ScrollP2(e1, e2)
    )


def scroll_q(n: int, e11: int, e12: int, e2: int) -> FamilyDescriptor:
    return FamilyDescriptor(
        Family.SCROLL_Q,
        2 * e11 * e12 - e2,
        scroll_q_genus(e11, e12),
        n,
        ScrollQ(e11, e12, e2),
    )


def hqf(d: int, g: int, n: int, a: Optional[Tuple[int, ...]] = None) -> FamilyDescriptor:
    e, b = derive_eb(d, g, 2)
    split = balanced_split(e) if a is None else tuple(sorted(a))
    return FamilyDescriptor(Family.HQF, d, g, n, BundleP1(split, 2, b))


def del_pezzo3(
    d: int, g: int, n: int, pg_s: int, a: Optional[Tuple[int, ...]] = None
) -> FamilyDescriptor:
    e, b = derive_eb(d, g, 3)
    split = balanced_split(e) if a is None else tuple(sorted(a))
    return FamilyDescriptor(Family.DEL_PEZZO3, d, g, n, BundleP1(split, 3, b), pg_s=pg_s)


# closed-form invariants -----------------------------------------------------


def scroll_p2_seven(d: int, e1: int) -> Dict[str, int]:
    return {
        "L3": d,
        "KL2": -2 * d + e1 * e1 - 3 * e1,
        "K2L": 4 * d - 3 * e1 * e1 + 6 * e1 + 9,
        "K3": -8 * d + 6 * e1 * e1 - 54,
        "c2L": 3 * e1 + 3,
        "Kc2": -24,
        "c3": 6,
    }


def scroll_q_seven(d: int, e11: int, e12: int) -> Dict[str, int]:
    return {
        "L3": d,
        "KL2": -2 * d + 2 * (e11 * e12 - e11 - e12),
        "K2L": 4 * d + 4 * (e11 + e12) - 6 * e11 * e12 + 8,
        "K3": -8 * d + 12 * e11 * e12 - 48,
        "c2L": 2 * (e11 + e12) + 4,
        "Kc2": -24,
        "c3": 8,
    }


def fibration_seven(d: int, g: int, alpha: int) -> Dict[str, int]:
    return {
        "L3": d,
        "KL2": 2 * g - 2 - 2 * d,
        "K2L": alpha * d * (4 - alpha) + 4 * g * (alpha - 4) - 4 * alpha + 16,
        "K3": 2 * d * (16 - 24 * alpha + 9 * alpha**2 - alpha**3)
        + 6 * g * (16 - 8 * alpha + alpha**2)
        - 6 * alpha**2
        + 48 * alpha
        - 96,
        "c2L": alpha * d * (2 - alpha)
        + 2 * g * (2 * alpha - 3)
        + 2 * alpha**2
        - 2 * alpha
        + 6,
        "Kc2": -24,
        "c3": 2 * d * (alpha**3 - 3 * alpha**2 + 3 * alpha - 1)
        - 6 * g * (alpha**2 - 2 * alpha + 1)
        - 4 * alpha**3
        + 10 * alpha**2
        - 6 * alpha
        + 6,
    }


def closed_form_seven(preset: AmbientPreset) -> Dict[str, int]:
    """The seven intersection numbers from the printed closed forms, keyed
    exactly like :func:`hilbdim.chow_ring.invariants_from_ring`."""
    if isinstance(preset, ScrollP2):
        return scroll_p2_seven(preset.e1 * preset.e1 - preset.e2, preset.e1)
    if isinstance(preset, ScrollQ):
        return scroll_q_seven(2 * preset.e11 * preset.e12 - preset.e2, preset.e11, preset.e12)
    d = preset.alpha * preset.e + preset.b
    g = fibration_genus(preset.e, preset.alpha, preset.b)
    return fibration_seven(d, g, preset.alpha)


# descriptor validation and assembly -----------------------------------------


def violations(f: FamilyDescriptor) -> List[str]:
    """All violated descriptor invariants, as human-readable strings."""
    out: List[str] = []
    if f.d < 1:
        out.append(f"degree must be positive, got d = {f.d}")
    if f.g < 0:
        out.append(f"sectional genus must be nonnegative, got g = {f.g}")
    if f.n < 6:
        out.append(f"ambient dimension must be at least 6, got n = {f.n}")
    if f.pg_s < 0:
        out.append(f"surface geometric genus must be nonnegative, got pg_s = {f.pg_s}")
    if f.family is not Family.DEL_PEZZO3 and f.pg_s != 0:
        out.append(f"pg_s must be 0 for family {f.family.value}, got {f.pg_s}")

    if f.family is Family.SCROLL_P2:
        if not isinstance(f.params, ScrollP2):
            out.append("params must be plane-scroll bundle data")
            return out
        if f.d != f.params.e1**2 - f.params.e2:
            out.append(
                f"degree identity d = e1^2 - e2 fails: {f.d} != "
                f"{f.params.e1**2 - f.params.e2}"
            )
        if f.g != scroll_p2_genus(f.params.e1):
            out.append(
                f"genus identity 2g - 2 = KL^2 + 2d fails: g = {f.g}, "
                f"expected {scroll_p2_genus(f.params.e1)}"
            )
    elif f.family is Family.SCROLL_Q:
        if not isinstance(f.params, ScrollQ):
            out.append("params must be quadric-scroll bundle data")
            return out
        if f.d != 2 * f.params.e11 * f.params.e12 - f.params.e2:
            out.append(
                f"degree identity d = 2*e11*e12 - e2 fails: {f.d} != "
                f"{2 * f.params.e11 * f.params.e12 - f.params.e2}"
            )
        if f.g != scroll_q_genus(f.params.e11, f.params.e12):
            out.append(
                f"genus identity fails: g = {f.g}, expected "
                f"{scroll_q_genus(f.params.e11, f.params.e12)}"
            )
    else:
        if not isinstance(f.params, BundleP1):
            out.append("params must be rank-4 bundle data on the line")
            return out
        if f.params.alpha != f.family.alpha:
            out.append(
                f"fiber degree {f.params.alpha} does not match family "
                f"{f.family.value} (alpha = {f.family.alpha})"
            )
            return out
        try:
            e, b = derive_eb(f.d, f.g, f.family.alpha)
        except NonIntegralError as exc:
            out.append(str(exc))
            return out
        if (e, b) != (f.params.e, f.params.b):
            out.append(
                f"bundle data (e, b) = ({f.params.e}, {f.params.b}) does not solve "
                f"the degree/genus system, expected ({e}, {b})"
            )
    return out


def _chi_os(f: FamilyDescriptor) -> int:
    # surface sections: rational for both scroll bases and for conic bundles;
    # 1 + pg for the Del Pezzo fibration (irregularity vanishes)
    if f.family is Family.DEL_PEZZO3:
        return 1 + f.pg_s
    return 1


def h1L(f: FamilyDescriptor) -> int:
    """h1 of the polarizing bundle from linear normality.

    Scrolls: n - 2 - d + g.  Fibrations: n - 1 - chi(O_S) - d + g.  The raw
    value is returned; a negative value signals an inconsistent descriptor
    and is never clamped.
    """
    if f.family.is_fibration:
        return f.n - 1 - _chi_os(f) - f.d + f.g
    return f.n - 2 - f.d + f.g


def invariant_set_unchecked(f: FamilyDescriptor) -> InvariantSet:
    """Closed-form invariants without descriptor validation.

    Used for reporting on perturbed inputs; prefer :func:`invariant_set`,
    which rejects inconsistent descriptors.
    """
    if f.family is Family.SCROLL_P2:
        seven = scroll_p2_seven(f.d, f.params.e1)
    elif f.family is Family.SCROLL_Q:
        seven = scroll_q_seven(f.d, f.params.e11, f.params.e12)
    else:
        seven = fibration_seven(f.d, f.g, f.family.alpha)
    return InvariantSet(chi_OX=1, chi_OS=_chi_os(f), h1L=h1L(f), **seven)


def invariant_set(f: FamilyDescriptor) -> InvariantSet:
    """All printed closed-form invariants of a valid descriptor."""
    errs = violations(f)
    if errs:
        raise InvalidFamilyError("; ".join(errs))
    return invariant_set_unchecked(f)


# consistency report ----------------------------------------------------------


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ConsistencyReport:
    items: Tuple[CheckItem, ...] = field(default_factory=tuple)

    @property
    def all_passed(self) -> bool:
        return all(item.passed for item in self.items)

    def failures(self) -> Tuple[CheckItem, ...]:
        return tuple(item for item in self.items if not item.passed)


def consistency_report(f: FamilyDescriptor) -> ConsistencyReport:
    """Bundle of per-descriptor sanity identities; never raises."""
    items: List[CheckItem] = []

    if f.family is Family.SCROLL_P2 and isinstance(f.params, ScrollP2):
        expected_d = f.params.e1**2 - f.params.e2
        seven = scroll_p2_seven(f.d, f.params.e1)
    elif f.family is Family.SCROLL_Q and isinstance(f.params, ScrollQ):
        expected_d = 2 * f.params.e11 * f.params.e12 - f.params.e2
        seven = scroll_q_seven(f.d, f.params.e11, f.params.e12)
    elif f.family.is_fibration and isinstance(f.params, BundleP1):
        expected_d = f.params.alpha * f.params.e + f.params.b
        seven = fibration_seven(f.d, f.g, f.family.alpha)
    else:
        return ConsistencyReport(
            (CheckItem("params shape", False, f"{type(f.params).__name__} does not match {f.family.value}"),)
        )

    items.append(
        CheckItem(
            "degree identity",
            f.d == expected_d,
            f"d = {f.d}, bundle data gives {expected_d}",
        )
    )
    lhs, rhs = 2 * f.g - 2, seven["KL2"] + 2 * f.d
    items.append(
        CheckItem("genus identity", lhs == rhs, f"2g - 2 = {lhs}, KL^2 + 2d = {rhs}")
    )
    items.append(
        CheckItem(
            "chi(O) pairing",
            seven["Kc2"] == -24,
            f"K*c2 = {seven['Kc2']}, -24*chi(O_X) = -24",
        )
    )
    h1 = h1L(f)
    items.append(CheckItem("h1(L) vanishing", h1 == 0, f"h1(L) = {h1}"))

    if f.family.is_fibration:
        try:
            e, b = derive_eb(f.d, f.g, f.family.alpha)
            ok = (e, b) == (f.params.e, f.params.b)
            detail = f"(e, b) = ({f.params.e}, {f.params.b}), solved ({e}, {b})"
        except NonIntegralError as exc:
            ok, detail = False, str(exc)
        items.append(CheckItem("integral bundle model", ok, detail))
        if all(ai >= 0 for ai in f.params.a):
            h0 = cohomology(SplitBundle(f.params.a))[0]
            items.append(
                CheckItem(
                    "section count",
                    f.n + 1 == h0,
                    f"n + 1 = {f.n + 1}, h0 of the bundle = {h0}",
                )
            )
    return ConsistencyReport(tuple(items))
