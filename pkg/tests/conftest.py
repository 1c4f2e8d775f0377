"""Shared parameter sweeps for the test suite.

The sweep ranges are the canonical ones used by the oracle-equivalence and
formula-identity checks: e1 in [1, 10] and e2 in [0, 30] over the plane;
e11, e12 in [1, 6] and e2 in [0, 40] over the quadric; splitting degrees in
[0, 4], both fiber degrees, and twists b in [-5, 5] for the fibrations.
"""

from itertools import combinations_with_replacement
from typing import List

from hilbdim.chow_ring import BundleP1, ScrollP2, ScrollQ
from hilbdim.families import (
    Family,
    FamilyDescriptor,
    fibration_genus,
    scroll_p2_genus,
    scroll_q_genus,
)

SEVEN = ("L3", "KL2", "K2L", "K3", "c2L", "Kc2", "c3")


def scroll_p2_presets() -> List[ScrollP2]:
    return [ScrollP2(e1, e2) for e1 in range(1, 11) for e2 in range(0, 31)]


def scroll_q_presets() -> List[ScrollQ]:
    return [
        ScrollQ(e11, e12, e2)
        for e11 in range(1, 7)
        for e12 in range(1, 7)
        for e2 in range(0, 41)
    ]


def bundle_p1_presets() -> List[BundleP1]:
    return [
        BundleP1(a, alpha, b)
        for a in combinations_with_replacement(range(0, 5), 4)
        for alpha in (2, 3)
        for b in range(-5, 6)
    ]


def scroll_p2_descriptors(n_values=(6, 7, 9, 12)) -> List[FamilyDescriptor]:
    out = []
    for preset in scroll_p2_presets():
        d = preset.e1**2 - preset.e2
        if d < 1:
            continue
        g = scroll_p2_genus(preset.e1)
        for n in n_values:
            out.append(FamilyDescriptor(Family.SCROLL_P2, d, g, n, preset))
    return out


def scroll_q_descriptors(n_values=(6, 7, 9, 12)) -> List[FamilyDescriptor]:
    out = []
    for preset in scroll_q_presets():
        d = 2 * preset.e11 * preset.e12 - preset.e2
        if d < 1:
            continue
        g = scroll_q_genus(preset.e11, preset.e12)
        for n in n_values:
            out.append(FamilyDescriptor(Family.SCROLL_Q, d, g, n, preset))
    return out


def fibration_descriptors(alpha: int, n_values=(6, 7, 9, 12)) -> List[FamilyDescriptor]:
    family = Family.HQF if alpha == 2 else Family.DEL_PEZZO3
    out = []
    for preset in bundle_p1_presets():
        if preset.alpha != alpha:
            continue
        d = alpha * preset.e + preset.b
        if d < 1:
            continue
        g = fibration_genus(preset.e, alpha, preset.b)
        if g < 0:
            continue
        pg_choices = (0, 2) if alpha == 3 else (0,)
        for n in n_values:
            for pg in pg_choices:
                out.append(FamilyDescriptor(family, d, g, n, preset, pg_s=pg))
    return out
