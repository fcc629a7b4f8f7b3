"""Which relatives of a Leonard system are affine isomorphic to it.

Everything here is decided from the four end values varphi_1, varphi_d,
phi_1, phi_d together with the end eigenvalues. The solve-based brute force
in :func:`brute_force_partition` is kept as an independent cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .affine import AffineMap, apply, is_affine_isomorphic
from .d4 import ORDER, D4Element, act, orbit
from .parray import ParameterArray, arrays_equal

E = D4Element


class CaseTag(Enum):
    I = 1
    II = 2
    III = 3
    IV = 4
    V = 5
    VI = 6
    VII = 7

    @property
    def label(self) -> str:
        return "case-" + self.name.lower()

    @classmethod
    def parse(cls, text: str) -> CaseTag:
        t = text.strip().lower()
        if t.startswith("case-"):
            t = t[5:]
        for c in cls:
            if c.name.lower() == t:
                return c
        raise ValueError(f"unknown case {text!r}")

    def __str__(self):
        return self.label


def _classes(*groups) -> tuple:
    return tuple(tuple(E.parse(x) for x in g.split()) for g in groups)


PARTITIONS = {
    CaseTag.I: _classes("id d D dD s ds Ds dDs"),
    CaseTag.II: _classes("id dD s dDs", "d D ds Ds"),
    CaseTag.III: _classes("id dDs", "d ds", "D Ds", "dD s"),
    CaseTag.IV: _classes("id s", "d Ds", "D ds", "dD dDs"),
    CaseTag.V: _classes("id D", "d dD", "s Ds", "ds dDs"),
    CaseTag.VI: _classes("id d", "D dD", "s ds", "Ds dDs"),
    CaseTag.VII: tuple((g,) for g in ORDER),
}


def _ends(pa: ParameterArray) -> tuple:
    return pa.vp(1), pa.vp(pa.d), pa.ph(1), pa.ph(pa.d)


def case_of(pa: ParameterArray) -> CaseTag:
    v1, vd, p1, pd = _ends(pa)
    if v1 == vd == -p1 == -pd:
        return CaseTag.I
    if v1 == vd and p1 == pd and v1 != -p1:
        return CaseTag.II
    if v1 == vd and p1 != pd:
        return CaseTag.III
    if p1 == pd and v1 != vd:
        return CaseTag.IV
    if v1 == -p1 and vd == -pd and v1 != vd:
        return CaseTag.V
    if v1 == -pd and vd == -p1 and v1 != vd:
        return CaseTag.VI
    return CaseTag.VII


def main_case(pa: ParameterArray) -> tuple:
    """(case, partition of the eight relatives into affine isomorphism classes)."""
    tag = case_of(pa)
    return tag, PARTITIONS[tag]


def canonical_partition(classes) -> tuple:
    idx = {g: n for n, g in enumerate(ORDER)}
    inner = [tuple(sorted(c, key=idx.__getitem__)) for c in classes]
    return tuple(sorted(inner, key=lambda c: idx[c[0]]))


def brute_force_partition(pa: ParameterArray) -> tuple:
    """Partition of the relatives computed by pairwise affine solving."""
    rel = orbit(pa)
    classes: list = []
    for g in ORDER:
        for c in classes:
            if is_affine_isomorphic(rel[c[0]], rel[g]):
                c.append(g)
                break
        else:
            classes.append([g])
    return canonical_partition(classes)


@dataclass(frozen=True)
class RelativeCondition:
    isomorphic: bool
    canonical_map: Optional[AffineMap] = None

    def __iter__(self):
        return iter((self.isomorphic, self.canonical_map))


def relative_condition(pa: ParameterArray, g: D4Element) -> RelativeCondition:
    """Whether the relative g is affine isomorphic to pa, and the map m with apply(pa, m) == act(pa, g)."""
    F = pa.field
    d = pa.d
    t0, td = pa.theta[0], pa.theta[d]
    s0, sd = pa.theta_star[0], pa.theta_star[d]
    v1, vd, p1, pd = _ends(pa)
    one, zero = F.one, F.zero
    code = g.code
    if code == "id":
        return RelativeCondition(True, AffineMap.identity(F))
    if code == "d":
        ok = v1 == -pd and vd == -p1
        m = (one, zero, -one, s0 + sd)
    elif code == "D":
        ok = v1 == -p1 and vd == -pd
        m = (-one, t0 + td, one, zero)
    elif code == "dD":
        ok = v1 == vd and p1 == pd
        m = (-one, t0 + td, -one, s0 + sd)
    elif code == "s":
        ok = p1 == pd
        xi = (sd - s0) / (td - t0)
        m = (xi, s0 - xi * t0, 1 / xi, t0 - s0 / xi)
    elif code == "dDs":
        ok = v1 == vd
        xi = (s0 - sd) / (td - t0)
        m = (xi, sd - xi * t0, 1 / xi, t0 - sd / xi)
    elif code == "ds":
        ok = v1 == vd == -p1 == -pd
        xi = (s0 - sd) / (td - t0)
        m = (xi, sd - xi * t0, -1 / xi, t0 + s0 / xi)
    else:  # "Ds"
        ok = v1 == vd == -p1 == -pd
        xi = (sd - s0) / (td - t0)
        m = (xi, s0 - xi * t0, -1 / xi, t0 + sd / xi)
    return RelativeCondition(ok, AffineMap(*m) if ok else None)


def _alpha(pa: ParameterArray):
    d = pa.d
    return (pa.theta_star[d] - pa.theta_star[0]) / (pa.theta[d] - pa.theta[0])


def self_map_clauses(pa: ParameterArray) -> list:
    """(clause number, condition holds, map) for the four self-map clauses."""
    F, d = pa.field, pa.d
    one, zero = F.one, F.zero
    t0, td = pa.theta[0], pa.theta[d]
    s0, sd = pa.theta_star[0], pa.theta_star[d]
    v1, vd, p1, pd = _ends(pa)
    return [
        (1, True, AffineMap(one, zero, one, zero)),
        (2, v1 == -pd and vd == -p1, AffineMap(one, zero, -one, s0 + sd)),
        (3, v1 == -p1 and vd == -pd, AffineMap(-one, t0 + td, one, zero)),
        (4, v1 == vd and p1 == pd, AffineMap(-one, t0 + td, -one, s0 + sd)),
    ]


def swap_map_clauses(pa: ParameterArray) -> list:
    """(clause number, condition holds, map) for the four swap-map clauses."""
    d = pa.d
    t0 = pa.theta[0]
    s0, sd = pa.theta_star[0], pa.theta_star[d]
    v1, vd, p1, pd = _ends(pa)
    a = _alpha(pa)
    all_four = v1 == vd == -p1 == -pd
    return [
        (1, p1 == pd, AffineMap(a, s0 - a * t0, 1 / a, t0 - s0 / a)),
        (2, all_four, AffineMap(-a, sd + a * t0, 1 / a, t0 - s0 / a)),
        (3, all_four, AffineMap(a, s0 - a * t0, -1 / a, t0 + sd / a)),
        (4, v1 == vd, AffineMap(-a, sd + a * t0, -1 / a, t0 + sd / a)),
    ]


def pair_self_maps(pa: ParameterArray) -> list:
    """Maps whose transformed pair is isomorphic to (A, A*), in clause order."""
    return [m for _, ok, m in self_map_clauses(pa) if ok]


def pair_swap_maps(pa: ParameterArray) -> list:
    """Maps whose transformed pair is isomorphic to (A*, A), in clause order."""
    return [m for _, ok, m in swap_map_clauses(pa) if ok]


def matching_clauses(clauses: list, m: AffineMap) -> list:
    return [n for n, ok, cm in clauses if ok and cm == m]


SELF_TARGETS = (E.ID, E.DOWN, E.DDOWN, E.DOWN_DDOWN)
SWAP_TARGETS = (E.STAR, E.DOWN_STAR, E.DDOWN_STAR, E.DOWN_DDOWN_STAR)


def map_lands_on(pa: ParameterArray, m: AffineMap, targets) -> list:
    """The relatives among ``targets`` equal to apply(pa, m)."""
    image = apply(pa, m)
    return [g for g in targets if arrays_equal(image, act(pa, g))]


@dataclass(frozen=True)
class PairMapReport:
    self_maps: tuple
    swap_maps: tuple


def pair_map_report(pa: ParameterArray) -> PairMapReport:
    return PairMapReport(tuple(pair_self_maps(pa)), tuple(pair_swap_maps(pa)))


EXPECTED_MAP_COUNTS = {
    CaseTag.I: (4, 4),
    CaseTag.II: (2, 2),
    CaseTag.III: (1, 1),
    CaseTag.IV: (1, 1),
    CaseTag.V: (2, 0),
    CaseTag.VI: (2, 0),
    CaseTag.VII: (1, 0),
}
