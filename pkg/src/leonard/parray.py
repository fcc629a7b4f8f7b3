"""Parameter arrays, their validity conditions PA1 to PA5, and derived quantities.

Indexing follows the usual convention: ``theta`` and ``theta_star`` are
0-based with d+1 entries, the split sequences are 1-based with d entries.
The tuples ``varphi`` and ``phi`` store entry i at position i-1; use
:meth:`ParameterArray.vp` and :meth:`ParameterArray.ph` for 1-based access.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from typing import Iterable, Sequence

from .errors import PartialSumMismatch, PA5Violation, StructuralError
from .field import QQ, Field

PA_NAMES = ("PA1", "PA2", "PA3", "PA4", "PA5")


@dataclass(frozen=True)
class ParameterArray:
    d: int
    theta: tuple
    theta_star: tuple
    varphi: tuple
    phi: tuple
    field: Field = dc_field(default=QQ, compare=False)

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise StructuralError(f"d must be a positive integer, got {self.d!r}")
        expect = {"theta": self.d + 1, "theta_star": self.d + 1, "varphi": self.d, "phi": self.d}
        for name, n in expect.items():
            seq = getattr(self, name)
            if len(seq) != n:
                raise StructuralError(f"{name} has {len(seq)} entries, expected {n} for d={self.d}")
            object.__setattr__(self, name, tuple(self.field(x) for x in seq))

    @classmethod
    def build(cls, theta: Sequence, theta_star: Sequence, varphi: Sequence, phi: Sequence,
              field: Field = QQ) -> ParameterArray:
        """Construct with d inferred from the split sequences."""
        return cls(len(varphi), tuple(theta), tuple(theta_star), tuple(varphi), tuple(phi), field)

    def vp(self, i: int):
        """varphi_i for 1 <= i <= d."""
        return self.varphi[i - 1]

    def ph(self, i: int):
        """phi_i for 1 <= i <= d."""
        return self.phi[i - 1]

    def replace(self, **changes) -> ParameterArray:
        return replace(self, **changes)

    def over(self, field: Field) -> ParameterArray:
        """The same entries coerced into another field (e.g. reduction mod p)."""
        return ParameterArray(self.d, self.theta, self.theta_star, self.varphi, self.phi, field)

    def entries(self) -> tuple:
        return self.theta + self.theta_star + self.varphi + self.phi


@dataclass(frozen=True)
class ConditionVerdict:
    name: str
    ok: bool
    witness: object = None
    detail: str = ""

    def __str__(self):
        if self.ok:
            return f"{self.name} ok"
        w = self.witness
        if isinstance(w, tuple):
            where = "(" + ",".join(str(x) for x in w) + ")"
        else:
            where = f"i={w}"
        return f"{self.name} fail {where}" + (f" [{self.detail}]" if self.detail else "")


@dataclass(frozen=True)
class ValidationReport:
    verdicts: tuple

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def __getitem__(self, name: str) -> ConditionVerdict:
        for v in self.verdicts:
            if v.name == name:
                return v
        raise KeyError(name)

    def failing(self) -> list:
        return [v.name for v in self.verdicts if not v.ok]

    def __str__(self):
        return "\n".join(str(v) for v in self.verdicts)


def _theta_sum(seq: Sequence, d: int, i: int):
    den = seq[0] - seq[d]
    total = seq[0] * 0
    for h in range(i):
        total = total + (seq[h] - seq[d - h]) / den
    return total


def _pa1(pa):
    for i in range(1, pa.d + 1):
        if pa.vp(i) == 0:
            return ConditionVerdict("PA1", False, i, "varphi")
        if pa.ph(i) == 0:
            return ConditionVerdict("PA1", False, i, "phi")
    return ConditionVerdict("PA1", True)


def _pa2(pa):
    for name in ("theta", "theta_star"):
        seq = getattr(pa, name)
        for j in range(len(seq)):
            for i in range(j):
                if seq[i] == seq[j]:
                    return ConditionVerdict("PA2", False, (i, j), name)
    return ConditionVerdict("PA2", True)


def _pa34(pa, which):
    d, th, ts = pa.d, pa.theta, pa.theta_star
    if th[0] == th[d]:
        return ConditionVerdict(which, False, 1, "theta_0 = theta_d")
    for i in range(1, d + 1):
        s = _theta_sum(th, d, i)
        if which == "PA3":
            ok = pa.vp(i) == pa.ph(1) * s + (ts[i] - ts[0]) * (th[i - 1] - th[d])
        else:
            ok = pa.ph(i) == pa.vp(1) * s + (ts[i] - ts[0]) * (th[d - i + 1] - th[0])
        if not ok:
            return ConditionVerdict(which, False, i)
    return ConditionVerdict(which, True)


def _ratio(seq, i):
    den = seq[i - 1] - seq[i]
    if den == 0:
        return None
    return (seq[i - 2] - seq[i + 1]) / den


def _pa5(pa):
    common = None
    for i in range(2, pa.d):
        r, rs = _ratio(pa.theta, i), _ratio(pa.theta_star, i)
        if r is None or rs is None:
            return ConditionVerdict("PA5", False, i, "undefined ratio")
        if r != rs:
            return ConditionVerdict("PA5", False, i, "theta and theta_star ratios differ")
        if common is None:
            common = r
        elif r != common:
            return ConditionVerdict("PA5", False, i, "ratio depends on i")
    return ConditionVerdict("PA5", True)


def validate(pa: ParameterArray) -> ValidationReport:
    """Check PA1 to PA5, recording the first witness of each failure."""
    if len(pa.theta) != pa.d + 1 or len(pa.theta_star) != pa.d + 1 or len(pa.varphi) != pa.d \
            or len(pa.phi) != pa.d:
        raise StructuralError("sequence lengths do not match d")
    return ValidationReport((_pa1(pa), _pa2(pa), _pa34(pa, "PA3"), _pa34(pa, "PA4"), _pa5(pa)))


def vartheta(pa: ParameterArray, i: int):
    """The common value of the theta-side and theta*-side partial sums, 1 <= i <= d."""
    if not 1 <= i <= pa.d:
        raise IndexError(f"vartheta index {i} outside 1..{pa.d}")
    a = _theta_sum(pa.theta, pa.d, i)
    b = _theta_sum(pa.theta_star, pa.d, i)
    if a != b:
        raise PartialSumMismatch(f"partial sums differ at i={i}: {a} vs {b}")
    return a


def split_equation_sides(pa: ParameterArray, eq: int, i: int) -> tuple:
    """(lhs, rhs) of split-sequence identity ``eq`` (1..8) at index i."""
    d, t, s = pa.d, pa.theta, pa.theta_star
    v = vartheta(pa, i)
    vp, ph = pa.vp, pa.ph
    j = d - i + 1
    table = {
        1: (vp(i), ph(1) * v + (s[i] - s[0]) * (t[i - 1] - t[d])),
        2: (vp(j), ph(1) * v + (s[j] - s[0]) * (t[d - i] - t[d])),
        3: (vp(i), ph(d) * v + (t[i] - t[0]) * (s[i - 1] - s[d])),
        4: (vp(j), ph(d) * v + (t[j] - t[0]) * (s[d - i] - s[d])),
        5: (ph(i), vp(1) * v + (s[i] - s[0]) * (t[j] - t[0])),
        6: (ph(j), vp(1) * v + (s[j] - s[0]) * (t[i] - t[0])),
        7: (ph(i), vp(d) * v + (t[d - i] - t[d]) * (s[i - 1] - s[d])),
        8: (ph(j), vp(d) * v + (t[i - 1] - t[d]) * (s[d - i] - s[d])),
    }
    return table[eq]


@dataclass(frozen=True)
class SplitEquationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def check_split_equations(pa: ParameterArray) -> SplitEquationReport:
    """Evaluate the eight split-sequence identities for every i; list (eq, i) violations."""
    bad = []
    for eq in range(1, 9):
        for i in range(1, pa.d + 1):
            lhs, rhs = split_equation_sides(pa, eq, i)
            if lhs != rhs:
                bad.append((eq, i))
    return SplitEquationReport(tuple(bad))


def beta_common_value(pa: ParameterArray):
    """The shared three-term ratio of theta and theta*, or None when d <= 2."""
    if pa.d <= 2:
        return None
    values = []
    for i in range(2, pa.d):
        for seq in (pa.theta, pa.theta_star):
            r = _ratio(seq, i)
            if r is None:
                raise PA5Violation(f"ratio undefined at i={i}")
            values.append((i, r))
    first = values[0][1]
    for i, r in values:
        if r != first:
            raise PA5Violation(f"ratio {r} at i={i} differs from {first}")
    return first


def extend_recurrence(head: Sequence, beta, d: int) -> list:
    """Extend theta_0, theta_1, theta_2 by theta_{i+1} = theta_{i-2} - beta*(theta_{i-1} - theta_i)."""
    seq = list(head[: d + 1])
    while len(seq) < d + 1:
        i = len(seq) - 1
        seq.append(seq[i - 2] - beta * (seq[i - 1] - seq[i]))
    return seq


def from_recurrence(field: Field, d: int, theta_head: Sequence, theta_star_head: Sequence,
                    beta, phi1) -> ParameterArray:
    """Array determined by three leading eigenvalues on each side, the shared ratio and phi_1.

    The eigenvalue sequences follow the three-term recurrence, varphi comes from
    PA3 and the remaining phi from PA4. The result is not validated here.
    """
    F = field
    th = [F(x) for x in extend_recurrence([F(x) for x in theta_head], F(beta), d)]
    ts = [F(x) for x in extend_recurrence([F(x) for x in theta_star_head], F(beta), d)]
    phi1 = F(phi1)
    varphi = [phi1 * _theta_sum(th, d, i) + (ts[i] - ts[0]) * (th[i - 1] - th[d]) for i in range(1, d + 1)]
    phi = [varphi[0] * _theta_sum(th, d, i) + (ts[i] - ts[0]) * (th[d - i + 1] - th[0])
           for i in range(1, d + 1)]
    return ParameterArray(d, tuple(th), tuple(ts), tuple(varphi), tuple(phi), F)


def arrays_equal(a: ParameterArray, b: ParameterArray) -> bool:
    return a.d == b.d and all(x == y for x, y in zip(a.entries(), b.entries()))


def unique(arrays: Iterable[ParameterArray]) -> list:
    out: list = []
    for a in arrays:
        if not any(arrays_equal(a, b) for b in out):
            out.append(a)
    return out
