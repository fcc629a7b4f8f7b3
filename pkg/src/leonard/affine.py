"""Affine transformations (A, A*) -> (xi*A + zeta*I, xi_star*A* + zeta_star*I)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .parray import ParameterArray


@dataclass(frozen=True)
class AffineMap:
    xi: object
    zeta: object
    xi_star: object
    zeta_star: object

    def __post_init__(self):
        if self.xi == 0 or self.xi_star == 0:
            raise ValueError("xi and xi_star must be nonzero")

    @classmethod
    def identity(cls, field) -> AffineMap:
        return cls(field.one, field.zero, field.one, field.zero)

    def as_tuple(self) -> tuple:
        return (self.xi, self.zeta, self.xi_star, self.zeta_star)

    def inverse(self) -> AffineMap:
        return AffineMap(1 / self.xi, -self.zeta / self.xi, 1 / self.xi_star, -self.zeta_star / self.xi_star)

    def then(self, other: AffineMap) -> AffineMap:
        """Apply self first, then other."""
        return AffineMap(other.xi * self.xi, other.xi * self.zeta + other.zeta,
                         other.xi_star * self.xi_star, other.xi_star * self.zeta_star + other.zeta_star)

    def dual(self) -> AffineMap:
        """Starred and unstarred parts exchanged."""
        return AffineMap(self.xi_star, self.zeta_star, self.xi, self.zeta)

    def __eq__(self, other):
        if not isinstance(other, AffineMap):
            return NotImplemented
        return all(x == y for x, y in zip(self.as_tuple(), other.as_tuple()))

    def __hash__(self):
        return hash(self.as_tuple())


def apply(pa: ParameterArray, m: AffineMap) -> ParameterArray:
    F = pa.field
    xi, zeta, xs, zs = (F(x) for x in m.as_tuple())
    k = xi * xs
    return ParameterArray(
        pa.d,
        tuple(xi * t + zeta for t in pa.theta),
        tuple(xs * t + zs for t in pa.theta_star),
        tuple(k * v for v in pa.varphi),
        tuple(k * v for v in pa.phi),
        F,
    )


def solve(src: ParameterArray, dst: ParameterArray) -> Optional[AffineMap]:
    """The map m with apply(src, m) == dst, or None if there is none."""
    if src.d != dst.d:
        return None
    xi = (dst.theta[1] - dst.theta[0]) / (src.theta[1] - src.theta[0])
    xs = (dst.theta_star[1] - dst.theta_star[0]) / (src.theta_star[1] - src.theta_star[0])
    if xi == 0 or xs == 0:
        return None
    m = AffineMap(xi, dst.theta[0] - xi * src.theta[0], xs, dst.theta_star[0] - xs * src.theta_star[0])
    image = apply(src, m)
    if all(x == y for x, y in zip(image.entries(), dst.entries())):
        return m
    return None


def is_affine_isomorphic(a: ParameterArray, b: ParameterArray) -> bool:
    return solve(b, a) is not None
