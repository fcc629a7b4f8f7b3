"""Matrix model of a parameter array and the trace formulas that read it back.

The model is the split form: A is lower bidiagonal with the eigenvalues on the
diagonal and ones below it, A* is upper bidiagonal with the dual eigenvalues
on the diagonal and varphi_1..varphi_d above it. Nothing about this form is
trusted: :func:`recover_split_sequences` and :func:`tridiagonal_check`
certify each instance.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import linalg as la
from .errors import NotMultiplicityFree, ZeroDenominator
from .parray import ParameterArray


def primitive_idempotents(M: list, eigs: Sequence) -> list:
    """E_i = prod_{j != i} (M - eigs[j] I) / (eigs[i] - eigs[j]).

    Built from prefix and suffix products, so only O(n) matrix products.
    """
    n = len(eigs)
    if len(set(eigs)) != n:
        raise NotMultiplicityFree("eigenvalues are not pairwise distinct")
    zero = M[0][0] * 0
    one = zero + 1
    ident = la.identity(n, zero, one)
    factors = [la.shift(M, -t) for t in eigs]
    prefix = [ident]
    for f in factors:
        prefix.append(la.matmul(prefix[-1], f))
    if not la.is_zero(prefix[-1]):
        raise NotMultiplicityFree("matrix is not annihilated by prod (M - eig_j I)")
    suffix = [ident] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = la.matmul(factors[i], suffix[i + 1])
    out = []
    for i in range(n):
        denom = one
        for j in range(n):
            if j != i:
                denom = denom * (eigs[i] - eigs[j])
        out.append(la.scale(1 / denom, la.matmul(prefix[i], suffix[i + 1])))
    total = out[0]
    for e in out[1:]:
        total = la.add(total, e)
    if not la.equal(total, ident):
        raise NotMultiplicityFree("idempotents do not sum to the identity")
    return out


def idempotent_laws_hold(M: list, Es: Sequence, eigs: Sequence) -> bool:
    """E_iE_j = delta_ij E_i, sum E_i = I, M E_i = eig_i E_i and M = sum eig_i E_i."""
    n = len(eigs)
    zero = M[0][0] * 0
    total = la.zeros(n, zero)
    spectral = la.zeros(n, zero)
    for i, Ei in enumerate(Es):
        if not la.equal(la.matmul(M, Ei), la.scale(eigs[i], Ei)):
            return False
        for j, Ej in enumerate(Es):
            prod = la.matmul(Ei, Ej)
            if not (la.equal(prod, Ei) if i == j else la.is_zero(prod)):
                return False
        total = la.add(total, Ei)
        spectral = la.add(spectral, la.scale(eigs[i], Ei))
    return la.equal(total, la.identity(n, zero, zero + 1)) and la.equal(spectral, M)


@dataclass(frozen=True)
class Realization:
    A: list
    Astar: list
    source: ParameterArray

    @cached_property
    def E(self) -> list:
        return primitive_idempotents(self.A, self.source.theta)

    @cached_property
    def Estar(self) -> list:
        return primitive_idempotents(self.Astar, self.source.theta_star)


def split_realize(pa: ParameterArray) -> Realization:
    F = pa.field
    n = pa.d + 1
    A = la.zeros(n, F.zero)
    As = la.zeros(n, F.zero)
    for i in range(n):
        A[i][i] = pa.theta[i]
        As[i][i] = pa.theta_star[i]
        if i:
            A[i][i - 1] = F.one
            As[i - 1][i] = pa.vp(i)
    return Realization(A, As, pa)


def _trace_ratios(r: Realization, order: Sequence) -> list:
    """tr(E*_0 prod_{h<i}(A - order[h] I)) for i = 0..d."""
    E0 = r.Estar[0]
    n = len(order)
    zero = r.A[0][0] * 0
    prod = la.identity(n, zero, zero + 1)
    traces = [la.trace_of_product(E0, prod)]
    for h in range(n - 1):
        prod = la.matmul(prod, la.shift(r.A, -order[h]))
        traces.append(la.trace_of_product(E0, prod))
    return traces


def _splits(r: Realization, order: Sequence) -> list:
    ts = r.source.theta_star
    tr = _trace_ratios(r, order)
    out = []
    for i in range(1, len(order)):
        if tr[i - 1] == 0:
            raise ZeroDenominator(f"trace denominator vanishes at i={i}")
        out.append((ts[0] - ts[i]) * tr[i] / tr[i - 1])
    return out


def recover_split_sequences(r: Realization) -> tuple:
    """(varphi, phi) read back from the realization through trace formulas."""
    th = r.source.theta
    return tuple(_splits(r, th)), tuple(_splits(r, th[::-1]))


def _rank_one_factor(M: list):
    """(column, row) with M == column * row when M has rank one, else None."""
    n = len(M)
    pivot = next(((k, c) for k in range(n) for c in range(n) if M[k][c]), None)
    if pivot is None:
        return None
    k, c = pivot
    col = [M[i][c] for i in range(n)]
    row = [x / M[k][c] for x in M[k]]
    if all(M[i][j] == col[i] * row[j] for i in range(n) for j in range(n)):
        return col, row
    return None


def _sandwiches(Es: list, X: list) -> list:
    """Zero pattern of E_i X E_j for all i, j, as a boolean matrix (True = nonzero)."""
    n = len(Es)
    factors = [_rank_one_factor(e) for e in Es]
    if all(f is not None for f in factors):
        # E_i X E_j = col_i (row_i X col_j) row_j, nonzero iff the middle scalar is
        xcols = []
        for col, _ in factors:
            xcols.append([sum((X[a][b] * col[b] for b in range(n) if X[a][b] and col[b]), X[0][0] * 0)
                          for a in range(n)])
        return [[bool(sum((row_i[a] * xc[a] for a in range(n) if row_i[a] and xc[a]), X[0][0] * 0))
                 for xc in xcols] for _, row_i in factors]
    right = [la.matmul(X, e) for e in Es]
    return [[not la.is_zero(la.matmul(Ei, Rj)) for Rj in right] for Ei in Es]


def tridiagonal_check(r: Realization) -> bool:
    """E_i A* E_j and E*_i A E*_j vanish for |i-j| > 1 and not for |i-j| = 1."""
    for Es, X in ((r.E, r.Astar), (r.Estar, r.A)):
        nz = _sandwiches(Es, X)
        n = len(Es)
        for i in range(n):
            for j in range(n):
                gap = abs(i - j)
                if gap > 1 and nz[i][j]:
                    return False
                if gap == 1 and not nz[i][j]:
                    return False
    return True


def certify(pa: ParameterArray) -> bool:
    """Realize, read the split sequences back and run the tridiagonal check."""
    r = split_realize(pa)
    try:
        vp, ph = recover_split_sequences(r)
    except (ZeroDenominator, NotMultiplicityFree):
        return False
    return vp == pa.varphi and ph == pa.phi and tridiagonal_check(r)


def a_parameters(r: Realization) -> tuple:
    """(a_i, a*_i) with a_i = tr(E*_i A) and a*_i = tr(E_i A*)."""
    a = tuple(la.trace_of_product(e, r.A) for e in r.Estar)
    a_star = tuple(la.trace_of_product(e, r.Astar) for e in r.E)
    return a, a_star


def is_constant(seq: Sequence) -> bool:
    return all(x == seq[0] for x in seq)
