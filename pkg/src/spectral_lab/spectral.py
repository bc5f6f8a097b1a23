"""Spectra, exact walk counts, exact rank and the R_k quotient algebra.

Anything stated as an identity (traces, walk counts, ranks) is computed in
exact integer arithmetic; floating point is used only for eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, bits

ZERO_TOL = 1e-7


class NotAPartitionError(ValueError):
    pass


class NotEquitableError(ValueError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Adjacency eigenvalues in non-increasing order."""

    values: tuple[float, ...]
    zero_tol: float = ZERO_TOL

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def lambda1(self) -> float:
        return self.values[0]

    @property
    def lambda2(self) -> float:
        return self.values[1]

    def positive(self) -> list[float]:
        return [x for x in self.values if x > self.zero_tol]

    def negative(self) -> list[float]:
        return [x for x in self.values if x < -self.zero_tol]

    def nonzero_count(self) -> int:
        return sum(1 for x in self.values if abs(x) > self.zero_tol)

    def power_sum(self, t: int) -> float:
        return float(sum(x**t for x in self.values))


@dataclass(frozen=True)
class InertiaSums:
    s_plus: float
    s_minus: float
    p_plus: int
    p_minus: int


@dataclass(frozen=True)
class EquitablePartition:
    blocks: tuple[tuple[int, ...], ...]
    quotient: np.ndarray

    def eigenvalues(self) -> np.ndarray:
        """Quotient eigenvalues, real parts sorted non-increasing."""
        vals = np.linalg.eigvals(self.quotient.astype(float))
        return np.sort(vals.real)[::-1]


def spectrum(g: Graph, zero_tol: float = ZERO_TOL) -> Spectrum:
    """Eigenvalues of the adjacency matrix (LAPACK symmetric eigensolver)."""
    if g.n < 1:
        raise ValueError("spectrum needs at least one vertex")
    a = g.adjacency_matrix(dtype=float)
    # eigvalsh raises LinAlgError if the QR iteration fails to converge
    vals = np.linalg.eigvalsh(a)[::-1]
    return Spectrum(tuple(float(x) for x in vals), zero_tol)


def spectral_radius(g: Graph) -> float:
    return spectrum(g).lambda1 if g.n else 0.0


def _matpow_rows(g: Graph, t: int) -> list[list[int]]:
    # A^t as integer rows, built by repeated left multiplication with A
    n = g.n
    nbrs = [bits(r) for r in g.rows]
    cur = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(t):
        nxt = []
        for i in range(n):
            row = [0] * n
            for j in nbrs[i]:
                src = cur[j]
                for c in range(n):
                    row[c] += src[c]
            nxt.append(row)
        cur = nxt
    return cur


def closed_walks(g: Graph, t: int) -> int:
    """Tr(A^t): the number of closed walks with t edges."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if g.n == 0:
        return 0
    half = t // 2
    lo = _matpow_rows(g, half)
    hi = lo if t - half == half else _matpow_rows(g, t - half)
    # Tr(A^a A^b) = sum_ij (A^a)_ij (A^b)_ij since both factors are symmetric
    return sum(x * y for rl, rh in zip(lo, hi) for x, y in zip(rl, rh))


def walks(g: Graph, t: int) -> int:
    """Number of walks with t vertices, i.e. 1' A^(t-1) 1."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    nbrs = [bits(r) for r in g.rows]
    w = [1] * g.n
    for _ in range(t - 1):
        w = [sum(w[j] for j in nbrs[i]) for i in range(g.n)]
    return sum(w)


def rank_exact(g: Graph) -> int:
    """Rank of A(G) over the rationals by fraction-free (Bareiss) elimination."""
    n = g.n
    m = [[(r >> j) & 1 for j in range(n)] for r in g.rows]
    rank = 0
    prev = 1
    for col in range(n):
        piv = next((r for r in range(rank, n) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n):
            a = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col + 1, n):
                q, rem = divmod(row[c] * p - a * top[c], prev)
                if rem:
                    raise ArithmeticError("Bareiss division was not exact")
                row[c] = q
            row[col] = 0
        prev = p
        rank += 1
    return rank


def inertia_sums(spec: Spectrum, power: int = 2) -> InertiaSums:
    """Sums of ``power``-th powers of the positive and of the negative eigenvalues."""
    if power < 2 or power % 2:
        raise ValueError(f"power must be an even integer >= 2, got {power}")
    pos = spec.positive()
    neg = spec.negative()
    return InertiaSums(
        s_plus=float(sum(x**power for x in pos)),
        s_minus=float(sum(x**power for x in neg)),
        p_plus=len(pos),
        p_minus=len(neg),
    )


def path_charpoly_eval(n: int, lam):
    """det(lam I - A(P_n)) via g_{j+1} = lam g_j - g_{j-1}, g_0 = 1, g_1 = lam.

    Works for any numeric type supporting + and *, so ints and Fractions stay exact.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    prev, cur = 1, lam
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, lam * cur - prev
    return cur


def rk_quotient_charpoly_eval(k: int, s: int, t: int, lam):
    """Characteristic polynomial of the R_k(K_{s,t}) quotient matrix at ``lam``."""
    _check_rk(k, s, t)
    a = (s - 1) * (t - 1)
    g_hi = path_charpoly_eval(2 * k + 1, lam)
    g_mid = path_charpoly_eval(2 * k, lam)
    g_lo = path_charpoly_eval(2 * k - 1, lam)
    return (lam * lam - a) * g_hi - (s + t - 2) * lam * g_mid - 2 * a + a * g_lo


def _check_rk(k: int, s: int, t: int) -> None:
    if k < 1 or s < 2 or t < 2:
        raise ValueError(f"R_k(K_s,t) needs k >= 1 and s, t >= 2, got k={k}, s={s}, t={t}")


def rk_spectral_radius(k: int, s: int, t: int) -> float:
    """Largest root of the quotient polynomial, by bisection on (2, 1 + max degree)."""
    _check_rk(k, s, t)
    lo = 2.0
    hi = 1.0 + max(s, t)
    f_lo = rk_quotient_charpoly_eval(k, s, t, lo)
    f_hi = rk_quotient_charpoly_eval(k, s, t, hi)
    # f(2) = 0 exactly when s = t = 2, where R_k(K_{2,2}) is the cycle C_{2k+3}
    if not (f_lo <= 0 < f_hi):
        raise ArithmeticError(
            f"no sign change bracketing the largest root for k={k}, s={s}, t={t}: "
            f"f(2)={f_lo}, f({hi})={f_hi}"
        )
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if rk_quotient_charpoly_eval(k, s, t, mid) > 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def rk_partition(k: int, s: int, t: int) -> list[list[int]]:
    """The (2k+3)-block equitable partition of ``rk_bipartite(k, s, t)``.

    Block order: X minus u, Y minus v, u, the path interior in order, v.
    """
    _check_rk(k, s, t)
    n = s + t + 2 * k - 1
    return (
        [list(range(1, s)), list(range(s + 1, s + t)), [0]]
        + [[x] for x in range(s + t, n)]
        + [[s]]
    )


def quotient_matrix(g: Graph, blocks: Sequence[Sequence[int]]) -> EquitablePartition:
    """Quotient matrix of an equitable partition; rejects anything else."""
    seen: set[int] = set()
    for b in blocks:
        if not b:
            raise NotAPartitionError("empty block")
        for v in b:
            if not 0 <= v < g.n:
                raise NotAPartitionError(f"vertex {v} out of range")
            if v in seen:
                raise NotAPartitionError(f"vertex {v} appears in more than one block")
            seen.add(v)
    if len(seen) != g.n:
        missing = sorted(set(range(g.n)) - seen)
        raise NotAPartitionError(f"vertices {missing} are not covered")
    masks = [sum(1 << v for v in b) for b in blocks]
    q = np.zeros((len(blocks), len(blocks)), dtype=np.int64)
    for i, b in enumerate(blocks):
        for j, mask in enumerate(masks):
            counts = {(g.rows[v] & mask).bit_count() for v in b}
            if len(counts) != 1:
                raise NotEquitableError(
                    f"block {i} vertices see {sorted(counts)} neighbours in block {j}"
                )
            q[i, j] = counts.pop()
    return EquitablePartition(tuple(tuple(b) for b in blocks), q)


def _check_vector(v: Sequence[float], name: str) -> np.ndarray:
    a = np.asarray(v, dtype=float)
    if np.any(a < 0):
        raise ValueError(f"{name} has negative entries")
    if np.any(np.diff(a) > 0):
        raise ValueError(f"{name} is not non-increasing")
    return a


def weakly_majorizes(r: Sequence[float], s: Sequence[float], tol: float = 0.0) -> bool:
    """True iff ``s`` is weakly majorized by ``r`` (every prefix sum of r dominates)."""
    a = _check_vector(r, "r")
    b = _check_vector(s, "s")
    if a.shape != b.shape:
        raise ValueError("vectors must have equal length; pad with zeros")
    return bool(np.all(np.cumsum(b) <= np.cumsum(a) + tol))


def p_norm(v: Sequence[float], p: float) -> float:
    if p <= 0:
        raise ValueError("p must be positive")
    a = np.abs(np.asarray(v, dtype=float))
    return float(np.sum(a**p) ** (1.0 / p))
