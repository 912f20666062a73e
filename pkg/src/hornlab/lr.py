"""Classical Littlewood-Richardson coefficients by direct enumeration.

Counts skew semistandard fillings of nu/lam with content mu whose reverse
reading word is a lattice word. Cells are filled in reading order (rows top
to bottom, right to left within a row), which lets the lattice condition be
checked incrementally on the prefix built so far.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import Partition


def _filling_count(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...],
                   stop_at_one: bool) -> int:
    """Count lattice fillings of nu/lam with content mu; short-circuit if asked."""
    cells = []  # (row, col) 1-based, in reading order
    for r, outer in enumerate(nu, start=1):
        inner = lam[r - 1] if r - 1 < len(lam) else 0
        for c in range(outer, inner, -1):
            cells.append((r, c))
    m = len(mu)
    filled: dict[tuple[int, int], int] = {}
    counts = [0] * (m + 1)
    total = 0

    def rec(idx: int) -> int:
        nonlocal total
        if idx == len(cells):
            total += 1
            return total
        r, c = cells[idx]
        above = filled.get((r - 1, c), 0)
        right = filled.get((r, c + 1), m)
        # entries in row r of a lattice filling never exceed r
        hi = min(right, r, m)
        for v in range(above + 1, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # would break the lattice prefix
            counts[v] += 1
            filled[(r, c)] = v
            rec(idx + 1)
            del filled[(r, c)]
            counts[v] -= 1
            if stop_at_one and total:
                break
        return total

    return rec(0)


@lru_cache(maxsize=None)
def _lr(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    for i, p in enumerate(lam):
        if p > (nu[i] if i < len(nu) else 0):
            return 0
    return _filling_count(lam, mu, nu, stop_at_one=False)


@lru_cache(maxsize=None)
def _lr_nonzero(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> bool:
    if sum(nu) != sum(lam) + sum(mu):
        return False
    for i, p in enumerate(lam):
        if p > (nu[i] if i < len(nu) else 0):
            return False
    return _filling_count(lam, mu, nu, stop_at_one=True) > 0


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The multiplicity of s_nu in s_lam * s_mu, always a nonnegative integer."""
    return _lr(lam.trimmed().parts, mu.trimmed().parts, nu.trimmed().parts)


def lr_nonzero(lam: Partition, mu: Partition, nu: Partition) -> bool:
    """Whether the coefficient is nonzero, without counting all fillings."""
    return _lr_nonzero(lam.trimmed().parts, mu.trimmed().parts, nu.trimmed().parts)
