"""Lattice point sets of the Horn-type polytopes and the exact checks on them.

Three finite point sets are attached to a partition sigma with 2p parts:

  p1: nu with at most p parts, |nu| = |sigma|, and c(minus, plus; nu) != 0,
  p2: same domain with c(sigma, sigma; doubled nu) != 0,
  p:  gamma with at most 2p parts, |gamma| = 2|sigma|, c(sigma, sigma; gamma) != 0,

where (minus, plus) is the alternating split of sigma. Candidate first parts
are capped by eigenvalue sum bounds (nu_1 <= sigma_1 + sigma_2, and
gamma_1 <= 2 sigma_1), which exclude no nonzero coefficient, so the
enumerations are exhaustive.

Verification sweeps return a Report: one record per checked instance with
both coefficient values, renderable as text lines or a JSON document.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .partitions import Partition, doubled, partitions_in_box, sigma_split, tau_partitions
from .lr import lr_coefficient, lr_nonzero
from .dominoes import is_yamanouchi, yamanouchi_tableaux_by_weight
from .duplication import duplicate, undo_duplicate


@dataclass(frozen=True)
class Record:
    """One checked instance: named inputs, the two sides, and the verdict."""

    subject: tuple[tuple[str, str], ...]
    lhs: int
    rhs: int
    relation: str
    ok: bool

    def line(self) -> str:
        inputs = " ".join(f"{k}={v}" for k, v in self.subject)
        mark = "ok" if self.ok else "FAIL"
        return f"{inputs}: {self.lhs} {self.relation} {self.rhs} {mark}"

    def as_dict(self) -> dict:
        d = dict(self.subject)
        d.update(lhs=self.lhs, rhs=self.rhs, relation=self.relation, ok=self.ok)
        return d


@dataclass
class Report:
    """Outcome of a verification sweep."""

    suite: str
    parameters: dict
    records: list[Record] = field(default_factory=list)
    complete: bool = True

    @property
    def passed(self) -> bool:
        return self.complete and all(r.ok for r in self.records)

    def counterexamples(self) -> list[Record]:
        return [r for r in self.records if not r.ok]

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {len(self.records)} checks"]
        lines += [r.line() for r in self.records]
        bad = self.counterexamples()
        if not self.complete:
            lines.append("INCOMPLETE: time budget exceeded")
        lines.append(
            f"result: {'PASS' if self.passed else 'FAIL'}"
            f" ({len(bad)} counterexample{'s' if len(bad) != 1 else ''})"
        )
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "parameters": self.parameters,
                "complete": self.complete,
                "passed": self.passed,
                "counterexamples": len(self.counterexamples()),
                "records": [r.as_dict() for r in self.records],
            },
            indent=2,
        )


class LatticePointSet:
    """Finite set of integer points, all of one dimension and coordinate sum."""

    __slots__ = ("dimension", "total", "points")

    def __init__(self, dimension: int, points: Iterable[tuple[int, ...]]):
        pts = frozenset(tuple(int(x) for x in p) for p in points)
        for p in pts:
            if len(p) != dimension:
                raise ValueError(f"point {p} does not have dimension {dimension}")
        totals = {sum(p) for p in pts}
        if len(totals) > 1:
            raise ValueError(f"points lie on different sum levels: {sorted(totals)}")
        self.dimension = dimension
        self.total = totals.pop() if totals else 0
        self.points = pts

    def sorted_points(self) -> list[tuple[int, ...]]:
        return sorted(self.points, reverse=True)

    def __contains__(self, point) -> bool:
        return tuple(point) in self.points

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LatticePointSet)
            and self.dimension == other.dimension
            and self.points == other.points
        )

    def issubset(self, other: "LatticePointSet") -> bool:
        return self.points <= other.points

    def __repr__(self) -> str:
        return f"LatticePointSet(dim={self.dimension}, n={len(self.points)})"


def horn_membership(alpha: Partition, beta: Partition, gamma: Partition) -> bool:
    """Whether gamma can be the spectrum of a sum with spectra alpha and beta:
    trace additivity plus a nonzero Littlewood-Richardson coefficient."""
    return (
        gamma.weight() == alpha.weight() + beta.weight()
        and lr_nonzero(alpha, beta, gamma)
    )


def _even_split(sigma: Partition) -> tuple[Partition, Partition, int]:
    if len(sigma) % 2:
        raise ValueError(f"sigma needs an even number of parts, got {len(sigma)}")
    minus, plus = sigma_split(sigma)
    return minus, plus, len(sigma) // 2


def _candidates(total: int, max_len: int, cap: int) -> Iterator[Partition]:
    for parts in partitions_in_box(total, max_len, min(cap, total)):
        yield Partition(parts)


def p1_points(sigma: Partition) -> LatticePointSet:
    """nu with at most p parts summing to |sigma| and c(minus, plus; nu) != 0."""
    minus, plus, p = _even_split(sigma)
    cap = sigma[0] + sigma[1] if len(sigma) >= 2 else sigma.weight()
    pts = []
    for nu in _candidates(sigma.weight(), p, cap):
        if lr_nonzero(minus, plus, nu):
            pts.append(nu.padded(p).parts)
    return LatticePointSet(p, pts)


def p2_points(sigma: Partition) -> LatticePointSet:
    """nu with at most p parts summing to |sigma| and c(sigma, sigma; doubled nu) != 0."""
    _, _, p = _even_split(sigma)
    cap = sigma[0] + sigma[1] if len(sigma) >= 2 else sigma.weight()
    pts = []
    for nu in _candidates(sigma.weight(), p, cap):
        if lr_nonzero(sigma, sigma, doubled(nu)):
            pts.append(nu.padded(p).parts)
    return LatticePointSet(p, pts)


def p_points(sigma: Partition) -> LatticePointSet:
    """gamma with at most 2p parts summing to 2|sigma| and c(sigma, sigma; gamma) != 0."""
    _, _, p = _even_split(sigma)
    cap = 2 * sigma[0] if len(sigma) else 0
    pts = []
    for gamma in _candidates(2 * sigma.weight(), 2 * p, cap):
        if lr_nonzero(sigma, sigma, gamma):
            pts.append(gamma.padded(2 * p).parts)
    return LatticePointSet(2 * p, pts)


def projection_onto_delta(gamma: Sequence) -> tuple[Fraction, ...]:
    """Average consecutive pairs: (g1, g2, g3, g4, ...) to ((g1+g2)/2, (g3+g4)/2, ...).

    Exact rational output; the input length must be even.
    """
    vals = list(gamma)
    if len(vals) % 2:
        raise ValueError(f"needs an even length, got {len(vals)}")
    return tuple(
        Fraction(vals[2 * i] + vals[2 * i + 1], 2) for i in range(len(vals) // 2)
    )


# ---------------------------------------------------------------------------
# convex hull membership

def convex_hull_2d(points: Sequence[tuple]) -> list[tuple]:
    """Lower-upper monotone chain hull; works on exact (int or Fraction) pairs."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _hull_contains_2d(points: Sequence[tuple], q: tuple) -> bool:
    hull = convex_hull_2d(points)
    if not hull:
        return False
    if len(hull) == 1:
        return tuple(q) == tuple(hull[0])
    if len(hull) == 2:
        (x1, y1), (x2, y2) = hull
        qx, qy = q
        if (x2 - x1) * (qy - y1) != (y2 - y1) * (qx - x1):
            return False
        lo, hi = min(x1, x2), max(x1, x2)
        if lo == hi:
            lo, hi = min(y1, y2), max(y1, y2)
            return lo <= qy <= hi
        return lo <= qx <= hi

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    for i in range(len(hull)):
        if cross(hull[i], hull[(i + 1) % len(hull)], q) < 0:
            return False
    return True


def hull_contains(points: Sequence[tuple], point: Sequence, tol: float = 1e-7) -> bool:
    """Whether ``point`` lies in the convex hull of ``points``.

    Points on a common coordinate-sum level are reduced by dropping the last
    coordinate once the sum is checked. Dimensions one and two after the
    reduction are decided exactly when the data is exact; anything higher
    goes through a linear feasibility problem with the given tolerance.
    """
    pts = [tuple(p) for p in points]
    if not pts:
        return False
    q = tuple(point)
    dim = len(pts[0])
    if len(q) != dim:
        raise ValueError(f"dimension mismatch: point {q} vs {dim}")

    exact = all(isinstance(x, (int, Fraction)) for p in pts for x in p) and all(
        isinstance(x, (int, Fraction)) for x in q
    )
    level = sum(pts[0])
    on_level = all(sum(p) == level for p in pts)
    if on_level:
        if exact:
            if sum(q) != level:
                return False
        elif abs(sum(q) - level) > tol * max(1.0, abs(float(level))):
            return False
        pts = [p[:-1] for p in pts]
        q = q[:-1]
        dim -= 1

    if dim == 0:
        return True
    if dim == 1:
        xs = [p[0] for p in pts]
        if exact:
            return min(xs) <= q[0] <= max(xs)
        return min(xs) - tol <= q[0] <= max(xs) + tol
    if dim == 2 and exact:
        return _hull_contains_2d(pts, q)

    import numpy as np
    from scipy.optimize import linprog

    a_eq = np.vstack([np.array(pts, dtype=float).T, np.ones(len(pts))])
    b_eq = np.concatenate([np.array(q, dtype=float), [1.0]])
    res = linprog(
        c=np.zeros(len(pts)),
        A_eq=a_eq,
        b_eq=b_eq,
        bounds=[(0, None)] * len(pts),
        method="highs",
    )
    return bool(res.status == 0)


# ---------------------------------------------------------------------------
# verification sweeps

def sigma_domain(p: int, max_part: int) -> list[Partition]:
    """Every sigma with 2p parts bounded by max_part, padded to length 2p."""
    out = []
    for total in range(2 * p * max_part + 1):
        for parts in partitions_in_box(total, 2 * p, max_part):
            out.append(Partition(parts).padded(2 * p))
    return out


def _nu_domain(sigma: Partition, max_len: int) -> list[Partition]:
    cap = sigma[0] + sigma[1] if len(sigma) >= 2 else sigma.weight()
    return list(_candidates(sigma.weight(), max_len, cap))


def _map_sigmas(
    sigmas: Sequence[Partition],
    work: Callable[[Partition], list[Record]],
    threads: int,
    deadline: float | None,
) -> tuple[list[Record], bool]:
    records: list[Record] = []
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for i, recs in enumerate(pool.map(work, sigmas)):
                records.extend(recs)
                if deadline is not None and time.monotonic() > deadline:
                    return records, i + 1 == len(sigmas)
    else:
        for i, sigma in enumerate(sigmas):
            records.extend(work(sigma))
            if deadline is not None and time.monotonic() > deadline:
                return records, i + 1 == len(sigmas)
    return records, True


def verify_p1_equals_p2(
    p: int = 2,
    max_part: int = 5,
    extra_sigmas: Sequence[Partition] = (),
    threads: int = 1,
    budget_seconds: float | None = None,
) -> Report:
    """Both polytope criteria agree: for every sigma in the box domain and
    every candidate nu, c(minus, plus; nu) != 0 iff c(sigma, sigma; doubled nu) != 0."""
    deadline = time.monotonic() + budget_seconds if budget_seconds else None
    sigmas = sigma_domain(p, max_part) + list(extra_sigmas)

    def work(sigma: Partition) -> list[Record]:
        minus, plus = sigma_split(sigma)
        recs = []
        for nu in _nu_domain(sigma, len(sigma) // 2):
            a = lr_coefficient(minus, plus, nu)
            b = lr_coefficient(sigma, sigma, doubled(nu))
            recs.append(
                Record(
                    (("sigma", sigma.literal()), ("nu", nu.literal())),
                    a,
                    b,
                    "~",
                    (a != 0) == (b != 0),
                )
            )
        return recs

    records, complete = _map_sigmas(sigmas, work, threads, deadline)
    return Report(
        "p1p2",
        {"p": p, "max_part": max_part, "extra": [s.literal() for s in extra_sigmas]},
        records,
        complete,
    )


def verify_nonvanishing_implication(
    p: int = 2,
    max_part: int = 5,
    threads: int = 1,
    budget_seconds: float | None = None,
) -> Report:
    """One direction on its own: c(sigma, sigma; doubled nu) != 0 forces
    c(minus, plus; nu) != 0."""
    deadline = time.monotonic() + budget_seconds if budget_seconds else None
    sigmas = sigma_domain(p, max_part)

    def work(sigma: Partition) -> list[Record]:
        minus, plus = sigma_split(sigma)
        recs = []
        for nu in _nu_domain(sigma, len(sigma) // 2):
            b = lr_coefficient(sigma, sigma, doubled(nu))
            a = lr_coefficient(minus, plus, nu)
            recs.append(
                Record(
                    (("sigma", sigma.literal()), ("nu", nu.literal())),
                    b,
                    a,
                    "=>",
                    b == 0 or a != 0,
                )
            )
        return recs

    records, complete = _map_sigmas(sigmas, work, threads, deadline)
    return Report("implication", {"p": p, "max_part": max_part}, records, complete)


def duplication_records(sigma: Partition) -> list[Record]:
    """Checked-injection records for one sigma: enumerate the weight-nu
    Yamanouchi tableaux of shape tau(plus, minus), push each through
    ``duplicate``, validate the image, undo it, and compare counts."""
    minus, plus = sigma_split(sigma)
    p = len(sigma) // 2
    shape = tau_partitions(plus, minus)
    doubled_shape = tau_partitions(sigma, sigma)
    grouped = yamanouchi_tableaux_by_weight(shape, max_labels=p)
    recs = []
    for nu in _nu_domain(sigma, p):
        tabs = grouped.get(nu.trimmed().parts, [])
        images = []
        injective = True
        for t in tabs:
            u = duplicate(t)  # constructor re-validates the image tableau
            if (
                u.shape != doubled_shape
                or u.weight() != doubled(nu).trimmed().parts
                or not is_yamanouchi(u.reading_word())
                or undo_duplicate(u) != t
            ):
                injective = False
            images.append(u)
        if len(set(images)) != len(images):
            injective = False
        rhs = lr_coefficient(sigma, sigma, doubled(nu))
        lhs = len(tabs)
        ok = injective and lhs <= rhs and lhs == lr_coefficient(minus, plus, nu)
        recs.append(
            Record(
                (("sigma", sigma.literal()), ("nu", nu.literal())),
                lhs,
                rhs,
                "<=",
                ok,
            )
        )
    return recs


def verify_duplication_inequality(
    p: int = 2,
    max_part: int = 6,
    threads: int = 1,
    budget_seconds: float | None = None,
) -> Report:
    """The paired-count inequality via the duplication injection, per (sigma, nu)."""
    deadline = time.monotonic() + budget_seconds if budget_seconds else None
    sigmas = sigma_domain(p, max_part)
    records, complete = _map_sigmas(sigmas, duplication_records, threads, deadline)
    return Report("prop2", {"p": p, "max_part": max_part}, records, complete)


def verify_fflp_inequality(
    max_len: int = 2,
    max_part: int = 3,
    threads: int = 1,
    budget_seconds: float | None = None,
) -> Report:
    """Shape-doubling inequality: c(lam, mu; nu) <= c(tau, tau; tau(nu, nu))
    with tau = tau(lam, mu), for all pairs in the box and all nu of the right weight."""
    deadline = time.monotonic() + budget_seconds if budget_seconds else None
    shapes = []
    for total in range(max_len * max_part + 1):
        for parts in partitions_in_box(total, max_len, max_part):
            shapes.append(Partition(parts).padded(max_len))

    pairs = [(lam, mu) for lam in shapes for mu in shapes]
    records: list[Record] = []
    complete = True

    def work(pair) -> list[Record]:
        lam, mu = pair
        t = tau_partitions(lam, mu)
        recs = []
        n = lam.weight() + mu.weight()
        for parts in partitions_in_box(n, n, n) if n else [()]:
            nu = Partition(parts)
            lhs = lr_coefficient(lam, mu, nu)
            rhs = lr_coefficient(t, t, tau_partitions(nu, nu))
            recs.append(
                Record(
                    (
                        ("lam", lam.literal()),
                        ("mu", mu.literal()),
                        ("nu", nu.literal()),
                    ),
                    lhs,
                    rhs,
                    "<=",
                    lhs <= rhs,
                )
            )
        return recs

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for i, recs in enumerate(pool.map(work, pairs)):
                records.extend(recs)
                if deadline is not None and time.monotonic() > deadline:
                    complete = i + 1 == len(pairs)
                    break
    else:
        for i, pair in enumerate(pairs):
            records.extend(work(pair))
            if deadline is not None and time.monotonic() > deadline:
                complete = i + 1 == len(pairs)
                break
    return Report(
        "fflp", {"max_len": max_len, "max_part": max_part}, records, complete
    )


def length_splits(sigma: Partition) -> list[tuple[Partition, Partition]]:
    """All unordered splits of the parts of sigma into two halves of equal length."""
    from itertools import combinations

    parts = sigma.parts
    n = len(parts)
    if n % 2:
        raise ValueError("needs an even number of parts")
    out = []
    for idx in combinations(range(1, n), n // 2 - 1):
        left = (0,) + idx
        right = tuple(i for i in range(n) if i not in left)
        lam = Partition(sorted((parts[i] for i in left), reverse=True))
        mu = Partition(sorted((parts[i] for i in right), reverse=True))
        out.append((lam, mu))
    return out


def verify_lpp_inequality(
    p: int = 2,
    max_part: int = 5,
    threads: int = 1,
    budget_seconds: float | None = None,
) -> Report:
    """Split-dominance inequality: the alternating split maximizes
    c(lam, mu; nu) over all equal-length splits (lam, mu) of sigma."""
    deadline = time.monotonic() + budget_seconds if budget_seconds else None
    sigmas = sigma_domain(p, max_part)

    def work(sigma: Partition) -> list[Record]:
        minus, plus = sigma_split(sigma)
        recs = []
        nus = _nu_domain(sigma, 2 * p)
        for lam, mu in length_splits(sigma):
            for nu in nus:
                lhs = lr_coefficient(lam, mu, nu)
                rhs = lr_coefficient(minus, plus, nu)
                recs.append(
                    Record(
                        (
                            ("sigma", sigma.literal()),
                            ("lam", lam.literal()),
                            ("mu", mu.literal()),
                            ("nu", nu.literal()),
                        ),
                        lhs,
                        rhs,
                        "<=",
                        lhs <= rhs,
                    )
                )
        return recs

    records, complete = _map_sigmas(sigmas, work, threads, deadline)
    return Report("lpp", {"p": p, "max_part": max_part}, records, complete)


def verify_projection_inclusion(
    p: int = 2,
    max_part: int = 5,
    threads: int = 1,
    budget_seconds: float | None = None,
) -> Report:
    """Every point of p, averaged in consecutive pairs, lies in the convex
    hull of the p1 lattice points. Exact rational arithmetic throughout."""
    deadline = time.monotonic() + budget_seconds if budget_seconds else None
    sigmas = sigma_domain(p, max_part)

    def work(sigma: Partition) -> list[Record]:
        hull_pts = p1_points(sigma).sorted_points()
        recs = []
        for gamma in p_points(sigma).sorted_points():
            proj = projection_onto_delta(gamma)
            inside = hull_contains(hull_pts, proj)
            recs.append(
                Record(
                    (
                        ("sigma", sigma.literal()),
                        ("gamma", Partition(gamma).literal()),
                        (
                            "projection",
                            "[" + ",".join(str(x) for x in proj) + "]",
                        ),
                    ),
                    1 if inside else 0,
                    1,
                    "in-hull",
                    inside,
                )
            )
        return recs

    records, complete = _map_sigmas(sigmas, work, threads, deadline)
    return Report("projection", {"p": p, "max_part": max_part}, records, complete)
