"""Semistandard domino tableaux, their reading words, and the domino route
to Littlewood-Richardson numbers.

A tableau is stored as a tiling of a Young diagram by labelled dominoes.
Enumeration works on the chain picture: a tableau with weight (m1, ..., mn)
is a chain of partitions where layer k adds 2*mk cells, and each layer
admits exactly one tiling by its mk dominoes if it admits one at all
(even-height column runs are stacked vertical dominoes, isolated cells must
pair horizontally with a same-row neighbour). Enumerating chains therefore
enumerates tableaux with no duplicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .partitions import Partition, tau_partitions

# raw dominoes inside the enumerator are (row, col, horizontal, label) tuples,
# rows and columns 1-based, anchored at the top-left cell


@dataclass(frozen=True, order=True)
class Domino:
    """One labelled domino, anchored at its top-left cell (1-based)."""

    row: int
    col: int
    horizontal: bool
    label: int

    def cells(self) -> tuple[tuple[int, int], tuple[int, int]]:
        if self.horizontal:
            return ((self.row, self.col), (self.row, self.col + 1))
        return ((self.row, self.col), (self.row + 1, self.col))


class DominoTableau:
    """A Young diagram tiled by labelled dominoes, semistandard.

    Semistandard means the induced cell labelling is weakly increasing along
    rows and strictly increasing down columns, except across the two cells of
    a single vertical domino. The constructor checks the tiling and the
    ordering, so an instance is always a valid tableau.

    Equality ignores declared trailing zero rows of the shape: the tiling
    determines the diagram.
    """

    __slots__ = ("shape", "dominoes", "_grid")

    def __init__(self, shape: Partition, dominoes: Iterable[Domino]):
        dominoes = tuple(sorted(dominoes))
        rows = shape.trimmed().parts
        grid: dict[tuple[int, int], int] = {}
        owner: dict[tuple[int, int], Domino] = {}
        for d in dominoes:
            if d.label < 1:
                raise ValueError(f"label must be positive: {d}")
            for r, c in d.cells():
                if r < 1 or c < 1 or r > len(rows) or c > rows[r - 1]:
                    raise ValueError(f"cell ({r},{c}) of {d} outside shape {shape.literal()}")
                if (r, c) in grid:
                    raise ValueError(f"cell ({r},{c}) covered twice")
                grid[(r, c)] = d.label
                owner[(r, c)] = d
        if 2 * len(dominoes) != sum(rows):
            raise ValueError(
                f"{len(dominoes)} dominoes cannot tile a diagram of {sum(rows)} cells"
            )
        for r, width in enumerate(rows, start=1):
            for c in range(1, width + 1):
                if c < width and grid[(r, c)] > grid[(r, c + 1)]:
                    raise ValueError(f"row {r} decreases at column {c}")
                below = (r + 1, c)
                if below in grid and owner[below] is not owner[(r, c)]:
                    if grid[below] <= grid[(r, c)]:
                        raise ValueError(f"column {c} not strict between rows {r} and {r + 1}")
        self.shape = shape
        self.dominoes = dominoes
        self._grid = grid

    def label_grid(self) -> tuple[tuple[int, ...], ...]:
        rows = self.shape.trimmed().parts
        return tuple(
            tuple(self._grid[(r, c)] for c in range(1, rows[r - 1] + 1))
            for r in range(1, len(rows) + 1)
        )

    def weight(self) -> tuple[int, ...]:
        """Count of each label, from 1 up to the largest present."""
        if not self.dominoes:
            return ()
        top = max(d.label for d in self.dominoes)
        counts = [0] * top
        for d in self.dominoes:
            counts[d.label - 1] += 1
        return tuple(counts)

    def reading_word(self) -> tuple[int, ...]:
        return reading_word(self)

    def to_text(self) -> str:
        """Cell grid serialization, one token per cell: label plus a marker
        for which half of its domino the cell is (< left, > right, ^ top, v bottom)."""
        rows = self.shape.trimmed().parts
        out = []
        for r in range(1, len(rows) + 1):
            tokens = []
            for c in range(1, rows[r - 1] + 1):
                d = self._owner_at(r, c)
                if d.horizontal:
                    mark = "<" if (r, c) == (d.row, d.col) else ">"
                else:
                    mark = "^" if (r, c) == (d.row, d.col) else "v"
                tokens.append(f"{self._grid[(r, c)]}{mark}")
            out.append(" ".join(tokens))
        return "\n".join(out)

    def _owner_at(self, r: int, c: int) -> Domino:
        for d in self.dominoes:
            if (r, c) in d.cells():
                return d
        raise KeyError((r, c))

    @staticmethod
    def from_text(text: str) -> "DominoTableau":
        """Inverse of ``to_text``. Declared trailing zero rows are not encoded."""
        marks: dict[tuple[int, int], tuple[int, str]] = {}
        widths = []
        lines = [ln for ln in text.splitlines() if ln.strip()]
        for r, line in enumerate(lines, start=1):
            tokens = line.split()
            widths.append(len(tokens))
            for c, tok in enumerate(tokens, start=1):
                label, mark = tok[:-1], tok[-1]
                if mark not in "<>^v" or not label.isdigit():
                    raise ValueError(f"bad cell token {tok!r} at row {r} column {c}")
                marks[(r, c)] = (int(label), mark)
        dominoes = []
        for (r, c), (label, mark) in marks.items():
            if mark == "<":
                if marks.get((r, c + 1)) != (label, ">"):
                    raise ValueError(f"unpaired '<' at row {r} column {c}")
                dominoes.append(Domino(r, c, True, label))
            elif mark == "^":
                if marks.get((r + 1, c)) != (label, "v"):
                    raise ValueError(f"unpaired '^' at row {r} column {c}")
                dominoes.append(Domino(r, c, False, label))
        return DominoTableau(Partition(widths), dominoes)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DominoTableau)
            and self.shape.trimmed() == other.shape.trimmed()
            and self.dominoes == other.dominoes
        )

    def __hash__(self) -> int:
        return hash((self.shape.trimmed().parts, self.dominoes))

    def __repr__(self) -> str:
        return f"DominoTableau({self.shape!r}, {list(self.dominoes)!r})"


def reading_word(tableau: DominoTableau) -> tuple[int, ...]:
    """Read columns right to left, rows top to bottom; a domino is recorded
    at its anchor, so a horizontal domino is skipped at first encounter."""
    return _word(
        (d.row, d.col, d.horizontal, d.label) for d in tableau.dominoes
    )


def _word(raw: Iterable[tuple[int, int, bool, int]]) -> tuple[int, ...]:
    return tuple(d[3] for d in sorted(raw, key=lambda d: (-d[1], d[0])))


def is_yamanouchi(word: Sequence[int]) -> bool:
    """Every prefix contains at least as many k as k+1, for every k."""
    counts: dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def is_domino_decomposable(shape: Partition) -> bool:
    """Whether the diagram can be tiled by dominoes at all (empty 2-core).

    Uses the shifted-parts criterion: with r nonzero-padded parts, the values
    b_i = p_i + r - i split evenly between parities exactly when a tiling
    exists, i.e. ceil(r/2) of them are even.
    """
    parts = shape.trimmed().parts
    r = len(parts)
    evens = sum(1 for i, p in enumerate(parts) if (p + r - 1 - i) % 2 == 0)
    return evens == (r + 1) // 2


def _layer_tiling(base: tuple[int, ...], target: tuple[int, ...]):
    """The unique tiling of target/base by unlabelled dominoes, or None.

    Cells of one layer share a label, and vertically adjacent cells with one
    label must belong to one domino, so a column run of height two is one
    vertical domino, a run of height one must pair horizontally with an
    adjacent pending cell in the same row, and higher runs admit nothing.
    """
    width = target[0] if target else 0
    dominoes = []
    pending: dict[int, list[int]] = {}
    k1 = len(target)
    k0 = len(base)
    for col in range(1, width + 1):
        while k1 and target[k1 - 1] < col:
            k1 -= 1
        while k0 and base[k0 - 1] < col:
            k0 -= 1
        h = k1 - k0
        if h == 0:
            continue
        if h == 2:
            dominoes.append((k0 + 1, col, False))
        elif h == 1:
            pending.setdefault(k0 + 1, []).append(col)
        else:
            return None
    for row, cols in pending.items():
        for i in range(0, len(cols), 2):
            if i + 1 >= len(cols) or cols[i + 1] != cols[i] + 1:
                return None
            dominoes.append((row, cols[i], True))
    return tuple(dominoes)


def _extensions(base, count, ambient, cache):
    """All (target, tiling) where target adds 2*count cells to base inside
    ambient and target/base tiles as one layer. Cached per (base, count)."""
    key = (base, count)
    hit = cache.get(key)
    if hit is not None:
        return hit
    out = []
    if count == 0:
        out.append((base, ()))
    else:
        rows = len(ambient)
        room = [ambient[i] - base[i] for i in range(rows)]
        suffix = [0] * (rows + 1)
        for i in range(rows - 1, -1, -1):
            suffix[i] = suffix[i + 1] + room[i]
        target = list(base)

        def rec(i, remaining, prev):
            if remaining == 0:
                for j in range(i, rows):
                    target[j] = base[j]
                t = tuple(target)
                tiling = _layer_tiling(base, t)
                if tiling is not None:
                    out.append((t, tiling))
                return
            if i == rows or remaining > suffix[i]:
                return
            hi = min(ambient[i], prev)
            for v in range(base[i], hi + 1):
                target[i] = v
                rec(i + 1, remaining - (v - base[i]), v)
            target[i] = base[i]

        rec(0, 2 * count, ambient[0] if rows else 0)
    cache[key] = out
    return out


def _iter_chains(ambient: tuple[int, ...], weight: tuple[int, ...], yamanouchi: bool
                 ) -> Iterator[tuple[tuple[int, int, bool, int], ...]]:
    """All semistandard tilings of ambient with the given layer sizes,
    optionally pruned to Yamanouchi reading words layer by layer."""
    if sum(ambient) != 2 * sum(weight):
        return
    cache: dict = {}
    n = len(weight)
    acc: list[tuple[int, int, bool, int]] = []

    def rec(k: int, current: tuple[int, ...]) -> Iterator[tuple]:
        if k == n:
            yield tuple(acc)
            return
        for target, tiling in _extensions(current, weight[k], ambient, cache):
            added = [(r, c, h, k + 1) for (r, c, h) in tiling]
            acc.extend(added)
            if not (yamanouchi and k >= 1 and not is_yamanouchi(_word(acc))):
                yield from rec(k + 1, target)
            del acc[len(acc) - len(added):]

    yield from rec(0, tuple(0 for _ in ambient))


def _iter_census(ambient: tuple[int, ...], max_labels: int | None
                 ) -> Iterator[tuple[tuple[int, ...], tuple[tuple[int, int, bool, int], ...]]]:
    """All Yamanouchi tilings of ambient over every admissible weight.

    Yamanouchi words have weakly decreasing label counts, so layer sizes are
    enumerated as partitions of half the cell count on the fly.
    """
    total = sum(ambient)
    if total % 2:
        return
    cache: dict = {}
    acc: list[tuple[int, int, bool, int]] = []
    sizes: list[int] = []

    def rec(k: int, current: tuple[int, ...], filled: int) -> Iterator[tuple]:
        if filled == total:
            yield tuple(sizes), tuple(acc)
            return
        if max_labels is not None and k >= max_labels:
            return
        prev = sizes[-1] if sizes else (total - filled) // 2
        for m in range(min(prev, (total - filled) // 2), 0, -1):
            for target, tiling in _extensions(current, m, ambient, cache):
                added = [(r, c, h, k + 1) for (r, c, h) in tiling]
                acc.extend(added)
                sizes.append(m)
                if not (k >= 1 and not is_yamanouchi(_word(acc))):
                    yield from rec(k + 1, target, filled + 2 * m)
                sizes.pop()
                del acc[len(acc) - len(added):]

    yield from rec(0, tuple(0 for _ in ambient), 0)


def _build(shape: Partition, raw: Iterable[tuple[int, int, bool, int]]) -> DominoTableau:
    return DominoTableau(shape, (Domino(r, c, h, l) for (r, c, h, l) in raw))


def _canonical(tableaux: list[DominoTableau]) -> list[DominoTableau]:
    return sorted(tableaux, key=lambda t: t.label_grid())


def enumerate_domino_tableaux(shape: Partition, weight: Partition) -> list[DominoTableau]:
    """All semistandard domino tableaux of the shape with the given weight,
    in lexicographic order of the cell-label grid. Size mismatch gives []."""
    ambient = shape.parts
    w = weight.trimmed().parts
    return _canonical([_build(shape, raw) for raw in _iter_chains(ambient, w, False)])


def enumerate_yamanouchi_tableaux(shape: Partition, weight: Partition) -> list[DominoTableau]:
    """The subset of ``enumerate_domino_tableaux`` with Yamanouchi reading word."""
    ambient = shape.parts
    w = weight.trimmed().parts
    return _canonical([_build(shape, raw) for raw in _iter_chains(ambient, w, True)])


def yamanouchi_weight_census(shape: Partition, max_labels: int | None = None
                             ) -> dict[tuple[int, ...], int]:
    """Count Yamanouchi tableaux of the shape for every weight at once.

    Keys are trimmed weight tuples; weights not present count zero. Useful
    when a whole coefficient table for one shape is wanted, since the chain
    tree is walked once instead of once per weight.
    """
    counts: dict[tuple[int, ...], int] = {}
    for w, _raw in _iter_census(shape.parts, max_labels):
        counts[w] = counts.get(w, 0) + 1
    return counts


def yamanouchi_tableaux_by_weight(shape: Partition, max_labels: int | None = None
                                  ) -> dict[tuple[int, ...], list[DominoTableau]]:
    """Like the census but materializing the tableaux, grouped by weight."""
    grouped: dict[tuple[int, ...], list[DominoTableau]] = {}
    for w, raw in _iter_census(shape.parts, max_labels):
        grouped.setdefault(w, []).append(_build(shape, raw))
    return {w: _canonical(ts) for w, ts in grouped.items()}


def cl_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson number by the domino route: the count of
    Yamanouchi domino tableaux of shape tau(lam, mu) and weight nu.

    Requires lam and mu of equal declared length (the interleaving needs it);
    pad first when lengths differ.
    """
    shape = tau_partitions(lam, mu)
    w = nu.trimmed().parts
    if shape.weight() != 2 * sum(w):
        return 0
    return sum(1 for _ in _iter_chains(shape.parts, w, True))
