"""Integer partitions with declared length, and the doubling calculus on them.

A partition here is a weakly decreasing tuple of nonnegative integers.
Trailing zeros are significant: (5, 3, 2, 0) and (5, 3, 2) describe the same
Young diagram but are different values, because the correspondence with
strictly increasing sequences depends on the declared number of parts.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_PART = 64


class Partition:
    """Weakly decreasing tuple of nonnegative integers, trailing zeros kept.

    Equality and hashing are strict on the declared parts; use ``trimmed()``
    before comparing as diagrams.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 0:
                raise ValueError(f"negative part {p}")
            if p > MAX_PART:
                raise ValueError(f"part {p} exceeds the supported bound {MAX_PART}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {a} < {b}")
        self.parts = parts

    @staticmethod
    def parse(text: str) -> "Partition":
        """Parse a literal like ``[5,3,2,0]`` (spaces allowed, ``[]`` is empty).

        Raises ValueError with the offending position on malformed input.
        """
        s = text.strip()
        if not s.startswith("["):
            raise ValueError(f"partition literal must start with '[': {text!r}")
        if not s.endswith("]"):
            raise ValueError(f"partition literal must end with ']': {text!r}")
        body = s[1:-1].strip()
        if not body:
            return Partition(())
        parts = []
        for k, piece in enumerate(body.split(",")):
            piece = piece.strip()
            if not piece or not all(c.isdigit() for c in piece):
                raise ValueError(
                    f"bad part at position {k + 1} in {text!r}: {piece!r} is not a nonnegative integer"
                )
            parts.append(int(piece))
        try:
            return Partition(parts)
        except ValueError as exc:
            raise ValueError(f"in {text!r}: {exc}") from None

    def literal(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def weight(self) -> int:
        return sum(self.parts)

    def trimmed(self) -> "Partition":
        """Drop trailing zero parts."""
        parts = self.parts
        n = len(parts)
        while n and parts[n - 1] == 0:
            n -= 1
        return Partition(parts[:n])

    def padded(self, length: int) -> "Partition":
        """Extend with zero parts to the given declared length."""
        if length < len(self.parts):
            raise ValueError(f"cannot pad length {len(self.parts)} down to {length}")
        return Partition(self.parts + (0,) * (length - len(self.parts)))

    def contains(self, other: "Partition") -> bool:
        """Diagram containment, independent of declared lengths."""
        a, b = self.parts, other.parts
        for i, p in enumerate(b):
            if p > (a[i] if i < len(a) else 0):
                return False
        return True

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"


class IncreasingSequence:
    """Strictly increasing tuple of positive integers."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[int] = ()):
        terms = tuple(int(t) for t in terms)
        for t in terms:
            if t < 1:
                raise ValueError(f"terms must be positive, got {t}")
        for a, b in zip(terms, terms[1:]):
            if a >= b:
                raise ValueError(f"terms not strictly increasing: {a} >= {b}")
        self.terms = terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, IncreasingSequence) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"IncreasingSequence({list(self.terms)!r})"


def lambda_of_sequence(seq: IncreasingSequence) -> Partition:
    """Partition of a strictly increasing sequence: part k is i_(r+1-k) - (r+1-k).

    Inverse of ``sequence_of_partition``; the empty sequence maps to the
    empty partition.
    """
    terms = seq.terms
    r = len(terms)
    return Partition(tuple(terms[r - 1 - k] - (r - k) for k in range(r)))


def sequence_of_partition(part: Partition) -> IncreasingSequence:
    """Strictly increasing sequence of a partition: term k is p_(r+1-k) + k."""
    parts = part.parts
    r = len(parts)
    return IncreasingSequence(tuple(parts[r - 1 - k] + (k + 1) for k in range(r)))


def tau_sequences(left: IncreasingSequence, right: IncreasingSequence) -> IncreasingSequence:
    """Interleave two length-r sequences: odd terms 2i-1 from the left, even 2j from the right."""
    if len(left) != len(right):
        raise ValueError(f"sequence lengths differ: {len(left)} vs {len(right)}")
    merged = tuple(2 * i - 1 for i in left.terms) + tuple(2 * j for j in right.terms)
    return IncreasingSequence(sorted(merged))


def tau_partitions(lam: Partition, mu: Partition) -> Partition:
    """Partition form of the interleaving, via the sequence correspondence.

    Both inputs must have the same declared length r; the result has
    declared length 2r and weight 2(|lam| + |mu|).
    """
    if len(lam) != len(mu):
        raise ValueError(f"declared lengths differ: {len(lam)} vs {len(mu)}")
    return lambda_of_sequence(
        tau_sequences(sequence_of_partition(lam), sequence_of_partition(mu))
    )


def sigma_split(sigma: Partition) -> tuple[Partition, Partition]:
    """Split an even-length partition into odd-position and even-position parts.

    Returns (minus, plus) where minus = (s1, s3, ...) and plus = (s2, s4, ...);
    the two interleave, so minus[k] >= plus[k] >= minus[k+1].
    """
    if len(sigma) % 2 != 0:
        raise ValueError(f"needs an even number of parts, got {len(sigma)}")
    return Partition(sigma.parts[0::2]), Partition(sigma.parts[1::2])


def doubled(nu: Partition) -> Partition:
    """Repeat every part twice: (n1, n2, ...) to (n1, n1, n2, n2, ...)."""
    out = []
    for p in nu.parts:
        out.append(p)
        out.append(p)
    return Partition(out)


def partitions_in_box(total: int, max_len: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """All partitions of ``total`` with at most max_len parts, each at most max_part.

    Yields trimmed tuples (no zero parts) in decreasing lexicographic order.
    """
    if total < 0:
        return
    if total == 0:
        yield ()
        return

    def rec(remaining: int, bound: int, slots: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if slots == 0 or bound == 0 or remaining > bound * slots:
            return
        for v in range(min(bound, remaining), 0, -1):
            yield from rec(remaining - v, v, slots - 1, prefix + (v,))

    yield from rec(total, max_part, max_len, ())


def box_partitions(max_len: int, max_part: int) -> Iterator[Partition]:
    """Every partition fitting in a max_len x max_part box, padded to max_len parts."""
    for total in range(max_len * max_part + 1):
        for parts in partitions_in_box(total, max_len, max_part):
            yield Partition(parts).padded(max_len)
