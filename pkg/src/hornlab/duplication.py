"""Row doubling on domino tableaux and its one-sided inverse.

``duplicate`` sends any valid tableau to one of the row-doubled shape:
every row of the diagram is repeated, so each domino turns into two
stacked copies of itself, the upper copy of a label-k domino numbered
2k-1 and the lower copy 2k. The two copies are read consecutively
(the upper anchor sits directly above the lower one in the same column), so
the reading word of the image is the word of the input with every letter k
replaced by the pair 2k-1, 2k. That substitution preserves the Yamanouchi
property and doubles the weight partwise, which makes the map an injection
between the two tableau families it connects.

``undo_duplicate`` recognizes the image: every odd label 2k-1 piece fixes
the exact position of its 2k partner (directly below for a horizontal
domino, two rows below for a vertical one), so reconstruction is forced.
A ``duplicate`` round trip on the candidate confirms the result; anything
outside the image returns None.
"""

from __future__ import annotations

from .partitions import Partition
from .dominoes import Domino, DominoTableau


def duplicate(tableau: DominoTableau) -> DominoTableau:
    """Double every row of the tableau, splitting each domino into two copies.

    A horizontal domino with label k in row i becomes horizontal dominoes
    labelled 2k-1 in row 2i-1 and 2k in row 2i. A vertical domino spanning
    rows (i, i+1) becomes vertical dominoes labelled 2k-1 spanning
    (2i-1, 2i) and 2k spanning (2i+1, 2i+2).
    """
    out = []
    for d in tableau.dominoes:
        if d.horizontal:
            out.append(Domino(2 * d.row - 1, d.col, True, 2 * d.label - 1))
            out.append(Domino(2 * d.row, d.col, True, 2 * d.label))
        else:
            out.append(Domino(2 * d.row - 1, d.col, False, 2 * d.label - 1))
            out.append(Domino(2 * d.row + 1, d.col, False, 2 * d.label))
    shape = Partition([p for part in tableau.shape.parts for p in (part, part)])
    return DominoTableau(shape, out)


def undo_duplicate(tableau: DominoTableau) -> DominoTableau | None:
    """Inverse of ``duplicate`` on its image, None anywhere else."""
    shape = tableau.shape.trimmed().parts
    if len(shape) % 2:
        return None
    for i in range(0, len(shape), 2):
        if shape[i] != shape[i + 1]:
            return None
    half_shape = Partition(shape[0::2])

    by_anchor = {(d.row, d.col): d for d in tableau.dominoes}
    consumed = set()
    halves = []
    for d in tableau.dominoes:
        if d.label % 2 == 0:
            continue
        k = (d.label + 1) // 2
        if d.row % 2 == 0:
            return None  # upper copies anchor on odd rows
        partner_row = d.row + 1 if d.horizontal else d.row + 2
        partner = by_anchor.get((partner_row, d.col))
        if (
            partner is None
            or partner.label != 2 * k
            or partner.horizontal != d.horizontal
        ):
            return None
        consumed.add(partner)
        i = (d.row + 1) // 2
        halves.append(Domino(i, d.col, d.horizontal, k))
    if 2 * len(halves) != len(tableau.dominoes):
        return None  # some even piece was never claimed
    if len(consumed) != len(halves):
        return None

    try:
        candidate = DominoTableau(half_shape, halves)
    except ValueError:
        return None
    if duplicate(candidate).dominoes != tableau.dominoes:
        return None
    return candidate
