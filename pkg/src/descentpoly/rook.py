"""Boards, rook and hit numbers, and the descent/excedence bridge.

A board is a set of cells (i, j) strictly below the diagonal of an n x n
grid, read as "value i at position j".  A full placement of n non-attacking
rooks is then literally a permutation omega with omega_j = i, and the rooks
landing on the board are the marked excedences of omega.  The cycle-rewriting
bijection turns those excedences into marked descents, so hit numbers of
descent boards count permutations by descents — an independent route to
every descent polynomial in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .perms import all_permutations, check_permutation, from_cycles
from .polynomials import IntPolynomial, binom
from .sets import ALL, IntegerSet
from .stats import CapExceededError, DescentQuery, des_set

__all__ = [
    "Board",
    "NotFerrersError",
    "board_from_query",
    "rook_numbers",
    "ferrers_rook_numbers",
    "hit_numbers",
    "hit_numbers_enumerate",
    "hit_polynomial",
    "hit_polynomial_permanent",
    "foata",
    "foata_inverse",
    "u_excedences",
    "row_lengths",
    "height_structure",
    "canonical_distinct_rows",
    "rook_equivalent",
    "hits_via_foata",
]

GENERAL_BOARD_CAP = 12
ENUMERATION_CAP = 10


class NotFerrersError(ValueError):
    """The board does not reduce to a Ferrers shape."""


@dataclass(frozen=True)
class Board:
    """Cells (i, j) with 1 <= j < i <= n inside the n x n grid."""

    n: int
    cells: frozenset

    def __post_init__(self):
        for i, j in self.cells:
            if not 1 <= j < i <= self.n:
                raise ValueError(f"cell {(i, j)} not strictly below the diagonal")

    @property
    def size(self) -> int:
        return len(self.cells)

    def row(self, i: int) -> frozenset:
        return frozenset(j for (r, j) in self.cells if r == i)

    def ascii_grid(self) -> str:
        """Rows top to bottom are values n down to 1."""
        lines = []
        for i in range(self.n, 0, -1):
            lines.append(
                " ".join(
                    "#" if (i, j) in self.cells else "." for j in range(1, self.n + 1)
                )
            )
        return "\n".join(lines)


def board_from_query(n: int, query: DescentQuery) -> Board:
    cells = frozenset(
        (i, j)
        for i in range(2, n + 1)
        for j in range(1, i)
        if query.matches(i, j)
    )
    return Board(n, cells)


def rook_numbers(board: Board, limit: int = GENERAL_BOARD_CAP) -> list[int]:
    """r_0..r_n for an arbitrary board, by column DP over used-row subsets."""
    n = board.n
    if n > limit:
        raise CapExceededError(f"general-board rook numbers capped at n <= {limit}")
    col_masks = [0] * (n + 1)
    for i, j in board.cells:
        col_masks[j] |= 1 << (i - 1)
    # states: used-row bitmask -> count of partial placements
    states = {0: 1}
    for j in range(1, n + 1):
        new = dict(states)  # leave column j empty
        cm = col_masks[j]
        for mask, c in states.items():
            avail = cm & ~mask
            while avail:
                bit = avail & -avail
                key = mask | bit
                new[key] = new.get(key, 0) + c
                avail ^= bit
        states = new
    out = [0] * (n + 1)
    for mask, c in states.items():
        out[bin(mask).count("1")] += c
    return out


def row_lengths(board: Board) -> list[int]:
    """Nonzero row sizes, increasing; raises unless rows nest into a chain."""
    rows = sorted((r for r in map(board.row, range(1, board.n + 1)) if r), key=len)
    for a, b in zip(rows, rows[1:]):
        if not a <= b:
            raise NotFerrersError("row supports do not form a chain")
    return [len(r) for r in rows]


def height_structure(board: Board) -> tuple[list[int], list[int]]:
    """Height and structure vectors of the Ferrers shape the board reduces to.

    The reduction (drop empty rows/columns, mirror, push into the corner)
    only remembers the multiset of row sizes: column j of the normalized
    shape has height #{rows of size >= n+1-j}.
    """
    n = board.n
    lengths = row_lengths(board)
    heights = [sum(1 for l in lengths if l >= n + 1 - j) for j in range(1, n + 1)]
    structure = [h - (j - 1) for j, h in enumerate(heights, start=1)]
    return heights, structure


def ferrers_rook_numbers(heights: list[int]) -> list[int]:
    """r_0..r_n from a weakly increasing height vector, one column at a time."""
    n = len(heights)
    if any(a > b for a, b in zip(heights, heights[1:])):
        raise NotFerrersError("height vector must be weakly increasing")
    r = [1] + [0] * n
    for h in heights:
        new = list(r)
        for k in range(n, 0, -1):
            free = h - (k - 1)
            if free > 0 and r[k - 1]:
                new[k] += r[k - 1] * free
        r = new
    return r


def _hits_from_rooks(r: list[int], n: int) -> list[int]:
    return [
        sum(
            (-1) ** (k - j) * r[k] * factorial(n - k) * binom(k, j)
            for k in range(j, n + 1)
        )
        for j in range(n + 1)
    ]


def hit_numbers(board: Board) -> list[int]:
    """h_0..h_n via rook numbers and the standard inversion identity."""
    n = board.n
    try:
        heights, _ = height_structure(board)
        r = ferrers_rook_numbers(heights)
    except NotFerrersError:
        r = rook_numbers(board)
    return _hits_from_rooks(r, n)


def hit_numbers_enumerate(board: Board, limit: int = ENUMERATION_CAP) -> list[int]:
    """h_0..h_n by walking all of S_n; the oracle for the identity path."""
    n = board.n
    if n > limit:
        raise CapExceededError(f"hit-number enumeration capped at n <= {limit}")
    out = [0] * (n + 1)
    for omega in all_permutations(n):
        out[u_excedences(omega, board)] += 1
    return out


def hit_polynomial(board: Board) -> IntPolynomial:
    return IntPolynomial({s: h for s, h in enumerate(hit_numbers(board))})


def hit_polynomial_permanent(board: Board, limit: int = 14) -> IntPolynomial:
    """Sum over S_n of x^(rooks on board), as a permanent.

    The matrix with x on board cells and 1 elsewhere has permanent
    Sigma_omega x^(hits); the inclusion-exclusion permanent expansion
    evaluates it in 2^n column subsets instead of n! permutations, while
    still being the same sum over all placements.
    """
    n = board.n
    if n > limit:
        raise CapExceededError(f"permanent path capped at n <= {limit}")
    row_masks = [0] * (n + 1)
    for i, j in board.cells:
        row_masks[i] |= 1 << (j - 1)
    x = IntPolynomial.monomial(1)
    total = IntPolynomial()
    for mask in range(1 << n):
        size = bin(mask).count("1")
        sign = (-1) ** (n - size)
        term = IntPolynomial({0: sign})
        for i in range(1, n + 1):
            on_board = bin(mask & row_masks[i]).count("1")
            term = term * (on_board * x + (size - on_board))
            if not term:
                break
        total = total + term
    return total


def u_excedences(omega, board: Board) -> int:
    """Rooks of the placement omega_j = i that land on the board."""
    return sum(1 for j, i in enumerate(omega, start=1) if (i, j) in board.cells)


def foata(omega) -> tuple[int, ...]:
    """Cycle rewriting that turns excedences into descents.

    Write each cycle with its largest element last, order cycles by
    increasing largest element, reverse each cycle, concatenate.
    """
    omega = check_permutation(omega)
    n = len(omega)
    seen = [False] * (n + 1)
    cycs = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cyc.append(cur)
            cur = omega[cur - 1]
        top = cyc.index(max(cyc))
        cyc = cyc[top + 1 :] + cyc[: top + 1]  # rotate largest to the end
        cycs.append(cyc)
    cycs.sort(key=max)
    out = []
    for cyc in cycs:
        out.extend(reversed(cyc))
    return tuple(out)


def foata_inverse(sigma) -> tuple[int, ...]:
    """Cut before each left-to-right maximum; reversed blocks are the cycles."""
    sigma = check_permutation(sigma)
    n = len(sigma)
    blocks = []
    best = 0
    for v in sigma:
        if v > best:
            blocks.append([v])
            best = v
        else:
            blocks[-1].append(v)
    return from_cycles([list(reversed(b)) for b in blocks], n)


def canonical_distinct_rows(board: Board) -> tuple[Board, IntegerSet]:
    """The rook-equivalent Ferrers board with distinct rows, and its tops set.

    Sorting the structure vector weakly decreasing yields heights that rise
    by at most one per column, i.e. distinct row sizes; a row of size i-1
    belongs at value i, which reads off the tops set directly.
    """
    from .sets import explicit_set

    n = board.n
    _, structure = height_structure(board)
    s_sorted = sorted(structure, reverse=True)
    heights = [s + (j - 1) for j, s in enumerate(s_sorted, start=1)]
    lengths = []
    for k in range(1, n + 1):
        at_least_k = heights[n - k] if k <= n else 0
        at_least_k1 = heights[n - k - 1] if k + 1 <= n else 0
        exactly = at_least_k - at_least_k1
        if exactly not in (0, 1):
            raise NotFerrersError("canonical heights do not have distinct rows")
        if exactly:
            lengths.append(k)
    tops = explicit_set(l + 1 for l in lengths)
    canon = board_from_query(n, DescentQuery(tops, ALL))
    return canon, tops


def rook_equivalent(board1: Board, board2: Board) -> bool:
    """Ferrers boards are rook-equivalent iff their structure vectors agree
    as multisets."""
    _, s1 = height_structure(board1)
    _, s2 = height_structure(board2)
    return sorted(s1) == sorted(s2)


def hits_via_foata(n: int, query: DescentQuery) -> IntPolynomial:
    """Descent polynomial as the hit polynomial of the query's board."""
    board = board_from_query(n, query)
    try:
        return hit_polynomial(board)
    except CapExceededError:
        return hit_polynomial_permanent(board)


def descents_match_excedences(omega, query: DescentQuery) -> bool:
    """One permutation's worth of the bridge: descent count of the rewritten
    permutation equals the rook count of the original placement."""
    board = board_from_query(len(omega), query)
    return len(des_set(foata(omega), query)) == u_excedences(omega, board)
