"""Permutations in one-line notation, represented as tuples of 1..n."""

from __future__ import annotations

from itertools import permutations

__all__ = [
    "check_permutation",
    "identity",
    "inverse",
    "complement",
    "reverse",
    "cycles",
    "from_cycles",
    "all_permutations",
    "parse_permutation",
    "format_permutation",
]


def check_permutation(values) -> tuple[int, ...]:
    p = tuple(values)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for pos, val in enumerate(p, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def complement(p: tuple[int, ...]) -> tuple[int, ...]:
    n = len(p)
    return tuple(n + 1 - v for v in p)


def reverse(p: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(reversed(p))


def cycles(p: tuple[int, ...]) -> list[list[int]]:
    """Cycle decomposition; each cycle starts at its smallest unvisited point."""
    n = len(p)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cyc.append(cur)
            cur = p[cur - 1]
        out.append(cyc)
    return out


def from_cycles(cycs, n: int) -> tuple[int, ...]:
    vals = [0] * n
    for cyc in cycs:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            vals[a - 1] = b
    for i, v in enumerate(vals):
        if v == 0:
            vals[i] = i + 1
    return check_permutation(vals)


def all_permutations(n: int):
    return permutations(range(1, n + 1))


def parse_permutation(text: str) -> tuple[int, ...]:
    """Accepts `61437258` (single digits) or a comma list `6,1,4,3,7,2,5,8`."""
    text = text.strip()
    if "," in text:
        vals = [int(tok) for tok in text.split(",")]
    else:
        vals = [int(ch) for ch in text]
    return check_permutation(vals)


def format_permutation(p: tuple[int, ...]) -> str:
    if p and max(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)
