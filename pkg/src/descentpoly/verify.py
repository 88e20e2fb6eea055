"""Cross-checking sweeps: every quantity computed at least two ways.

Each sweep raises VerificationError (with a machine-readable payload) on
the first disagreement and returns the number of cases checked otherwise.
The brute-force side of the big sweeps is vectorized with numpy: descent
pairs of each permutation (or word) are recorded once as a multiplicity
matrix, then every (tops, bottoms) subset pair is a couple of matrix
products away.
"""

from __future__ import annotations

import random
from itertools import permutations

import numpy as np

from . import closed_forms, configurations, hypergeom, rook, stats, words
from .sets import ALL, explicit_set
from .stats import DescentQuery

__all__ = [
    "VerificationError",
    "sweep_formulas",
    "sweep_configs",
    "sweep_words",
    "sweep_rook",
    "sweep_foata",
    "sweep_hypergeom",
    "SUITES",
    "run_suite",
]


class VerificationError(AssertionError):
    def __init__(self, message: str, payload: dict):
        super().__init__(message)
        self.payload = payload


def _pair_matrix(seqs, m: int) -> np.ndarray:
    """D[k, a-1, b-1] = multiplicity of the adjacent pair (a, b), a > b."""
    d = np.zeros((len(seqs), m, m), dtype=np.int64)
    for k, seq in enumerate(seqs):
        for a, b in zip(seq, seq[1:]):
            if a > b:
                d[k, a - 1, b - 1] += 1
    return d


def _subsets(m: int):
    """All subsets of [m] as (mask vector, Explicit set) pairs."""
    out = []
    for bits in range(1 << m):
        vec = np.array([(bits >> i) & 1 for i in range(m)], dtype=np.int64)
        out.append((vec, explicit_set(i + 1 for i in range(m) if (bits >> i) & 1)))
    return out


def _brute_distributions(d: np.ndarray, m: int, xvec: np.ndarray, yvecs: np.ndarray):
    """Descent-count histograms for one tops mask against many bottoms masks.

    Returns an array H with H[y, s] = number of sequences having s matching
    descents under (xvec, yvecs[y]).
    """
    per_bottom = np.tensordot(d, xvec, axes=([1], [0]))  # (K, m)
    s_matrix = per_bottom @ yvecs.T  # (K, #Y)
    max_s = int(s_matrix.max(initial=0))
    hist = np.zeros((yvecs.shape[0], max_s + 1), dtype=np.int64)
    for y in range(yvecs.shape[0]):
        hist[y] = np.bincount(s_matrix[:, y], minlength=max_s + 1)
    return hist


def sweep_formulas(max_n: int) -> int:
    """Both closed formulas against brute force, all (X, Y) pairs, all s."""
    checked = 0
    for n in range(1, max_n + 1):
        seqs = list(permutations(range(1, n + 1)))
        d = _pair_matrix(seqs, n)
        subsets = _subsets(n)
        yvecs = np.stack([vec for vec, _ in subsets])
        for xvec, xset in subsets:
            hist = _brute_distributions(d, n, xvec, yvecs)
            for yidx, (_, yset) in enumerate(subsets):
                for s in range(n + 1):
                    brute = int(hist[yidx, s]) if s < hist.shape[1] else 0
                    f1 = closed_forms.formula_alpha_beta(n, s, xset, yset)
                    f2 = closed_forms.formula_beta_beta(n, s, xset, yset)
                    if not (f1 == f2 == brute):
                        raise VerificationError(
                            "closed formulas disagree with brute force",
                            {
                                "n": n,
                                "s": s,
                                "tops": str(xset),
                                "bottoms": str(yset),
                                "formula_alpha_beta": f1,
                                "formula_beta_beta": f2,
                                "brute": brute,
                            },
                        )
                    checked += 1
    return checked


def _random_subset(n: int, rng: random.Random):
    return explicit_set(i for i in range(1, n + 1) if rng.random() < 0.5)


def sweep_configs(max_n: int, pairs: int = 50, seed: int = 0) -> int:
    """Involution and counting checks on signed configurations."""
    rng = random.Random(seed)
    checked = 0
    for _ in range(pairs):
        n = rng.randint(1, max_n)
        xset, yset = _random_subset(n, rng), _random_subset(n, rng)
        query = DescentQuery(xset, yset)
        brute = stats.brute_poly(n, query)
        for flavor in configurations.Flavor:
            for s in range(n + 2):
                signed_total = 0
                fixed_total = 0
                for r in range(n + 2):
                    configs = configurations.enumerate_configs(
                        flavor, s, r, xset, yset, n=n
                    )
                    staged = configurations.staged_count(
                        flavor, s, r, xset, yset, n=n
                    )
                    if len(configs) != staged:
                        raise VerificationError(
                            "staged count disagrees with enumeration",
                            {
                                "flavor": flavor.value,
                                "n": n,
                                "s": s,
                                "r": r,
                                "tops": str(xset),
                                "bottoms": str(yset),
                                "enumerated": len(configs),
                                "staged": staged,
                            },
                        )
                    for c in configs:
                        image = configurations.involution(c)
                        back = configurations.involution(image)
                        if back != c:
                            raise VerificationError(
                                "involution is not self-inverse",
                                {"configuration": str(c), "image": str(image)},
                            )
                        if image != c:
                            if abs(image.minus_count - c.minus_count) != 1:
                                raise VerificationError(
                                    "involution does not reverse sign",
                                    {"configuration": str(c), "image": str(image)},
                                )
                        else:
                            fixed_total += 1
                        signed_total += c.sign
                        checked += 1
                # everything cancels except the plus-signed fixed points
                count = brute.coeff(s)
                if signed_total != count:
                    raise VerificationError(
                        "signed configuration sum does not telescope",
                        {
                            "flavor": flavor.value,
                            "n": n,
                            "s": s,
                            "tops": str(xset),
                            "bottoms": str(yset),
                            "signed_total": signed_total,
                            "expected": count,
                        },
                    )
                if fixed_total != count:
                    raise VerificationError(
                        "fixed points do not match the descent count",
                        {
                            "flavor": flavor.value,
                            "n": n,
                            "s": s,
                            "tops": str(xset),
                            "bottoms": str(yset),
                            "fixed_points": fixed_total,
                            "brute": count,
                        },
                    )
    return checked


def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def sweep_words(max_n: int) -> int:
    """Both word formulas against enumeration, all compositions and pairs."""
    checked = 0
    for n in range(1, max_n + 1):
        for rho in _compositions(n):
            m = len(rho)
            seqs = list(words.enumerate_rearrangements(rho))
            d = _pair_matrix(seqs, m)
            subsets = _subsets(m)
            yvecs = np.stack([vec for vec, _ in subsets])
            for xvec, xset in subsets:
                hist = _brute_distributions(d, m, xvec, yvecs)
                for yidx, (_, yset) in enumerate(subsets):
                    for s in range(n + 1):
                        brute = int(hist[yidx, s]) if s < hist.shape[1] else 0
                        f1 = words.word_formula_1(rho, s, xset, yset)
                        f2 = words.word_formula_2(rho, s, xset, yset)
                        if not (f1 == f2 == brute):
                            raise VerificationError(
                                "word formulas disagree with enumeration",
                                {
                                    "rho": list(rho),
                                    "s": s,
                                    "tops": str(xset),
                                    "bottoms": str(yset),
                                    "word_formula_1": f1,
                                    "word_formula_2": f2,
                                    "brute": brute,
                                },
                            )
                        checked += 1
    return checked


def sweep_rook(max_n: int, pairs: int = 100, seed: int = 0) -> int:
    """Hit numbers against brute force, plus the distinct-rows reduction."""
    rng = random.Random(seed)
    checked = 0
    for _ in range(pairs):
        n = rng.randint(1, max_n)
        xset, yset = _random_subset(n, rng), _random_subset(n, rng)
        query = DescentQuery(xset, yset)
        brute = stats.brute_poly(n, query)
        hits = rook.hits_via_foata(n, query)
        if hits != brute:
            raise VerificationError(
                "hit polynomial disagrees with brute force",
                {
                    "n": n,
                    "tops": str(xset),
                    "bottoms": str(yset),
                    "hits": hits.coeff_list(),
                    "brute": brute.coeff_list(),
                },
            )
        board = rook.board_from_query(n, query)
        _, canon_tops = rook.canonical_distinct_rows(board)
        reduced = stats.brute_poly(n, DescentQuery(canon_tops, ALL))
        if reduced != brute:
            raise VerificationError(
                "distinct-rows reduction changes the polynomial",
                {
                    "n": n,
                    "tops": str(xset),
                    "bottoms": str(yset),
                    "reduced_tops": str(canon_tops),
                },
            )
        checked += 1
    return checked


def sweep_foata(max_n: int, queries: int = 20, seed: int = 0) -> int:
    """Round trips and the descent/excedence bridge over all of S_n."""
    rng = random.Random(seed)
    checked = 0
    for n in range(1, max_n + 1):
        tests = [
            DescentQuery(_random_subset(n, rng), _random_subset(n, rng),
                         _random_subset(n, rng))
            for _ in range(queries)
        ]
        for omega in permutations(range(1, n + 1)):
            sigma = rook.foata(omega)
            if rook.foata_inverse(sigma) != omega:
                raise VerificationError(
                    "cycle rewriting does not round-trip",
                    {"omega": list(omega), "image": list(sigma)},
                )
            for query in tests:
                board = rook.board_from_query(n, query)
                exc = rook.u_excedences(omega, board)
                des = len(stats.des_set(sigma, query))
                if exc != des:
                    raise VerificationError(
                        "descent/excedence bridge broken",
                        {
                            "omega": list(omega),
                            "tops": str(query.tops),
                            "bottoms": str(query.bottoms),
                            "diffs": str(query.diffs),
                            "excedences": exc,
                            "descents": des,
                        },
                    )
                checked += 1
    return checked


def sweep_hypergeom(max_param: int = 5) -> int:
    """Summation formula grid, the mod-(k+1) identity, and balanced profiles."""
    checked = 0
    for a in range(-max_param, 1):
        for b in range(-max_param, 1):
            for n in range(max_param + 1):
                for c in range(-2 * max_param, max_param + 1):
                    try:
                        lhs = hypergeom.pfaff_saalschutz_lhs(n, a, b, c)
                        rhs = hypergeom.pfaff_saalschutz_rhs(n, a, b, c)
                    except hypergeom.IllPosedSeriesError:
                        continue
                    if lhs != rhs:
                        raise VerificationError(
                            "summation formula fails",
                            {"n": n, "a": a, "b": b, "c": c,
                             "lhs": str(lhs), "rhs": str(rhs)},
                        )
                    checked += 1
    for k in range(1, 3):
        for m in range(1, 3):
            for s in range(k * m + 1):
                left, right, count = hypergeom.verify_cor35(k, m, s)
                if not (left == right == count):
                    raise VerificationError(
                        "mod-(k+1) identity fails",
                        {"k": k, "m": m, "s": s, "left": str(left),
                         "right": str(right), "count": count},
                    )
                checked += 1
    profiles = []
    for k in (1, 2):
        for u in _tuples(k, 0, 3, weakly_increasing=True):
            for v in _tuples(k, 1, 3):
                profiles.append(hypergeom.UVProfile(u, v))
    for profile in profiles:
        n = profile.min_n()
        for s in range(n + 1):
            left, right, count = hypergeom.verify_balanced_identity(profile, n, s)
            if not (left == right == count):
                raise VerificationError(
                    "balanced transformation fails",
                    {"u": list(profile.u), "v": list(profile.v), "n": n,
                     "s": s, "left": str(left), "right": str(right),
                     "count": count},
                )
            checked += 1
    return checked


def _tuples(k, lo, hi, weakly_increasing=False):
    def gen(prefix):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        start = prefix[-1] if (weakly_increasing and prefix) else lo
        for v in range(start, hi + 1):
            yield from gen(prefix + [v])

    yield from gen([])


SUITES = {
    "formulas": lambda max_n, seed: sweep_formulas(max_n),
    "configs": lambda max_n, seed: sweep_configs(max_n, seed=seed),
    "words": lambda max_n, seed: sweep_words(max_n),
    "rook": lambda max_n, seed: sweep_rook(max_n, seed=seed),
    "foata": lambda max_n, seed: sweep_foata(max_n, seed=seed),
    "hypergeom": lambda max_n, seed: sweep_hypergeom(max_n),
}


def run_suite(name: str, max_n: int, seed: int = 0) -> dict:
    if name == "all":
        return {key: fn(max_n, seed) for key, fn in SUITES.items()}
    return {name: SUITES[name](max_n, seed)}
