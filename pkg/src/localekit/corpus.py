"""Corpus generators: labeled lattice enumeration, named frames, fuzz inputs.

The lattice corpus is every labeled (distributive) lattice up to a size
bound. Enumeration goes through naturally labeled posets (each new element
is maximal, so index order is a linear extension), filters to lattices,
then closes under all index permutations. Every labeled lattice relabels
to a naturally labeled one along a linear extension, so the permutation
closure of the natural ones is the full labeled count.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from random import Random
from typing import Iterator, Optional

import numpy as np

from .lattice import FinitePoset, FiniteFrame, validate_frame
from . import realline


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_natural_posets(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All posets on 0..n-1 whose index order is a linear extension.

    Yields (up, down) bitmask rows: up[i] = {j : i <= j}, down[i] = {j : j <= i}.
    Element k is added as a maximal element above an arbitrary down-set of the
    poset built so far, which produces each naturally labeled poset exactly once.
    """
    def grow(up: list[int], down: list[int], k: int):
        if k == n:
            yield tuple(up), tuple(down)
            return
        size_mask = (1 << k) - 1
        for candidate in range(size_mask + 1):
            ok = True
            for i in _bits(candidate):
                if down[i] & ~candidate:
                    ok = False
                    break
            if not ok:
                continue
            bit = 1 << k
            new_up = [up[i] | bit if (candidate >> i) & 1 else up[i] for i in range(k)]
            new_up.append(bit)
            new_down = down + [candidate | bit]
            yield from grow(new_up, new_down, k + 1)

    yield from grow([], [], 0)


def _lattice_tables(up, down) -> Optional[tuple[list[list[int]], list[list[int]]]]:
    """Meet/join tables from bitmask rows, or None when some pair has no inf/sup."""
    n = len(up)
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            lows = down[i] & down[j]
            m = next((x for x in _bits(lows) if down[x] & lows == lows), None)
            if m is None:
                return None
            ups = up[i] & up[j]
            v = next((x for x in _bits(ups) if up[x] & ups == ups), None)
            if v is None:
                return None
            meet[i][j] = meet[j][i] = m
            join[i][j] = join[j][i] = v
    return meet, join


def _is_bounded_lattice(up, down) -> Optional[tuple[list[list[int]], list[list[int]]]]:
    n = len(up)
    full = (1 << n) - 1
    if not any(up[i] == full for i in range(n)):
        return None
    if not any(down[i] == full for i in range(n)):
        return None
    return _lattice_tables(up, down)


def _is_distributive(tables) -> bool:
    meet, join = tables
    n = len(meet)
    for a in range(n):
        ma = meet[a]
        for b in range(n):
            jb = join[b]
            mab = ma[b]
            for c in range(n):
                if ma[jb[c]] != join[mab][ma[c]]:
                    return False
    return True


def _permuted_rows(up: tuple[int, ...], perm) -> tuple[int, ...]:
    n = len(up)
    rows = [0] * n
    for i in range(n):
        acc = 0
        m = up[i]
        for j in _bits(m):
            acc |= 1 << perm[j]
        rows[perm[i]] = acc
    return tuple(rows)


def _labeled_closure(natural_rows: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    seen = set()
    for rows in natural_rows:
        for perm in permutations(range(n)):
            seen.add(_permuted_rows(rows, perm))
    return sorted(seen)


def labeled_lattice_rows(n: int, distributive_only: bool = False) -> list[tuple[int, ...]]:
    """Every labeled (optionally distributive) lattice on 0..n-1, as up-mask rows."""
    natural = []
    for up, down in iter_natural_posets(n):
        tables = _is_bounded_lattice(up, down)
        if tables is None:
            continue
        if distributive_only and not _is_distributive(tables):
            continue
        natural.append(up)
    return _labeled_closure(natural, n)


def rows_to_poset(rows: tuple[int, ...]) -> FinitePoset:
    n = len(rows)
    leq = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in _bits(rows[i]):
            leq[i, j] = True
    return FinitePoset(leq)


def iter_distributive_frames(max_size: int) -> Iterator[tuple[str, FiniteFrame]]:
    """The labeled corpus: every labeled distributive lattice with <= max_size
    elements, validated as a frame, with a stable per-item name."""
    for n in range(1, max_size + 1):
        for k, rows in enumerate(labeled_lattice_rows(n, distributive_only=True)):
            yield f"dist{n}:{k:04d}", validate_frame(rows_to_poset(rows))


# ---------------------------------------------------------------------------
# Named instances


def chain_poset(n: int) -> FinitePoset:
    return FinitePoset.from_relation(n, [(i, i + 1) for i in range(n - 1)])


def chain(n: int) -> FiniteFrame:
    """The n-element chain 0 < 1 < ... < n-1."""
    return validate_frame(chain_poset(n))


def boolean_cube(k: int) -> FiniteFrame:
    """Powerset of k atoms: the 2^k-element Boolean frame."""
    n = 1 << k
    leq = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            leq[i, j] = i & ~j == 0
    return validate_frame(FinitePoset(leq))


def diamond_poset() -> FinitePoset:
    """M3: three incomparable atoms under a common top (not distributive)."""
    return FinitePoset.from_relation(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def pentagon_poset() -> FinitePoset:
    """N5 (a lattice, not distributive)."""
    return FinitePoset.from_relation(5, [(0, 1), (1, 2), (0, 3), (2, 4), (3, 4)])


def hexagon_poset() -> FinitePoset:
    """Bounded poset where the two atoms have no supremum (not a lattice)."""
    return FinitePoset.from_relation(
        6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)])


def named_frames() -> dict[str, FiniteFrame]:
    """The curated corpus used alongside the exhaustive one."""
    from .lattice import product_frame, regular_pair_frame

    frames = {
        "chain1": chain(1),
        "chain2": chain(2),
        "chain3": chain(3),
        "chain4": chain(4),
        "chain5": chain(5),
        "bool1": boolean_cube(1),
        "bool2": boolean_cube(2),
        "bool3": boolean_cube(3),
        "grid2x3": product_frame(chain(2), chain(3)),
        "pairs(chain3)": regular_pair_frame(chain(3)).frame,
        "pairs(bool2)": regular_pair_frame(boolean_cube(2)).frame,
        "bool2xchain3": product_frame(boolean_cube(2), chain(3)),
    }
    return frames


# ---------------------------------------------------------------------------
# Real-line fuzz corpus


def random_rational(rng: Random, max_den: int = 100, span: int = 12) -> Fraction:
    den = rng.randint(1, max_den)
    num = rng.randint(-span * den, span * den)
    return Fraction(num, den)


def random_open(rng: Random, max_components: int = 6, max_den: int = 100,
                ray_chance: float = 0.15) -> realline.RationalOpen:
    """A random finite union of open intervals with rational endpoints."""
    k = rng.randint(0, max_components)
    if k == 0:
        return realline.RationalOpen.empty()
    cuts = sorted({random_rational(rng, max_den) for _ in range(2 * k)})
    intervals = []
    for lo, hi in zip(cuts[::2], cuts[1::2]):
        if lo < hi:
            intervals.append((realline.ExtRat(lo), realline.ExtRat(hi)))
    if intervals and rng.random() < ray_chance:
        intervals[0] = (realline.NEG_INF, intervals[0][1])
    if intervals and rng.random() < ray_chance:
        intervals[-1] = (intervals[-1][0], realline.POS_INF)
    if not intervals:
        return realline.RationalOpen.empty()
    return realline.normalize(intervals)


def random_regular_open(rng: Random, max_components: int = 6,
                        max_den: int = 100) -> realline.RationalOpen:
    return realline.regularize(random_open(rng, max_components, max_den))


def random_pair(rng: Random, max_components: int = 4,
                max_den: int = 100) -> realline.KRealPair:
    """A random valid pair: an open set under a regular superset."""
    first = random_open(rng, max_components, max_den)
    second = realline.regularize(realline.union(first, random_open(rng, max_components, max_den)))
    return realline.KRealPair(first, second)


def sample_points_outside(rng: Random, u: realline.RationalOpen, count: int,
                          max_den: int = 100) -> list[Fraction]:
    """Rational points x with x not in u and x != 0 (empty when u is the line)."""
    if u == realline.RationalOpen.reals():
        return []
    points: list[Fraction] = []
    attempts = 0
    while len(points) < count and attempts < 200 * count:
        attempts += 1
        x = random_rational(rng, max_den, span=15)
        if x == 0 or realline.contains_point(u, x):
            continue
        points.append(x)
    return points
