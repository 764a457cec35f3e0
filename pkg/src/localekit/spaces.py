"""Finite topological spaces, their specialization preorder, and symmetry.

Point sets are bitmasks; a space is the family of its open masks. Finite
topologies correspond exactly to preorders (opens are the up-sets of
specialization), which both the enumerator and the checks below exploit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterator, Optional

import numpy as np

from .common import (TOPOLOGY_POINT_LIMIT, BudgetExceeded, EquivalenceViolation,
                     TheoremViolation)
from .lattice import FinitePoset, FiniteFrame, validate_frame
from .separation import (ConditionVerdict, SeparationReport, is_symmetric,
                         is_weakly_subfit)


class InvalidTopology(ValueError):
    """The open-set family violates the topology axioms."""


class NotT0(ValueError):
    """The check requires a T_0 space (antisymmetric specialization)."""


UC_POINT_LIMIT = 8  # unions-of-closed carrier is 2^points in the worst case


def bitstring(mask: int, points: int) -> str:
    return "".join("1" if mask >> p & 1 else "0" for p in range(points))


class FiniteSpace:
    """A finite topological space: point count plus the family of open masks."""

    def __init__(self, points: int, opens):
        full = (1 << points) - 1
        family = tuple(sorted(set(int(o) for o in opens)))
        if any(o < 0 or o > full for o in family):
            raise InvalidTopology("open set out of range")
        if 0 not in family or full not in family:
            raise InvalidTopology("topology must contain the empty and full sets")
        members = set(family)
        for a in family:
            for b in family:
                if a | b not in members:
                    raise InvalidTopology(
                        f"not closed under union: {bitstring(a, points)} ∪ {bitstring(b, points)}")
                if a & b not in members:
                    raise InvalidTopology(
                        f"not closed under intersection: {bitstring(a, points)} ∩ {bitstring(b, points)}")
        self.points = points
        self.opens = family
        self.full = full

    @cached_property
    def closed_sets(self) -> tuple[int, ...]:
        return tuple(sorted(self.full ^ o for o in self.opens))

    def closure_of(self, mask: int) -> int:
        return reduce(lambda acc, c: acc & c,
                      (c for c in self.closed_sets if mask & ~c == 0), self.full)

    def interior_of(self, mask: int) -> int:
        return reduce(lambda acc, o: acc | o,
                      (o for o in self.opens if o & ~mask == 0), 0)

    def __repr__(self):
        return (f"FiniteSpace({self.points}, "
                f"[{','.join(bitstring(o, self.points) for o in self.opens)}])")


def sierpinski() -> FiniteSpace:
    """Two points with exactly one of the singletons open."""
    return FiniteSpace(2, (0, 2, 3))


def discrete(points: int) -> FiniteSpace:
    return FiniteSpace(points, range(1 << points))


def indiscrete(points: int) -> FiniteSpace:
    return FiniteSpace(points, (0, (1 << points) - 1))


def specialization(space: FiniteSpace):
    """x <= y iff x lies in the closure of {y}; reflexive and transitive.

    Equivalently every open containing x contains y, which is how the
    matrix is computed; reflexivity and transitivity are then re-checked.
    """
    n = space.points
    rel = np.ones((n, n), dtype=bool)
    for o in space.opens:
        for x in range(n):
            if o >> x & 1:
                for y in range(n):
                    if not o >> y & 1:
                        rel[x, y] = False
    if not rel.diagonal().all():
        raise AssertionError("specialization lost reflexivity")
    if ((rel @ rel) & ~rel).any():
        raise AssertionError("specialization lost transitivity")
    rel.flags.writeable = False
    return rel


@dataclass(frozen=True)
class SpaceVerdict:
    ok: bool
    witness: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def is_symmetric_space(space: FiniteSpace) -> SpaceVerdict:
    """Specialization is symmetric (an equivalence relation)."""
    rel = specialization(space)
    bad = rel & ~rel.T
    if bad.any():
        x, y = (int(v) for v in np.argwhere(bad)[0])
        return SpaceVerdict(False, (x, y))
    return SpaceVerdict(True)


def is_t0(space: FiniteSpace) -> bool:
    rel = specialization(space)
    return not (rel & rel.T & ~np.eye(space.points, dtype=bool)).any()


class UnionsOfClosed:
    """All unions of closed subsets, a frame and a coframe under inclusion.

    In a finite space this is exactly the closed-set lattice, but the
    carrier is built genuinely as the union closure and all structure is
    re-verified: closure under intersections, both distributivity laws, and
    the anti-isomorphism with the saturated sets via complement.
    """

    def __init__(self, space: FiniteSpace):
        elements = set(space.closed_sets)
        frontier = list(elements)
        while frontier:
            fresh = []
            for a in frontier:
                for b in list(elements):
                    u = a | b
                    if u not in elements:
                        elements.add(u)
                        fresh.append(u)
            frontier = fresh
        for a in elements:
            for b in elements:
                if a & b not in elements:
                    raise AssertionError("unions of closed sets not meet-closed")
        self.space = space
        self.elements = tuple(sorted(elements, key=lambda m: (m.bit_count(), m)))
        self.index = {m: i for i, m in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    @cached_property
    def as_frame(self) -> FiniteFrame:
        k = len(self.elements)
        arr = np.array(self.elements, dtype=np.int64)
        leq = (arr[:, None] & ~arr[None, :]) == 0
        labels = [bitstring(m, self.space.points) for m in self.elements]
        frame = validate_frame(FinitePoset(leq), labels)
        if frame.labels != tuple(labels):
            raise AssertionError("union-closure carrier left canonical order")
        # Lattice operations must be the set-theoretic ones.
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                if self.elements[int(frame.join[i, j])] != a | b:
                    raise AssertionError("join is not set union")
                if self.elements[int(frame.meet[i, j])] != a & b:
                    raise AssertionError("meet is not set intersection")
        return frame

    def is_boolean(self) -> SpaceVerdict:
        """Every element complemented; witnesses the first that is not."""
        for i, a in enumerate(self.elements):
            if self.space.full ^ a not in self.index:
                return SpaceVerdict(False, (i, i))
        return SpaceVerdict(True)

    def saturated_anti_isomorphism_ok(self) -> bool:
        """Complements of the carrier are exactly the saturated sets."""
        saturated = {self.space.full}
        frontier = set(self.space.opens)
        while frontier:
            saturated |= frontier
            frontier = {a & b for a in saturated for b in self.space.opens} - saturated
        return {self.space.full ^ e for e in self.elements} == saturated


def uc_lattice(space: FiniteSpace, budget: Optional[int] = None) -> UnionsOfClosed:
    limit = UC_POINT_LIMIT if budget is None else budget
    if space.points > limit:
        raise BudgetExceeded(f"{space.points} points exceed the unions-of-closed budget {limit}")
    uc = UnionsOfClosed(space)
    if not uc.saturated_anti_isomorphism_ok():
        raise AssertionError("complementation fails to reach the saturated sets")
    return uc


def omega(space: FiniteSpace) -> FiniteFrame:
    """The open-set lattice as a frame; labels are membership bitstrings."""
    opens = tuple(sorted(space.opens, key=lambda m: (m.bit_count(), m)))
    arr = np.array(opens, dtype=np.int64)
    leq = (arr[:, None] & ~arr[None, :]) == 0
    labels = [bitstring(o, space.points) for o in opens]
    return validate_frame(FinitePoset(leq), labels)


@dataclass(frozen=True)
class SpacePropositionReport:
    """Five equivalent conditions on a space, evaluated independently."""

    holds: bool
    conditions: tuple[ConditionVerdict, ...]


def space_proposition_check(space: FiniteSpace,
                            budget: Optional[int] = None) -> SpacePropositionReport:
    """Symmetry of the space against four lattice-side readings.

    (1) the specialization preorder is symmetric; (2) the unions of closed
    sets form a Boolean algebra; (3) that lattice is weakly subfit, checked
    through the same abstract-frame code path the locale side uses; (4)
    every proper open subspace sits inside a proper union of closed sets;
    (5) the same for dense proper opens. All five verdicts must agree.
    """
    sym = is_symmetric_space(space)
    c1 = ConditionVerdict("specialization-symmetric", sym.ok,
                          None if sym.ok else f"pair {sym.witness}")
    uc = uc_lattice(space, budget)
    boolean = uc.is_boolean()
    c2 = ConditionVerdict(
        "unions-of-closed-boolean", boolean.ok,
        None if boolean.ok else bitstring(uc.elements[boolean.witness[0]], space.points))
    weak = is_weakly_subfit(uc.as_frame)
    c3 = ConditionVerdict("unions-of-closed-weakly-subfit", weak.holds,
                          weak.witness_labels[0] if weak.witness_labels else None)

    proper = [e for e in uc.elements if e != space.full]

    def covered(o: int) -> bool:
        return any(o & ~t == 0 for t in proper)

    w4 = next((o for o in space.opens if o != space.full and not covered(o)), None)
    c4 = ConditionVerdict("proper-opens-covered", w4 is None,
                          None if w4 is None else bitstring(w4, space.points))
    w5 = next((o for o in space.opens
               if o != space.full and space.closure_of(o) == space.full
               and not covered(o)), None)
    c5 = ConditionVerdict("dense-proper-opens-covered", w5 is None,
                          None if w5 is None else bitstring(w5, space.points))

    conditions = (c1, c2, c3, c4, c5)
    verdicts = {c.holds for c in conditions}
    if len(verdicts) != 1:
        raise EquivalenceViolation(
            f"space conditions disagree on {space!r}: "
            f"{[(c.name, c.holds, c.witness) for c in conditions]}")
    return SpacePropositionReport(c1.holds, conditions)


@dataclass(frozen=True)
class TdRemarkReport:
    """Space symmetry against locale symmetry of the open-set frame."""

    space_symmetric: SpaceVerdict
    locale_symmetric: SeparationReport

    @property
    def agree(self) -> bool:
        return self.space_symmetric.ok == self.locale_symmetric.holds


def td_remark_check(space: FiniteSpace) -> TdRemarkReport:
    """For T_0 spaces, the space is symmetric iff its open-set frame is.

    Refuses non-T_0 inputs: the subspace/sublocale correspondence behind the
    statement needs the T_D property, which finite T_0 spaces satisfy.
    """
    if not is_t0(space):
        raise NotT0("the statement is checked for T_0 spaces only")
    sym = is_symmetric_space(space)
    loc = is_symmetric(omega(space))
    report = TdRemarkReport(sym, loc)
    if not report.agree:
        raise TheoremViolation(
            f"space symmetry {sym.ok} but locale symmetry {loc.holds} on {space!r}")
    return report


def space_from_preorder(rows: tuple[int, ...]) -> FiniteSpace:
    """The Alexandrov topology of a preorder: opens are the up-sets."""
    n = len(rows)
    opens = [m for m in range(1 << n)
             if all(rows[i] & ~m == 0 for i in range(n) if m >> i & 1)]
    return FiniteSpace(n, opens)


def enumerate_topologies(points: int, t0_only: bool = False,
                         budget: Optional[int] = None) -> Iterator[FiniteSpace]:
    """Every topology on labeled points, via the preorder correspondence.

    Iterates all reflexive transitive relations (ascending bit patterns, so
    the stream is deterministic) and emits their up-set topologies; the
    t0_only flag keeps antisymmetric relations only.
    """
    limit = TOPOLOGY_POINT_LIMIT if budget is None else budget
    if points > limit:
        raise BudgetExceeded(f"{points} points exceed the topology budget {limit}")
    if points == 0:
        yield FiniteSpace(0, (0,))
        return
    slots = [(i, j) for i in range(points) for j in range(points) if i != j]
    for pattern in range(1 << len(slots)):
        rows = [1 << i for i in range(points)]
        for k, (i, j) in enumerate(slots):
            if pattern >> k & 1:
                rows[i] |= 1 << j
        transitive = True
        for i in range(points):
            reach = rows[i]
            for j in range(points):
                if reach >> j & 1 and rows[j] & ~reach:
                    transitive = False
                    break
            if not transitive:
                break
        if not transitive:
            continue
        if t0_only and any(rows[i] >> j & 1 and rows[j] >> i & 1
                           for i in range(points) for j in range(points) if i != j):
            continue
        yield space_from_preorder(tuple(rows))
