"""Exact calculus on finite unions of rational intervals of the real line.

This is the representable fragment of the open-set lattice of the reals:
finite unions of open intervals with endpoints in Q ∪ {-inf, +inf}. All
arithmetic is exact (fractions), so interior/closure/pseudocomplement and
the certificate operations below decide membership with no rounding.

Infinite meets never materialize; the operations that would need them
return certificates instead: an exclusion stage for a point outside the
limit, or a boundary report for the one point that belongs to every stage
but not to the limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

RatLike = Union[int, Fraction, str, "ExtRat"]


class EmptyInterval(ValueError):
    """An interval literal with lower endpoint >= upper endpoint."""


class NotRegular(Exception):
    """Input open set is not regular; carries the regularization as witness."""

    def __init__(self, regularization):
        self.regularization = regularization
        super().__init__(f"set is not regular open; its regularization is {regularization}")


class PointInU(ValueError):
    """No exclusion certificate exists: the point belongs to the set."""


class ZeroPoint(ValueError):
    """Zero belongs to every stage; no exclusion certificate exists for it."""


class PointInside(ValueError):
    """The point already belongs to the requested coordinate."""


class InvalidPair(ValueError):
    """Pair violates its contract (second not regular, or first not below it)."""


class ExtRat:
    """A rational number extended with -inf and +inf, totally ordered.

    Stored as a reduced num/den pair with den >= 0; den == 0 encodes the
    infinities (num is the sign). No arithmetic across infinities is
    defined, only negation and comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, value: RatLike = 0, den: Optional[int] = None):
        if isinstance(value, ExtRat):
            self.num, self.den = value.num, value.den
            return
        if isinstance(value, str):
            parsed = parse_extrat(value)
            self.num, self.den = parsed.num, parsed.den
            return
        if den is not None:
            if den == 0:
                if value not in (1, -1):
                    raise ValueError("infinite endpoints are (+-1, 0)")
                self.num, self.den = int(value), 0
                return
            value = Fraction(value, den)
        frac = Fraction(value)
        self.num, self.den = frac.numerator, frac.denominator

    @property
    def is_finite(self) -> bool:
        return self.den != 0

    @property
    def fraction(self) -> Fraction:
        if self.den == 0:
            raise ValueError("infinite endpoint has no rational value")
        return Fraction(self.num, self.den)

    def _side(self) -> int:
        # -1 for -inf, +1 for +inf, 0 for finite values
        return 0 if self.den else (1 if self.num > 0 else -1)

    def _cmp(self, other: "ExtRat") -> int:
        a, b = self._side(), other._side()
        if a != b:
            return -1 if a < b else 1
        if a != 0:
            return 0
        lhs = self.num * other.den
        rhs = other.num * self.den
        return (lhs > rhs) - (lhs < rhs)

    def __eq__(self, other):
        return isinstance(other, ExtRat) and self.num == other.num and self.den == other.den

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __neg__(self):
        out = ExtRat.__new__(ExtRat)
        out.num, out.den = -self.num, self.den
        return out

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"ExtRat({format_extrat(self)!r})"


def _make_inf(sign: int) -> ExtRat:
    out = ExtRat.__new__(ExtRat)
    out.num, out.den = sign, 0
    return out


NEG_INF = _make_inf(-1)
POS_INF = _make_inf(1)


def parse_extrat(text: str) -> ExtRat:
    text = text.strip()
    if text in ("inf", "+inf"):
        return POS_INF
    if text == "-inf":
        return NEG_INF
    return ExtRat(Fraction(text))


def format_extrat(value: ExtRat) -> str:
    if not value.is_finite:
        return "inf" if value.num > 0 else "-inf"
    return str(value.fraction)


def _as_ext(value: RatLike) -> ExtRat:
    return value if isinstance(value, ExtRat) else ExtRat(value)


Component = tuple[ExtRat, ExtRat]


@dataclass(frozen=True)
class RationalOpen:
    """Finite union of open intervals in canonical form.

    Components are sorted, pairwise disjoint, and merged only when they
    genuinely overlap as point sets: (0,1) and (1,2) stay distinct because
    their union is not an interval.
    """

    components: tuple[Component, ...]

    @classmethod
    def empty(cls) -> "RationalOpen":
        return cls(())

    @classmethod
    def reals(cls) -> "RationalOpen":
        return cls(((NEG_INF, POS_INF),))

    @property
    def is_empty(self) -> bool:
        return not self.components

    def __str__(self):
        return format_open_set(self)


@dataclass(frozen=True)
class RationalClosed:
    """Finite union of closed intervals (points allowed) in canonical form.

    Touching components are merged, so the component list is pairwise
    separated. Infinite endpoints mean an unbounded side, never a point.
    """

    components: tuple[Component, ...]

    @classmethod
    def empty(cls) -> "RationalClosed":
        return cls(())

    @classmethod
    def reals(cls) -> "RationalClosed":
        return cls(((NEG_INF, POS_INF),))

    def __str__(self):
        if not self.components:
            return "empty"
        return ";".join(f"[{format_extrat(lo)},{format_extrat(hi)}]"
                        for lo, hi in self.components)


def normalize(intervals: Iterable[tuple[RatLike, RatLike]]) -> RationalOpen:
    """Canonical form of a union of open intervals; the point set is unchanged."""
    comps: list[Component] = []
    for lo, hi in intervals:
        lo, hi = _as_ext(lo), _as_ext(hi)
        if not lo < hi:
            raise EmptyInterval(f"({format_extrat(lo)},{format_extrat(hi)}) is empty")
        comps.append((lo, hi))
    comps.sort(key=_component_key)
    merged: list[Component] = []
    for lo, hi in comps:
        if merged and lo < merged[-1][1]:
            last_lo, last_hi = merged[-1]
            merged[-1] = (last_lo, hi if last_hi < hi else last_hi)
        else:
            merged.append((lo, hi))
    return RationalOpen(tuple(merged))


def _component_key(comp: Component):
    lo, hi = comp
    return (lo._side(), Fraction(lo.num, lo.den) if lo.den else 0,
            hi._side(), Fraction(hi.num, hi.den) if hi.den else 0)


def _normalize_closed(intervals: Iterable[Component]) -> RationalClosed:
    comps = [(lo, hi) for lo, hi in intervals if lo <= hi]
    comps.sort(key=_component_key)
    merged: list[Component] = []
    for lo, hi in comps:
        if merged and lo <= merged[-1][1]:
            last_lo, last_hi = merged[-1]
            merged[-1] = (last_lo, hi if last_hi < hi else last_hi)
        else:
            merged.append((lo, hi))
    return RationalClosed(tuple(merged))


def open_interval(lo: RatLike, hi: RatLike) -> RationalOpen:
    return normalize([(lo, hi)])


def closed_interval(lo: RatLike, hi: RatLike) -> RationalClosed:
    lo, hi = _as_ext(lo), _as_ext(hi)
    if hi < lo:
        raise EmptyInterval("closed interval needs lo <= hi")
    return _normalize_closed([(lo, hi)])


def union(a: RationalOpen, b: RationalOpen) -> RationalOpen:
    if a.is_empty:
        return b
    if b.is_empty:
        return a
    return normalize(a.components + b.components)


def intersect(a: RationalOpen, b: RationalOpen) -> RationalOpen:
    out: list[Component] = []
    i = j = 0
    ca, cb = a.components, b.components
    while i < len(ca) and j < len(cb):
        lo = ca[i][0] if cb[j][0] < ca[i][0] else cb[j][0]
        hi = ca[i][1] if ca[i][1] < cb[j][1] else cb[j][1]
        if lo < hi:
            out.append((lo, hi))
        if ca[i][1] < cb[j][1]:
            i += 1
        else:
            j += 1
    return RationalOpen(tuple(out))


def union_closed(a: RationalClosed, b: RationalClosed) -> RationalClosed:
    return _normalize_closed(a.components + b.components)


def closure(a: RationalOpen) -> RationalClosed:
    """Topological closure; touching components fuse ((0,1) ∪ (1,2) -> [0,2])."""
    return _normalize_closed(a.components)


def interior(c: RationalClosed) -> RationalOpen:
    """Topological interior; endpoints open up and isolated points vanish."""
    return RationalOpen(tuple((lo, hi) for lo, hi in c.components if lo < hi))


def complement_closed(a: RationalOpen) -> RationalClosed:
    """The set complement of an open set, as a closed set (gap walk)."""
    if a.is_empty:
        return RationalClosed.reals()
    out: list[Component] = []
    comps = a.components
    if NEG_INF < comps[0][0]:
        out.append((NEG_INF, comps[0][0]))
    for (_, hi), (lo, _) in zip(comps, comps[1:]):
        out.append((hi, lo))
    if comps[-1][1] < POS_INF:
        out.append((comps[-1][1], POS_INF))
    return RationalClosed(tuple(out))


def pseudocomplement(a: RationalOpen) -> RationalOpen:
    """Largest open set disjoint from a: the interior of its complement."""
    return interior(complement_closed(a))


def regularize(a: RationalOpen) -> RationalOpen:
    """Double pseudocomplement, computed as interior of closure."""
    return interior(closure(a))


def is_regular(a: RationalOpen) -> bool:
    return regularize(a) == a


def contains_point(a: RationalOpen, x: RatLike) -> bool:
    x = _as_ext(x)
    return any(lo < x < hi for lo, hi in a.components)


def closed_contains_point(c: RationalClosed, x: RatLike) -> bool:
    x = _as_ext(x)
    return any(lo <= x <= hi for lo, hi in c.components)


def is_subset(a: RationalOpen, b: RationalOpen) -> bool:
    return intersect(a, b) == a


def punctured_reals() -> RationalOpen:
    """The line without the origin."""
    return RationalOpen(((NEG_INF, ExtRat(0)), (ExtRat(0), POS_INF)))


def punctured_interval(n: int) -> RationalOpen:
    """(-1/n, 1/n) with the origin removed."""
    w = Fraction(1, n)
    return RationalOpen(((ExtRat(-w), ExtRat(0)), (ExtRat(0), ExtRat(w))))


# ---------------------------------------------------------------------------
# Pairs (open set below a regular one)


@dataclass(frozen=True)
class KRealPair:
    """A pair (first, second): first open, second regular, first ⊆ second."""

    first: RationalOpen
    second: RationalOpen

    def __post_init__(self):
        if not is_regular(self.second):
            raise InvalidPair(f"second coordinate {self.second} is not regular")
        if not is_subset(self.first, self.second):
            raise InvalidPair("first coordinate must be contained in the second")


# ---------------------------------------------------------------------------
# Certificate operations


@dataclass(frozen=True)
class ObstructionCertificate:
    """Stage N excluding a point from the shrinking term family.

    term is the stage-N set, verified not to contain the point; the family
    is verified to be descending up to that stage, so exclusion persists.
    """

    point: Fraction
    stage: int
    term: RationalOpen
    antitone_checked: int


@dataclass(frozen=True)
class InteriorRecoveryReport:
    """Verdict that the interior of the term intersection recovers the set."""

    stages: int
    containment_ok: bool
    zero_in_set: bool
    zero_interior_excluded: Optional[bool]

    @property
    def passed(self) -> bool:
        return self.containment_ok and (self.zero_in_set or bool(self.zero_interior_excluded))


@dataclass(frozen=True)
class DescentCertificate:
    """Stage N excluding a point from one coordinate of the descending pairs."""

    point: Fraction
    which: str
    stage: int
    coordinate: RationalOpen


@dataclass(frozen=True)
class PointBoundaryReport:
    """The origin sits in every stage's second coordinate but not in the limit.

    The limit of the second coordinates, computed among regular opens, is the
    pair's own second coordinate; the report verifies the origin is in every
    checked stage yet is not interior to second ∪ {0} (exact endpoint check),
    so it drops out of the limit.
    """

    stages_checked: int
    zero_in_all_stages: bool
    interior_excluded: bool
    limit: RationalOpen

    @property
    def passed(self) -> bool:
        return self.zero_in_all_stages and self.interior_excluded


@dataclass(frozen=True)
class ForcingVerdict:
    """Whether covering the punctured line plus a zero interval forces the top."""

    stage: int
    has_punctured_line: bool
    has_zero_interval: bool
    forced: bool
    first_is_line: bool
    second_is_line: bool


def zero_padded_term(u: RationalOpen, n: int) -> RationalOpen:
    """Stage n of the family squeezing down to u ∪ {0}.

    Computed as interior(closure(u) ∪ [-1/n, 1/n]) and cross-checked against
    the equal form (u ∪ (-1/n, 1/n))**.
    """
    if n < 1:
        raise ValueError("stage must be a positive integer")
    if not is_regular(u):
        raise NotRegular(regularize(u))
    w = Fraction(1, n)
    first_form = interior(union_closed(closure(u), closed_interval(-w, w)))
    second_form = regularize(union(u, open_interval(-w, w)))
    if first_form != second_form:
        raise AssertionError(f"term forms disagree at stage {n} for {u}")
    return first_form


def exclusion_certificate(u: RationalOpen, x: Fraction) -> ObstructionCertificate:
    """Least stage N with 1/N < |x| and x outside the stage-N term.

    Certifies x is excluded from the intersection of all stages: membership
    is checked exactly at stage N and the terms are verified to be
    descending up to N.
    """
    x = Fraction(x)
    if x == 0:
        raise ZeroPoint("the origin belongs to every stage")
    if contains_point(u, x):
        raise PointInU(f"{x} belongs to the set; no exclusion stage exists")
    if not is_regular(u):
        raise NotRegular(regularize(u))
    n = 1
    terms = [zero_padded_term(u, 1)]
    while Fraction(1, n) >= abs(x) or contains_point(terms[-1], x):
        n += 1
        terms.append(zero_padded_term(u, n))
        if n > 4 * abs(x).denominator + 4:
            raise AssertionError(f"no exclusion stage found for {x} in {u}")
    for earlier, later in zip(terms, terms[1:]):
        if not is_subset(later, earlier):
            raise AssertionError(f"terms are not descending at stage {terms.index(later)}")
    return ObstructionCertificate(point=x, stage=n, term=terms[-1], antitone_checked=n)


def interior_recovery_check(u: RationalOpen, stages: int) -> InteriorRecoveryReport:
    """Verify u is the interior of the intersection of its padded terms.

    Containment u ⊆ term_n is checked for every stage up to the bound. When
    the origin is outside u, the exact endpoint check confirms the origin is
    not interior to u ∪ {0} (no components of u touch 0 from both sides), so
    no open interval around the origin survives into every stage.
    """
    if stages < 1:
        raise ValueError("need at least one stage")
    if not is_regular(u):
        raise NotRegular(regularize(u))
    containment = all(is_subset(u, zero_padded_term(u, n)) for n in range(1, stages + 1))
    zero = ExtRat(0)
    if contains_point(u, 0):
        return InteriorRecoveryReport(stages, containment, True, None)
    touches_left = any(hi == zero for _, hi in u.components)
    touches_right = any(lo == zero for lo, _ in u.components)
    return InteriorRecoveryReport(stages, containment, False,
                                  not (touches_left and touches_right))


def descending_pair(pair: KRealPair, n: int) -> KRealPair:
    """Stage n of the descending family of pairs converging to the given pair.

    First coordinate: the punctured interval around 0 joined in as a plain
    union. Second: the full interval joined in with the regularized join.
    The containment chain between the two and above the stage generators is
    verified exactly.
    """
    if n < 1:
        raise ValueError("stage must be a positive integer")
    w = Fraction(1, n)
    punct = punctured_interval(n)
    full = open_interval(-w, w)
    first_n = union(punct, pair.first)
    mid_u = union(full, pair.first)
    mid_v = union(full, pair.second)
    second_n = regularize(mid_v)
    for smaller, larger in ((first_n, mid_u), (mid_u, mid_v), (mid_v, second_n)):
        if not is_subset(smaller, larger):
            raise AssertionError(f"containment chain broke at stage {n}")
    if not (is_subset(punct, first_n) and is_subset(full, second_n)):
        raise AssertionError(f"stage {n} pair is not above its generator")
    return KRealPair(first_n, second_n)


def descent_certificate(pair: KRealPair, x: Fraction, which: str,
                        stages: int = 20):
    """Certify x drops out of the chosen coordinate of the descending pairs.

    Returns a DescentCertificate with the canonical stage (least N with
    1/N < |x|; stage 1 for the origin in the first coordinate), with the
    exclusion verified exactly. The origin in the second coordinate belongs
    to every stage, so a PointBoundaryReport is returned instead.
    """
    if which not in ("first", "second"):
        raise ValueError("which must be 'first' or 'second'")
    x = Fraction(x)
    coord = pair.first if which == "first" else pair.second
    if contains_point(coord, x):
        raise PointInside(f"{x} already belongs to the {which} coordinate")
    if x == 0 and which == "second":
        zero_in_all = all(contains_point(descending_pair(pair, n).second, 0)
                          for n in range(1, stages + 1))
        zero = ExtRat(0)
        touches_left = any(hi == zero for _, hi in pair.second.components)
        touches_right = any(lo == zero for lo, _ in pair.second.components)
        return PointBoundaryReport(stages_checked=stages,
                                   zero_in_all_stages=zero_in_all,
                                   interior_excluded=not (touches_left and touches_right),
                                   limit=pair.second)
    if x == 0:
        n = 1
    else:
        n = 1
        while Fraction(1, n) >= abs(x):
            n += 1
    stage = descending_pair(pair, n)
    value = stage.first if which == "first" else stage.second
    if contains_point(value, x):
        raise AssertionError(f"{x} unexpectedly survives stage {n} in {which}")
    return DescentCertificate(point=x, which=which, stage=n, coordinate=value)


def forcing_check(candidate: KRealPair, n: int) -> ForcingVerdict:
    """Replay the forcing step at stage n.

    If the candidate's first coordinate contains both the punctured line and
    the stage-n interval around the origin, the union argument forces both
    coordinates to be the whole line; the equalities are verified exactly.
    """
    if n < 1:
        raise ValueError("stage must be a positive integer")
    w = Fraction(1, n)
    has_line = is_subset(punctured_reals(), candidate.first)
    has_interval = is_subset(open_interval(-w, w), candidate.first)
    forced = has_line and has_interval
    first_line = candidate.first == RationalOpen.reals()
    second_line = candidate.second == RationalOpen.reals()
    if forced and not (first_line and second_line):
        raise AssertionError("forcing hypotheses hold but a coordinate is not the line")
    return ForcingVerdict(stage=n, has_punctured_line=has_line,
                          has_zero_interval=has_interval, forced=forced,
                          first_is_line=first_line, second_is_line=second_line)


# ---------------------------------------------------------------------------
# Textual format: semicolon-separated open intervals with rational endpoints


def parse_open_set(text: str) -> RationalOpen:
    text = text.strip()
    if text in ("", "empty"):
        return RationalOpen.empty()
    intervals = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"expected (lo,hi), got {chunk!r}")
        lo, sep, hi = chunk[1:-1].partition(",")
        if not sep:
            raise ValueError(f"expected (lo,hi), got {chunk!r}")
        intervals.append((parse_extrat(lo), parse_extrat(hi)))
    return normalize(intervals)


def format_open_set(a: RationalOpen) -> str:
    if a.is_empty:
        return "empty"
    return ";".join(f"({format_extrat(lo)},{format_extrat(hi)})" for lo, hi in a.components)
