"""Triangulations of the punctured disk, encoded as a fan plus a finite diff.

A fan hangs every edge on one apex: both puncture tags there plus the chords
to every other marked point except the apex's ccw successor.  Any
triangulation reachable by finitely many flips from a fan is stored as
(apex, removed, added).  Crossing checks against the infinite fan reduce to
asking whether an explicit boundary arc still holds a surviving fan target,
which is decidable because only finitely many targets are ever removed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arcs import MINUS, PLUS, TaggedEdge, crossing_number, is_valid_edge, validate_edge
from .disk import DiskModel, DomainError, MarkedPoint


class InfApexUncompleted(DomainError):
    code = "InfApexUncompleted"


class NotMember(DomainError):
    code = "NotMember"


class NonMutable(DomainError):
    code = "NonMutable"


class AmbiguousFlip(DomainError):
    code = "AmbiguousFlip"


class Crossing(DomainError):
    code = "Crossing"


class NotMaximal(DomainError):
    code = "NotMaximal"


class BadDiff(DomainError):
    code = "BadDiff"


@dataclass(frozen=True)
class Triangulation:
    model: DiskModel
    apex: MarkedPoint
    removed: frozenset[TaggedEdge] = field(default_factory=frozenset)
    added: frozenset[TaggedEdge] = field(default_factory=frozenset)

    # -- membership ---------------------------------------------------------

    def in_fan(self, e: TaggedEdge) -> bool:
        if e.is_puncture_edge():
            return e.src == self.apex
        return (
            e.tag == PLUS
            and e.src == self.apex
            and is_valid_edge(self.model, e)
        )

    def contains(self, e: TaggedEdge) -> bool:
        if e in self.added:
            return True
        return self.in_fan(e) and e not in self.removed

    def members_in_window(self, bound: int) -> set[TaggedEdge]:
        """Members whose endpoint positions all lie in [-bound, bound] or at
        an accumulation point."""

        def visible(p: MarkedPoint) -> bool:
            return p.is_inf() or abs(p.pos) <= bound

        out = set()
        if visible(self.apex):
            for tag in (PLUS, MINUS):
                e = TaggedEdge(self.apex, self.apex, tag)
                if e not in self.removed:
                    out.add(e)
            for t in self.model.window(bound):
                e = TaggedEdge(self.apex, t)
                if self.in_fan(e) and e not in self.removed:
                    out.add(e)
        for e in self.added:
            if visible(e.src) and visible(e.dst):
                out.add(e)
        return out

    # -- crossing against the member set -------------------------------------

    def _live_target(self, t: MarkedPoint) -> TaggedEdge | None:
        e = TaggedEdge(self.apex, t)
        if self.in_fan(e) and e not in self.removed:
            return e
        return None

    def _arc_stream(self, p: MarkedPoint, q: MarkedPoint, budget: int):
        if not p.is_inf():
            for j in range(1, budget + 2):
                yield p.shift(j)
        if not q.is_inf():
            for j in range(1, budget + 2):
                yield q.shift(-j)
        if p.is_inf():
            r = p.ray % self.model.n + 1
            for j in range(-budget - 1, budget + 2):
                yield MarkedPoint(r, j)

    def _arc_live(self, p: MarkedPoint, q: MarkedPoint) -> TaggedEdge | None:
        """A surviving fan chord whose target lies strictly inside the ccw
        arc from p to q, if one exists."""
        model = self.model
        if p.ray == q.ray and not p.is_inf() and not q.is_inf() and p.pos < q.pos:
            for a in range(int(p.pos) + 1, int(q.pos)):
                w = self._live_target(MarkedPoint(p.ray, a))
                if w is not None:
                    return w
            return None
        # infinite arc: the removals are finite, so scanning a few more
        # in-arc points than there are removals settles the question
        budget = len(self.removed) + 4
        tried = set()
        for t in self._arc_stream(p, q, budget):
            if t in tried or t == p or t == q or not model.in_open_arc(t, p, q):
                continue
            w = self._live_target(t)
            if w is not None:
                return w
            tried.add(t)
            if len(tried) >= budget:
                raise AssertionError(f"no live fan target in infinite arc {p}..{q}")
        return None

    def crossing_member(self, c: TaggedEdge) -> TaggedEdge | None:
        """Some member crossing c, or None.  c need not be a member."""
        model = self.model
        for f in self.added:
            if f != c and crossing_number(model, c, f) > 0:
                return f
        live_tags = [
            tag
            for tag in (PLUS, MINUS)
            if TaggedEdge(self.apex, self.apex, tag) not in self.removed
        ]
        if c.is_puncture_edge():
            if c.src == self.apex:
                return None
            if -c.tag in live_tags:
                return TaggedEdge(self.apex, self.apex, -c.tag)
            return self._arc_live(c.src, self.apex)
        u, v = c.src, c.dst
        if u == self.apex:
            return None
        if v == self.apex:
            return self._arc_live(u, self.apex)
        if model.in_open_arc(self.apex, u, v):
            if live_tags:
                return TaggedEdge(self.apex, self.apex, live_tags[0])
            return self._arc_live(u, self.apex) or self._arc_live(v, self.apex)
        return self._arc_live(u, v)

    # -- candidate generation -------------------------------------------------

    def _window_points(self, extra=()) -> list[MarkedPoint]:
        model = self.model
        base = {self.apex}
        for e in self.removed | self.added:
            base.add(e.src)
            base.add(e.dst)
        for p in extra:
            base.add(p)
        pts = set()
        for p in base:
            for d in range(-3, 4):
                q = p.shift(d)
                if model.contains(q):
                    pts.add(q)
        if model.completed:
            for h in range(1, model.n + 1):
                pts.add(MarkedPoint(h, float("inf")))
        return sorted(pts, key=model.boundary_key)

    def _candidates(self, extra=()) -> list[TaggedEdge]:
        pts = self._window_points(extra)
        cands = []
        for p in pts:
            cands.append(TaggedEdge(p, p, PLUS))
            cands.append(TaggedEdge(p, p, MINUS))
            for q in pts:
                e = TaggedEdge(p, q)
                if q != p and is_valid_edge(self.model, e):
                    cands.append(e)
        return cands

    # -- serialization --------------------------------------------------------

    def to_json(self):
        key = lambda e: (self.model.boundary_key(e.src), self.model.boundary_key(e.dst), e.tag)
        return {
            "model": self.model.to_json(),
            "apex": self.apex.to_json(),
            "removed": [e.to_json() for e in sorted(self.removed, key=key)],
            "added": [e.to_json() for e in sorted(self.added, key=key)],
        }

    @staticmethod
    def from_json(obj) -> "Triangulation":
        return Triangulation(
            DiskModel.from_json(obj["model"]),
            MarkedPoint.from_json(obj["apex"]),
            frozenset(TaggedEdge.from_json(e) for e in obj.get("removed", [])),
            frozenset(TaggedEdge.from_json(e) for e in obj.get("added", [])),
        )


def fan(model: DiskModel, apex: MarkedPoint) -> Triangulation:
    """The triangulation of all tagged edges hung on one apex."""
    if apex.is_inf() and not model.completed:
        raise InfApexUncompleted(f"{apex} is not marked in the uncompleted model")
    model.require(apex)
    return Triangulation(model, apex)


def validate(t: Triangulation) -> None:
    """Check the diff structure, pairwise non-crossing, and local maximality."""
    model = t.model
    model.require(t.apex)
    if t.apex.is_inf() and not model.completed:
        raise InfApexUncompleted(f"{t.apex} is not marked in the uncompleted model")
    if len(t.removed) != len(t.added):
        raise BadDiff(f"|removed| = {len(t.removed)} but |added| = {len(t.added)}")
    for e in t.removed:
        if not t.in_fan(e):
            raise BadDiff(f"removed edge {e} is not a fan member")
    for e in t.added:
        validate_edge(model, e)
        if t.in_fan(e):
            raise BadDiff(f"added edge {e} is already a fan member")
    for e in t.added:
        w = t.crossing_member(e)
        if w is not None:
            raise Crossing(f"members {e} and {w} cross")
    for c in t._candidates():
        if t.contains(c):
            continue
        if t.crossing_member(c) is None:
            raise NotMaximal(f"{c} could be added without crossing")


def is_valid(t: Triangulation) -> bool:
    try:
        validate(t)
        return True
    except DomainError:
        return False


def _without(t: Triangulation, e: TaggedEdge) -> Triangulation:
    if e in t.added:
        return Triangulation(t.model, t.apex, t.removed, t.added - {e})
    return Triangulation(t.model, t.apex, t.removed | {e}, t.added)


def _with(t: Triangulation, e: TaggedEdge) -> Triangulation:
    if e in t.removed:
        return Triangulation(t.model, t.apex, t.removed - {e}, t.added)
    return Triangulation(t.model, t.apex, t.removed, t.added | {e})


def mutate(t: Triangulation, e: TaggedEdge) -> tuple[Triangulation, TaggedEdge]:
    """Replace the member e by the unique other edge completing t - e.

    Raises NonMutable when no replacement exists (limit arcs of the
    completed model), NotMember when e is not in t.
    """
    if not t.contains(e):
        raise NotMember(f"{e} is not a member")
    rest = _without(t, e)
    found = []
    for c in rest._candidates(extra=(e.src, e.dst)):
        if c == e or rest.contains(c):
            continue
        if rest.crossing_member(c) is None:
            found.append(c)
    if not found:
        raise NonMutable(f"{e} has no replacement")
    if len(found) > 1:
        raise AmbiguousFlip(f"{e} has several replacements: {found}")
    star = found[0]
    return _with(rest, star), star


def is_mutable(t: Triangulation, e: TaggedEdge) -> bool:
    if not t.contains(e):
        raise NotMember(f"{e} is not a member")
    try:
        mutate(t, e)
        return True
    except NonMutable:
        return False
