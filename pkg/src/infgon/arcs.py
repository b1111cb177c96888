"""Tagged edges of the punctured disk: validity, crossings, translation,
elementary moves.

A tagged edge E^eps runs counterclockwise from ``src`` to ``dst``; equal
endpoints encode an arc to the central puncture, tagged +1 or -1.  Distinct
endpoints force eps = +1, and the ccw successor of ``src`` is never a legal
``dst`` (that arc would be boundary-parallel).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .disk import INF, DiskModel, DomainError, MarkedPoint

PLUS = 1
MINUS = -1


class BoundaryEdge(DomainError):
    code = "BoundaryEdge"


class BadTag(DomainError):
    code = "BadTag"


class EqualEdges(DomainError):
    code = "EqualEdges"


@dataclass(frozen=True)
class TaggedEdge:
    src: MarkedPoint
    dst: MarkedPoint
    tag: int = PLUS

    def is_puncture_edge(self) -> bool:
        return self.src == self.dst

    def __repr__(self):
        sign = "+" if self.tag == PLUS else "-"
        return f"E[{self.src}-{self.dst}]^{sign}"

    def to_json(self):
        return {
            "from": self.src.to_json(),
            "to": self.dst.to_json(),
            "tag": "+1" if self.tag == PLUS else "-1",
        }

    @staticmethod
    def from_json(obj) -> "TaggedEdge":
        tag = PLUS if str(obj.get("tag", "+1")) in ("+1", "1", "+") else MINUS
        return TaggedEdge(
            MarkedPoint.from_json(obj["from"]), MarkedPoint.from_json(obj["to"]), tag
        )


_EDGE_RE = re.compile(
    r"^E\[\((-?\d+),(-?\d+|inf)\)-\((-?\d+),(-?\d+|inf)\)\](\^(\+1?|-1?))?$"
)


def parse_edge(text: str) -> TaggedEdge:
    """Parse the text form E[(h,a)-(k,b)]^+ (tag suffix optional)."""
    m = _EDGE_RE.match(text.replace(" ", ""))
    if m is None:
        raise ValueError(f"cannot parse edge {text!r}")
    h, a, k, b, _, sign = m.groups()

    def pos(s):
        return INF if s == "inf" else int(s)

    tag = MINUS if sign in ("-", "-1") else PLUS
    return TaggedEdge(MarkedPoint(int(h), pos(a)), MarkedPoint(int(k), pos(b)), tag)


def validate_edge(model: DiskModel, e: TaggedEdge) -> None:
    """Raise unless e is a tagged edge of the model."""
    model.require(e.src)
    model.require(e.dst)
    if e.src != e.dst and e.tag != PLUS:
        raise BadTag(f"{e}: distinct endpoints force tag +1")
    if e.tag not in (PLUS, MINUS):
        raise BadTag(f"{e}: tag must be +1 or -1")
    if not e.is_puncture_edge() and e.dst == model.ccw_successor(e.src):
        raise BoundaryEdge(f"{e}: dst is the ccw successor of src")


def is_valid_edge(model: DiskModel, e: TaggedEdge) -> bool:
    try:
        validate_edge(model, e)
        return True
    except DomainError:
        return False


def _interleaves(model: DiskModel, e: TaggedEdge, f: TaggedEdge) -> bool:
    # f.src inside e's ccw arc and e.dst inside f's ccw arc
    return model.in_open_arc(f.src, e.src, e.dst) and model.in_open_arc(
        e.dst, f.src, f.dst
    )


def crossing_number(model: DiskModel, e: TaggedEdge, f: TaggedEdge) -> int:
    """Minimal interior intersection count of two distinct tagged edges.

    The chord/chord case tests strict interleaving of endpoints both ways
    round (each edge is isotopic into a collar on its ccw side, so the
    minimum is 0 or 1).
    """
    if e == f:
        raise EqualEdges(f"crossing_number needs distinct edges, got {e} twice")
    ep, fp = e.is_puncture_edge(), f.is_puncture_edge()
    if ep and fp:
        return 1 if (e.src != f.src and e.tag != f.tag) else 0
    if ep:
        return 1 if model.in_open_arc(e.src, f.src, f.dst) else 0
    if fp:
        return 1 if model.in_open_arc(f.src, e.src, e.dst) else 0
    if _interleaves(model, e, f) or _interleaves(model, f, e):
        return 1
    return 0


def translate(model: DiskModel, e: TaggedEdge) -> TaggedEdge:
    """One step of the translation: both endpoints move one marked point ccw;
    a puncture edge also swaps its tag."""
    if e.is_puncture_edge():
        return TaggedEdge(e.src.shift(1), e.src.shift(1), -e.tag)
    return TaggedEdge(e.src.shift(1), e.dst.shift(1), e.tag)


def translate_inverse(model: DiskModel, e: TaggedEdge) -> TaggedEdge:
    """Inverse translation; edges fixed by the translation map to themselves."""
    if e.is_puncture_edge():
        return TaggedEdge(e.src.shift(-1), e.src.shift(-1), -e.tag)
    return TaggedEdge(e.src.shift(-1), e.dst.shift(-1), e.tag)


def _drop_bad(model: DiskModel, e: TaggedEdge, cands) -> set[TaggedEdge]:
    """Keep candidates that are valid tagged edges distinct from e and that
    kept the shape the move formula intended (inf arithmetic may collapse a
    chord onto e itself or onto a puncture slot; such moves do not exist)."""
    out = set()
    for c, want_puncture in cands:
        if c == e:
            continue
        if c.is_puncture_edge() != want_puncture:
            continue
        if is_valid_edge(model, c):
            out.add(c)
    return out


def elementary_moves_from(model: DiskModel, e: TaggedEdge) -> set[TaggedEdge]:
    """All edges f such that (e, f) is an elementary move."""
    validate_edge(model, e)
    src, dst = e.src, e.dst
    if e.is_puncture_edge():
        return _drop_bad(model, e, [(TaggedEdge(src, src.shift(-1)), False)])
    same_ray = src.ray == dst.ray
    finite = not src.is_inf() and not dst.is_inf()
    if same_ray and finite and dst.pos == src.pos + 2:
        return _drop_bad(model, e, [(TaggedEdge(src.shift(-1), dst), False)])
    if same_ray and finite and dst.pos == src.pos - 1:
        down = dst.shift(-1)
        return _drop_bad(
            model,
            e,
            [
                (TaggedEdge(src, down), False),
                (TaggedEdge(dst, dst, PLUS), True),
                (TaggedEdge(dst, dst, MINUS), True),
            ],
        )
    return _drop_bad(
        model,
        e,
        [
            (TaggedEdge(src.shift(-1), dst), False),
            (TaggedEdge(src, dst.shift(-1)), False),
        ],
    )


def elementary_moves_into(model: DiskModel, e: TaggedEdge) -> set[TaggedEdge]:
    """All f with (f, e) an elementary move.

    Every move shifts an endpoint by one step, so sources live within two
    steps of e's endpoints; search that neighbourhood.
    """
    near = set()
    for p in (e.src, e.dst):
        for d in (-2, -1, 0, 1, 2):
            near.add(p.shift(d))
    cands = set()
    for p in near:
        if model.contains(p):
            cands.add(TaggedEdge(p, p, PLUS))
            cands.add(TaggedEdge(p, p, MINUS))
            for q in near:
                if model.contains(q) and q != p:
                    cands.add(TaggedEdge(p, q))
    out = set()
    for f in cands:
        if f != e and is_valid_edge(model, f) and e in elementary_moves_from(model, f):
            out.add(f)
    return out


def is_elementary_move(model: DiskModel, e: TaggedEdge, f: TaggedEdge) -> bool:
    if e == f:
        raise EqualEdges(f"elementary moves pair distinct edges, got {e} twice")
    return f in elementary_moves_from(model, e)


def edges_in_window(model: DiskModel, bound: int) -> list[TaggedEdge]:
    """Every valid tagged edge with both endpoint positions in
    [-bound, bound] (accumulation points included when marked)."""
    pts = model.window(bound)
    out = []
    for p in pts:
        out.append(TaggedEdge(p, p, PLUS))
        out.append(TaggedEdge(p, p, MINUS))
        for q in pts:
            if q == p:
                continue
            e = TaggedEdge(p, q)
            if is_valid_edge(model, e):
                out.append(e)
    return out
