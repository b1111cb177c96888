"""Symbolic indecomposables of the infinite type-D categories attached to a
disk model, with the translation tables, the edge bijection, and an Ext
calculus built from projective presentations of interval modules.

Quiver coordinates reuse the boundary labels: the tail is totally ordered
toward the fork (ray 1 positive part first, then accumulation 1, ray 2,
accumulation 2, ..., ray 1 negative part last), the two fork tips carry the
labels (1,-1) and (1,-1'), and (1,0)/(1,-1) are not tail vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import arcs
from .disk import INF, DiskModel, DomainError, MarkedPoint
from .arcs import MINUS, PLUS, TaggedEdge


class BadPath(DomainError):
    code = "BadPath"


class ForkMisuse(DomainError):
    code = "ForkMisuse"


class InfInUncompleted(DomainError):
    code = "InfInUncompleted"


class EqualObjects(DomainError):
    code = "EqualObjects"


class SupportOverflow(DomainError):
    code = "SupportOverflow"


@dataclass(frozen=True)
class QuiverVertex:
    ray: int
    pos: float
    prime: bool = False  # distinguishes the lower fork tip (1,-1')

    def is_fork(self) -> bool:
        return self.ray == 1 and self.pos == -1

    def is_inf(self) -> bool:
        return self.pos == INF

    def shift(self, k: int) -> "QuiverVertex":
        return QuiverVertex(self.ray, self.pos + k)

    def __repr__(self):
        if self.is_fork():
            return "(1,-1')" if self.prime else "(1,-1)"
        p = "inf" if self.is_inf() else str(int(self.pos))
        return f"({self.ray},{p})"

    def to_json(self):
        if self.is_fork():
            return {"ray": 1, "pos": "-1p" if self.prime else -1}
        return {"ray": self.ray, "pos": "inf" if self.is_inf() else int(self.pos)}

    @staticmethod
    def from_json(obj) -> "QuiverVertex":
        pos = obj["pos"]
        if pos == "-1p":
            return FORK_DOWN
        if pos == "inf":
            return QuiverVertex(int(obj["ray"]), INF)
        return QuiverVertex(int(obj["ray"]), int(pos))


FORK_UP = QuiverVertex(1, -1, False)
FORK_DOWN = QuiverVertex(1, -1, True)
OMEGA = QuiverVertex(1, -2)  # the tail vertex adjacent to the fork
V_MIN = QuiverVertex(1, 1)  # the far end of the tail


def is_tail_vertex(model: DiskModel, v: QuiverVertex) -> bool:
    if v.is_fork() or v.prime:
        return False
    if not 1 <= v.ray <= model.n:
        return False
    if v.is_inf():
        return model.completed
    if v.pos != int(v.pos):
        return False
    return not (v.ray == 1 and v.pos in (0, -1))


def spine_key(model: DiskModel, v: QuiverVertex):
    """Sort key for the toward-fork order on tail vertices."""
    if v.is_inf():
        return (2 * v.ray - 1, 0)
    if v.ray == 1:
        return (0, v.pos) if v.pos >= 1 else (2 * model.n, v.pos)
    return (2 * (v.ray - 1), v.pos)


def spine_lt(model: DiskModel, u: QuiverVertex, v: QuiverVertex) -> bool:
    return spine_key(model, u) < spine_key(model, v)


def spine_le(model: DiskModel, u: QuiverVertex, v: QuiverVertex) -> bool:
    return spine_key(model, u) <= spine_key(model, v)


def as_point(v: QuiverVertex) -> MarkedPoint:
    return MarkedPoint(v.ray, v.pos)


def as_vertex(p: MarkedPoint) -> QuiverVertex:
    return QuiverVertex(p.ray, p.pos)


@dataclass(frozen=True)
class Indecomposable:
    """One of the five symbolic families.

    kind "P"   projective, coordinate a (fork tip or tail vertex)
    kind "P1"  shifted projective, coordinate a
    kind "bar" interval from b up to a (a may be a fork tip; a finite)
    kind "dbl" doubled from a down to the fork, single strand down to b
    kind "hob" half-open interval from b up to, not including, a = (j,inf)
    """

    kind: str
    a: QuiverVertex
    b: QuiverVertex | None = None

    def __repr__(self):
        if self.kind == "P":
            return f"P{self.a}"
        if self.kind == "P1":
            return f"P{self.a}[1]"
        if self.kind == "bar":
            return f"M[{self.b}..{self.a}]"
        if self.kind == "dbl":
            return f"M[{self.b}..{self.a}^2]"
        return f"M[{self.b}..{self.a})"

    def is_module(self) -> bool:
        return self.kind != "P1"

    def to_json(self):
        coords = [self.a.to_json()]
        if self.b is not None:
            coords.append(self.b.to_json())
        return {"kind": self.kind, "coords": coords}

    @staticmethod
    def from_json(obj) -> "Indecomposable":
        coords = [QuiverVertex.from_json(c) for c in obj["coords"]]
        b = coords[1] if len(coords) > 1 else None
        return Indecomposable(str(obj["kind"]), coords[0], b)


def P(v: QuiverVertex) -> Indecomposable:
    return Indecomposable("P", v)


def P1(v: QuiverVertex) -> Indecomposable:
    return Indecomposable("P1", v)


def Bar(top: QuiverVertex, end: QuiverVertex) -> Indecomposable:
    return Indecomposable("bar", top, end)


def Dbl(deep: QuiverVertex, end: QuiverVertex) -> Indecomposable:
    return Indecomposable("dbl", deep, end)


def Hob(sup: QuiverVertex, end: QuiverVertex) -> Indecomposable:
    return Indecomposable("hob", sup, end)


def validate_indec(model: DiskModel, x: Indecomposable) -> None:
    def tail(v, what):
        if v.is_fork():
            raise ForkMisuse(f"{x}: {what} may not be a fork tip")
        if v.is_inf() and not model.completed:
            raise InfInUncompleted(f"{x}: accumulation vertex in uncompleted model")
        if not is_tail_vertex(model, v):
            raise BadPath(f"{x}: {what} {v} is not a tail vertex")

    if x.kind in ("P", "P1"):
        if x.b is not None:
            raise BadPath(f"{x}: projectives take one coordinate")
        if not x.a.is_fork():
            tail(x.a, "vertex")
        return
    if x.kind == "bar":
        tail(x.b, "low end")
        if x.a.is_fork():
            return
        tail(x.a, "top")
        if x.a.is_inf():
            raise BadPath(f"{x}: no finitely presented bar tops at an accumulation")
        if not spine_le(model, x.b, x.a):
            raise BadPath(f"{x}: no path from {x.b} to {x.a}")
        return
    if x.kind == "dbl":
        tail(x.a, "doubled end")
        tail(x.b, "single end")
        if not spine_lt(model, x.b, x.a):
            raise BadPath(f"{x}: single end must lie strictly below the doubled end")
        return
    if x.kind == "hob":
        if not model.completed:
            raise InfInUncompleted(f"{x}: half-open intervals need marked accumulations")
        tail(x.a, "supremum")
        tail(x.b, "low end")
        if not x.a.is_inf():
            raise BadPath(f"{x}: supremum must be an accumulation vertex")
        if not spine_lt(model, x.b, x.a):
            raise BadPath(f"{x}: low end must lie strictly below the supremum")
        return
    raise BadPath(f"unknown kind {x.kind!r}")


def is_valid_indec(model: DiskModel, x: Indecomposable) -> bool:
    try:
        validate_indec(model, x)
        return True
    except DomainError:
        return False


# ---------------------------------------------------------------------------
# translation


def ar_translate(model: DiskModel, x: Indecomposable) -> Indecomposable:
    """The translation on objects (modules and shifted projectives)."""
    if x.kind == "P":
        return P1(x.a)
    if x.kind == "P1":
        if not x.a.is_fork() and x.a.is_inf():
            return Hob(x.a, V_MIN)
        return Bar(x.a, V_MIN)
    if x.kind == "hob":
        if x.b.is_inf():
            return x
        return Hob(x.a, x.b.shift(1))
    if x.kind == "bar":
        top, end = x.a, x.b
        if top == FORK_UP:
            return P(FORK_DOWN) if end == OMEGA else Bar(FORK_DOWN, end.shift(1))
        if top == FORK_DOWN:
            return P(FORK_UP) if end == OMEGA else Bar(FORK_UP, end.shift(1))
        if top == OMEGA:
            return P(V_MIN) if end == OMEGA else Dbl(end.shift(1), V_MIN)
        return Bar(top.shift(1), end.shift(1))
    if x.kind == "dbl":
        if x.a == OMEGA:
            return P(x.b.shift(1))
        return Dbl(x.a.shift(1), x.b.shift(1))
    raise BadPath(f"unknown kind {x.kind!r}")


def ar_translate_inverse(model: DiskModel, x: Indecomposable) -> Indecomposable:
    """Inverse translation; fixed points return themselves."""
    if x.kind == "P1":
        return P(x.a)
    if x.kind == "bar":
        top, end = x.a, x.b
        if end == V_MIN:
            return P1(top)
        if top == FORK_UP:
            return Bar(FORK_DOWN, end.shift(-1))
        if top == FORK_DOWN:
            return Bar(FORK_UP, end.shift(-1))
        return Bar(top.shift(-1), end.shift(-1))
    if x.kind == "hob":
        if x.b == V_MIN:
            return P1(x.a)
        if x.b.is_inf():
            return x
        return Hob(x.a, x.b.shift(-1))
    if x.kind == "dbl":
        if x.b == V_MIN:
            return Bar(OMEGA, x.a.shift(-1))
        return Dbl(x.a.shift(-1), x.b.shift(-1))
    # projectives
    v = x.a
    if v == FORK_UP:
        return Bar(FORK_DOWN, OMEGA)
    if v == FORK_DOWN:
        return Bar(FORK_UP, OMEGA)
    if v == V_MIN:
        return Bar(OMEGA, OMEGA)
    return Dbl(OMEGA, v.shift(-1))


# ---------------------------------------------------------------------------
# the edge bijection


def phi(model: DiskModel, x: Indecomposable) -> TaggedEdge:
    """Send an object to its tagged edge."""
    if x.kind == "P":
        if x.a == FORK_UP:
            return TaggedEdge(MarkedPoint(1, -1), MarkedPoint(1, -1), PLUS)
        if x.a == FORK_DOWN:
            return TaggedEdge(MarkedPoint(1, -1), MarkedPoint(1, -1), MINUS)
        return TaggedEdge(MarkedPoint(1, -1), as_point(x.a))
    if x.kind == "P1":
        if x.a == FORK_UP:
            return TaggedEdge(MarkedPoint(1, 0), MarkedPoint(1, 0), MINUS)
        if x.a == FORK_DOWN:
            return TaggedEdge(MarkedPoint(1, 0), MarkedPoint(1, 0), PLUS)
        return TaggedEdge(MarkedPoint(1, 0), as_point(x.a).shift(1))
    if x.kind == "bar":
        if x.a == FORK_UP:
            return TaggedEdge(as_point(x.b), as_point(x.b), PLUS)
        if x.a == FORK_DOWN:
            return TaggedEdge(as_point(x.b), as_point(x.b), MINUS)
        return TaggedEdge(as_point(x.b), as_point(x.a).shift(2))
    if x.kind == "dbl":
        return TaggedEdge(as_point(x.a), as_point(x.b))
    return TaggedEdge(as_point(x.b), as_point(x.a))  # hob


def phi_inverse(model: DiskModel, e: TaggedEdge) -> Indecomposable | None:
    """The object mapping to e, or None when no slot matches."""
    arcs.validate_edge(model, e)
    if e.is_puncture_edge():
        c = e.src
        if c == MarkedPoint(1, -1):
            return P(FORK_UP) if e.tag == PLUS else P(FORK_DOWN)
        if c == MarkedPoint(1, 0):
            return P1(FORK_UP) if e.tag == MINUS else P1(FORK_DOWN)
        top = FORK_UP if e.tag == PLUS else FORK_DOWN
        return Bar(top, as_vertex(c))
    if e.src == MarkedPoint(1, -1):
        return P(as_vertex(e.dst))
    if e.src == MarkedPoint(1, 0):
        return P1(as_vertex(e.dst.shift(-1)))
    v = as_vertex(e.src)
    w = as_vertex(e.dst)
    if is_tail_vertex(model, w) and spine_lt(model, w, v):
        return Dbl(v, w)
    if w.is_inf():
        return Hob(w, v)
    t = w.shift(-2)
    if is_tail_vertex(model, t) and spine_le(model, v, t):
        return Bar(t, v)
    return None


def indecomposables_in_window(model: DiskModel, bound: int) -> list[Indecomposable]:
    """All objects whose coordinates lie in the position window [-bound, bound]
    (accumulation vertices included when marked)."""
    tails = [
        as_vertex(p)
        for p in model.window(bound)
        if is_tail_vertex(model, as_vertex(p))
    ]
    tails.sort(key=lambda v: spine_key(model, v))
    out: list[Indecomposable] = []
    for f in (FORK_UP, FORK_DOWN):
        out.append(P(f))
        out.append(P1(f))
    for v in tails:
        out.append(P(v))
        out.append(P1(v))
        out.append(Bar(FORK_UP, v))
        out.append(Bar(FORK_DOWN, v))
    for i, e in enumerate(tails):
        for t in tails[i:]:
            if not t.is_inf():
                out.append(Bar(t, e))
        for d in tails[i + 1 :]:
            out.append(Dbl(d, e))
            if d.is_inf():
                out.append(Hob(d, e))
    return out


# ---------------------------------------------------------------------------
# dimensions and the symbolic Ext calculus


def dim_at(model: DiskModel, x: Indecomposable, v: QuiverVertex) -> int:
    """Dimension of the module x at a quiver vertex (shifts have none)."""
    if x.kind == "P1":
        raise BadPath(f"{x} is a shifted object, not a module")
    if x.kind == "P":
        if x.a.is_fork():
            return 1 if v == x.a else 0
        if v.is_fork():
            return 1
        return 1 if spine_le(model, x.a, v) else 0
    if x.kind == "bar":
        if x.a.is_fork():
            if v.is_fork():
                return 1 if v == x.a else 0
            return 1 if spine_le(model, x.b, v) else 0
        if v.is_fork():
            return 0
        return 1 if spine_le(model, x.b, v) and spine_le(model, v, x.a) else 0
    if x.kind == "dbl":
        if v.is_fork():
            return 1
        if spine_le(model, x.a, v):
            return 2
        return 1 if spine_le(model, x.b, v) and spine_lt(model, v, x.a) else 0
    # hob
    if v.is_fork():
        return 0
    return 1 if spine_le(model, x.b, v) and spine_lt(model, v, x.a) else 0


def hom_dim(model: DiskModel, m: Indecomposable, n: Indecomposable) -> int:
    """dim Hom between two modules of the uncompleted model."""
    if m.kind == "P":
        return dim_at(model, n, m.a)
    if m.kind == "dbl":
        # maps are pairs of values at m.b and m.a matching at both fork tips;
        # the two gluing lines differ, which kills proportional solutions
        if n.kind == "dbl":
            if spine_le(model, n.a, m.b):
                return 2
            if spine_le(model, n.b, m.b) and spine_le(model, n.a, m.a):
                return 1
            return 0
        if n.kind == "P":
            return 0
        if n.kind == "bar" and n.a.is_fork():
            return 1 if spine_le(model, n.b, m.b) else 0
        return dim_at(model, n, m.b) + dim_at(model, n, m.a)
    # m is a bar; maps are determined by the image of the generator at m.b,
    # and n's support above m.b must stay inside m's support
    e = m.b
    if m.a.is_fork():
        if n.kind == "dbl":
            return 1 if spine_le(model, n.a, e) else 0
        if n.kind == "bar":
            if n.a.is_fork():
                return 1 if n.a == m.a and spine_le(model, n.b, e) else 0
            return 1 if spine_le(model, n.b, e) and spine_le(model, e, n.a) else 0
        return 0  # n projective: its support passes both fork tips
    if n.kind == "bar" and not n.a.is_fork():
        return (
            1
            if spine_le(model, n.b, e)
            and spine_le(model, e, n.a)
            and spine_le(model, n.a, m.a)
            else 0
        )
    return 0


def _presentation(m: Indecomposable) -> tuple[list[QuiverVertex], list[QuiverVertex]]:
    """Vertices presenting m: 0 -> (+)P[w in p1] -> (+)P[v in p0] -> m -> 0."""
    if m.kind == "bar":
        if m.a == FORK_UP:
            return [m.b], [FORK_DOWN]
        if m.a == FORK_DOWN:
            return [m.b], [FORK_UP]
        if m.a == OMEGA:
            return [m.b], [FORK_UP, FORK_DOWN]
        return [m.b], [m.a.shift(1)]
    if m.kind == "dbl":
        return [m.b, m.a], [FORK_UP, FORK_DOWN]
    return [m.a], []  # projective


def ext1_dim(model: DiskModel, m: Indecomposable, n: Indecomposable) -> int:
    """dim Ext^1 between modules of the uncompleted model, from the
    projective presentation of m."""
    if m.kind == "P":
        return 0
    p0, p1 = _presentation(m)
    val = hom_dim(model, m, n)
    val -= sum(dim_at(model, n, v) for v in p0)
    val += sum(dim_at(model, n, w) for w in p1)
    if val < 0:
        raise BadPath(f"negative Ext between {m} and {n}: presentation bug")
    return val


def doubled_model(model: DiskModel) -> DiskModel:
    return DiskModel(2 * model.n, False)


def iota(model: DiskModel, x: Indecomposable) -> Indecomposable:
    """Object map from the completed model into the uncompleted doubled one:
    ray j lands on ray 2j-1 and accumulation j becomes the slot (2j, 0)."""

    def vm(v: QuiverVertex) -> QuiverVertex:
        if v.is_fork():
            return v
        if v.is_inf():
            return QuiverVertex(2 * v.ray, 0)
        return QuiverVertex(2 * v.ray - 1, v.pos)

    if x.kind in ("P", "P1"):
        return Indecomposable(x.kind, vm(x.a))
    if x.kind == "hob":
        return Bar(QuiverVertex(2 * x.a.ray, -1), vm(x.b))
    return Indecomposable(x.kind, vm(x.a), vm(x.b))


def _lift(model: DiskModel, x: Indecomposable) -> tuple[DiskModel, Indecomposable]:
    if model.completed:
        return doubled_model(model), iota(model, x)
    return model, x


DEEPEN_STEP = 3


def deepen(x: Indecomposable, step: int = DEEPEN_STEP) -> Indecomposable:
    """Slide even-ray coordinates of a doubled-model object away from the
    accumulation slot.

    The sliding maps have cones supported on the even rays, so the deepened
    object represents the same object of the completed category; Hom out of
    it computes the localized Hom.
    """

    def mv(v):
        if v is None or v.is_fork() or v.ray % 2 == 1:
            return v
        return v.shift(step)

    return Indecomposable(x.kind, mv(x.a), mv(x.b))


def _orbit_ext(model: DiskModel, x: Indecomposable, y: Indecomposable) -> int:
    """dim Hom(x, y[1]) in the uncompleted orbit category."""
    if x.kind == "P1" and y.kind == "P1":
        return 0
    if x.kind == "P1":
        return dim_at(model, y, x.a)
    if y.kind == "P1":
        return dim_at(model, x, y.a)
    return ext1_dim(model, x, y) + ext1_dim(model, y, x)


def shared_accumulation_incidences(
    model: DiskModel, x: Indecomposable, y: Indecomposable
) -> int:
    """How many arc-endpoint incidences at marked accumulation points the
    two objects' arcs have in common."""
    if not model.completed:
        return 0
    ex, ey = phi(model, x), phi(model, y)

    def inc(e):
        counts = {}
        for p in (e.src, e.dst):
            if p.is_inf():
                counts[p] = counts.get(p, 0) + 1
        return counts

    cx, cy = inc(ex), inc(ey)
    return sum(min(cx[p], cy.get(p, 0)) for p in cx)


def ext_sum_dim(model: DiskModel, x: Indecomposable, y: Indecomposable) -> int:
    """dim Ext(x,y) + dim Ext(y,x) over the model's category.

    Uncompleted: both directions agree, so this is twice the orbit Ext.
    Completed: the sum is computed in the doubled model out of deepened
    source representatives (a right-fraction resolution at object level),
    minus one for each shared accumulation incidence of the two arcs; the
    blow-up forces complementary approach arcs through each other exactly
    once per shared incidence, and the localization unwinds those.
    """
    if not model.completed:
        return 2 * _orbit_ext(model, x, y)
    m = doubled_model(model)
    x0, y0 = iota(model, x), iota(model, y)
    xd, yd = deepen(x0), deepen(y0)
    raw = _orbit_ext(m, xd, y0) + _orbit_ext(m, yd, x0)
    return max(0, raw - shared_accumulation_incidences(model, x, y))


def ext_sum_positive(model: DiskModel, x: Indecomposable, y: Indecomposable) -> bool:
    """Whether the Ext groups between two distinct objects do not all vanish."""
    if x == y:
        raise EqualObjects(f"ext_sum_positive needs distinct objects, got {x}")
    return ext_sum_dim(model, x, y) > 0


def ext_exceeds_one(model: DiskModel, x: Indecomposable, y: Indecomposable) -> bool:
    """The threshold test used for pairs of arcs sharing an accumulation point."""
    if x == y:
        raise EqualObjects(f"ext_exceeds_one needs distinct objects, got {x}")
    return ext_sum_dim(model, x, y) > 1


def compatible(model: DiskModel, x: Indecomposable, y: Indecomposable) -> bool:
    """Cluster-theoretic compatibility of two objects (any object is
    compatible with itself)."""
    if x == y:
        return True
    if not model.completed:
        return not ext_sum_positive(model, x, y)
    return arcs.crossing_number(model, phi(model, x), phi(model, y)) == 0


def dimension_window(
    model: DiskModel, x: Indecomposable, bound: int
) -> dict[QuiverVertex, int]:
    """Dimension vector restricted to the position window [-bound, bound].

    Raises when a defining coordinate falls outside the window, since the
    restriction would then misrepresent the shape.  Shifted projectives
    report the dimensions of their underlying projective.
    """
    for v in (x.a, x.b):
        if v is None or v.is_fork() or v.is_inf():
            continue
        if abs(v.pos) > bound:
            raise SupportOverflow(f"{x}: coordinate {v} outside window {bound}")
    probe = Indecomposable("P", x.a) if x.kind == "P1" else x
    verts = [FORK_UP, FORK_DOWN] + [
        as_vertex(p) for p in model.window(bound) if is_tail_vertex(model, as_vertex(p))
    ]
    return {v: dim_at(model, probe, v) for v in verts}
