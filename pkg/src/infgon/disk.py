"""Marked-point models of the punctured disk with n accumulation points.

The boundary carries one copy of Z per ray plus, in the completed model,
one extra marked point per accumulation.  Counterclockwise order: ray 1
ascending, then accumulation 1, then ray 2 ascending, then accumulation 2,
... closing the circle after accumulation n back to ray 1.
"""

from __future__ import annotations

from dataclasses import dataclass

INF = float("inf")


class DomainError(Exception):
    """Base for all domain-rule violations."""

    code = "DomainError"


class UnknownPoint(DomainError):
    code = "UnknownPoint"


class CoincidentPoints(DomainError):
    code = "CoincidentPoints"


@dataclass(frozen=True, order=False)
class MarkedPoint:
    """A boundary marked point (ray, pos); pos is an integer or INF."""

    ray: int
    pos: float  # int in practice, INF for accumulation points

    def is_inf(self) -> bool:
        return self.pos == INF

    def shift(self, k: int) -> "MarkedPoint":
        # inf +- k == inf
        return MarkedPoint(self.ray, self.pos + k)

    def __repr__(self):
        p = "inf" if self.is_inf() else str(int(self.pos))
        return f"({self.ray},{p})"

    def to_json(self):
        return {"ray": self.ray, "pos": "inf" if self.is_inf() else int(self.pos)}

    @staticmethod
    def from_json(obj) -> "MarkedPoint":
        pos = obj["pos"]
        if pos == "inf":
            return MarkedPoint(int(obj["ray"]), INF)
        return MarkedPoint(int(obj["ray"]), int(pos))


@dataclass(frozen=True)
class DiskModel:
    """The punctured disk with n two-sided accumulation points.

    Accumulation points are marked iff ``completed`` is set.
    """

    n: int
    completed: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")

    def contains(self, p: MarkedPoint) -> bool:
        if not 1 <= p.ray <= self.n:
            return False
        if p.is_inf():
            return self.completed
        return p.pos == int(p.pos)

    def require(self, p: MarkedPoint) -> None:
        if not self.contains(p):
            raise UnknownPoint(f"{p} is not a marked point of {self}")

    def boundary_key(self, p: MarkedPoint):
        """Linearize the ccw order, cutting the circle at the start of ray 1."""
        if p.is_inf():
            return (2 * p.ray - 1, 0)
        return (2 * (p.ray - 1), p.pos)

    def ccw_successor(self, p: MarkedPoint) -> MarkedPoint:
        self.require(p)
        return p.shift(1)

    def cyclic_lt(self, x: MarkedPoint, y: MarkedPoint, z: MarkedPoint) -> bool:
        """True iff walking ccw from x meets y strictly before z."""
        if x == y or y == z or x == z:
            raise CoincidentPoints(f"cyclic_lt needs distinct points, got {x}, {y}, {z}")
        a, b, c = self.boundary_key(x), self.boundary_key(y), self.boundary_key(z)
        return (a < b < c) or (b < c < a) or (c < a < b)

    def in_open_arc(self, x: MarkedPoint, p: MarkedPoint, q: MarkedPoint) -> bool:
        """True iff x lies strictly inside the ccw arc from p to q."""
        if x == p or x == q:
            return False
        return self.cyclic_lt(p, x, q)

    def window(self, bound: int) -> list[MarkedPoint]:
        """All points (h,a) with |a| <= bound (plus accumulation points),
        ccw from (1,-bound)."""
        if bound < 1:
            raise ValueError(f"need bound >= 1, got {bound}")
        pts = []
        for h in range(1, self.n + 1):
            for a in range(-bound, bound + 1):
                pts.append(MarkedPoint(h, a))
            if self.completed:
                pts.append(MarkedPoint(h, INF))
        return pts

    def __repr__(self):
        bar = " completed" if self.completed else ""
        return f"DiskModel(n={self.n}{bar})"

    def to_json(self):
        return {"n": self.n, "completed": self.completed}

    @staticmethod
    def from_json(obj) -> "DiskModel":
        return DiskModel(int(obj["n"]), bool(obj.get("completed", False)))
