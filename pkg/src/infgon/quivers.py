"""Windows of the translation quivers: tagged edges under elementary moves,
the ZQ construction on a finite quiver, the cluster AR window of the finite
oracle, and DOT/JSON serialization.

Window vertices whose neighbourhood is truncated (by the window bound, or by
sitting on an accumulation diagonal, where the completed translation is only
partial) are marked clipped and exempted from the stable-translation law.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import arcs
from .arcs import TaggedEdge
from .disk import DiskModel
from .oracle import FiniteQuiver, knit_ar_quiver


@dataclass
class WindowVertex:
    vid: int
    label: str
    kind: str
    clipped: bool
    payload: object = None


@dataclass
class TranslationQuiverWindow:
    vertices: list[WindowVertex]
    arrows: list[tuple[int, int]]
    tau: dict[int, int]
    sigma: dict[int, int] = field(default_factory=dict)

    def by_payload(self) -> dict:
        return {v.payload: v.vid for v in self.vertices}

    def interior(self) -> list[WindowVertex]:
        return [v for v in self.vertices if not v.clipped]

    def arrow_count(self, src: int, dst: int) -> int:
        return sum(1 for a in self.arrows if a == (src, dst))

    def translation_law_violations(self) -> list[tuple[int, int]]:
        """Pairs (x, y) of interior x with #arrows(y->x) != #arrows(tau x->y)."""
        from collections import Counter

        into: dict[int, Counter] = {}
        outof: dict[int, Counter] = {}
        for s, d in self.arrows:
            into.setdefault(d, Counter())[s] += 1
            outof.setdefault(s, Counter())[d] += 1
        bad = []
        for v in self.interior():
            x = v.vid
            tx = self.tau.get(x)
            if tx is None:
                continue
            want = outof.get(tx, Counter())
            got = into.get(x, Counter())
            for y in set(want) | set(got):
                if want[y] != got[y]:
                    bad.append((x, y))
        return bad

    def to_json(self):
        return {
            "vertices": [
                {"id": v.vid, "label": v.label, "kind": v.kind, "clipped": v.clipped}
                for v in self.vertices
            ],
            "arrows": [list(a) for a in self.arrows],
            "tau": [[s, d] for s, d in sorted(self.tau.items())],
        }


def _fill_sigma(win: TranslationQuiverWindow) -> None:
    index = {}
    for i, (s, d) in enumerate(win.arrows):
        index.setdefault((s, d), i)
    for i, (y, x) in enumerate(win.arrows):
        tx = win.tau.get(x)
        if tx is None:
            continue
        j = index.get((tx, y))
        if j is not None:
            win.sigma[i] = j


def _touches_accumulation(e: TaggedEdge) -> bool:
    return e.src.is_inf() or e.dst.is_inf()


def build_edge_quiver_window(model: DiskModel, bound: int) -> TranslationQuiverWindow:
    """Vertices: valid window edges; arrows: elementary moves; translation:
    the edge translation."""
    if bound < 2:
        raise ValueError(f"need bound >= 2, got {bound}")
    # the padding covers every neighbour of a window edge, so the reverse
    # index below is complete on the window
    padded = arcs.edges_in_window(model, bound + 2)
    moves = {e: arcs.elementary_moves_from(model, e) for e in padded}
    rev: dict[TaggedEdge, set] = {e: set() for e in padded}
    for f, outs in moves.items():
        for g in outs:
            if g in rev:
                rev[g].add(f)

    def in_window(p):
        return p.is_inf() or abs(p.pos) <= bound

    edges = [e for e in padded if in_window(e.src) and in_window(e.dst)]
    present = set(edges)
    vid = {e: i for i, e in enumerate(edges)}
    vertices = []
    arrow_list = []
    tau = {}
    for e in edges:
        te = arcs.translate(model, e)
        clipped = (
            _touches_accumulation(e)
            or te not in present
            or not moves[e] <= present
            or not rev[e] <= present
            or not moves[te] <= present
        )
        for f in moves[e]:
            if f in present:
                arrow_list.append((vid[e], vid[f]))
        if te in present:
            tau[vid[e]] = vid[te]
        kind = "puncture" if e.is_puncture_edge() else "chord"
        vertices.append(WindowVertex(vid[e], repr(e), kind, clipped, e))
    win = TranslationQuiverWindow(vertices, sorted(arrow_list), tau)
    _fill_sigma(win)
    return win


def build_zq_window(q: FiniteQuiver, slices: tuple[int, int]) -> TranslationQuiverWindow:
    """The stable translation quiver ZQ restricted to a slice range."""
    lo, hi = slices
    if hi < lo:
        raise ValueError("empty slice range")
    pos = [(m, x) for m in range(lo, hi + 1) for x in q.vertices]
    vid = {p: i for i, p in enumerate(pos)}
    arrow_list = []
    for (m, x) in pos:
        for (u, v) in q.arrows:
            if u == x and (m, v) in vid:
                arrow_list.append((vid[(m, x)], vid[(m, v)]))
            if v == x and (m + 1, u) in vid:
                arrow_list.append((vid[(m, x)], vid[(m + 1, u)]))
    tau = {vid[(m, x)]: vid[(m - 1, x)] for (m, x) in pos if (m - 1, x) in vid}
    vertices = [
        WindowVertex(vid[p], f"({p[0]},{p[1]})", "zq", p[0] == lo, p) for p in pos
    ]
    win = TranslationQuiverWindow(vertices, sorted(arrow_list), tau)
    _fill_sigma(win)
    return win


def mesh_at(win: TranslationQuiverWindow, x: int) -> list[tuple[int, int]]:
    """The mesh relation summands at x: pairs (arrow alpha: y -> x, sigma(alpha))."""
    out = []
    for i, (y, xx) in enumerate(win.arrows):
        if xx == x and i in win.sigma:
            out.append((i, win.sigma[i]))
    return out


def build_cluster_ar_window(q: FiniteQuiver) -> TranslationQuiverWindow:
    """The AR quiver of the finite cluster category: knitted modules plus the
    shifted projectives glued in as a cylinder.

    Each shift P_x[1] occupies two ZQ representatives: the slice left of the
    projectives (tau P_x = P_x[1]) and the slice right of the injectives
    (tau P_x[1] = I_x); arrows and the translation then come from plain ZQ
    adjacency between representatives.
    """
    ar = knit_ar_quiver(q)
    proj_slice = {x: 0 if x <= 2 else x - 2 for x in q.vertices}
    last = {}
    for (m, x) in ar.positions:
        if x not in last or last[x] < m:
            last[x] = m
    objects = [("shift", x) for x in q.vertices] + [("mod", p) for p in ar.positions]
    vid = {o: i for i, o in enumerate(objects)}
    reps = {}
    owner = {}
    for x in q.vertices:
        reps[("shift", x)] = [(proj_slice[x] - 1, x), (last[x] + 1, x)]
    for p in ar.positions:
        reps[("mod", p)] = [p]
    for o, ps in reps.items():
        for p in ps:
            owner[p] = o
    arrows = set()
    for o, ps in reps.items():
        for (m, x) in ps:
            for (u, v) in q.arrows:
                if u == x and (m, v) in owner:
                    arrows.add((vid[o], vid[owner[(m, v)]]))
                if v == x and (m + 1, u) in owner:
                    arrows.add((vid[o], vid[owner[(m + 1, u)]]))
    tau = {}
    for o, ps in reps.items():
        for (m, x) in ps:
            if (m - 1, x) in owner:
                tau[vid[o]] = vid[owner[(m - 1, x)]]
                break
    vertices = []
    for o in objects:
        if o[0] == "shift":
            vertices.append(WindowVertex(vid[o], f"P{o[1]}[1]", "shift", False, o))
        else:
            dims = ar.dims[o[1]]
            label = "M" + "".join(str(d) for d in dims)
            vertices.append(
                WindowVertex(vid[o], label, "module", False, ("mod", dims))
            )
    win = TranslationQuiverWindow(vertices, sorted(arrows), tau)
    _fill_sigma(win)
    return win


def to_dot(win: TranslationQuiverWindow) -> str:
    """Deterministic DOT text; translation drawn as dashed back-edges."""
    order = sorted(win.vertices, key=lambda v: (v.label, v.vid))
    rename = {v.vid: i for i, v in enumerate(order)}
    lines = ["digraph window {"]
    for v in order:
        shape = "doublecircle" if v.clipped else "ellipse"
        lines.append(f'  n{rename[v.vid]} [label="{v.label}", shape={shape}];')
    for s, d in sorted(win.arrows, key=lambda a: (rename[a[0]], rename[a[1]])):
        lines.append(f"  n{rename[s]} -> n{rename[d]};")
    for s, d in sorted(win.tau.items(), key=lambda a: (rename[a[0]], rename[a[1]])):
        lines.append(f"  n{rename[s]} -> n{rename[d]} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"
