"""Ground truth for finite type D: explicit quiver representations, Hom/Ext
by exact integer linear algebra, the knitted AR quiver, cluster-tilting
enumeration, the window embedding of the infinite models, and exchange-matrix
mutation.

Vertex labels: 1 and 2 are the fork tips, 3..k the spine with the straight
orientation toward the fork (arrows 3->1, 3->2, j -> j-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .category import Indecomposable, QuiverVertex, SupportOverflow, _lift, spine_key
from .disk import DiskModel, DomainError


class ShapeMismatch(DomainError):
    code = "ShapeMismatch"


class BadIndex(DomainError):
    code = "BadIndex"


class BadMatrix(DomainError):
    code = "BadMatrix"


@dataclass(frozen=True)
class FiniteQuiver:
    k: int

    def __post_init__(self):
        if self.k < 4:
            raise ValueError(f"type D needs k >= 4, got {self.k}")

    @property
    def vertices(self) -> range:
        return range(1, self.k + 1)

    @property
    def arrows(self) -> list[tuple[int, int]]:
        return [(3, 1), (3, 2)] + [(j, j - 1) for j in range(4, self.k + 1)]


@dataclass(frozen=True)
class FiniteRep:
    """Dimension vector plus one integer matrix per arrow.

    mats[(u, v)] has shape dims[v-1] x dims[u-1], rows as tuples.  Reps built
    by make_rep remember their shape code, which lets Hom computations run on
    a collapsed chain.
    """

    quiver: FiniteQuiver
    dims: tuple[int, ...]
    mats: dict = field(hash=False, compare=False, default_factory=dict)
    shape: tuple | None = field(hash=False, compare=False, default=None)

    def dim(self, v: int) -> int:
        return self.dims[v - 1]


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _zeros(r, c):
    return tuple(tuple(0 for _ in range(c)) for _ in range(r))


# shape codes: ("fork", f, b) has dim 1 at fork f and on spine 3..b (b=2: none);
# ("proj", b) both forks plus 3..b; ("spine", lo, hi) the interval lo..hi;
# ("dbl", c, b) both forks, dim 2 on 3..c, dim 1 on c+1..b.


def make_rep(q: FiniteQuiver, shape: tuple) -> FiniteRep:
    k = q.k
    dims = [0] * k

    def spine_fill(lo, hi, val):
        for v in range(lo, hi + 1):
            dims[v - 1] = val

    kind = shape[0]
    if kind == "fork":
        _, f, b = shape
        dims[f - 1] = 1
        spine_fill(3, b, 1)
    elif kind == "proj":
        _, b = shape
        dims[0] = dims[1] = 1
        spine_fill(3, b, 1)
    elif kind == "spine":
        _, lo, hi = shape
        spine_fill(lo, hi, 1)
    elif kind == "dbl":
        _, c, b = shape
        dims[0] = dims[1] = 1
        spine_fill(3, c, 2)
        spine_fill(c + 1, b, 1)
    else:
        raise ValueError(f"unknown shape {shape!r}")

    mats = {}
    for (u, v) in q.arrows:
        du, dv = dims[u - 1], dims[v - 1]
        if du == 0 or dv == 0:
            mats[(u, v)] = _zeros(dv, du)
        elif du == dv:
            mats[(u, v)] = _identity(du)
        elif du == 1 and dv == 2:
            mats[(u, v)] = ((1,), (1,))  # the strand enters the doubled zone
        elif du == 2 and dv == 1:
            # the two fork maps out of the doubled zone have distinct kernels
            mats[(u, v)] = ((1, 0),) if v == 1 else ((0, 1),)
        else:
            raise ValueError(f"unexpected dims {du}->{dv} in shape {shape!r}")
    return FiniteRep(q, tuple(dims), mats, shape)


def all_shapes(q: FiniteQuiver) -> list[tuple]:
    k = q.k
    shapes = [("fork", 1, 2), ("fork", 2, 2)]
    shapes += [("fork", f, b) for f in (1, 2) for b in range(3, k + 1)]
    shapes += [("proj", b) for b in range(3, k + 1)]
    shapes += [("spine", lo, hi) for lo in range(3, k + 1) for hi in range(lo, k + 1)]
    shapes += [("dbl", c, b) for c in range(3, k) for b in range(c + 1, k + 1)]
    return shapes


def shape_of_dims(q: FiniteQuiver, dims: tuple[int, ...]) -> tuple:
    """Identify the indecomposable shape carrying this dimension vector."""
    k = q.k
    f1, f2 = dims[0], dims[1]
    spine = dims[2:]
    ones = [v for v in range(3, k + 1) if dims[v - 1] == 1]
    twos = [v for v in range(3, k + 1) if dims[v - 1] == 2]
    if twos:
        if f1 == f2 == 1 and twos == list(range(3, twos[-1] + 1)):
            b = ones[-1] if ones else twos[-1]
            return ("dbl", twos[-1], b)
        raise ShapeMismatch(f"{dims} is not an indecomposable dimension vector")
    if f1 and f2:
        if not ones:
            raise ShapeMismatch(f"{dims} is not an indecomposable dimension vector")
        return ("proj", ones[-1])
    if f1 or f2:
        f = 1 if f1 else 2
        return ("fork", f, ones[-1] if ones else 2)
    if ones:
        return ("spine", ones[0], ones[-1])
    raise ShapeMismatch(f"{dims} is not an indecomposable dimension vector")


# ---------------------------------------------------------------------------
# exact linear algebra


def int_rank(rows: list[list[int]], ncols: int) -> int:
    """Rank over the rationals by fraction-free elimination (exact)."""
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    prev = 1
    c = 0
    while c < ncols and rank < len(rows):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            c += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            ri = rows[i]
            if ri[c] == 0:
                continue
            f = ri[c]
            p = pr[c]
            for j in range(c, ncols):
                ri[j] = (p * ri[j] - f * pr[j]) // prev
        prev = pr[c]
        rank += 1
        c += 1
    return rank


def _normalize_shape_pair(sm: tuple, sn: tuple):
    """Collapse a shape pair onto the minimal chain carrying the same
    order-and-adjacency pattern of breakpoints."""
    marks = set()
    for s in (sm, sn):
        for i in s[1:]:
            if s[0] == "fork" and i == s[1]:
                continue
            if isinstance(i, int) and i >= 3:
                marks.add(i)
                marks.add(i + 1)
    ordered = sorted(marks)
    rank = {v: 3 + r for r, v in enumerate(ordered)}

    def mp(s):
        if s[0] == "fork":
            b = s[2]
            return ("fork", s[1], rank[b] if b >= 3 else 2)
        return (s[0],) + tuple(rank[i] for i in s[1:])

    k = max(4, 3 + len(ordered))
    return mp(sm), mp(sn), k


_HOM_CACHE: dict = {}


def hom_dim(m: FiniteRep, n: FiniteRep) -> int:
    """Dimension of the space of intertwiners m -> n."""
    if m.quiver != n.quiver:
        raise ShapeMismatch("representations live over different quivers")
    if m.shape is not None and n.shape is not None:
        key = _normalize_shape_pair(m.shape, n.shape)
        val = _HOM_CACHE.get(key)
        if val is None:
            sm, sn, k = key
            q = FiniteQuiver(k)
            val = _hom_solve(make_rep(q, sm), make_rep(q, sn))
            _HOM_CACHE[key] = val
        return val
    return _hom_solve(m, n)


def _hom_solve(m: FiniteRep, n: FiniteRep) -> int:
    q = m.quiver
    # unknowns: entries of one matrix per vertex where both dims are positive
    offsets = {}
    total = 0
    for v in q.vertices:
        if m.dim(v) and n.dim(v):
            offsets[v] = total
            total += m.dim(v) * n.dim(v)
    if total == 0:
        return 0
    rows = []
    for (u, v) in q.arrows:
        mu, nv = m.dim(u), n.dim(v)
        if mu == 0 or nv == 0:
            continue
        ma, na = m.mats[(u, v)], n.mats[(u, v)]
        for p in range(nv):
            for qq in range(mu):
                row = [0] * total
                # (phi_v . m(a))[p,qq] = sum_s phi_v[p,s] m(a)[s,qq]
                if v in offsets:
                    for s in range(m.dim(v)):
                        row[offsets[v] + p * m.dim(v) + s] += ma[s][qq]
                # (n(a) . phi_u)[p,qq] = sum_t n(a)[p,t] phi_u[t,qq]
                if u in offsets:
                    for t in range(n.dim(u)):
                        row[offsets[u] + t * m.dim(u) + qq] -= na[p][t]
                if any(row):
                    rows.append(row)
    return total - int_rank(rows, total)


def euler_form(q: FiniteQuiver, d1, d2) -> int:
    """The bilinear form <d1,d2> = sum d1 d2 - sum over arrows d1(src) d2(dst)."""
    if len(d1) != q.k or len(d2) != q.k:
        raise ShapeMismatch(f"dimension vectors must have length {q.k}")
    val = sum(a * b for a, b in zip(d1, d2))
    for (u, v) in q.arrows:
        val -= d1[u - 1] * d2[v - 1]
    return val


def ext1_dim(m: FiniteRep, n: FiniteRep) -> int:
    val = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims)
    if val < 0:
        raise ShapeMismatch(f"negative Ext; non-module input? {m.dims} {n.dims}")
    return val


# ---------------------------------------------------------------------------
# the knitted AR quiver


@dataclass
class ARQuiver:
    quiver: FiniteQuiver
    positions: list[tuple[int, int]]  # (slice, quiver vertex)
    dims: dict  # position -> dimension vector
    arrows: list[tuple[tuple[int, int], tuple[int, int]]]
    tau: dict  # position -> position


def knit_ar_quiver(q: FiniteQuiver) -> ARQuiver:
    """Knit the module AR quiver from the projective staircase by mesh
    additivity."""
    k = q.k
    proj_pos = {1: (0, 1), 2: (0, 2)}
    for j in range(3, k + 1):
        proj_pos[j] = (j - 2, j)
    seeds = {}
    for j in q.vertices:
        shape = ("proj", j) if j >= 3 else ("fork", j, 2)
        seeds[proj_pos[j]] = make_rep(q, shape).dims
    order = list(range(k, 2, -1)) + [1, 2]
    into = {x: [w for (w, y) in q.arrows if y == x] for x in q.vertices}
    outof = {x: [y for (w, y) in q.arrows if w == x] for x in q.vertices}
    dims = {}
    m = 0
    while True:
        alive = False
        for x in order:
            pos = (m, x)
            if pos in seeds:
                dims[pos] = seeds[pos]
                alive = True
                continue
            prev = dims.get((m - 1, x))
            if prev is None:
                continue
            total = [0] * k
            for w in into[x]:
                mid = dims.get((m, w))
                if mid:
                    total = [a + b for a, b in zip(total, mid)]
            for y in outof[x]:
                mid = dims.get((m - 1, y))
                if mid:
                    total = [a + b for a, b in zip(total, mid)]
            cand = tuple(t - p for t, p in zip(total, prev))
            if all(c >= 0 for c in cand) and any(cand):
                dims[pos] = cand
                alive = True
        if not alive:
            break
        m += 1
        if m > 4 * k + 8:
            raise AssertionError("knitting failed to terminate")
    positions = sorted(dims)
    present = set(positions)
    arrows = []
    for (i, x) in positions:
        for y in outof[x]:
            if (i, y) in present:
                arrows.append(((i, x), (i, y)))
        for w in into[x]:
            if (i + 1, w) in present:
                arrows.append(((i, x), (i + 1, w)))
    tau = {(i, x): (i - 1, x) for (i, x) in positions if (i - 1, x) in present}
    return ARQuiver(q, positions, dims, arrows, tau)


def enumerate_indecomposables(q: FiniteQuiver) -> list[FiniteRep]:
    """One representative per isomorphism class, knitted then realized with
    explicit matrices."""
    ar = knit_ar_quiver(q)
    return [make_rep(q, shape_of_dims(q, ar.dims[pos])) for pos in ar.positions]


def ar_quiver_json(q: FiniteQuiver):
    ar = knit_ar_quiver(q)
    idx = {pos: i for i, pos in enumerate(ar.positions)}
    return {
        "k": q.k,
        "vertices": [
            {"id": idx[pos], "slice": pos[0], "vertex": pos[1], "dims": list(ar.dims[pos])}
            for pos in ar.positions
        ],
        "arrows": [[idx[a], idx[b]] for a, b in ar.arrows],
        "tau": [[idx[a], idx[b]] for a, b in ar.tau.items()],
    }


# ---------------------------------------------------------------------------
# cluster-category objects


@dataclass(frozen=True)
class ClusterObject:
    """A module or a shifted projective of the finite cluster category."""

    rep: FiniteRep
    shift_vertex: int | None = None  # set for P_i[1]

    def is_shift(self) -> bool:
        return self.shift_vertex is not None

    def label(self) -> str:
        if self.is_shift():
            return f"P{self.shift_vertex}[1]"
        return "M" + "".join(str(d) for d in self.rep.dims)


def cluster_objects(q: FiniteQuiver) -> list[ClusterObject]:
    objs = [ClusterObject(r) for r in enumerate_indecomposables(q)]
    for j in q.vertices:
        shape = ("proj", j) if j >= 3 else ("fork", j, 2)
        objs.append(ClusterObject(make_rep(q, shape), shift_vertex=j))
    return objs


def cluster_ext_dim(x: ClusterObject, y: ClusterObject) -> int:
    """dim Ext^1 in the cluster category; symmetric in x and y."""
    if x.rep.quiver != y.rep.quiver:
        raise ShapeMismatch("objects live over different quivers")
    if x.is_shift() and y.is_shift():
        return 0
    if x.is_shift():
        return y.rep.dim(x.shift_vertex)
    if y.is_shift():
        return x.rep.dim(y.shift_vertex)
    return ext1_dim(x.rep, y.rep) + ext1_dim(y.rep, x.rep)


def enumerate_cluster_tilting(q: FiniteQuiver) -> list[tuple[int, ...]]:
    """All maximal pairwise Ext-orthogonal object sets, as sorted index tuples
    into cluster_objects(q); each has exactly k members."""
    if q.k > 6:
        raise ValueError("tilting enumeration is capped at k = 6")
    objs = cluster_objects(q)
    nobj = len(objs)
    ok = [[False] * nobj for _ in range(nobj)]
    for i in range(nobj):
        for j in range(i + 1, nobj):
            ok[i][j] = ok[j][i] = cluster_ext_dim(objs[i], objs[j]) == 0
    out = []

    def grow(chosen, start):
        if len(chosen) == q.k:
            out.append(tuple(chosen))
            return
        for i in range(start, nobj):
            if nobj - i < q.k - len(chosen):
                break
            if all(ok[c][i] for c in chosen):
                chosen.append(i)
                grow(chosen, i + 1)
                chosen.pop()

    grow([], 0)
    return out


def exchange_partners(q: FiniteQuiver, tilting: tuple[int, ...], sets=None):
    """For each member of a tilting set, the objects completing the other
    k-1 members to a tilting set."""
    if sets is None:
        sets = enumerate_cluster_tilting(q)
    universe = set(sets)
    partners = {}
    for drop in tilting:
        rest = tuple(i for i in tilting if i != drop)
        partners[drop] = [
            t for t in universe if set(rest) < set(t) and drop not in t
        ]
    return partners


# ---------------------------------------------------------------------------
# embedding windows of the infinite models


def embed_window(model: DiskModel, xs, bound: int):
    """Realize symbolic objects inside a finite type-D quiver.

    Completed-model objects are transported through the doubled uncompleted
    model first.  Returns (quiver, mapping object -> ClusterObject).
    """
    lifted = {}
    base = None
    for x in xs:
        mdl, lx = _lift(model, x)
        base = mdl
        lifted[x] = lx
    if base is None:
        raise ValueError("nothing to embed")
    for x, lx in lifted.items():
        for v in (lx.a, lx.b):
            if v is not None and not v.is_fork() and abs(v.pos) > bound + 2:
                raise SupportOverflow(f"{x}: coordinate {v} outside window {bound}")
    spine = set()
    for p in base.window(bound):
        v = QuiverVertex(p.ray, p.pos)
        if not (v.ray == 1 and v.pos in (0, -1)):
            spine.add(v)
    for lx in lifted.values():
        for v in (lx.a, lx.b):
            if v is None or v.is_fork():
                continue
            spine.add(v)
            for d in (-1, 1):
                w = v.shift(d)
                if not (w.ray == 1 and w.pos in (0, -1)):
                    spine.add(w)
    chain = sorted(spine, key=lambda v: spine_key(base, v))
    k = len(chain) + 2
    img = {v: k - i for i, v in enumerate(chain)}
    q = FiniteQuiver(k)

    def realize(lx: Indecomposable) -> ClusterObject:
        if lx.kind in ("P", "P1"):
            if lx.a.is_fork():
                vtx = 2 if lx.a.prime else 1
                rep = make_rep(q, ("fork", vtx, 2))
            else:
                vtx = img[lx.a]
                rep = make_rep(q, ("proj", vtx))
            if lx.kind == "P1":
                return ClusterObject(rep, shift_vertex=vtx)
            return ClusterObject(rep)
        if lx.kind == "bar":
            if lx.a.is_fork():
                return ClusterObject(make_rep(q, ("fork", 2 if lx.a.prime else 1, img[lx.b])))
            return ClusterObject(make_rep(q, ("spine", img[lx.a], img[lx.b])))
        if lx.kind == "dbl":
            return ClusterObject(make_rep(q, ("dbl", img[lx.a], img[lx.b])))
        raise SupportOverflow(f"cannot realize {lx}")

    return q, {x: realize(lx) for x, lx in lifted.items()}


# ---------------------------------------------------------------------------
# exchange matrices


def validate_exchange_matrix(b) -> None:
    n = len(b)
    for row in b:
        if len(row) != n:
            raise BadMatrix("exchange matrix must be square")
    for i in range(n):
        if b[i][i] != 0:
            raise BadMatrix("diagonal entries must vanish")
        for j in range(n):
            if (b[i][j] > 0) != (b[j][i] < 0) or (b[i][j] == 0) != (b[j][i] == 0):
                raise BadMatrix(f"entries ({i},{j}) break skew-symmetry")


def mutate_exchange_matrix(b, z: int):
    """Matrix mutation in direction z (0-based index)."""
    n = len(b)
    if not 0 <= z < n:
        raise BadIndex(f"direction {z} out of range for size {n}")
    validate_exchange_matrix(b)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if x == z or y == z:
                out[x][y] = -b[x][y]
            else:
                out[x][y] = b[x][y] + (abs(b[x][z]) * b[z][y] + b[x][z] * abs(b[z][y])) // 2
    return out


def quiver_exchange_matrix(q: FiniteQuiver):
    n = q.k
    b = [[0] * n for _ in range(n)]
    for (u, v) in q.arrows:
        b[u - 1][v - 1] += 1
        b[v - 1][u - 1] -= 1
    return b
