"""
Combinatorial planar degenerations.

A DegenerationPlan records the union-of-planes picture of a degenerated
surface: planes, the indexed ramification lines with their plane pairs and
endpoints, and the indexed singular points (multi-points) with their
incident lines and declared local type.  Everything downstream (vertex
classification, the numeric gate, spanning subtrees, braid monodromy) is
computed from this combinatorial data; no analytic input exists anywhere.

Conventions:
  - lines are numbered 1..l and occupy fiber position j (doubling to
    positions 2j-1, 2j after regeneration);
  - vertices are numbered 1..N in the numeration the braid monodromy tables
    use (vertex N is swept first);
  - border lines are dashed frame edges; they bound cells but are not part
    of the ramification curve and never appear in Graph(S0);
  - local types: "2-point" (a marked smooth point of a single line),
    "3-point-A" / "3-point-B" (two chiralities of the two-line triple plane
    point), "conic-3-point" (three concurrent lines, middle line regenerates
    first), and "k-point" (valence > 3, type declared by name).

The toric trapezoid plan for the Hirzebruch surface F_{1,(2,2)} and the
cylinder grid for the (2,3)-embedded CP^1 x torus (a non-planar
counter-example with identified vertical borders) ship as fixtures, as do
the CP^1 x C_g building-block plans.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

TWO_POINT = "2-point"
THREE_A = "3-point-A"
THREE_B = "3-point-B"
CONIC_THREE = "conic-3-point"

# valence > 3 local types with a known local group surjection
KNOWN_GOOD_TYPES = {"4-point", "5-point", "6-point"}


@dataclass(frozen=True)
class PlanLine:
    id: int
    ends: Tuple[str, str]          # topological endpoints (corner names)
    border: bool = False
    planes: Tuple[int, ...] = ()   # ids of the planes meeting along this line


@dataclass(frozen=True)
class PlanVertex:
    id: int
    lines: Tuple[int, ...]         # incident ramification lines, sorted
    local_type: str

    def valence(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class DegenerationPlan:
    name: str
    planes: Tuple[int, ...]
    lines: Tuple[PlanLine, ...]
    vertices: Tuple[PlanVertex, ...]
    declared_cond2: bool = False
    declared_cond3: bool = False
    identifications: bool = False   # true for non-planar (torus-style) glueings
    regen_family: int = 1           # parasitic decoration family (see regeneration)

    # -- basic accessors ----------------------------------------------------

    def ram_lines(self) -> Tuple[PlanLine, ...]:
        return tuple(l for l in self.lines if not l.border)

    def line(self, i: int) -> PlanLine:
        for l in self.lines:
            if l.id == i:
                return l
        raise KeyError(f"no line {i}")

    def vertex(self, i: int) -> PlanVertex:
        for v in self.vertices:
            if v.id == i:
                return v
        raise KeyError(f"no vertex {i}")

    def n_planes(self) -> int:
        return len(self.planes)

    def n_lines(self) -> int:
        return len(self.ram_lines())

    def multipoints(self) -> Tuple[PlanVertex, ...]:
        """Vertices that are honest singular points of the line arrangement."""
        return tuple(v for v in self.vertices if v.valence() >= 2)

    def vertex_pairs(self) -> FrozenSet[Tuple[int, int]]:
        """Pairs of lines meeting at some plan vertex."""
        out = set()
        for v in self.vertices:
            for a, b in itertools.combinations(sorted(v.lines), 2):
                out.add((a, b))
        return frozenset(out)

    def parasitic_pairs(self) -> Tuple[Tuple[int, int], ...]:
        """Line pairs crossing only under projection, ordered lexicographically."""
        shared = self.vertex_pairs()
        ids = sorted(l.id for l in self.ram_lines())
        return tuple((i, j) for i, j in itertools.combinations(ids, 2) if (i, j) not in shared)

    def lines_of_vertex(self, vid: int) -> Tuple[int, ...]:
        return self.vertex(vid).lines

    def first_vertex_of_line(self) -> Dict[int, int]:
        """Map line -> smallest vertex id it belongs to (its D-block anchor)."""
        out: Dict[int, int] = {}
        for v in sorted(self.vertices, key=lambda v: v.id):
            for l in v.lines:
                out.setdefault(l, v.id)
        return out

    # -- validation ----------------------------------------------------------

    def validate(self) -> List[str]:
        problems = []
        for l in self.ram_lines():
            if len(l.planes) != 2:
                problems.append(f"line {l.id} lies in {len(l.planes)} planes, expected 2")
        seen = [l.id for l in self.ram_lines()]
        if sorted(seen) != list(range(1, len(seen) + 1)):
            problems.append("ramification lines must be numbered 1..l")
        for v in self.vertices:
            if v.valence() < 1:
                problems.append(f"vertex {v.id} has no incident lines")
            if v.valence() > 3 and v.local_type not in KNOWN_GOOD_TYPES | {"unknown"}:
                problems.append(f"vertex {v.id} has valence {v.valence()} but type {v.local_type}")
        return problems

    def euler_value(self) -> int:
        """mbar - lbar + nbar; equals 1 exactly when every bounded face of
        Graph(S0) is a triangle (the gated class).  Plans whose graph has
        longer cycles (the genus-carrying families) fall below 1."""
        mbar, lbar, nbar = self.graph_counts()
        return mbar - lbar + nbar

    # -- Graph(S0) ------------------------------------------------------------

    def graph_edges(self) -> Tuple[Tuple[str, str, int], ...]:
        """Edges of Graph(S0): one per ramification line.

        A line through two multi-points joins them; a line in M (a single
        multi-point) gets a synthetic 2-point endpoint 'y<line>'.
        """
        at: Dict[int, List[int]] = {l.id: [] for l in self.ram_lines()}
        for v in self.multipoints():
            for l in v.lines:
                at[l].append(v.id)
        edges = []
        for lid, vs in at.items():
            if len(vs) == 2:
                edges.append((f"v{vs[0]}", f"v{vs[1]}", lid))
            elif len(vs) == 1:
                edges.append((f"v{vs[0]}", f"y{lid}", lid))
            else:
                raise ValueError(f"line {lid} passes through {len(vs)} multi-points")
        return tuple(edges)

    def graph_vertices(self) -> Tuple[str, ...]:
        names = set()
        for a, b, _ in self.graph_edges():
            names.update((a, b))
        return tuple(sorted(names))

    def graph_triangles(self) -> Tuple[Tuple[str, str, str], ...]:
        adj: Dict[str, set] = {}
        for a, b, _ in self.graph_edges():
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        tris = []
        names = sorted(adj)
        for a, b, c in itertools.combinations(names, 3):
            if b in adj[a] and c in adj[a] and c in adj[b]:
                tris.append((a, b, c))
        return tuple(tris)

    def graph_counts(self) -> Tuple[int, int, int]:
        """(mbar, lbar, nbar): vertices, edges, triangles of Graph(S0)."""
        return len(self.graph_vertices()), len(self.graph_edges()), len(self.graph_triangles())

    # -- dual graph -------------------------------------------------------------

    def dual_graph(self) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, int, int], ...]]:
        """Vertices = planes, one edge per ramification line."""
        edges = []
        for l in self.ram_lines():
            p, q = l.planes
            edges.append((p, q, l.id))
        return self.planes, tuple(edges)

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "planes": list(self.planes),
            "lines": [
                {"id": l.id, "ends": list(l.ends), "border": l.border, "planes": list(l.planes)}
                for l in self.lines
            ],
            "vertices": [
                {"id": v.id, "lines": list(v.lines), "local_type": v.local_type}
                for v in self.vertices
            ],
            "declared": {"cond2": self.declared_cond2, "cond3": self.declared_cond3},
            "identifications": self.identifications,
            "regen_family": self.regen_family,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)

    @staticmethod
    def from_json(data: dict) -> "DegenerationPlan":
        lines = tuple(
            PlanLine(d["id"], tuple(d["ends"]), d.get("border", False), tuple(d.get("planes", ())))
            for d in data["lines"]
        )
        verts = tuple(
            PlanVertex(d["id"], tuple(sorted(d["lines"])), d["local_type"]) for d in data["vertices"]
        )
        declared = data.get("declared", {})
        return DegenerationPlan(
            name=data.get("name", "plan"),
            planes=tuple(data["planes"]),
            lines=lines,
            vertices=verts,
            declared_cond2=declared.get("cond2", False),
            declared_cond3=declared.get("cond3", False),
            identifications=data.get("identifications", False),
            regen_family=data.get("regen_family", 1),
        )


# ---------------------------------------------------------------------------
# vertex classification and the numeric gate
# ---------------------------------------------------------------------------

def classify_vertices(plan: DegenerationPlan) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    """Partition Graph(S0) vertices into boundary V_B and interior V_B^c.

    A vertex is interior iff it sits on at least two different triangles of
    Graph(S0); synthetic 2-point vertices are always boundary.
    """
    tri_count: Dict[str, int] = {}
    for tri in plan.graph_triangles():
        for name in tri:
            tri_count[name] = tri_count.get(name, 0) + 1
    boundary, interior = [], []
    for name in plan.graph_vertices():
        if tri_count.get(name, 0) >= 2:
            interior.append(name)
        else:
            boundary.append(name)
    return tuple(boundary), tuple(interior)


def check_condition4(plan: DegenerationPlan) -> bool:
    """Every boundary vertex must have an interior neighbour in Graph(S0)."""
    boundary, interior = classify_vertices(plan)
    interior_set = set(interior)
    if not interior_set:
        return False
    adj: Dict[str, set] = {}
    for a, b, _ in plan.graph_edges():
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return all(adj.get(v, set()) & interior_set for v in boundary)


def q_set(plan: DegenerationPlan) -> Tuple[PlanVertex, ...]:
    """Vertices of valence > 3 whose declared local type is known good."""
    out = []
    for v in plan.multipoints():
        if v.valence() > 3 and v.local_type in KNOWN_GOOD_TYPES:
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class GateReport:
    lines: int
    m: int
    n: int
    holds: bool
    mbar: int
    lbar: int
    nbar: int
    euler_ok: bool
    bound_chain_ok: bool

    def to_json(self) -> dict:
        return {
            "l": self.lines, "m": self.m, "n": self.n, "holds": self.holds,
            "mbar": self.mbar, "lbar": self.lbar, "nbar": self.nbar,
            "euler_ok": self.euler_ok, "bound_chain_ok": self.bound_chain_ok,
        }


def main_condition(plan: DegenerationPlan) -> GateReport:
    """The gate l - m <= n - 1, with the Euler and bound-chain side checks.

    The bound chain is max(n, m + nbar) < l + 1 <= m + n: the left half is
    the Euler count combined with mbar > m, the right half is the gate
    itself.  Both side checks are reported, not enforced.
    """
    l = plan.n_lines()
    m = len(q_set(plan))
    n = plan.n_planes()
    mbar, lbar, nbar = plan.graph_counts()
    holds = (l - m) <= (n - 1)
    euler_ok = (mbar - lbar + nbar == 1)
    bound_ok = max(n, m + nbar) < l + 1 <= m + n
    return GateReport(l, m, n, holds, mbar, lbar, nbar, euler_ok, bound_ok)


# ---------------------------------------------------------------------------
# spanning subtree
# ---------------------------------------------------------------------------

def spanning_subtree(plan: DegenerationPlan):
    """Erase one dual edge per chosen Q-vertex to produce a spanning tree.

    Returns (kept_edges, erased) where kept/erased are line ids.  The
    erasure respects: e_x passes through x; neighbouring chosen vertices get
    disjoint dual edges (no common plane); at most one erased line per
    multi-point.  Deterministic backtracking over line ids.
    """
    report = main_condition(plan)
    if not report.holds:
        raise ValueError("main condition fails; no spanning subtree of the required size")
    planes, edges = plan.dual_graph()
    l, n = plan.n_lines(), plan.n_planes()
    q = [v for v in q_set(plan)]
    k = l - (n - 1)  # number of edges to erase
    if k < 0:
        raise ValueError("dual graph already has fewer edges than a tree")
    if k > len(q):
        raise ValueError("not enough Q-vertices to erase down to a tree")
    chosen_vertices = q[:k] if k < len(q) else q  # choose k points from Q, smallest ids first

    line_planes = {lid: set(pl) for _, _, lid in edges for pl in [plan.line(lid).planes]}
    # vertex adjacency inside Q: two Q-vertices are neighbours if a line contains both
    def neighbours(v1: PlanVertex, v2: PlanVertex) -> bool:
        return bool(set(v1.lines) & set(v2.lines))

    # at most one erased line per multi-point: track used multi-points
    line_vertices: Dict[int, set] = {l_.id: set() for l_ in plan.ram_lines()}
    for v in plan.multipoints():
        for lid in v.lines:
            line_vertices[lid].add(v.id)

    def connected_without(erased: FrozenSet[int]) -> bool:
        adj: Dict[int, set] = {p: set() for p in planes}
        count = 0
        for p, qq, lid in edges:
            if lid in erased:
                continue
            adj[p].add(qq); adj[qq].add(p); count += 1
        if count != n - 1 + (len(edges) - len(erased) - (n - 1)):
            pass
        seen = set()
        stack = [planes[0]]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj[x] - seen)
        return len(seen) == n

    def backtrack(idx: int, erased: List[int], used_mp: set):
        if idx == len(chosen_vertices):
            er = frozenset(erased)
            if len(edges) - len(er) == n - 1 and connected_without(er):
                return list(erased)
            return None
        v = chosen_vertices[idx]
        for lid in sorted(v.lines):
            if lid in erased:
                continue
            if line_vertices[lid] & used_mp:
                continue
            # disjointness with previously erased edges of neighbouring Q-vertices
            ok = True
            for j in range(idx):
                w = chosen_vertices[j]
                if neighbours(v, w):
                    other = erased[j]
                    if line_planes[lid] & line_planes[other]:
                        ok = False
                        break
            if not ok:
                continue
            res = backtrack(idx + 1, erased + [lid], used_mp | line_vertices[lid])
            if res is not None:
                return res
        return None

    erased = backtrack(0, [], set())
    if erased is None:
        raise RuntimeError("exhaustive search found no valid erasure choice")
    kept = tuple(lid for _, _, lid in edges if lid not in set(erased))
    # structural verification
    if len(kept) != n - 1 or not connected_without(frozenset(erased)):
        raise RuntimeError("erasure did not produce a spanning tree")
    return kept, tuple(erased)


def is_spanning_tree(plan: DegenerationPlan, kept: Sequence[int]) -> bool:
    planes, edges = plan.dual_graph()
    keep = set(kept)
    n = len(planes)
    if len(keep) != n - 1:
        return False
    adj: Dict[int, set] = {p: set() for p in planes}
    for p, q_, lid in edges:
        if lid in keep:
            adj[p].add(q_); adj[q_].add(p)
    seen, stack = set(), [planes[0]]
    while stack:
        x = stack.pop()
        if x not in seen:
            seen.add(x)
            stack.extend(adj[x] - seen)
    return len(seen) == n


# ---------------------------------------------------------------------------
# bundled plans
# ---------------------------------------------------------------------------

def cpg_builder(g: int) -> DegenerationPlan:
    """Building-block degeneration of CP^1 x C_g: 8g planes, 9g-1 lines.

    Block k (k = g..1 left to right) is a six-triangle strip with a
    degenerated quadric attached; consecutive blocks share a strip column,
    whose line joins them in a three-line point.  g=1 reproduces the eight
    line / eight vertex picture, g=2 the seventeen line / sixteen vertex one.
    """
    if g < 1:
        raise ValueError("g must be at least 1")

    planes = list(range(1, 8 * g + 1))
    # plane ids: strip planes 1..6g left to right; block k occupies
    # 6(g-k)+1 .. 6(g-k)+6; quadric planes of block k are 6g+2k-1, 6g+2k.
    def S(k: int, m: int) -> int:
        return 6 * (g - k) + m

    def P7(k: int) -> int:
        return 6 * g + 2 * k - 1

    def P8(k: int) -> int:
        return 6 * g + 2 * k

    lines: List[PlanLine] = []

    def corner(k: int, tag: str) -> str:
        return f"{tag}.{k}"

    def add_line(lid, ends, pl):
        lines.append(PlanLine(lid, ends, False, tuple(pl)))

    for k in range(1, g + 1):
        base = 9 * (k - 1)
        b0, b1, b2, b3 = (corner(k, t) for t in ("b0", "b1", "b2", "b3"))
        t0, t1, t2, t3 = (corner(k, t) for t in ("t0", "t1", "t2", "t3"))
        q1, q2 = corner(k, "q1"), corner(k, "q2")
        add_line(base + 1, (b3, t2), (S(k, 5), S(k, 6)))
        add_line(base + 2, (b2, t2), (S(k, 4), S(k, 5)))
        add_line(base + 3, (b2, t1), (S(k, 3), S(k, 4)))
        add_line(base + 4, (b1, t1), (S(k, 2), S(k, 3)))
        add_line(base + 5, (b2, q1), (S(k, 4), P8(k)))
        add_line(base + 6, (q2, q1), (P7(k), P8(k)))
        add_line(base + 7, (t0, q2), (S(k, 1), P7(k)))
        add_line(base + 8, (b1, t0), (S(k, 1), S(k, 2)))
        if k >= 2:
            # joint line between block k and block k-1 (the shared column)
            add_line(9 * (k - 1), (corner(k - 1, "b0"), corner(k - 1, "t0")),
                     (S(k, 6), S(k - 1, 1)))

    verts: List[PlanVertex] = []
    vid = 0

    def add_vertex(ls, typ):
        nonlocal vid
        vid += 1
        verts.append(PlanVertex(vid, tuple(sorted(ls)), typ))

    # specials, block 1 then block 2, ...
    add_vertex((1,), TWO_POINT)
    add_vertex((2, 3, 5), CONIC_THREE)
    add_vertex((6, 7), THREE_B)
    add_vertex((4, 8), THREE_A)
    for k in range(2, g + 1):
        base = 9 * (k - 1)
        add_vertex((base, base + 1), THREE_B)
        add_vertex((base + 2, base + 3, base + 5), CONIC_THREE)
        add_vertex((base + 6, base + 7), THREE_B)
        add_vertex((base + 4, base + 8), THREE_A)
    # pair section: block 1 pairs, then joint, block 2 pairs, joint, ...
    for k in range(1, g + 1):
        base = 9 * (k - 1)
        add_vertex((base + 1, base + 2), THREE_A)
        add_vertex((base + 3, base + 4), THREE_B)
        add_vertex((base + 5, base + 6), THREE_A)
        if k < g:
            add_vertex((base + 7, base + 8, base + 9), CONIC_THREE)
        else:
            add_vertex((base + 7, base + 8), THREE_A)

    return DegenerationPlan(
        name=f"cp1xC{g}",
        planes=tuple(planes),
        lines=tuple(lines),
        vertices=tuple(verts),
        declared_cond2=True,
        declared_cond3=True,
        regen_family=1 if g == 1 else 2,
    )


def f1_22_plan() -> DegenerationPlan:
    """Toric degeneration of the Hirzebruch surface F_{1,(2,2)}.

    Twelve unit triangles on the trapezoid with corners (0,0), (4,0), (2,2),
    (0,2); thirteen interior lattice edges are the ramification lines; the
    two interior lattice points are 6-points and form the Q-set.
    """
    cells = [
        ((0, 0), (1, 0), (0, 1)), ((1, 0), (1, 1), (0, 1)), ((1, 0), (2, 0), (1, 1)),
        ((2, 0), (2, 1), (1, 1)), ((2, 0), (3, 0), (2, 1)), ((3, 0), (3, 1), (2, 1)),
        ((3, 0), (4, 0), (3, 1)),
        ((0, 1), (1, 1), (0, 2)), ((1, 1), (1, 2), (0, 2)), ((1, 1), (2, 1), (1, 2)),
        ((2, 1), (2, 2), (1, 2)), ((2, 1), (3, 1), (2, 2)),
    ]
    boundary_pts = {(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (3, 1), (2, 2), (1, 2), (0, 2), (0, 1)}
    border_edges = {((0, 0), (1, 0)), ((1, 0), (2, 0)), ((2, 0), (3, 0)), ((3, 0), (4, 0)),
                    ((4, 0), (3, 1)), ((3, 1), (2, 2)), ((2, 2), (1, 2)), ((1, 2), (0, 2)),
                    ((0, 2), (0, 1)), ((0, 1), (0, 0))}

    def norm(e):
        return tuple(sorted(e))

    border_edges = {norm(e) for e in border_edges}
    edge_cells: Dict[tuple, list] = {}
    for ci, cell in enumerate(cells, start=1):
        for a, b in itertools.combinations(cell, 2):
            edge_cells.setdefault(norm((a, b)), []).append(ci)
    interior = sorted(e for e, cs in edge_cells.items() if e not in border_edges and len(cs) == 2)
    lines = []
    line_id_of = {}
    for lid, e in enumerate(interior, start=1):
        line_id_of[e] = lid
        lines.append(PlanLine(lid, (str(e[0]), str(e[1])), False, tuple(edge_cells[e])))
    for e in sorted(border_edges):
        lines.append(PlanLine(100 + len(lines), (str(e[0]), str(e[1])), True, tuple(edge_cells.get(e, ()))))

    pts_lines: Dict[tuple, list] = {}
    for e, lid in line_id_of.items():
        for p in e:
            pts_lines.setdefault(p, []).append(lid)
    verts = []
    vid = 0
    for p in sorted(pts_lines):
        ls = sorted(pts_lines[p])
        if len(ls) < 2:
            continue
        vid += 1
        typ = f"{len(ls)}-point" if len(ls) > 3 else (CONIC_THREE if len(ls) == 3 else THREE_A)
        verts.append(PlanVertex(vid, tuple(ls), typ))
    return DegenerationPlan(
        name="F1_(2,2)",
        planes=tuple(range(1, 13)),
        lines=tuple(lines),
        vertices=tuple(verts),
        declared_cond2=True,
        declared_cond3=True,
    )


def cp1xt23_plan() -> DegenerationPlan:
    """The (2,3)-embedded CP^1 x torus grid: vertical borders identified.

    Twelve triangles on a 2 x 3 cylinder; fifteen ramification lines; the
    three middle-ring vertices are 6-points.  The identification breaks
    planarity, so the Euler count is 0 rather than 1; the plan is bundled
    as the gate counter-example.
    """
    W, rows = 3, 2  # 3 columns (cyclic), 2 rows of squares
    def v(r, c):
        return (r, c % W)
    cells = []
    for r in range(rows):
        for c in range(W):
            cells.append((v(r, c), v(r, c + 1), v(r + 1, c)))
            cells.append((v(r, c + 1), v(r + 1, c + 1), v(r + 1, c)))
    def norm(e):
        return tuple(sorted(e))
    edge_cells: Dict[tuple, list] = {}
    for ci, cell in enumerate(cells, start=1):
        for a, b in itertools.combinations(cell, 2):
            edge_cells.setdefault(norm((a, b)), []).append(ci)
    border = {norm((v(0, c), v(0, c + 1))) for c in range(W)} | \
             {norm((v(rows, c), v(rows, c + 1))) for c in range(W)}
    interior = sorted(e for e in edge_cells if e not in border)
    lines, line_id_of = [], {}
    for lid, e in enumerate(interior, start=1):
        line_id_of[e] = lid
        lines.append(PlanLine(lid, (str(e[0]), str(e[1])), False, tuple(edge_cells[e])))
    for e in sorted(border):
        lines.append(PlanLine(100 + len(lines), (str(e[0]), str(e[1])), True, tuple(edge_cells[e])))
    pts_lines: Dict[tuple, list] = {}
    for e, lid in line_id_of.items():
        for p in e:
            pts_lines.setdefault(p, []).append(lid)
    verts, vid = [], 0
    for p in sorted(pts_lines):
        ls = sorted(pts_lines[p])
        if len(ls) < 2:
            continue
        vid += 1
        typ = f"{len(ls)}-point" if len(ls) > 3 else (CONIC_THREE if len(ls) == 3 else THREE_A)
        verts.append(PlanVertex(vid, tuple(ls), typ))
    return DegenerationPlan(
        name="CP1xT_(2,3)",
        planes=tuple(range(1, 13)),
        lines=tuple(lines),
        vertices=tuple(verts),
        declared_cond2=True,
        declared_cond3=True,
        identifications=True,
    )


BUNDLED_PLANS = {
    "cp1xC1": lambda: cpg_builder(1),
    "cp1xC2": lambda: cpg_builder(2),
    "F1_22": f1_22_plan,
    "CP1xT_23": cp1xt23_plan,
}
