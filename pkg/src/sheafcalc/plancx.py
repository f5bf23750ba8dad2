"""Exact rational planar regular cell complexes and cell-set calculus.

A complex stores vertices (rational points), lexicographically oriented
edges, and counterclockwise face cycles.  Grids come from cut lines;
arbitrary rational lines refine any complex.  Cell-sets carry the
locally-closed / closed / open predicates as face-poset order conditions,
which is what the cohomology layer consumes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .numbers import rat

Point = tuple  # (Fraction, Fraction)


def pt(x, y) -> Point:
    return (rat(x), rat(y))


def cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class Direction:
    """Primitive integer direction vector (p, q) != (0, 0)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p == 0 and self.q == 0:
            raise ValueError("direction cannot be zero")
        g = math.gcd(abs(self.p), abs(self.q))
        if g != 1:
            object.__setattr__(self, "p", self.p // g)
            object.__setattr__(self, "q", self.q // g)

    def scale(self, point: Point) -> Fraction:
        return self.p * point[0] + self.q * point[1]

    def norm_sq(self) -> int:
        return self.p * self.p + self.q * self.q

    def linf_ball_support(self) -> int:
        # support value of the unit sup-norm ball against this direction
        return abs(self.p) + abs(self.q)

    def __repr__(self):
        return "Direction(%d,%d)" % (self.p, self.q)


class PlanarComplex:
    """Regular CW decomposition of a convex rational window.

    Cells are addressed as (dim, index).  Edges are oriented from the
    lexicographically smaller endpoint; faces are convex ccw cycles
    (collinear cycle vertices are allowed after refinements).
    """

    def __init__(self, vertices, edges, faces, grid_cuts=None):
        self.vertices = list(vertices)
        self.edges = list(edges)
        self.faces = [tuple(f) for f in faces]
        self.grid_cuts = grid_cuts  # (x_cuts, y_cuts) when still a plain grid
        self._edge_index = {e: i for i, e in enumerate(self.edges)}
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self._vertex_cofaces = None
        self._edge_cofaces = None
        self._face_edge_cache = None

    # -- enumeration ---------------------------------------------------
    def ncells(self, dim: int) -> int:
        return (len(self.vertices), len(self.edges), len(self.faces))[dim]

    def all_cells(self):
        for dim in range(3):
            for i in range(self.ncells(dim)):
                yield (dim, i)

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if self.vertices[u] < self.vertices[v] else (v, u)
        return self._edge_index[key]

    # -- geometry ------------------------------------------------------
    def cell_vertices(self, cell):
        dim, i = cell
        if dim == 0:
            return (i,)
        if dim == 1:
            return self.edges[i]
        return self.faces[i]

    def cell_key(self, cell):
        """Deterministic geometric key, stable across re-indexings."""
        return tuple(sorted(self.vertices[v] for v in self.cell_vertices(cell)))

    def rep_point(self, cell) -> Point:
        dim, i = cell
        if dim == 0:
            return self.vertices[i]
        vs = [self.vertices[v] for v in self.cell_vertices(cell)]
        n = len(vs)
        return (sum(v[0] for v in vs) / n, sum(v[1] for v in vs) / n)

    def face_edge_cycle(self, f: int):
        """[(edge index, sign)] around face f; +1 where traversal matches orientation."""
        if self._face_edge_cache is None:
            self._face_edge_cache = [None] * len(self.faces)
        cached = self._face_edge_cache[f]
        if cached is not None:
            return cached
        cyc = self.faces[f]
        out = []
        for k in range(len(cyc)):
            a, b = cyc[k], cyc[(k + 1) % len(cyc)]
            if self.vertices[a] < self.vertices[b]:
                out.append((self._edge_index[(a, b)], 1))
            else:
                out.append((self._edge_index[(b, a)], -1))
        self._face_edge_cache[f] = out
        return out

    def incidence(self, big, small) -> int:
        """Incidence number between a cell and a codimension-1 boundary cell."""
        bd, bi = big
        sd, si = small
        if bd - sd != 1:
            return 0
        if bd == 1:
            u, v = self.edges[bi]
            if si == v:
                return 1
            if si == u:
                return -1
            return 0
        total = 0
        for e, sign in self.face_edge_cycle(bi):
            if e == si:
                total += sign
        return total

    # -- face poset ------------------------------------------------------
    def boundary_cells(self, cell):
        dim, i = cell
        if dim == 0:
            return ()
        if dim == 1:
            return tuple((0, v) for v in self.edges[i])
        return tuple((1, e) for e, _ in self.face_edge_cycle(i))

    def _build_cofaces(self):
        ve = [[] for _ in self.vertices]
        for i, (u, v) in enumerate(self.edges):
            ve[u].append(i)
            ve[v].append(i)
        ef = [[] for _ in self.edges]
        for fi in range(len(self.faces)):
            for e, _ in self.face_edge_cycle(fi):
                ef[e].append(fi)
        self._vertex_cofaces = ve
        self._edge_cofaces = ef

    def coboundary_cells(self, cell):
        if self._vertex_cofaces is None:
            self._build_cofaces()
        dim, i = cell
        if dim == 0:
            return tuple((1, e) for e in self._vertex_cofaces[i])
        if dim == 1:
            return tuple((2, f) for f in self._edge_cofaces[i])
        return ()

    # -- point location ---------------------------------------------------
    def point_in_cell(self, cell, point: Point) -> bool:
        dim, i = cell
        if dim == 0:
            return self.vertices[i] == point
        if dim == 1:
            a, b = (self.vertices[v] for v in self.edges[i])
            if cross(a, b, point) != 0:
                return False
            lo, hi = min(a, b), max(a, b)
            return lo < point < hi
        cyc = self.faces[i]
        for k in range(len(cyc)):
            a = self.vertices[cyc[k]]
            b = self.vertices[cyc[(k + 1) % len(cyc)]]
            if cross(a, b, point) <= 0:
                return False
        return True

    def locate(self, point: Point):
        """The unique cell containing the point, or None if outside the window."""
        if self.grid_cuts is not None:
            return self._locate_grid(point)
        for i, v in enumerate(self.vertices):
            if v == point:
                return (0, i)
        for i in range(len(self.edges)):
            if self.point_in_cell((1, i), point):
                return (1, i)
        for i in range(len(self.faces)):
            if self.point_in_cell((2, i), point):
                return (2, i)
        return None

    def _locate_grid(self, point):
        import bisect

        xs, ys = self.grid_cuts
        x, y = point
        if x < xs[0] or x > xs[-1] or y < ys[0] or y > ys[-1]:
            return None
        ix = bisect.bisect_left(xs, x)
        iy = bisect.bisect_left(ys, y)
        on_x = ix < len(xs) and xs[ix] == x
        on_y = iy < len(ys) and ys[iy] == y
        if on_x and on_y:
            return (0, self._vertex_index[(x, y)])
        if on_x:
            u = self._vertex_index[(x, ys[iy - 1])]
            v = self._vertex_index[(x, ys[iy])]
            return (1, self.edge_id(u, v))
        if on_y:
            u = self._vertex_index[(xs[ix - 1], y)]
            v = self._vertex_index[(xs[ix], y)]
            return (1, self.edge_id(u, v))
        v00 = self._vertex_index[(xs[ix - 1], ys[iy - 1])]
        for f in self.coboundary_faces_of_vertex(v00):
            if self.point_in_cell((2, f), point):
                return (2, f)
        return None

    def coboundary_faces_of_vertex(self, v):
        if self._vertex_cofaces is None:
            self._build_cofaces()
        faces = set()
        for e in self._vertex_cofaces[v]:
            for f in self._edge_cofaces[e]:
                faces.add(f)
        return sorted(faces)

    # -- validation -------------------------------------------------------
    def validate(self):
        """Regular-CW structure, ccw convex faces, and boundary-of-boundary zero."""
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise ValueError("duplicate vertex %s" % (v,))
            seen.add(v)
        for u, v in self.edges:
            if not self.vertices[u] < self.vertices[v]:
                raise ValueError("edge (%d,%d) not lexicographically oriented" % (u, v))
        for fi, cyc in enumerate(self.faces):
            if len(cyc) < 3:
                raise ValueError("face %d has fewer than 3 vertices" % fi)
            area2 = Fraction(0)
            for k in range(len(cyc)):
                a = self.vertices[cyc[k]]
                b = self.vertices[cyc[(k + 1) % len(cyc)]]
                c = self.vertices[cyc[(k + 2) % len(cyc)]]
                if cross(a, b, c) < 0:
                    raise ValueError("face %d is not convex ccw" % fi)
                key = (cyc[k], cyc[(k + 1) % len(cyc)])
                key = key if self.vertices[key[0]] < self.vertices[key[1]] else (key[1], key[0])
                if key not in self._edge_index:
                    raise ValueError("face %d uses a missing edge %s" % (fi, key))
                area2 += a[0] * b[1] - b[0] * a[1]
            if area2 <= 0:
                raise ValueError("face %d has nonpositive area" % fi)
            # boundary of boundary: vertex coefficients around the cycle cancel
            coeff = {}
            for e, sign in self.face_edge_cycle(fi):
                u, v = self.edges[e]
                coeff[v] = coeff.get(v, 0) + sign
                coeff[u] = coeff.get(u, 0) - sign
            if any(c != 0 for c in coeff.values()):
                raise ValueError("boundary of boundary nonzero on face %d" % fi)
        return True

    # -- refinement ---------------------------------------------------------
    def refine_by_line(self, d: Direction, s) -> tuple:
        """Split every cell crossed by the line {x . d = s}.

        Returns (refined complex, map old cell -> list of new cells whose
        disjoint union is the old cell).
        """
        s = rat(s)
        sign = [0] * len(self.vertices)
        for i, v in enumerate(self.vertices):
            val = d.scale(v)
            sign[i] = (val > s) - (val < s)

        new_vertices = list(self.vertices)

        def add_vertex(point):
            new_vertices.append(point)
            return len(new_vertices) - 1

        # split crossing edges
        split_at = {}  # old edge index -> new vertex index
        for ei, (u, v) in enumerate(self.edges):
            if sign[u] * sign[v] < 0:
                a, b = self.vertices[u], self.vertices[v]
                da, db = d.scale(a), d.scale(b)
                t = (s - da) / (db - da)
                w = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
                split_at[ei] = add_vertex(w)

        new_edges = []
        new_edge_index = {}

        def add_edge(u, v):
            if new_vertices[v] < new_vertices[u]:
                u, v = v, u
            key = (u, v)
            if key not in new_edge_index:
                new_edge_index[key] = len(new_edges)
                new_edges.append(key)
            return new_edge_index[key]

        cellmap = {}
        for i in range(len(self.vertices)):
            cellmap[(0, i)] = [(0, i)]
        for ei, (u, v) in enumerate(self.edges):
            if ei in split_at:
                w = split_at[ei]
                pieces = [(1, add_edge(u, w)), (1, add_edge(w, v)), (0, w)]
                cellmap[(1, ei)] = pieces
            else:
                cellmap[(1, ei)] = [(1, add_edge(u, v))]

        new_faces = []
        for fi, cyc in enumerate(self.faces):
            expanded = []
            for k in range(len(cyc)):
                a, b = cyc[k], cyc[(k + 1) % len(cyc)]
                expanded.append(a)
                key = (a, b) if self.vertices[a] < self.vertices[b] else (b, a)
                ei = self._edge_index[key]
                if ei in split_at:
                    expanded.append(split_at[ei])
            has_pos = any(sign[v] > 0 for v in cyc)
            has_neg = any(sign[v] < 0 for v in cyc)
            if not (has_pos and has_neg):
                for k in range(len(expanded)):
                    add_edge(expanded[k], expanded[(k + 1) % len(expanded)])
                new_faces.append(tuple(expanded))
                cellmap[(2, fi)] = [(2, len(new_faces) - 1)]
                continue
            vsign = lambda vi: sign[vi] if vi < len(self.vertices) else 0
            zeros = [k for k, vi in enumerate(expanded) if vsign(vi) == 0]
            if len(zeros) != 2:
                raise AssertionError("face crossed by line must meet it in 2 boundary points")
            z1, z2 = zeros
            cyc_a = expanded[z1:z2 + 1]
            cyc_b = expanded[z2:] + expanded[:z1 + 1]
            chord = add_edge(expanded[z1], expanded[z2])
            pieces = []
            for sub in (cyc_a, cyc_b):
                for k in range(len(sub) - 1):
                    add_edge(sub[k], sub[k + 1])
                new_faces.append(tuple(sub))
                pieces.append((2, len(new_faces) - 1))
            pieces.append((1, chord))
            cellmap[(2, fi)] = pieces

        # translate edge piece references to final indices (add_edge dedupes)
        refined = PlanarComplex(new_vertices, new_edges, new_faces, grid_cuts=None)
        return refined, cellmap


def build_grid(x_cuts, y_cuts) -> PlanarComplex:
    """Rectilinear complex on the given strictly increasing cut values."""
    xs = [rat(x) for x in x_cuts]
    ys = [rat(y) for y in y_cuts]
    for cuts in (xs, ys):
        if len(cuts) < 2:
            raise ValueError("need at least 2 cuts per axis")
        if any(a >= b for a, b in zip(cuts, cuts[1:])):
            raise ValueError("cuts must be strictly increasing")
    nx, ny = len(xs), len(ys)
    vertices = [(x, y) for x in xs for y in ys]
    vid = lambda ix, iy: ix * ny + iy
    edges = []
    for ix in range(nx):
        for iy in range(ny - 1):
            edges.append((vid(ix, iy), vid(ix, iy + 1)))
    for ix in range(nx - 1):
        for iy in range(ny):
            edges.append((vid(ix, iy), vid(ix + 1, iy)))
    faces = []
    for ix in range(nx - 1):
        for iy in range(ny - 1):
            faces.append((vid(ix, iy), vid(ix + 1, iy), vid(ix + 1, iy + 1), vid(ix, iy + 1)))
    return PlanarComplex(vertices, edges, faces, grid_cuts=(xs, ys))


class CellSet:
    """A set of cells of a complex, treated as the union of their open cells."""

    def __init__(self, parent: PlanarComplex, cells):
        self.parent = parent
        self.cells = frozenset(cells)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells))

    def __contains__(self, cell):
        return cell in self.cells

    def __eq__(self, other):
        return (isinstance(other, CellSet) and other.parent is self.parent
                and other.cells == self.cells)

    def locally_closed_witness(self):
        """None if order-convex, else a violating chain (c, c', c'')."""
        for (dim, i) in self.cells:
            if dim != 2:
                continue
            for e, _ in self.parent.face_edge_cycle(i):
                if (1, e) in self.cells:
                    continue
                for v in self.parent.edges[e]:
                    if (0, v) in self.cells:
                        return ((0, v), (1, e), (2, i))
        return None

    def is_locally_closed(self) -> bool:
        return self.locally_closed_witness() is None

    def closure(self) -> "CellSet":
        out = set(self.cells)
        stack = list(self.cells)
        while stack:
            cell = stack.pop()
            for b in self.parent.boundary_cells(cell):
                if b not in out:
                    out.add(b)
                    stack.append(b)
        return CellSet(self.parent, out)

    def is_closed(self) -> bool:
        return self.closure().cells == self.cells

    def is_open(self) -> bool:
        for cell in self.cells:
            for c in self.parent.coboundary_cells(cell):
                if c not in self.cells:
                    return False
        return True

    def is_closed_in(self, other: "CellSet") -> bool:
        """Down-closed within other (so: closed in the subspace topology)."""
        if not self.cells <= other.cells:
            return False
        for cell in self.cells:
            for b in self.parent.boundary_cells(cell):
                if b in other.cells and b not in self.cells:
                    return False
        return True

    def is_open_in(self, other: "CellSet") -> bool:
        if not self.cells <= other.cells:
            return False
        return CellSet(self.parent, other.cells - self.cells).is_closed_in(other)

    def intersect(self, other: "CellSet") -> "CellSet":
        return CellSet(self.parent, self.cells & other.cells)

    def union(self, other: "CellSet") -> "CellSet":
        return CellSet(self.parent, self.cells | other.cells)

    def minus(self, other: "CellSet") -> "CellSet":
        return CellSet(self.parent, self.cells - other.cells)

    def euler(self) -> int:
        return sum(1 if dim % 2 == 0 else -1 for dim, _ in self.cells)


def cellset_from_predicate(C: PlanarComplex, contains) -> CellSet:
    """Cells whose representative point satisfies the predicate.

    Valid when the complex is refined along every discontinuity line of the
    predicate, so each open cell is entirely in or out.
    """
    return CellSet(C, [c for c in C.all_cells() if contains(C.rep_point(c))])


def halfplane_cells(C: PlanarComplex, d: Direction, s, side: str = "le") -> CellSet:
    """Cells contained in the closed half-plane {x . d <= s} (or >= for 'ge')."""
    s = rat(s)
    for u, v in C.edges:
        su = d.scale(C.vertices[u]) - s
        sv = d.scale(C.vertices[v]) - s
        if (su > 0 and sv < 0) or (su < 0 and sv > 0):
            raise ValueError("complex is not refined along the line (%s, %s)" % (d, s))
    if side not in ("le", "ge"):
        raise ValueError("side must be 'le' or 'ge'")
    keep = []
    for cell in C.all_cells():
        vals = [d.scale(C.vertices[v]) for v in C.cell_vertices(cell)]
        ok = all(v <= s for v in vals) if side == "le" else all(v >= s for v in vals)
        if ok:
            keep.append(cell)
    return CellSet(C, keep)


def linf_dilate(region, a):
    """Minkowski sum of a union of closed boxes with the closed sup-norm ball."""
    from . import regions

    a = rat(a)
    if a < 0:
        raise ValueError("dilation radius must be nonnegative")
    boxes = regions.closed_boxes_of(region)
    if boxes is None:
        raise ValueError("sup-norm dilation requires a union of closed boxes")
    out = [regions.BoxRegion(b.x0 - a, b.x1 + a, b.y0 - a, b.y1 + a) for b in boxes]
    if len(out) == 1:
        return out[0]
    return regions.UnionRegion(out)
