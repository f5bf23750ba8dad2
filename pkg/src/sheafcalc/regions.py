"""Region descriptions consumed by sheaf objects and scenes.

Two families:

* rectilinear CSG (boxes with per-side open/closed flags, differences,
  unions, intersections) for the grid backend; every region exposes its
  cut lines and an exact point membership test;
* compact convex bodies (rational polygons, possibly degenerate, and
  rational discs) for the convex backend, with exact intersection and
  support-minimum predicates.
"""

from __future__ import annotations

from fractions import Fraction

from .numbers import QuadVal, rat
from .plancx import Direction, cross

# ---------------------------------------------------------------------------
# rectilinear CSG
# ---------------------------------------------------------------------------


class RectRegion:
    def contains(self, point) -> bool:
        raise NotImplementedError

    def cuts(self):
        """(x values, y values) of all potential discontinuity lines."""
        raise NotImplementedError


class EmptyRegion(RectRegion):
    def contains(self, point):
        return False

    def cuts(self):
        return frozenset(), frozenset()

    def __repr__(self):
        return "EmptyRegion()"


class BoxRegion(RectRegion):
    """Axis box with per-side open flags; degenerate axes allowed when closed."""

    def __init__(self, x0, x1, y0, y1, open_x0=False, open_x1=False,
                 open_y0=False, open_y1=False):
        self.x0, self.x1 = rat(x0), rat(x1)
        self.y0, self.y1 = rat(y0), rat(y1)
        if self.x0 > self.x1 or self.y0 > self.y1:
            raise ValueError("box bounds out of order")
        self.open_x0, self.open_x1 = bool(open_x0), bool(open_x1)
        self.open_y0, self.open_y1 = bool(open_y0), bool(open_y1)
        if self.x0 == self.x1 and (self.open_x0 or self.open_x1) and not (self.open_x0 and self.open_x1):
            pass  # half-open degenerate axis: empty, still a valid (empty) region
        self._empty = ((self.x0 == self.x1 and (self.open_x0 or self.open_x1))
                       or (self.y0 == self.y1 and (self.open_y0 or self.open_y1)))

    def contains(self, point):
        if self._empty:
            return False
        x, y = point
        if (x < self.x0 or (self.open_x0 and x == self.x0)
                or x > self.x1 or (self.open_x1 and x == self.x1)):
            return False
        if (y < self.y0 or (self.open_y0 and y == self.y0)
                or y > self.y1 or (self.open_y1 and y == self.y1)):
            return False
        return True

    def is_closed_box(self):
        return not (self.open_x0 or self.open_x1 or self.open_y0 or self.open_y1)

    def cuts(self):
        return frozenset((self.x0, self.x1)), frozenset((self.y0, self.y1))

    def __repr__(self):
        return "BoxRegion(%s..%s, %s..%s)" % (self.x0, self.x1, self.y0, self.y1)


class UnionRegion(RectRegion):
    def __init__(self, parts):
        self.parts = list(parts)

    def contains(self, point):
        return any(p.contains(point) for p in self.parts)

    def cuts(self):
        xs, ys = set(), set()
        for p in self.parts:
            cx, cy = p.cuts()
            xs |= cx
            ys |= cy
        return frozenset(xs), frozenset(ys)

    def __repr__(self):
        return "UnionRegion(%r)" % (self.parts,)


class DiffRegion(RectRegion):
    def __init__(self, outer, removed):
        self.outer = outer
        self.removed = removed

    def contains(self, point):
        return self.outer.contains(point) and not self.removed.contains(point)

    def cuts(self):
        ax, ay = self.outer.cuts()
        bx, by = self.removed.cuts()
        return ax | bx, ay | by

    def __repr__(self):
        return "DiffRegion(%r, %r)" % (self.outer, self.removed)


class IntersectRegion(RectRegion):
    def __init__(self, a, b):
        self.a = a
        self.b = b

    def contains(self, point):
        return self.a.contains(point) and self.b.contains(point)

    def cuts(self):
        ax, ay = self.a.cuts()
        bx, by = self.b.cuts()
        return ax | bx, ay | by

    def __repr__(self):
        return "IntersectRegion(%r, %r)" % (self.a, self.b)


def closed_boxes_of(region):
    """Flatten to a list of closed boxes, or None if not such a union."""
    if isinstance(region, BoxRegion):
        return [region] if region.is_closed_box() else None
    if isinstance(region, UnionRegion):
        out = []
        for p in region.parts:
            sub = closed_boxes_of(p)
            if sub is None:
                return None
            out.extend(sub)
        return out
    return None


def closed_box(x0, x1, y0, y1) -> BoxRegion:
    return BoxRegion(x0, x1, y0, y1)


def open_box(x0, x1, y0, y1) -> BoxRegion:
    return BoxRegion(x0, x1, y0, y1, True, True, True, True)


# ---------------------------------------------------------------------------
# convex bodies
# ---------------------------------------------------------------------------


def convex_hull(points):
    """CCW hull; collinear inputs give the extreme segment, one point gives itself."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    def half(ordered):
        chain = []
        for p in ordered:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain
    lower = half(pts)
    upper = half(list(reversed(pts)))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:  # all points collinear: keep the two extremes
        return [pts[0], pts[-1]]
    return hull


def _sqdist_point_segment(p, a, b) -> Fraction:
    ab = (b[0] - a[0], b[1] - a[1])
    ap = (p[0] - a[0], p[1] - a[1])
    denom = ab[0] * ab[0] + ab[1] * ab[1]
    if denom == 0:
        return ap[0] * ap[0] + ap[1] * ap[1]
    t = (ap[0] * ab[0] + ap[1] * ab[1]) / denom
    t = min(Fraction(1), max(Fraction(0), t))
    dx = ap[0] - t * ab[0]
    dy = ap[1] - t * ab[1]
    return dx * dx + dy * dy


class ConvexBody:
    """Compact convex body: rational polygon (possibly a segment or point) or disc."""

    def __init__(self, kind, pts=None, center=None, radius=None):
        self.kind = kind
        if kind == "poly":
            self.pts = tuple(pts)
            if not self.pts:
                raise ValueError("polygon needs at least one vertex")
        elif kind == "disc":
            self.center = (rat(center[0]), rat(center[1]))
            self.radius = rat(radius)
            if self.radius <= 0:
                raise ValueError("disc radius must be positive (use a point polygon for r = 0)")
        else:
            raise ValueError("unknown body kind %r" % (kind,))

    # -- constructors ---------------------------------------------------
    @staticmethod
    def polygon(points):
        pts = convex_hull([(rat(x), rat(y)) for x, y in points])
        return ConvexBody("poly", pts=pts)

    @staticmethod
    def box(x0, x1, y0, y1):
        return ConvexBody.polygon([(x0, y0), (x1, y0), (x1, y1), (x0, y1)])

    @staticmethod
    def segment(a, b):
        return ConvexBody.polygon([a, b])

    @staticmethod
    def point(p):
        return ConvexBody.polygon([p])

    @staticmethod
    def disc(center, radius):
        return ConvexBody("disc", center=center, radius=radius)

    # -- predicates ------------------------------------------------------
    def contains(self, point) -> bool:
        if self.kind == "disc":
            dx = point[0] - self.center[0]
            dy = point[1] - self.center[1]
            return dx * dx + dy * dy <= self.radius * self.radius
        pts = self.pts
        if len(pts) == 1:
            return point == pts[0]
        if len(pts) == 2:
            a, b = pts
            if cross(a, b, point) != 0:
                return False
            return min(a, b) <= point <= max(a, b)
        for k in range(len(pts)):
            if cross(pts[k], pts[(k + 1) % len(pts)], point) < 0:
                return False
        return True

    def sqdist_to_point(self, point) -> Fraction:
        if self.kind == "disc":
            raise ValueError("squared distance to a disc is not rational")
        if self.contains(point):
            return Fraction(0)
        pts = self.pts
        if len(pts) == 1:
            dx, dy = point[0] - pts[0][0], point[1] - pts[0][1]
            return dx * dx + dy * dy
        best = None
        for k in range(len(pts)):
            d2 = _sqdist_point_segment(point, pts[k], pts[(k + 1) % len(pts)])
            if best is None or d2 < best:
                best = d2
        return best

    def meets(self, other: "ConvexBody") -> bool:
        """Whether the two closed bodies intersect (touching counts)."""
        a, b = self, other
        if a.kind == "disc" and b.kind == "disc":
            dx = a.center[0] - b.center[0]
            dy = a.center[1] - b.center[1]
            s = a.radius + b.radius
            return dx * dx + dy * dy <= s * s
        if a.kind == "disc":
            a, b = b, a
        if b.kind == "disc":
            return a.sqdist_to_point(b.center) <= b.radius * b.radius
        diffs = [(p[0] - q[0], p[1] - q[1]) for p in a.pts for q in b.pts]
        return ConvexBody.polygon(diffs).contains((Fraction(0), Fraction(0)))

    def contains_body(self, other: "ConvexBody") -> bool:
        if self.kind == "poly" and other.kind == "poly":
            return all(self.contains(p) for p in other.pts)
        if self.kind == "disc" and other.kind == "poly":
            return all(self.contains(p) for p in other.pts)
        if self.kind == "disc" and other.kind == "disc":
            dr = self.radius - other.radius
            if dr < 0:
                return False
            dx = self.center[0] - other.center[0]
            dy = self.center[1] - other.center[1]
            return dx * dx + dy * dy <= dr * dr
        # poly contains disc: center inside, every boundary edge at distance >= r
        if not self.contains(other.center):
            return False
        pts = self.pts
        if len(pts) < 3:
            return False
        r2 = other.radius * other.radius
        for k in range(len(pts)):
            if _sqdist_point_segment(other.center, pts[k], pts[(k + 1) % len(pts)]) < r2:
                return False
        return True

    def support_min(self, d: Direction):
        """min over the body of x . d; a QuadVal for discs."""
        if self.kind == "poly":
            return QuadVal(min(d.scale(p) for p in self.pts))
        return QuadVal(d.scale(self.center)) - QuadVal(0, self.radius, d.norm_sq())

    def bbox(self):
        if self.kind == "poly":
            xs = [p[0] for p in self.pts]
            ys = [p[1] for p in self.pts]
            return min(xs), max(xs), min(ys), max(ys)
        return (self.center[0] - self.radius, self.center[0] + self.radius,
                self.center[1] - self.radius, self.center[1] + self.radius)

    def clip_halfplane(self, n, c):
        """Intersection with {x . n <= c} for an integer normal n; polygons only."""
        if self.kind == "disc":
            raise ValueError("cannot clip a disc by a half-plane exactly")
        val = lambda p: n[0] * p[0] + n[1] * p[1]
        pts = list(self.pts)
        if len(pts) == 1:
            return self if val(pts[0]) <= c else None
        if len(pts) == 2:
            a, b = pts
            va, vb = val(a), val(b)
            if va > c and vb > c:
                return None
            if va <= c and vb <= c:
                return self
            t = (c - va) / (vb - va)
            m = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
            keep = a if va <= c else b
            return ConvexBody.polygon([keep, m])
        out = []
        for k in range(len(pts)):
            a, b = pts[k], pts[(k + 1) % len(pts)]
            va, vb = val(a), val(b)
            if va <= c:
                out.append(a)
            if (va <= c) != (vb <= c):
                t = (c - va) / (vb - va)
                out.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
        if not out:
            return None
        return ConvexBody.polygon(out)

    def clip_to_body(self, clip: "ConvexBody"):
        """Intersection with a convex polygon; None when empty."""
        if clip.kind != "poly" or self.kind != "poly":
            raise ValueError("exact clipping needs two polygons")
        if len(clip.pts) == 1:
            return clip if self.contains(clip.pts[0]) else None
        if len(clip.pts) == 2:
            a, b = clip.pts
            body = self
            d = (b[0] - a[0], b[1] - a[1])
            # clip self to the segment's line and span
            for n, c in (((d[1], -d[0]), d[1] * a[0] - d[0] * a[1]),
                         ((-d[1], d[0]), -(d[1] * a[0] - d[0] * a[1]))):
                body = body.clip_halfplane(n, c)
                if body is None:
                    return None
            for n, c in (((d[0], d[1]), d[0] * b[0] + d[1] * b[1]),
                         ((-d[0], -d[1]), -(d[0] * a[0] + d[1] * a[1]))):
                body = body.clip_halfplane(n, c)
                if body is None:
                    return None
            return body
        body = self
        pts = clip.pts
        for k in range(len(pts)):
            a, b = pts[k], pts[(k + 1) % len(pts)]
            n = (a[1] - b[1], b[0] - a[0])  # inward normal of ccw edge, as <= constraint
            body = body.clip_halfplane((-n[0], -n[1]), -(n[0] * a[0] + n[1] * a[1]))
            if body is None:
                return None
        return body

    def __repr__(self):
        if self.kind == "poly":
            return "ConvexBody.polygon(%r)" % (list(self.pts),)
        return "ConvexBody.disc(%r, %s)" % (self.center, self.radius)


class ConvexDiffRegion:
    """A compact convex body minus pairwise disjoint compact convex holes."""

    def __init__(self, outer: ConvexBody, holes=()):
        self.outer = outer
        self.holes = tuple(holes)
        for i, h in enumerate(self.holes):
            if not outer.contains_body(h):
                raise ValueError("hole %d is not contained in the outer body" % i)
        for i in range(len(self.holes)):
            for j in range(i + 1, len(self.holes)):
                if self.holes[i].meets(self.holes[j]):
                    raise ValueError("holes %d and %d intersect or touch" % (i, j))

    def contains(self, point) -> bool:
        if not self.outer.contains(point):
            return False
        return not any(h.contains(point) for h in self.holes)

    def euler(self) -> int:
        return 1 - len(self.holes)

    def bbox(self):
        return self.outer.bbox()

    def __repr__(self):
        return "ConvexDiffRegion(%r, holes=%d)" % (self.outer, len(self.holes))


def ball_body(center, a, norm: str) -> ConvexBody:
    """The closed radius-a ball at the given center (a >= 0; a == 0 is the point)."""
    a = rat(a)
    if a < 0:
        raise ValueError("ball radius must be nonnegative")
    if a == 0:
        return ConvexBody.point(center)
    if norm == "l2":
        return ConvexBody.disc(center, a)
    if norm == "linf":
        x, y = rat(center[0]), rat(center[1])
        return ConvexBody.box(x - a, x + a, y - a, y + a)
    raise ValueError("unknown norm %r" % (norm,))
