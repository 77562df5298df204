"""Exact Newton polytopes for pruning constant-term computations.

A polytope is stored as vertices plus inward facet inequalities
``<normal, x> >= offset`` with integer data.  Normals are chosen per
dimension (exact hulls for rank <= 3, coordinate bounding box for rank >= 4,
which is a weaker but still sound enclosing region); offsets are always the
minimum of the normal over the support, so every stored inequality is valid
for the whole support by construction.  Pruning soundness therefore never
depends on the facet enumeration being complete, only its sharpness does.
"""

from itertools import combinations, product
from math import gcd

from .errors import EmptySupport


def _primitive(vec):
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    return tuple(v // g for v in vec) if g > 1 else tuple(vec)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


class NewtonPolytope:
    """Convex region enclosing a polynomial's exponent vectors."""

    __slots__ = ("rank", "vertices", "facets")

    def __init__(self, rank, vertices, facets):
        self.rank = rank
        self.vertices = tuple(sorted(tuple(v) for v in vertices))
        self.facets = tuple(sorted((tuple(a), b) for a, b in facets))

    def contains(self, point):
        """Exact membership test; accepts integer or Fraction coordinates."""
        return all(_dot(a, point) >= b for a, b in self.facets)

    def __repr__(self):
        return f"NewtonPolytope(rank={self.rank}, vertices={list(self.vertices)})"

    def __eq__(self, other):
        if not isinstance(other, NewtonPolytope):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.vertices == other.vertices
            and self.facets == other.facets
        )


def newton_polytope(poly):
    """Newton polytope of a nonzero polynomial (exact hull for rank <= 3)."""
    points = poly.support()
    if not points:
        raise EmptySupport("the zero polynomial has no Newton polytope")
    return hull_of_points(points, poly.rank)


def hull_of_points(points, rank):
    points = sorted(set(tuple(p) for p in points))
    if rank == 1:
        vertices, normals = _hull_1d(points)
    elif rank == 2:
        vertices, normals = _hull_2d_with_normals(points)
    elif rank == 3:
        vertices, normals = _hull_3d(points)
    else:
        vertices, normals = _bounding_box(points, rank)
    facets = [(a, min(_dot(a, p) for p in points)) for a in sorted(set(normals))]
    return NewtonPolytope(rank, vertices, facets)


def _axis_normals(rank):
    out = []
    for i in range(rank):
        e = [0] * rank
        e[i] = 1
        out.append(tuple(e))
        e[i] = -1
        out.append(tuple(e))
    return out


def _hull_1d(points):
    lo, hi = points[0], points[-1]
    vertices = [lo] if lo == hi else [lo, hi]
    return vertices, [(1,), (-1,)]


def _monotone_chain(points):
    """Hull vertices in counterclockwise order; collinear points dropped."""
    if len(points) == 1:
        return list(points)

    def build(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and _cross2(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = build(points)
    upper = build(reversed(points))
    return lower[:-1] + upper[:-1]


def _hull_2d_with_normals(points):
    hull = _monotone_chain(points)
    if len(hull) == 1:
        return hull, _axis_normals(2)
    if len(hull) == 2:
        p, q = hull
        direction = _primitive(_sub(q, p))
        edge_normal = (-direction[1], direction[0])
        normals = [
            direction,
            tuple(-d for d in direction),
            edge_normal,
            tuple(-d for d in edge_normal),
        ]
        return hull, normals
    normals = []
    for p, q in zip(hull, hull[1:] + hull[:1]):
        dx, dy = _sub(q, p)
        normals.append(_primitive((-dy, dx)))
    return hull, normals


def _affine_frame_3d(points):
    """(affine dimension, data) where data is a spanning direction or normal."""
    p0 = points[0]
    dir1 = None
    for p in points[1:]:
        d = _sub(p, p0)
        if any(d):
            dir1 = d
            break
    if dir1 is None:
        return 0, None
    dir2 = None
    for p in points[1:]:
        d = _sub(p, p0)
        if _cross3(dir1, d) != (0, 0, 0):
            dir2 = d
            break
    if dir2 is None:
        return 1, _primitive(dir1)
    normal = _primitive(_cross3(dir1, dir2))
    for p in points[1:]:
        if _dot(normal, _sub(p, p0)) != 0:
            return 3, None
    return 2, normal


def _perp_pair(direction):
    """Two independent integer vectors orthogonal to a 3-vector."""
    candidates = []
    for axis in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        c = _cross3(direction, axis)
        if any(c):
            candidates.append(_primitive(c))
    first = candidates[0]
    for second in candidates[1:]:
        if _cross3(first, second) != (0, 0, 0):
            return first, second
    raise AssertionError("no orthogonal pair for a nonzero direction")


def _drop_axis(normal):
    """Coordinate axis along which projection is injective on the plane."""
    return max(range(3), key=lambda i: abs(normal[i]))


def _project_hull(points, normal):
    """2D hull of coplanar 3D points: vertices (in 3D) and lifted edge normals."""
    axis = _drop_axis(normal)
    keep = [i for i in range(3) if i != axis]
    back = {}
    flat = []
    for p in points:
        q = (p[keep[0]], p[keep[1]])
        back[q] = p
        flat.append(q)
    flat_hull = hull_of_points(flat, 2)
    vertices = [back[q] for q in flat_hull.vertices]
    lifted = []
    for a2, _ in flat_hull.facets:
        a3 = [0, 0, 0]
        a3[keep[0]], a3[keep[1]] = a2
        lifted.append(tuple(a3))
    return vertices, lifted


def _hull_3d(points):
    dim, frame = _affine_frame_3d(points)
    if dim == 0:
        return list(points), _axis_normals(3)
    if dim == 1:
        direction = frame
        axis = next(i for i in range(3) if direction[i] != 0)
        p0 = points[0]
        ts = [(p[axis] - p0[axis]) // direction[axis] for p in points]
        lo = points[ts.index(min(ts))]
        hi = points[ts.index(max(ts))]
        n1, n2 = _perp_pair(direction)
        normals = [direction, tuple(-d for d in direction)]
        for n in (n1, n2):
            normals += [n, tuple(-v for v in n)]
        return ([lo] if lo == hi else [lo, hi]), normals
    if dim == 2:
        normal = frame
        vertices, lifted = _project_hull(points, normal)
        normals = [normal, tuple(-v for v in normal)] + lifted
        return vertices, normals

    # full-dimensional: supporting planes from all triples (desk-scale supports)
    normals = set()
    for a, b, c in combinations(points, 3):
        n = _cross3(_sub(b, a), _sub(c, a))
        if n == (0, 0, 0):
            continue
        side = [_dot(n, _sub(p, a)) for p in points]
        if all(s >= 0 for s in side):
            normals.add(_primitive(n))
        elif all(s <= 0 for s in side):
            normals.add(_primitive(tuple(-v for v in n)))
    vertices = set()
    for n in normals:
        offset = min(_dot(n, p) for p in points)
        active = [p for p in points if _dot(n, p) == offset]
        if len(active) <= 2:
            vertices.update(active)
        else:
            face_vertices, _ = _project_hull(active, n)
            vertices.update(face_vertices)
    return sorted(vertices), list(normals)


def _bounding_box(points, rank):
    lows = [min(p[i] for p in points) for i in range(rank)]
    highs = [max(p[i] for p in points) for i in range(rank)]
    corners = sorted(set(product(*((lo, hi) for lo, hi in zip(lows, highs)))))
    return corners, _axis_normals(rank)
