from fractions import Fraction

import pytest

from lgperiod import EmptySupport, LaurentPoly, newton_polytope
from lgperiod.polytope import hull_of_points

from helpers import random_laurent


def _contains_by_triangulation(hull_vertices, point):
    """Exact point-in-convex-polygon test from the CCW-orderable vertex list.

    Independent of the facet machinery: a point is inside iff it sits on the
    inner side of every directed edge of the polygon.
    """
    verts = sorted(hull_vertices)
    if len(verts) == 1:
        return tuple(point) == verts[0]

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    # order CCW around the centroid-free anchor: re-run a tiny monotone chain
    ordered = []
    lower = []
    for p in verts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(verts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ordered = lower[:-1] + upper[:-1]
    if len(ordered) == 2:
        a, b = ordered
        if cross(a, b, point) != 0:
            return False
        return (
            min(a[0], b[0]) <= point[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= point[1] <= max(a[1], b[1])
        )
    for a, b in zip(ordered, ordered[1:] + ordered[:1]):
        if cross(a, b, point) < 0:
            return False
    return True


def test_triangle_example():
    f = LaurentPoly(2, [((1, 0), 1), ((0, 1), 1), ((-1, -1), 1)])
    hull = newton_polytope(f)
    assert set(hull.vertices) == {(1, 0), (0, 1), (-1, -1)}
    assert hull.contains((0, 0))
    assert not hull.contains((1, 1))


def test_single_point_hull():
    hull = newton_polytope(LaurentPoly.one(3))
    assert hull.vertices == ((0, 0, 0),)
    assert hull.contains((0, 0, 0))
    assert not hull.contains((0, 0, 1))


def test_interval_hull():
    f = LaurentPoly(1, [((1,), 1), ((2,), 1), ((3,), 1)])
    hull = newton_polytope(f)
    assert hull.vertices == ((1,), (3,))
    assert hull.contains((2,))
    assert hull.contains((Fraction(3, 2),))
    assert not hull.contains((0,))
    assert not hull.contains((4,))


def test_zero_polynomial_has_no_polytope():
    with pytest.raises(EmptySupport):
        newton_polytope(LaurentPoly.zero(2))


def test_support_satisfies_all_facets(rng):
    for _ in range(25):
        rank = rng.randint(1, 4)
        f = random_laurent(rng, rank, max_terms=6, exp_bound=4, nonzero=True)
        hull = newton_polytope(f)
        for point in f.support():
            assert hull.contains(point)


def test_vertices_are_support_points_with_a_tight_facet(rng):
    for _ in range(25):
        rank = rng.randint(1, 3)
        f = random_laurent(rng, rank, max_terms=7, exp_bound=4, nonzero=True)
        hull = newton_polytope(f)
        support = set(f.support())
        for vertex in hull.vertices:
            assert vertex in support
            dots = [sum(a * v for a, v in zip(normal, vertex)) - b for normal, b in hull.facets]
            assert min(dots) == 0


def test_2d_facets_cut_exactly_the_hull(rng):
    for _ in range(20):
        f = random_laurent(rng, 2, max_terms=7, exp_bound=3, nonzero=True)
        hull = newton_polytope(f)
        for x in range(-4, 5):
            for y in range(-4, 5):
                expected = _contains_by_triangulation(hull.vertices, (x, y))
                assert hull.contains((x, y)) == expected


def test_3d_simplex_facets():
    f = LaurentPoly(
        3, [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1), ((-1, -1, -1), 1)]
    )
    hull = newton_polytope(f)
    assert len(hull.vertices) == 4
    assert len(hull.facets) == 4
    assert hull.contains((0, 0, 0))
    assert not hull.contains((2, 0, 0))
    assert not hull.contains((-1, -1, 0))


def test_3d_cube_with_face_centers():
    corners = [(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)]
    centers = [(1, 1, 0), (1, 1, 2), (1, 0, 1), (1, 2, 1), (0, 1, 1), (2, 1, 1)]
    hull = hull_of_points(corners + centers + [(1, 1, 1)], 3)
    assert set(hull.vertices) == set(corners)
    assert len(hull.facets) == 6
    assert hull.contains((1, 1, 1))
    assert not hull.contains((3, 1, 1))


def test_3d_coplanar_support():
    points = [(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 0), (1, 1, 0)]
    hull = hull_of_points(points, 3)
    assert set(hull.vertices) == {(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 0)}
    assert hull.contains((1, 1, 0))
    assert not hull.contains((1, 1, 1))
    assert not hull.contains((3, 0, 0))


def test_3d_collinear_support():
    points = [(0, 0, 0), (2, 4, 6), (1, 2, 3)]
    hull = hull_of_points(points, 3)
    assert set(hull.vertices) == {(0, 0, 0), (2, 4, 6)}
    assert hull.contains((1, 2, 3))
    assert not hull.contains((3, 6, 9))
    assert not hull.contains((1, 2, 4))


def test_2d_collinear_support():
    points = [(0, 0), (1, 1), (3, 3)]
    hull = hull_of_points(points, 2)
    assert set(hull.vertices) == {(0, 0), (3, 3)}
    assert hull.contains((2, 2))
    assert not hull.contains((4, 4))
    assert not hull.contains((1, 2))


def _barycentric_inside(subset, point):
    """Exact feasibility of point = sum(l_i * s_i), l >= 0, sum(l) = 1.

    Solves the 4x4 rational system for a 3-simplex (or smaller subsets padded
    with the affine constraint) by Gaussian elimination over Fractions.
    """
    k = len(subset)
    rows = []
    for coord in range(3):
        rows.append([Fraction(s[coord]) for s in subset] + [Fraction(point[coord])])
    rows.append([Fraction(1)] * k + [Fraction(1)])
    # eliminate
    pivot_cols = []
    r = 0
    for c in range(k):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        rows[r] = [v / rows[r][c] for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][-1] != 0:
            return False  # inconsistent
    if r < k:
        return None  # underdetermined subset; a smaller subset will decide
    solution = [Fraction(0)] * k
    for row_index, c in enumerate(pivot_cols):
        solution[c] = rows[row_index][-1]
    return all(v >= 0 for v in solution)


def _in_hull_caratheodory(points, point):
    """p lies in the hull iff it lies in the hull of some <= 4 of the points."""
    from itertools import combinations

    for size in (1, 2, 3, 4):
        for subset in combinations(points, size):
            if _barycentric_inside(subset, point) is True:
                return True
    return False


def test_3d_facets_match_caratheodory_membership(rng):
    for _ in range(12):
        count = rng.randint(1, 7)
        points = [
            tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(count)
        ]
        hull = hull_of_points(points, 3)
        for _ in range(40):
            probe = tuple(rng.randint(-3, 3) for _ in range(3))
            expected = _in_hull_caratheodory(points, probe)
            assert hull.contains(probe) == expected, (points, probe)


def test_rank4_bounding_box_relaxation():
    f = LaurentPoly(
        4,
        [((1, 0, 0, 0), 1), ((-1, 0, 0, 0), 1), ((0, 1, 0, 0), 1), ((0, -1, 1, -2), 1)],
    )
    hull = newton_polytope(f)
    normals = {a for a, _ in hull.facets}
    assert normals == {
        (1, 0, 0, 0), (-1, 0, 0, 0),
        (0, 1, 0, 0), (0, -1, 0, 0),
        (0, 0, 1, 0), (0, 0, -1, 0),
        (0, 0, 0, 1), (0, 0, 0, -1),
    }
    for point in f.support():
        assert hull.contains(point)
    # box relaxation admits the corner even though it is outside the true hull
    assert hull.contains((1, 1, 1, 0))
    assert not hull.contains((2, 0, 0, 0))
