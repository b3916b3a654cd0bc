"""Built-in reference complexes and their documented homology data.

These are the worked examples used by ``verify-paper`` and the test
suite: a 5-vertex sphere with diameter, its union with one filled
triangle, and the 6-vertex complex whose top homology class is not
realizable by Whitehead products.
"""

from __future__ import annotations

from . import complexes as cx


def sphere_with_diameter() -> cx.SimplicialComplex:
    """J_1 applied to the boundary triangle on {3,4,5}: the minimal
    triangulation of S^2 with a diameter, on 5 vertices."""
    return cx.j_operation(1, cx.boundary_simplex((1, 2, 3)))


def sphere_with_diameter_plus_triangle() -> cx.SimplicialComplex:
    """The previous complex united with the filled triangle {1,2,3}."""
    return cx.union(sphere_with_diameter(), cx.simplex((1, 2, 3), m=5))


def unrealizable_complex() -> cx.SimplicialComplex:
    """Join of two boundary triangles with both triangles filled in:
    (bd 123 * bd 456) + 123 + 456 on 6 vertices."""
    joined = cx.join(cx.boundary_simplex((1, 2, 3)), cx.boundary_simplex((1, 2, 3)))
    filled = cx.union(cx.simplex((1, 2, 3), m=6), cx.simplex((4, 5, 6), m=6))
    return cx.union(joined, filled)


def projective_plane() -> cx.SimplicialComplex:
    """The 6-vertex minimal triangulation of the real projective plane."""
    return cx.from_maximal_faces(6, [
        (1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
        (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6),
    ])


# (degree, expression, chain) rows documented for the sphere with diameter.
SPHERE_DIAMETER_TABLE = [
    (5, "[3,4,5]", "D3D4S5 + D3S4D5 + S3D4D5"),
    (5, "[1,2,3]", "D1D2S3 + D1S2D3 + S1D2D3"),
    (5, "[1,2,4]", "D1D2S4 + D1S2D4 + S1D2D4"),
    (5, "[1,2,5]", "D1D2S5 + D1S2D5 + S1D2D5"),
    (6, "[4,[1,2,3]]", "D1D2S3S4 + D1S2D3S4 + S1D2D3S4"),
    (6, "[5,[1,2,3]]", "D1D2S3S5 + D1S2D3S5 + S1D2D3S5"),
    (6, "[5,[1,2,4]]", "D1D2S4S5 + D1S2D4S5 + S1D2D4S5"),
    (7, "[4,[5,[1,2,3]]]", "D1D2S3S4S5 + D1S2D3S4S5 + S1D2D3S4S5"),
    (8, "[1,2,[3,4,5]]",
     "D1S2D3D4S5 + D1S2D3S4D5 + D1S2S3D4D5"
     " + S1D2D3D4S5 + S1D2D3S4D5 + S1D2S3D4D5"),
]

SPHERE_DIAMETER_RANKS = {5: 4, 6: 3, 7: 1, 8: 1}

# Rows documented for the sphere-with-diameter union the filled triangle.
PLUS_TRIANGLE_TABLE = [
    (5, "[3,4,5]", "D3D4S5 + D3S4D5 + S3D4D5"),
    (5, "[1,2,4]", "D1D2S4 + D1S2D4 + S1D2D4"),
    (5, "[1,2,5]", "D1D2S5 + D1S2D5 + S1D2D5"),
    (6, "[5,[1,2,4]]", "D1D2S4S5 + D1S2D4S5 + S1D2D4S5"),
    (8, "[1,2,[3,4,5]]",
     "D1S2D3D4S5 + D1S2D3S4D5 + D1S2S3D4D5"
     " + S1D2D3D4S5 + S1D2D3S4D5 + S1D2S3D4D5"),
]

PLUS_TRIANGLE_RANKS = {5: 3, 6: 1, 8: 1}

UNREALIZABLE_RANKS = {7: 6, 8: 6, 9: 2, 10: 1}
