"""Finite simplicial complexes on the vertex set {1, ..., m}.

Faces are stored explicitly as integer bitmasks (bit v-1 set iff vertex v
belongs to the face), so membership tests and subset enumeration over all
2^m vertex subsets are cheap.  All values are immutable; every operation
returns a fresh complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Optional

from .errors import InvalidVertex, NotAFace

# Injective relabeling of vertices, source label -> target label.
VertexMap = Mapping[int, int]


def to_bits(vertices: Iterable[int]) -> int:
    """Pack 1-based vertex indices into a bitmask."""
    bits = 0
    for v in vertices:
        bits |= 1 << (v - 1)
    return bits


def from_bits(bits: int) -> tuple[int, ...]:
    """Unpack a bitmask into an ascending tuple of 1-based vertices."""
    out = []
    v = 1
    while bits:
        if bits & 1:
            out.append(v)
        bits >>= 1
        v += 1
    return tuple(out)


def subsets_of(bits: int):
    """Iterate all submasks of ``bits``, including 0 and ``bits`` itself."""
    sub = bits
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & bits


def _check_vertices(vertices: Iterable[int], m: int) -> None:
    for v in vertices:
        if not 1 <= v <= m:
            raise InvalidVertex(f"vertex {v} not in 1..{m}")


def check_vertex_map(phi: VertexMap) -> None:
    if len(set(phi.values())) != len(phi):
        raise InvalidVertex(f"vertex map is not injective: {dict(phi)}")


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of faces on {1, ..., m}.

    ``faces`` always contains the empty face (bitmask 0).  Vertices of [m]
    that appear in no face ("ghost" vertices) are permitted.
    """

    m: int
    faces: frozenset[int]

    def __post_init__(self):
        if not 0 <= self.m <= 63:
            raise InvalidVertex(f"vertex count {self.m} not in 0..63")

    # -- queries ---------------------------------------------------------

    def has_face(self, vertices: Iterable[int]) -> bool:
        return to_bits(vertices) in self.faces

    def has_face_bits(self, bits: int) -> bool:
        return bits in self.faces

    @property
    def dim(self) -> int:
        return max(b.bit_count() for b in self.faces) - 1

    def vertices(self) -> tuple[int, ...]:
        """Vertices that are actually faces (ghosts excluded)."""
        return tuple(v for v in range(1, self.m + 1)
                     if (1 << (v - 1)) in self.faces)

    def faces_of_size(self, k: int) -> list[int]:
        """Bitmasks of all faces with exactly k vertices, sorted."""
        return sorted(b for b in self.faces if b.bit_count() == k)

    def faces_as_tuples(self) -> list[tuple[int, ...]]:
        return sorted((from_bits(b) for b in self.faces),
                      key=lambda t: (len(t), t))

    def maximal_faces(self) -> list[tuple[int, ...]]:
        """Faces not properly contained in another face, sorted."""
        out = []
        for b in self.faces:
            if any((b | (1 << v)) in self.faces
                   for v in range(self.m) if not b >> v & 1):
                continue
            out.append(from_bits(b))
        out.sort()
        return out

    def is_downward_closed(self) -> bool:
        return all(sub in self.faces for b in self.faces for sub in subsets_of(b))

    def __contains__(self, vertices) -> bool:
        return self.has_face(vertices)


EMPTY_COMPLEX = SimplicialComplex(0, frozenset({0}))


def from_maximal_faces(m: int, maximal: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of the listed faces, plus the empty face."""
    faces = {0}
    for face in maximal:
        face = tuple(face)
        _check_vertices(face, m)
        faces.update(subsets_of(to_bits(face)))
    return SimplicialComplex(m, frozenset(faces))


def simplex(vertices: Iterable[int], m: Optional[int] = None) -> SimplicialComplex:
    """Full simplex on the given vertices: all their subsets are faces."""
    vertices = tuple(vertices)
    if m is None:
        m = max(vertices, default=0)
    _check_vertices(vertices, m)
    return SimplicialComplex(m, frozenset(subsets_of(to_bits(vertices))))


def boundary_simplex(vertices: Iterable[int], m: Optional[int] = None) -> SimplicialComplex:
    """All proper subsets of the given nonempty vertex set."""
    vertices = tuple(vertices)
    if not vertices:
        raise NotAFace("boundary of the empty simplex is undefined")
    if m is None:
        m = max(vertices)
    _check_vertices(vertices, m)
    top = to_bits(vertices)
    return SimplicialComplex(m, frozenset(b for b in subsets_of(top) if b != top))


def full_subcomplex(K: SimplicialComplex, J: Iterable[int]) -> SimplicialComplex:
    """All faces of K contained in J.  Vertex labels are kept, so vertices
    outside J become ghosts."""
    jbits = to_bits(J)
    _check_vertices(from_bits(jbits), K.m)
    return SimplicialComplex(K.m, frozenset(b for b in K.faces if b & ~jbits == 0))


def union(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Union of two complexes on the same vertex set."""
    m = max(K1.m, K2.m)
    return SimplicialComplex(m, K1.faces | K2.faces)


def join_labeled(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes living on the same [m] with disjoint supports."""
    s1 = to_bits(K1.vertices())
    s2 = to_bits(K2.vertices())
    if s1 & s2:
        raise InvalidVertex(
            f"join requires disjoint vertex supports, shared: {from_bits(s1 & s2)}")
    m = max(K1.m, K2.m)
    faces = frozenset(a | b for a in K1.faces for b in K2.faces)
    return SimplicialComplex(m, faces)


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Join; K2's vertices are relabeled above K1's (shift by K1.m)."""
    shifted = SimplicialComplex(
        K1.m + K2.m, frozenset(b << K1.m for b in K2.faces))
    return join_labeled(SimplicialComplex(K1.m + K2.m, K1.faces), shifted)


def glue(K1: SimplicialComplex, K2: SimplicialComplex,
         phi: VertexMap) -> SimplicialComplex:
    """Glue K1 and K2 along a common face.

    ``phi`` identifies a face of K1 (its keys) with a face of K2 (its
    values).  The result keeps K1's labels; the remaining vertices of K2
    are relabeled to K1.m+1, ... in ascending order.  An empty ``phi``
    gives the disjoint union.
    """
    check_vertex_map(phi)
    dom = to_bits(phi.keys())
    img = to_bits(phi.values())
    if dom not in K1.faces:
        raise NotAFace(f"{from_bits(dom)} is not a face of the first complex")
    if img not in K2.faces:
        raise NotAFace(f"{from_bits(img)} is not a face of the second complex")
    inverse = {w: v for v, w in phi.items()}
    relabel = {}
    nxt = K1.m + 1
    for w in range(1, K2.m + 1):
        if w in inverse:
            relabel[w] = inverse[w]
        else:
            relabel[w] = nxt
            nxt += 1
    m = K1.m + K2.m - len(phi)
    faces = set(K1.faces)
    for b in K2.faces:
        faces.add(to_bits(relabel[w] for w in from_bits(b)))
    return SimplicialComplex(m, frozenset(faces))


def j_operation(n: int, K: SimplicialComplex) -> SimplicialComplex:
    """(boundary of a fresh n-simplex) * K, united with the filled simplex.

    The fresh simplex takes the lowest labels 1..n+1; K's vertices are
    shifted up by n+1.
    """
    if n < 0:
        raise InvalidVertex(f"nesting index must be >= 0, got {n}")
    m = n + 1 + K.m
    new = tuple(range(1, n + 2))
    shifted = SimplicialComplex(m, frozenset(b << (n + 1) for b in K.faces))
    joined = join_labeled(boundary_simplex(new, m), shifted)
    return union(joined, simplex(new, m))


def skeleton(K: SimplicialComplex, d: int) -> SimplicialComplex:
    """Faces of K with at most d+1 vertices."""
    if d < -1:
        raise InvalidVertex(f"skeleton dimension must be >= -1, got {d}")
    return SimplicialComplex(
        K.m, frozenset(b for b in K.faces if b.bit_count() <= d + 1))


def contains_labeled(K: SimplicialComplex, L: SimplicialComplex,
                     phi: Optional[VertexMap] = None
                     ) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Is phi(L) a subcomplex of K?  On failure, also return a minimal
    missing face (in K's labels)."""
    if phi is None:
        phi = {v: v for v in range(1, L.m + 1)}
    check_vertex_map(phi)
    for b in sorted(L.faces, key=lambda b: (b.bit_count(), b)):
        image = tuple(phi[v] for v in from_bits(b))
        _check_vertices(image, K.m)
        if to_bits(image) not in K.faces:
            return False, tuple(sorted(image))
    return True, None


def random_complex(m: int, rng) -> SimplicialComplex:
    """A random complex on [m]: downward closure of a few random faces."""
    n_faces = rng.randint(1, max(2, 2 * m))
    maximal = []
    for _ in range(n_faces):
        size = rng.randint(1, m)
        maximal.append(rng.sample(range(1, m + 1), size))
    return from_maximal_faces(m, maximal)


def all_subsets(m: int) -> list[int]:
    """All 2^m vertex-subset bitmasks of [m], ascending."""
    return list(range(1 << m))


def combinations_of_vertices(vertices, k):
    """Ascending k-subsets of an iterable of vertices."""
    return combinations(sorted(vertices), k)
