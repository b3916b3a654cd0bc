"""Exact integer homology of graded chain complexes.

A :class:`GradedChainComplex` stores, per degree d, an ordered basis of
labels and the boundary matrix into degree d-1.  Homology groups (free
rank plus invariant-factor torsion) come from Smith normal forms of the
two adjacent boundary matrices; :class:`DegreeBasis` additionally extracts
cycle representatives and lets callers express an arbitrary cycle in that
basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from sympy import factorint

from .errors import NotAComplex, NotACycle
from .snf import (mat_mul, mat_vec, shape, smith_normal_form_ext, snf_rank,
                  diagonal, zeros)


@dataclass(frozen=True)
class HomologyGroup:
    """Free rank plus torsion coefficients d_1 | d_2 | ... (each >= 2)."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} violates divisibility")
        if any(t < 2 for t in self.torsion):
            raise ValueError(f"torsion entries must be >= 2: {self.torsion}")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


TRIVIAL_GROUP = HomologyGroup(0)


def direct_sum(groups) -> HomologyGroup:
    """Direct sum, renormalized to an invariant-factor chain."""
    rank = 0
    primary: dict[int, list[int]] = {}
    for g in groups:
        rank += g.rank
        for t in g.torsion:
            for p, e in factorint(t).items():
                primary.setdefault(p, []).append(e)
    length = max((len(v) for v in primary.values()), default=0)
    factors = []
    for i in range(length):
        f = 1
        for p, exps in primary.items():
            exps.sort(reverse=True)
            if i < len(exps):
                f *= p ** exps[i]
        factors.append(f)
    return HomologyGroup(rank, tuple(reversed(factors)))


@dataclass
class GradedChainComplex:
    """Bases and boundary matrices, indexed by (possibly negative) degree.

    ``boundary[d]`` maps degree d to degree d-1 and has shape
    len(basis[d-1]) x len(basis[d]).  Degrees absent from ``basis`` are
    zero groups; their boundary maps are omitted.
    """

    basis: dict[int, list[Any]]
    boundary: dict[int, list[list[int]]] = field(default_factory=dict)

    def degrees(self) -> list[int]:
        return sorted(self.basis)

    def dim(self, d: int) -> int:
        return len(self.basis.get(d, ()))

    def boundary_matrix(self, d: int) -> list[list[int]]:
        """The matrix of the boundary map out of degree d (zero if absent)."""
        if d in self.boundary:
            return self.boundary[d]
        return zeros(self.dim(d - 1), self.dim(d))

    def validate(self) -> None:
        """Check shapes and that consecutive boundaries compose to zero."""
        for d, mat in self.boundary.items():
            if shape(mat) != (self.dim(d - 1), self.dim(d)):
                raise NotAComplex(
                    f"boundary matrix in degree {d} has shape {shape(mat)}, "
                    f"expected {(self.dim(d - 1), self.dim(d))}")
        for d in self.degrees():
            if self.dim(d) and self.dim(d - 1) and self.dim(d - 2):
                prod = mat_mul(self.boundary_matrix(d - 1), self.boundary_matrix(d))
                if any(x for row in prod for x in row):
                    raise NotAComplex(f"boundary composite nonzero at degree {d}")

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * self.dim(d) for d in self.degrees())


def homology_of(C: GradedChainComplex, degrees=None) -> dict[int, HomologyGroup]:
    """ker/im homology in each requested degree (default: all)."""
    C.validate()
    if degrees is None:
        degrees = C.degrees()
    out = {}
    for d in degrees:
        n = C.dim(d)
        if n == 0:
            out[d] = TRIVIAL_GROUP
            continue
        r_out = snf_rank(_snf_d_only(C.boundary_matrix(d))) if C.dim(d - 1) else 0
        if C.dim(d + 1):
            d_in = _snf_d_only(C.boundary_matrix(d + 1))
            r_in = snf_rank(d_in)
            torsion = tuple(x for x in diagonal(d_in) if x > 1)
        else:
            r_in = 0
            torsion = ()
        out[d] = HomologyGroup(n - r_out - r_in, torsion)
    return out


def _snf_d_only(a):
    _, _, d, _, _ = smith_normal_form_ext(a)
    return d


def nonzero_groups(groups: dict[int, HomologyGroup]) -> dict[int, HomologyGroup]:
    return {d: g for d, g in groups.items() if not g.is_trivial}


@dataclass
class DegreeBasis:
    """Homology presentation of one degree of a chain complex.

    ``orders[i]`` is 0 for a free generator and t >= 2 for a torsion
    generator of order t; ``representatives[i]`` is a cycle (coefficient
    vector over the degree's chain basis) projecting onto generator i.
    """

    degree: int
    orders: list[int]
    representatives: list[list[int]]
    # internals for class_of
    _vinv: list[list[int]]
    _rank_out: int
    _uq: list[list[int]]
    _all_orders: list[int]

    @property
    def group(self) -> HomologyGroup:
        rank = sum(1 for t in self.orders if t == 0)
        torsion = tuple(sorted(t for t in self.orders if t))
        return HomologyGroup(rank, torsion)

    def class_of(self, z: list[int]) -> list[int]:
        """Coordinates of the cycle z in this basis.

        Free coordinates are exact integers; torsion coordinates are
        reduced modulo the generator order.  Raises NotACycle if z has
        nonzero boundary.
        """
        w = mat_vec(self._vinv, z)
        if any(w[:self._rank_out]):
            raise NotACycle("chain is not a cycle")
        y = mat_vec(self._uq, w[self._rank_out:])
        coords = []
        for t, c in zip(self._all_orders, y):
            if t == 1:
                continue
            coords.append(c % t if t else c)
        return coords

    def is_zero_class(self, z: list[int]) -> bool:
        return not any(self.class_of(z))


def homology_basis(C: GradedChainComplex, d: int) -> DegreeBasis:
    """Cycle representatives and coordinates machinery for degree d."""
    n = C.dim(d)
    a_out = C.boundary_matrix(d) if C.dim(d - 1) else zeros(0, n)
    _, _, d_out, v_out, vinv_out = smith_normal_form_ext(a_out, C.dim(d - 1), n)
    r = snf_rank(d_out)
    k = n - r

    a_in = C.boundary_matrix(d + 1) if C.dim(d + 1) else zeros(n, 0)
    n_in = shape(a_in)[1]
    # boundaries expressed in kernel coordinates (rows r.. of Vinv * a_in)
    x = [[sum(vinv_out[i][t] * a_in[t][j] for t in range(n)) for j in range(n_in)]
         for i in range(r, n)]
    for i in range(r):
        if any(sum(vinv_out[i][t] * a_in[t][j] for t in range(n)) for j in range(n_in)):
            raise NotAComplex("image of incoming boundary is not in the kernel")
    uq, uq_inv, dq, _, _ = smith_normal_form_ext(x)
    rq = snf_rank(dq)
    dq_diag = diagonal(dq)
    all_orders = [(dq_diag[i] if i < rq else 0) for i in range(k)]

    orders, reps = [], []
    for i in range(k):
        if all_orders[i] == 1:
            continue
        orders.append(all_orders[i])
        # kernel coords of generator i are column i of uq_inv
        gen = [sum(v_out[t][r + s] * uq_inv[s][i] for s in range(k)) for t in range(n)]
        reps.append(gen)
    return DegreeBasis(d, orders, reps, vinv_out, r, uq, all_orders)


# -- simplicial chain complexes ----------------------------------------------


def simplicial_chain_complex(K) -> GradedChainComplex:
    """Augmented (reduced) chain complex of a simplicial complex.

    Degree p basis: faces with p+1 vertices (the empty face in degree -1).
    Boundary of [v_0 < ... < v_p] is the alternating sum of its codimension
    one faces.
    """
    from .complexes import from_bits

    basis: dict[int, list[int]] = {}
    for b in K.faces:
        basis.setdefault(b.bit_count() - 1, []).append(b)
    for d in basis:
        basis[d].sort()
    index = {d: {b: i for i, b in enumerate(bs)} for d, bs in basis.items()}
    boundary = {}
    for d in sorted(basis):
        if d - 1 not in basis:
            continue
        mat = zeros(len(basis[d - 1]), len(basis[d]))
        for j, b in enumerate(basis[d]):
            for k, v in enumerate(from_bits(b)):
                face = b & ~(1 << (v - 1))
                mat[index[d - 1][face]][j] = -1 if k % 2 else 1
        boundary[d] = mat
    return GradedChainComplex(basis, boundary)


def reduced_simplicial_homology(K) -> dict[int, HomologyGroup]:
    """Reduced homology; the complex {empty face} has rank 1 in degree -1."""
    return homology_of(simplicial_chain_complex(K))


def chain_vector(chain: dict, basis: list, degree_name: str = "degree") -> list[int]:
    """Coefficient vector of a sparse chain over an ordered basis."""
    index = {label: i for i, label in enumerate(basis)}
    vec = [0] * len(basis)
    for label, c in chain.items():
        if label not in index:
            raise KeyError(f"chain term {label!r} is not in the {degree_name} basis")
        vec[index[label]] = c
    return vec
