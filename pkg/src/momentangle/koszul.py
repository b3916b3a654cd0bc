"""Cellular chains of the moment-angle complex Z_K.

Z_K sits inside the polydisk (D^2)^m, whose cells are words in letters
S_i (the 1-cell of factor i) and D_i (the 2-cell).  A cell is encoded as a
monomial (jbits, ibits): J holds the S-letters, I the D-letters, J and I
disjoint, and the cell lies in Z_K iff I is a face of K.  The degree of a
monomial is |J| + 2|I|, and the boundary replaces one D-letter by the
matching S-letter with a sign counting the smaller S-letters present.

This module builds that chain complex, computes H_*(Z_K) from it, and
independently assembles the same groups from the reduced homology of all
full subcomplexes K_J (each class of H~_{p-1}(K_J) lands in degree p+|J|).
The two routes cross-validate each other in :func:`verify_hochster`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .complexes import SimplicialComplex, from_bits, full_subcomplex, to_bits
from .errors import LNotInJ, NotAFace, OverlappingSupport, ParseError
from .homology import (DegreeBasis, GradedChainComplex, HomologyGroup,
                       chain_vector, direct_sum, homology_basis, homology_of,
                       nonzero_groups, simplicial_chain_complex, zeros)

Monomial = tuple[int, int]  # (jbits, ibits)


def monomial_degree(mono: Monomial) -> int:
    j, i = mono
    return j.bit_count() + 2 * i.bit_count()


def monomial_word(mono: Monomial) -> str:
    j, i = mono
    if j & i:
        raise OverlappingSupport(f"letters collide in {mono}")
    if j | i == 0:
        return "1"
    return "".join(("S" if j >> (v - 1) & 1 else "D") + str(v)
                   for v in from_bits(j | i))


class KoszulChain:
    """Integer combination of cells of (D^2)^m, as a sparse monomial map."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict[Monomial, int]] = None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[mono] = c

    @classmethod
    def monomial(cls, j: Iterable[int], i: Iterable[int], coeff: int = 1) -> "KoszulChain":
        jb, ib = to_bits(j), to_bits(i)
        if jb & ib:
            raise OverlappingSupport(f"S and D letters overlap on {from_bits(jb & ib)}")
        return cls({(jb, ib): coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, KoszulChain) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "KoszulChain") -> "KoszulChain":
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return KoszulChain(terms)

    def __neg__(self) -> "KoszulChain":
        return KoszulChain({mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other: "KoszulChain") -> "KoszulChain":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "KoszulChain":
        return KoszulChain({mono: scalar * c for mono, c in self.terms.items()})

    def __mul__(self, other: "KoszulChain") -> "KoszulChain":
        return multiply(self, other)

    def support(self) -> int:
        """Bitmask of all vertices whose letters occur in some term."""
        s = 0
        for j, i in self.terms:
            s |= j | i
        return s

    def degree(self) -> Optional[int]:
        """Common degree of all terms; None for the zero chain."""
        degs = {monomial_degree(mono) for mono in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"chain is not homogeneous: degrees {sorted(degs)}")
        return degs.pop()

    def boundary(self) -> "KoszulChain":
        """Replace each D-letter by its S-letter, with the usual sign."""
        out: dict[Monomial, int] = {}
        for (j, i), c in self.terms.items():
            ii = i
            while ii:
                low = ii & -ii
                ii &= ii - 1
                sign = -1 if (j & (low - 1)).bit_count() % 2 else 1
                mono = (j | low, i & ~low)
                out[mono] = out.get(mono, 0) + sign * c
        return KoszulChain(out)

    def lies_in(self, K: SimplicialComplex) -> bool:
        """Is every cell of the chain a cell of Z_K (D-support a face)?"""
        return all(i in K.faces for _, i in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(((monomial_word(m), c) for m, c in self.terms.items()),
                       key=lambda t: t[0])
        parts = []
        for word, c in items:
            mag = abs(c)
            body = word if mag == 1 and word != "1" else f"{mag}{'' if word == '1' else word}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    __repr__ = __str__


ZERO_CHAIN = KoszulChain()

_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*((?:[SD]\d+)*)\s*")


def parse_chain(text: str) -> KoszulChain:
    """Inverse of str(): words like ``D1S2D3`` joined by + and -."""
    terms: dict[Monomial, int] = {}
    pos = 0
    text = text.strip()
    if text == "0":
        return KoszulChain()
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError("expected a chain term", pos)
        sign, digits, word = match.groups()
        if not digits and not word:
            raise ParseError("empty chain term", pos)
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        j = i = 0
        for letter, v in re.findall(r"([SD])(\d+)", word):
            bit = 1 << (int(v) - 1)
            if (j | i) & bit:
                raise ParseError(f"vertex {v} repeated in term", pos)
            if letter == "S":
                j |= bit
            else:
                i |= bit
        terms[(j, i)] = terms.get((j, i), 0) + coeff
        pos = match.end()
    return KoszulChain(terms)


def multiply(a: KoszulChain, b: KoszulChain) -> KoszulChain:
    """Product of chains with disjoint vertex supports.

    S-letters anticommute (sign counts pairs x in J1, y in J2 with x > y);
    D-letters commute with everything.
    """
    if a.support() & b.support():
        raise OverlappingSupport(
            f"supports share vertices {from_bits(a.support() & b.support())}")
    out: dict[Monomial, int] = {}
    for (j1, i1), c1 in a.terms.items():
        for (j2, i2), c2 in b.terms.items():
            inversions = sum((j1 >> v).bit_count()
                             for v in range(j2.bit_length()) if j2 >> v & 1)
            sign = -1 if inversions % 2 else 1
            mono = (j1 | j2, i1 | i2)
            out[mono] = out.get(mono, 0) + sign * c1 * c2
    return KoszulChain(out)


# -- the chain complex of Z_K -------------------------------------------------


def koszul_complex(K: SimplicialComplex,
                   degrees: Optional[Iterable[int]] = None) -> GradedChainComplex:
    """Chain complex of Z_K: basis monomials (J, I) with I a face of K and
    J disjoint from I, graded by |J| + 2|I|.

    With ``degrees`` given, boundary matrices are assembled only for those
    degrees (bases are always complete); useful near the top degree where
    the complex is small.
    """
    full = (1 << K.m) - 1
    basis: dict[int, list[Monomial]] = {}
    for i in K.faces:
        comp = full & ~i
        j = comp
        while True:
            basis.setdefault(j.bit_count() + 2 * i.bit_count(), []).append((j, i))
            if j == 0:
                break
            j = (j - 1) & comp
    for d in basis:
        basis[d].sort()
    index = {d: {mono: k for k, mono in enumerate(bs)} for d, bs in basis.items()}

    wanted = set(basis) if degrees is None else set(degrees)
    boundary = {}
    for d in sorted(basis):
        if d not in wanted or d - 1 not in basis:
            continue
        mat = zeros(len(basis[d - 1]), len(basis[d]))
        for col, mono in enumerate(basis[d]):
            for tgt, c in KoszulChain({mono: 1}).boundary().terms.items():
                mat[index[d - 1][tgt]][col] = c
        boundary[d] = mat
    return GradedChainComplex(basis, boundary)


def zk_homology(K: SimplicialComplex) -> dict[int, HomologyGroup]:
    """H_*(Z_K), all degrees.  Degree 0 is the rank-1 basepoint class."""
    return homology_of(koszul_complex(K))


def zk_homology_basis(C: GradedChainComplex, d: int) -> DegreeBasis:
    return homology_basis(C, d)


def class_vector(chain: KoszulChain, C: GradedChainComplex,
                 basis: DegreeBasis) -> list[int]:
    """Coordinates of a Koszul cycle in a degree's homology basis."""
    vec = chain_vector(chain.terms, C.basis.get(basis.degree, []), "monomial")
    return basis.class_of(vec)


# -- the full-subcomplex decomposition ----------------------------------------


def shuffle_sign(L: Iterable[int], J: Iterable[int]) -> int:
    """Sign of the permutation merging (L asc, J\\L asc) into J ascending."""
    lb, jb = to_bits(L), to_bits(J)
    return shuffle_sign_bits(lb, jb)


def shuffle_sign_bits(lb: int, jb: int) -> int:
    if lb & ~jb:
        raise LNotInJ(f"{from_bits(lb & ~jb)} not contained in J")
    rest = jb & ~lb
    inversions = 0
    b = lb
    while b:
        low = b & -b
        b &= b - 1
        inversions += (rest & (low - 1)).bit_count()
    return -1 if inversions % 2 else 1


def hochster_chain(K: SimplicialComplex, J: Iterable[int],
                   z: dict[int, int]) -> KoszulChain:
    """Send a simplicial chain on K_J into the cells of Z_K.

    A face L (bitmask) with coefficient c maps to c * sign(L, J) times the
    cell with D-letters on L and S-letters on J \\ L.  A (p-1)-chain lands
    in degree p + |J|.
    """
    jb = to_bits(J)
    out: dict[Monomial, int] = {}
    for lb, c in z.items():
        if lb & ~jb or lb not in K.faces:
            raise NotAFace(f"{from_bits(lb)} is not a face of the full subcomplex")
        mono = (jb & ~lb, lb)
        out[mono] = out.get(mono, 0) + c * shuffle_sign_bits(lb, jb)
    return KoszulChain(out)


@dataclass
class HochsterSummand:
    """Contribution of one vertex subset J to H_*(Z_K)."""

    J: tuple[int, ...]
    groups: dict[int, HomologyGroup]  # keyed by degree in H_*(Z_K)
    representatives: dict[int, list[dict[int, int]]] = field(default_factory=dict)
    # representatives[zk_degree] = simplicial cycles (face bitmask -> coeff)


def hochster_decomposition(K: SimplicialComplex, with_representatives: bool = False
                           ) -> tuple[list[HochsterSummand], dict[int, HomologyGroup]]:
    """Per-subset reduced homology of K_J, shifted into degrees of Z_K,
    plus the per-degree direct sum over all J."""
    summands = []
    totals: dict[int, list[HomologyGroup]] = {}
    for jb in range(1 << K.m):
        kj = full_subcomplex(K, from_bits(jb))
        size = jb.bit_count()
        cc = simplicial_chain_complex(kj)
        groups = nonzero_groups(homology_of(cc))
        if not groups:
            continue
        shifted = {p + 1 + size: g for p, g in groups.items()}
        summand = HochsterSummand(from_bits(jb), shifted)
        if with_representatives:
            for p, g in groups.items():
                basis = homology_basis(cc, p)
                reps = []
                for vec in basis.representatives:
                    reps.append({label: c for label, c in zip(cc.basis[p], vec) if c})
                summand.representatives[p + 1 + size] = reps
        summands.append(summand)
        for deg, g in shifted.items():
            totals.setdefault(deg, []).append(g)
    total = {deg: direct_sum(gs) for deg, gs in sorted(totals.items())}
    return summands, total


@dataclass
class HochsterReport:
    """Outcome of cross-checking the two homology routes."""

    passed: bool
    zk: dict[int, HomologyGroup]
    totals: dict[int, HomologyGroup]
    discrepancy: Optional[str] = None

    def __str__(self) -> str:
        if self.passed:
            return "PASS: both homology routes agree"
        return f"FAIL: {self.discrepancy}"


def verify_hochster(K: SimplicialComplex) -> HochsterReport:
    """PASS iff H_*(Z_K) computed from the cell complex equals the direct
    sum over full subcomplexes, and every subcomplex representative maps
    to a Koszul cycle with nonzero class."""
    C = koszul_complex(K)
    zk = nonzero_groups(homology_of(C))
    summands, totals = hochster_decomposition(K, with_representatives=True)
    for deg in sorted(set(zk) | set(totals)):
        a = zk.get(deg, HomologyGroup(0))
        b = totals.get(deg, HomologyGroup(0))
        if a != b:
            return HochsterReport(False, zk, totals,
                                  f"degree {deg}: cell route {a}, subset route {b}")
    bases: dict[int, DegreeBasis] = {}
    for summand in summands:
        for deg, reps in summand.representatives.items():
            for z in reps:
                chain = hochster_chain(K, summand.J, z)
                if chain.boundary():
                    return HochsterReport(
                        False, zk, totals,
                        f"image of a cycle over J={summand.J} is not a cycle")
                if deg not in bases:
                    bases[deg] = homology_basis(C, deg)
                if not any(class_vector(chain, C, bases[deg])):
                    return HochsterReport(
                        False, zk, totals,
                        f"image of a generator over J={summand.J} has zero class")
    return HochsterReport(True, zk, totals)
