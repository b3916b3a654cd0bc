"""Symbolic iterated higher Whitehead products.

An expression is a tree of brackets over distinct integer leaves, e.g.
``[1, 2, [3, 4, 5]]``.  This module parses the bracket syntax, computes
the sphere dimension of a product, the cellular chain representing its
Hurewicz image (nested products), the smallest simplicial complex that
can carry it, and definedness / triviality / realizability evidence in a
given complex.  Everything negative comes with a concrete witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Iterator, Optional, Union

from . import complexes as cx
from .complexes import SimplicialComplex, contains_labeled
from .errors import (ArityError, DuplicateVertex, MomentAngleError,
                     NotNestedForm, ParseError)
from .koszul import KoszulChain, class_vector, koszul_complex, multiply
from .homology import homology_basis, homology_of, nonzero_groups
from .snf import invariant_factors


@dataclass(frozen=True)
class Leaf:
    vertex: int

    def __str__(self) -> str:
        return str(self.vertex)


@dataclass(frozen=True)
class Bracket:
    children: tuple["WhiteheadExpr", ...]

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.children) + "]"

    @property
    def leaf_children(self) -> tuple[int, ...]:
        return tuple(c.vertex for c in self.children if isinstance(c, Leaf))

    @property
    def bracket_children(self) -> tuple["Bracket", ...]:
        return tuple(c for c in self.children if isinstance(c, Bracket))


WhiteheadExpr = Union[Leaf, Bracket]


def leaves(w: WhiteheadExpr) -> tuple[int, ...]:
    if isinstance(w, Leaf):
        return (w.vertex,)
    out: tuple[int, ...] = ()
    for c in w.children:
        out += leaves(c)
    return out


def bracket_count(w: WhiteheadExpr) -> int:
    if isinstance(w, Leaf):
        return 0
    return 1 + sum(bracket_count(c) for c in w.children)


def is_nested(w: WhiteheadExpr) -> bool:
    """At most one bracket child per bracket, and it comes last."""
    if isinstance(w, Leaf):
        return True
    brackets = w.bracket_children
    if len(brackets) > 1:
        return False
    if brackets and not isinstance(w.children[-1], Bracket):
        return False
    return all(is_nested(b) for b in brackets)


def nested_levels(w: Bracket) -> list[tuple[int, ...]]:
    """Leaf sets per nesting level, outermost first."""
    if not is_nested(w):
        raise NotNestedForm(f"{w} is not in nested form")
    out = []
    node: Optional[Bracket] = w
    while node is not None:
        out.append(tuple(sorted(node.leaf_children)))
        brackets = node.bracket_children
        node = brackets[0] if brackets else None
    return out


def _validate(w: Bracket) -> Bracket:
    seen = set()
    for v in leaves(w):
        if v in seen:
            raise DuplicateVertex(f"leaf {v} occurs more than once")
        seen.add(v)

    def arity(node: WhiteheadExpr):
        if isinstance(node, Bracket):
            if len(node.children) < 2:
                raise ArityError(f"bracket {node} has fewer than two arguments")
            for c in node.children:
                arity(c)
    arity(w)
    return w


def make_bracket(children) -> Bracket:
    """Canonical bracket: leaves ascending first, then brackets by least leaf."""
    kids = tuple(children)
    lvs = tuple(sorted(c.vertex for c in kids if isinstance(c, Leaf)))
    brs = sorted((c for c in kids if isinstance(c, Bracket)),
                 key=lambda b: min(leaves(b)))
    return _validate(Bracket(tuple(Leaf(v) for v in lvs) + tuple(brs)))


# -- parser -------------------------------------------------------------------


def parse(text: str) -> Bracket:
    """Parse ``[i, j, [k, ...], ...]`` into an expression tree."""
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse_item() -> WhiteheadExpr:
        nonlocal pos
        skip_ws()
        if pos >= len(text):
            raise ParseError("unexpected end of input", pos)
        if text[pos] == "[":
            return parse_bracket()
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError(f"expected an integer or '[', got {text[pos]!r}", pos)
        v = int(text[start:pos])
        if v < 1:
            raise ParseError(f"vertex indices are 1-based, got {v}", start)
        return Leaf(v)

    def parse_bracket() -> Bracket:
        nonlocal pos
        start = pos
        pos += 1  # consume '['
        items = [parse_item()]
        skip_ws()
        while pos < len(text) and text[pos] == ",":
            pos += 1
            items.append(parse_item())
            skip_ws()
        if pos >= len(text) or text[pos] != "]":
            raise ParseError("expected ',' or ']'", pos)
        pos += 1
        if len(items) < 2:
            raise ArityError("a bracket needs at least two arguments", start)
        return Bracket(tuple(items))

    skip_ws()
    if pos >= len(text) or text[pos] != "[":
        raise ParseError("expression must start with '['", pos)
    w = parse_bracket()
    skip_ws()
    if pos != len(text):
        raise ParseError("trailing input after expression", pos)
    return _validate(w)


# -- dimensions and chains ----------------------------------------------------


def dimension(w: Bracket) -> int:
    """Dimension of the sphere the product lives on: 2*(leaves) - (brackets)."""
    return 2 * len(leaves(w)) - bracket_count(w)


def hurewicz_chain(w: Bracket) -> KoszulChain:
    """Cellular chain representing the Hurewicz image of a nested product.

    One factor per nesting level: the sum over the level's leaves of the
    cell with an S-letter there and D-letters on the level's other leaves.
    """
    chain = None
    for level in nested_levels(w):
        factor = KoszulChain()
        for j in level:
            others = tuple(v for v in level if v != j)
            factor = factor + KoszulChain.monomial((j,), others)
        chain = factor if chain is None else multiply(chain, factor)
    assert chain is not None
    return chain


# -- supports and minimal complexes -------------------------------------------


def sphere_support(w: Bracket, m: Optional[int] = None) -> SimplicialComplex:
    """The complex every realizer of w must contain (sphere-shaped support).

    Leaf-only bracket on A: boundary of the simplex on A.  With bracket
    arguments: (boundary simplex on own leaves) * (supports of the bracket
    arguments), united with the filled simplex on the own leaves.
    """
    if m is None:
        m = max(leaves(w))
    own = tuple(sorted(w.leaf_children))
    brackets = w.bracket_children
    if not brackets:
        return cx.boundary_simplex(own, m)
    core = sphere_support(brackets[0], m)
    for b in brackets[1:]:
        core = cx.join_labeled(core, sphere_support(b, m))
    if not own:
        return core
    return cx.union(cx.join_labeled(cx.boundary_simplex(own, m), core),
                    cx.simplex(own, m))


def disk_support(w: Bracket, m: Optional[int] = None) -> SimplicialComplex:
    """The complex whose presence in K makes w trivial (filled support)."""
    if m is None:
        m = max(leaves(w))
    own = tuple(sorted(w.leaf_children))
    brackets = w.bracket_children
    if not brackets:
        return cx.simplex(own, m)
    core = sphere_support(brackets[0], m)
    for b in brackets[1:]:
        core = cx.join_labeled(core, sphere_support(b, m))
    if not own:
        return core
    return cx.join_labeled(cx.simplex(own, m), core)


def minimal_complex(w: Bracket) -> SimplicialComplex:
    """Smallest complex realizing a nested product; labels are the leaves."""
    if not is_nested(w):
        raise NotNestedForm(f"{w} is not in nested form")
    return sphere_support(w)


def _is_extrapolated(w: Bracket) -> bool:
    # The inclusion criterion is proved for leaf-only brackets and a single
    # leaf-only bracket argument; anything deeper uses the join extrapolation.
    brackets = w.bracket_children
    if not brackets:
        return False
    if len(brackets) > 1:
        return True
    return bool(brackets[0].bracket_children)


# -- evidence reports ---------------------------------------------------------

DEFINED = "DEFINED"
UNDEFINED = "UNDEFINED"
TRIVIAL = "TRIVIAL"
NONTRIVIAL = "NONTRIVIAL"
REALIZED = "REALIZED-EVIDENCE"
NOT_REALIZED = "NOT-REALIZED"
MATCHED = "MATCHED"
UNMATCHED = "UNMATCHED"


@dataclass
class EvidenceReport:
    """Verdict plus (claim, witness) certificates backing it up."""

    verdict: str
    certificates: list[tuple[str, object]] = field(default_factory=list)
    extrapolated: bool = False

    def add(self, claim: str, witness: object = None) -> None:
        self.certificates.append((claim, witness))

    def witness(self, claim_prefix: str):
        for claim, witness in self.certificates:
            if claim.startswith(claim_prefix):
                return witness
        return None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "extrapolated": self.extrapolated,
            "certificates": [
                {"claim": claim, "witness": _jsonable(witness)}
                for claim, witness in self.certificates
            ],
        }


def _jsonable(x):
    if isinstance(x, (Bracket, Leaf, KoszulChain, SimplicialComplex)):
        return str(x)
    if isinstance(x, tuple):
        return list(x)
    return x


def _missing_vertex(w: Bracket, K: SimplicialComplex) -> Optional[int]:
    for v in leaves(w):
        if v > K.m or not K.has_face((v,)):
            return v
    return None


def is_trivial(w: Bracket, K: SimplicialComplex) -> EvidenceReport:
    """Trivial iff the filled support of w is contained in K."""
    v = _missing_vertex(w, K)
    if v is not None:
        report = EvidenceReport(NONTRIVIAL)
        report.add("leaf is not a vertex of the complex", v)
        return report
    support = disk_support(w, K.m)
    ok, missing = contains_labeled(K, support)
    report = EvidenceReport(TRIVIAL if ok else NONTRIVIAL,
                            extrapolated=_is_extrapolated(w))
    if ok:
        report.add("filled support is contained in the complex", support.maximal_faces())
    else:
        report.add("missing face", missing)
    return report


def is_defined(w: Bracket, K: SimplicialComplex) -> EvidenceReport:
    """Defined iff all bracket arguments are defined and every product with
    one argument dropped is trivial.

    For nested expressions the equivalent route (the minimal complex embeds
    into K with its labels) is computed as well and must agree.
    """
    report = _is_defined_recursive(w, K)
    if is_nested(w):
        ok, missing = contains_labeled(K, minimal_complex(w))
        if ok != (report.verdict == DEFINED):
            raise MomentAngleError(
                f"definedness routes disagree on {w}: "
                f"recursive={report.verdict}, embedding={'yes' if ok else 'no'}")
        if ok:
            report.add("minimal complex embeds with its labels", True)
        else:
            report.add("minimal complex embedding missing face", missing)
    return report


def _is_defined_recursive(w: Bracket, K: SimplicialComplex) -> EvidenceReport:
    v = _missing_vertex(w, K)
    if v is not None:
        report = EvidenceReport(UNDEFINED)
        report.add("leaf is not a vertex of the complex", v)
        return report
    for b in w.bracket_children:
        sub = _is_defined_recursive(b, K)
        if sub.verdict != DEFINED:
            report = EvidenceReport(UNDEFINED, extrapolated=sub.extrapolated)
            report.add(f"argument {b} is not defined", sub.witness("missing face")
                       or sub.certificates)
            return report
    if len(w.children) >= 3:
        for k in range(len(w.children)):
            dropped = make_bracket(w.children[:k] + w.children[k + 1:])
            sub = is_trivial(dropped, K)
            if sub.verdict != TRIVIAL:
                report = EvidenceReport(UNDEFINED, extrapolated=sub.extrapolated)
                report.add(f"subproduct {dropped} with {w.children[k]} dropped "
                           "is not trivial; missing face", sub.witness("missing face"))
                return report
    return EvidenceReport(DEFINED, extrapolated=_is_extrapolated(w))


def realize_evidence(w: Bracket, K: SimplicialComplex) -> EvidenceReport:
    """Homology-level realizability evidence for a nested product.

    Checks: w is defined in K; its Hurewicz chain is a cycle of Z_K; the
    class is nonzero and primitive; the minimal complex embeds.  All four
    give REALIZED-EVIDENCE (this is not a homotopy-equivalence proof).
    """
    if not is_nested(w):
        raise NotNestedForm(f"{w} is not in nested form")
    report = EvidenceReport(NOT_REALIZED)
    defined = is_defined(w, K)
    report.add("definedness verdict", defined.verdict)
    if defined.verdict != DEFINED:
        report.add("missing face", defined.witness("minimal complex embedding")
                   or defined.witness("subproduct"))
        return report

    chain = hurewicz_chain(w)
    report.add("hurewicz chain", chain)
    if not chain.lies_in(K):
        report.add("chain uses a cell outside Z_K", None)
        return report
    if chain.boundary():
        report.add("chain is not a cycle", str(chain.boundary()))
        return report
    report.add("chain is a cycle", True)

    d = dimension(w)
    C = koszul_complex(K, degrees=(d, d + 1))
    basis = homology_basis(C, d)
    coords = class_vector(chain, C, basis)
    report.add("class coordinates", coords)
    free = [abs(c) for c, t in zip(coords, basis.orders) if t == 0]
    nonzero = any(coords)
    primitive = bool(free) and gcd(*free) == 1
    report.add("class is nonzero", nonzero)
    report.add("class is primitive", primitive)

    ok, missing = contains_labeled(K, minimal_complex(w))
    report.add("minimal complex embeds", ok)
    if not ok:
        report.add("embedding missing face", missing)
    if nonzero and primitive and ok:
        report.verdict = REALIZED
    return report


# -- enumeration --------------------------------------------------------------


@dataclass
class ProductCandidate:
    expr: Bracket
    defined: EvidenceReport
    trivial_arguments: list[Bracket]

    @property
    def is_viable(self) -> bool:
        """Defined with no trivial bracket argument (nonzero class possible)."""
        return self.defined.verdict == DEFINED and not self.trivial_arguments


def _set_partitions(items: tuple, r: int) -> Iterator[list[tuple]]:
    """Unordered partitions of ``items`` into r nonempty blocks."""
    if r == 1:
        yield [items]
        return
    if len(items) < r:
        return
    first, rest = items[0], items[1:]
    # choose the remainder of the block containing the first element
    for size in range(0, len(rest) - (r - 1) + 1):
        for extra in combinations(rest, size):
            block = (first,) + extra
            remaining = tuple(x for x in rest if x not in extra)
            for tail in _set_partitions(remaining, r - 1):
                yield [block] + tail


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` positive ints summing to ``total``."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _trees(leafset: tuple[int, ...], nbrackets: int) -> Iterator[Bracket]:
    """Canonical trees with exactly this leaf set and bracket count."""
    if nbrackets == 1:
        if len(leafset) >= 2:
            yield make_bracket(Leaf(v) for v in leafset)
        return
    n = len(leafset)
    for own_size in range(0, n - 1):
        for own in combinations(leafset, own_size):
            rest = tuple(v for v in leafset if v not in own)
            for r in range(1, nbrackets):
                if own_size + r < 2:
                    continue
                for blocks in _set_partitions(rest, r):
                    for counts in _compositions(nbrackets - 1, r):
                        if any(len(b) < c + 1 for b, c in zip(blocks, counts)):
                            continue
                        yield from _combine(own, blocks, counts, 0, [])


def _combine(own, blocks, counts, idx, acc) -> Iterator[Bracket]:
    if idx == len(blocks):
        yield make_bracket([Leaf(v) for v in own] + acc)
        return
    for sub in _trees(blocks[idx], counts[idx]):
        yield from _combine(own, blocks, counts, idx + 1, acc + [sub])


def enumerate_products(K: SimplicialComplex, target_dim: int,
                       max_brackets: int) -> list[ProductCandidate]:
    """All bracket trees (children unordered) on K's vertices with the given
    dimension and at most ``max_brackets`` brackets, each analyzed in K."""
    if target_dim < 3:
        raise MomentAngleError(f"target dimension must be >= 3, got {target_dim}")
    if max_brackets < 1:
        raise MomentAngleError(f"bracket bound must be >= 1, got {max_brackets}")
    verts = K.vertices()
    out = []
    for b in range(1, max_brackets + 1):
        if (target_dim + b) % 2:
            continue
        nleaves = (target_dim + b) // 2
        if nleaves < b + 1 or nleaves > len(verts):
            continue
        for leafset in combinations(verts, nleaves):
            for expr in _trees(leafset, b):
                defined = is_defined(expr, K) if is_nested(expr) \
                    else _is_defined_recursive(expr, K)
                trivial_args = [sub for sub in _proper_brackets(expr)
                                if is_trivial(sub, K).verdict == TRIVIAL]
                out.append(ProductCandidate(expr, defined, trivial_args))
    return out


def _proper_brackets(w: Bracket) -> Iterator[Bracket]:
    for b in w.bracket_children:
        yield b
        yield from _proper_brackets(b)


def _nested_towers(verts, dim: int, max_brackets: Optional[int]) -> Iterator[Bracket]:
    """All nested products on the given vertices with the given dimension."""
    nverts = len(verts)
    bmax = nverts - 1 if max_brackets is None else min(max_brackets, nverts - 1)
    for b in range(1, bmax + 1):
        if (dim + b) % 2:
            continue
        nleaves = (dim + b) // 2
        if nleaves < b + 1 or nleaves > nverts:
            continue
        for leafset in combinations(verts, nleaves):
            for sizes in _compositions(nleaves, b):
                if sizes[-1] < 2:
                    continue
                yield from _towers_with_sizes(leafset, sizes)


def _towers_with_sizes(leafset: tuple[int, ...], sizes: tuple[int, ...]
                       ) -> Iterator[Bracket]:
    if len(sizes) == 1:
        yield make_bracket(Leaf(v) for v in leafset)
        return
    for own in combinations(leafset, sizes[0]):
        rest = tuple(v for v in leafset if v not in own)
        for inner in _towers_with_sizes(rest, sizes[1:]):
            yield make_bracket([Leaf(v) for v in own] + [inner])


def wdelta_evidence(K: SimplicialComplex,
                    max_brackets: Optional[int] = None) -> EvidenceReport:
    """Try to span every homology class of Z_K by Hurewicz classes of
    defined nested products (integer span, full lattice required)."""
    C = koszul_complex(K)
    groups = nonzero_groups(homology_of(C))
    groups.pop(0, None)  # basepoint class
    report = EvidenceReport(MATCHED)
    torsion_degrees = [d for d, g in groups.items() if g.torsion]
    if torsion_degrees:
        report.verdict = UNMATCHED
        report.add("homology has torsion, Z_K is not a wedge of spheres",
                   torsion_degrees)
        return report

    verts = K.vertices()
    unmatched = []
    for d in sorted(groups):
        basis = homology_basis(C, d)
        nfree = sum(1 for t in basis.orders if t == 0)
        chosen: list[tuple[Bracket, list[int]]] = []
        vectors: list[list[int]] = []
        for w in _nested_towers(verts, d, max_brackets):
            if _is_defined_recursive(w, K).verdict != DEFINED:
                continue
            # a trivial bracket argument makes the whole product trivial,
            # so its class cannot realize a sphere even if the formal
            # chain is not a boundary
            if any(is_trivial(b, K).verdict == TRIVIAL
                   for b in _proper_brackets(w)):
                continue
            chain = hurewicz_chain(w)
            if not chain.lies_in(K) or chain.boundary():
                continue
            coords = class_vector(chain, C, basis)
            if not any(coords):
                continue
            if _improves(vectors, coords):
                vectors.append(coords)
                chosen.append((w, coords))
            if _lattice_complete(vectors, nfree):
                break
        if _lattice_complete(vectors, nfree):
            report.add(f"degree {d} matched by {len(chosen)} products",
                       [str(w) for w, _ in chosen])
        else:
            unmatched.append(d)
            report.add(f"degree {d} UNMATCHED: candidate span has rank "
                       f"{_span_rank(vectors)} of {nfree}",
                       [str(w) for w, _ in chosen])
    if unmatched:
        report.verdict = UNMATCHED
        report.add("unmatched degrees", unmatched)
    return report


def _span_rank(vectors: list[list[int]]) -> int:
    if not vectors:
        return 0
    return len(invariant_factors(vectors))


def _lattice_complete(vectors: list[list[int]], nfree: int) -> bool:
    if nfree == 0:
        return True
    if not vectors:
        return False
    factors = invariant_factors(vectors)
    return len(factors) == nfree and all(f == 1 for f in factors)


def _improves(vectors: list[list[int]], candidate: list[int]) -> bool:
    if not vectors:
        return True
    before = invariant_factors(vectors)
    after = invariant_factors(vectors + [candidate])
    if len(after) > len(before):
        return True
    prod_before = 1
    for f in before:
        prod_before *= f
    prod_after = 1
    for f in after:
        prod_after *= f
    return prod_after < prod_before
