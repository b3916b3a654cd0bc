"""End-to-end checks against the documented reference examples.

Each check returns (name, passed, detail); the CLI's ``verify-paper``
command and the acceptance tests both run them.
"""

from __future__ import annotations

from typing import Callable

from . import complexes as cx
from . import fixtures
from .homology import homology_of, nonzero_groups
from .koszul import (class_vector, koszul_complex, parse_chain,
                     verify_hochster)
from .snf import invariant_factors
from .whitehead import (DEFINED, REALIZED, UNMATCHED, dimension,
                        enumerate_products, hurewicz_chain, is_defined,
                        parse, realize_evidence, wdelta_evidence)


def _ranks(K) -> dict[int, int]:
    groups = nonzero_groups(homology_of(koszul_complex(K)))
    groups.pop(0, None)
    return {d: g.rank for d, g in groups.items()}


def _torsion_free(K) -> bool:
    groups = homology_of(koszul_complex(K))
    return all(not g.torsion for g in groups.values())


def check_table1_homology() -> tuple[bool, str]:
    K = fixtures.sphere_with_diameter()
    ranks = _ranks(K)
    ok = ranks == fixtures.SPHERE_DIAMETER_RANKS and _torsion_free(K)
    return ok, f"ranks {ranks}, expected {fixtures.SPHERE_DIAMETER_RANKS}"


def _check_products_table(K, table, expected_ranks) -> tuple[bool, str]:
    """All listed products defined; chains match up to global sign; their
    classes form a basis of the homology lattice."""
    C = koszul_complex(K)
    coords_by_degree: dict[int, list[list[int]]] = {}
    bases = {}
    for degree, expr_text, chain_text in table:
        w = parse(expr_text)
        if dimension(w) != degree:
            return False, f"{expr_text} has dimension {dimension(w)}, not {degree}"
        if is_defined(w, K).verdict != DEFINED:
            return False, f"{expr_text} is not defined"
        chain = hurewicz_chain(w)
        listed = parse_chain(chain_text)
        if chain != listed and chain != -listed:
            return False, f"{expr_text}: chain {chain} differs from {listed}"
        if degree not in bases:
            from .homology import homology_basis
            bases[degree] = homology_basis(C, degree)
        coords = class_vector(chain, C, bases[degree])
        coords_by_degree.setdefault(degree, []).append(coords)
    for degree, vectors in coords_by_degree.items():
        if len(vectors) != expected_ranks[degree]:
            return False, f"degree {degree}: {len(vectors)} products for rank " \
                          f"{expected_ranks[degree]}"
        factors = invariant_factors(vectors)
        if len(factors) != expected_ranks[degree] or any(f != 1 for f in factors):
            return False, f"degree {degree}: classes do not form a basis " \
                          f"(invariant factors {factors})"
    return True, f"{len(table)} products match and span all degrees"


def check_table1_products() -> tuple[bool, str]:
    return _check_products_table(fixtures.sphere_with_diameter(),
                                 fixtures.SPHERE_DIAMETER_TABLE,
                                 fixtures.SPHERE_DIAMETER_RANKS)


def check_table2() -> tuple[bool, str]:
    L = fixtures.sphere_with_diameter_plus_triangle()
    ranks = _ranks(L)
    if ranks != fixtures.PLUS_TRIANGLE_RANKS:
        return False, f"ranks {ranks}, expected {fixtures.PLUS_TRIANGLE_RANKS}"
    ok, detail = _check_products_table(L, fixtures.PLUS_TRIANGLE_TABLE,
                                       fixtures.PLUS_TRIANGLE_RANKS)
    if not ok:
        return ok, detail
    report = realize_evidence(parse("[1,2,[3,4,5]]"), L)
    if report.verdict != REALIZED:
        return False, f"[1,2,[3,4,5]] got {report.verdict}"
    # the minimal complex embeds but is not a full subcomplex of L
    M = fixtures.sphere_with_diameter()
    embeds, _ = cx.contains_labeled(L, M)
    full = cx.full_subcomplex(L, range(1, 6))
    if not embeds or full.faces == M.faces:
        return False, "embedding/non-fullness check failed"
    return True, "ranks, products, realize-evidence and non-fullness all agree"


def check_table3() -> tuple[bool, str]:
    K = fixtures.unrealizable_complex()
    ranks = _ranks(K)
    ok = ranks == fixtures.UNREALIZABLE_RANKS and _torsion_free(K)
    return ok, f"ranks {ranks}, expected {fixtures.UNREALIZABLE_RANKS}"


def check_unrealizable() -> tuple[bool, str]:
    K = fixtures.unrealizable_complex()
    candidates = enumerate_products(K, 10, 2)
    viable = [c for c in candidates if c.is_viable]
    if viable:
        return False, f"viable candidates exist: {[str(c.expr) for c in viable]}"
    report = wdelta_evidence(K)
    if report.verdict != UNMATCHED:
        return False, f"wedge evidence verdict {report.verdict}"
    unmatched = report.witness("unmatched degrees")
    if unmatched != [10]:
        return False, f"unmatched degrees {unmatched}"
    span = report.witness("degree 10 UNMATCHED")
    if span:
        return False, f"degree 10 candidate span not empty: {span}"
    return True, f"{len(candidates)} candidates, none viable; degree 10 unmatched"


def check_sphere_series() -> tuple[bool, str]:
    for m in range(2, 7):
        K = cx.boundary_simplex(tuple(range(1, m + 1)))
        ranks = _ranks(K)
        if ranks != {2 * m - 1: 1}:
            return False, f"boundary simplex on {m} vertices: ranks {ranks}"
    return True, "one class in degree 2m-1 for m = 2..6"


def check_hochster_fixtures() -> tuple[bool, str]:
    for K in (fixtures.sphere_with_diameter(),
              fixtures.sphere_with_diameter_plus_triangle(),
              fixtures.unrealizable_complex(),
              fixtures.projective_plane()):
        report = verify_hochster(K)
        if not report.passed:
            return False, str(report)
    return True, "both homology routes agree on all fixtures"


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("table1-homology", check_table1_homology),
    ("table1-products", check_table1_products),
    ("table2", check_table2),
    ("table3", check_table3),
    ("unrealizable-s10", check_unrealizable),
    ("sphere-series", check_sphere_series),
    ("hochster-cross-check", check_hochster_fixtures),
]


def run_all(echo=print) -> bool:
    all_ok = True
    for name, check in CHECKS:
        ok, detail = check()
        all_ok &= ok
        echo(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return all_ok
