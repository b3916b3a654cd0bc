"""Command-line interface.

Complexes are read from JSON documents with fields ``m`` (vertex count)
and ``maximal_faces`` (array of arrays of 1-based vertex indices).
Bracket expressions use the grammar ``[item, item, ...]`` where an item
is an integer or another bracket.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 internal
invariant violation.
"""

from __future__ import annotations

import json
import sys

import click

from . import complexes as cx
from . import verify as verify_mod
from .errors import MomentAngleError, NotAComplex, ParseError
from .homology import (homology_of, nonzero_groups,
                       reduced_simplicial_homology)
from .koszul import (hochster_decomposition, koszul_complex, verify_hochster)
from .whitehead import (dimension, enumerate_products, hurewicz_chain,
                        is_defined, minimal_complex, parse, realize_evidence,
                        wdelta_evidence)

EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def load_complex(path: str) -> cx.SimplicialComplex:
    try:
        with open(path) as fh:
            doc = json.load(fh)
        m = doc["m"]
        maximal = doc["maximal_faces"]
        if not isinstance(m, int) or not isinstance(maximal, list):
            raise ValueError("fields 'm' and 'maximal_faces' have wrong types")
        return cx.from_maximal_faces(m, maximal)
    except (OSError, ValueError, KeyError, TypeError, MomentAngleError) as exc:
        raise click.exceptions.Exit(_input_error(f"cannot read complex from {path}: {exc}"))


def complex_document(K: cx.SimplicialComplex) -> dict:
    return {"m": K.m, "maximal_faces": [list(f) for f in K.maximal_faces()]}


def _input_error(message: str) -> int:
    click.echo(f"error: {message}", err=True)
    return EXIT_INPUT


def _parse_expr(text: str):
    try:
        return parse(text)
    except ParseError as exc:
        raise click.exceptions.Exit(_input_error(f"bad expression: {exc}"))


def _print_groups(groups, as_json: bool, drop_degree_zero: bool = False) -> None:
    groups = nonzero_groups(groups)
    if drop_degree_zero:
        groups.pop(0, None)
    if as_json:
        doc = {str(d): {"rank": g.rank, "torsion": list(g.torsion)}
               for d, g in sorted(groups.items())}
        click.echo(json.dumps(doc, indent=2))
        return
    click.echo(f"{'degree':>6} | {'rank':>4} | torsion")
    for d, g in sorted(groups.items()):
        torsion = ",".join(str(t) for t in g.torsion) or "-"
        click.echo(f"{d:>6} | {g.rank:>4} | {torsion}")


@click.group()
def main():
    """Homology of moment-angle complexes and Whitehead product evidence.

    Vertex indices are 1-based everywhere.  The complex built by
    ``j-operation``-style constructions gives the fresh simplex the lowest
    labels, so minimal complexes printed by ``minimal`` carry the
    expression's own leaf labels.
    """


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def homology(file, as_json):
    """Reduced simplicial homology of the complex in FILE."""
    K = load_complex(file)
    _print_groups(reduced_simplicial_homology(K), as_json)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def zk(file, as_json):
    """Homology of the moment-angle complex Z_K (degree 0 omitted)."""
    K = load_complex(file)
    _print_groups(homology_of(koszul_complex(K)), as_json, drop_degree_zero=True)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--by-subset", is_flag=True, help="per vertex-subset breakdown")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def hochster(file, by_subset, as_json):
    """H_*(Z_K) assembled from full subcomplexes, with cross-check."""
    K = load_complex(file)
    summands, totals = hochster_decomposition(K)
    if as_json:
        doc = {
            "totals": {str(d): {"rank": g.rank, "torsion": list(g.torsion)}
                       for d, g in sorted(totals.items()) if d != 0},
        }
        if by_subset:
            doc["by_subset"] = [
                {"J": list(s.J),
                 "groups": {str(d): {"rank": g.rank, "torsion": list(g.torsion)}
                            for d, g in sorted(s.groups.items())}}
                for s in summands if s.J
            ]
        click.echo(json.dumps(doc, indent=2))
    else:
        _print_groups(totals, False, drop_degree_zero=True)
        if by_subset:
            click.echo()
            for s in summands:
                if not s.J:
                    continue
                pieces = ", ".join(f"degree {d}: {g}"
                                   for d, g in sorted(s.groups.items()))
                click.echo(f"J = {set(s.J)}: {pieces}")
    report = verify_hochster(K)
    if not report.passed:
        click.echo(str(report), err=True)
        raise click.exceptions.Exit(EXIT_INTERNAL)


@main.command()
@click.argument("expr")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def hurewicz(expr, as_json):
    """Cellular chain representing the Hurewicz image of EXPR."""
    w = _parse_expr(expr)
    try:
        chain = hurewicz_chain(w)
    except MomentAngleError as exc:
        raise click.exceptions.Exit(_input_error(str(exc)))
    if as_json:
        click.echo(json.dumps({"expression": str(w), "dimension": dimension(w),
                               "chain": str(chain)}, indent=2))
    else:
        click.echo(f"dimension: {dimension(w)}")
        click.echo(f"chain: {chain}")


@main.command()
@click.argument("expr")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def minimal(expr, as_json):
    """Smallest complex realizing the nested product EXPR."""
    w = _parse_expr(expr)
    try:
        K = minimal_complex(w)
    except MomentAngleError as exc:
        raise click.exceptions.Exit(_input_error(str(exc)))
    click.echo(json.dumps(complex_document(K), indent=2 if as_json else None))


def _report_out(report, as_json: bool) -> None:
    if as_json:
        click.echo(json.dumps(report.to_dict(), indent=2))
        return
    click.echo(f"verdict: {report.verdict}"
               + (" (extrapolated criterion)" if report.extrapolated else ""))
    for claim, witness in report.certificates:
        click.echo(f"  {claim}" + (f": {witness}" if witness is not None else ""))


@main.command()
@click.argument("expr")
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def defined(expr, file, as_json):
    """Is the product EXPR defined in the complex from FILE?"""
    w = _parse_expr(expr)
    K = load_complex(file)
    _report_out(is_defined(w, K), as_json)


@main.command()
@click.argument("expr")
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def realize(expr, file, as_json):
    """Homology-level realizability evidence for EXPR in FILE."""
    w = _parse_expr(expr)
    K = load_complex(file)
    try:
        _report_out(realize_evidence(w, K), as_json)
    except MomentAngleError as exc:
        raise click.exceptions.Exit(_input_error(str(exc)))


@main.command()
@click.argument("file", type=click.Path())
@click.option("--dim", "target_dim", type=int, required=True,
              help="sphere dimension of the products")
@click.option("--max-brackets", type=int, default=2, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def enumerate(file, target_dim, max_brackets, as_json):
    """All products of the given dimension on FILE's vertices, analyzed."""
    K = load_complex(file)
    try:
        candidates = enumerate_products(K, target_dim, max_brackets)
    except MomentAngleError as exc:
        raise click.exceptions.Exit(_input_error(str(exc)))
    if as_json:
        doc = [{"expression": str(c.expr),
                "defined": c.defined.verdict,
                "trivial_arguments": [str(b) for b in c.trivial_arguments]}
               for c in candidates]
        click.echo(json.dumps(doc, indent=2))
        return
    for c in candidates:
        extra = ""
        if c.trivial_arguments:
            extra = "  trivial arguments: " + \
                ", ".join(str(b) for b in c.trivial_arguments)
        click.echo(f"{str(c.expr):<40} {c.defined.verdict}{extra}")
    click.echo(f"{len(candidates)} candidates, "
               f"{sum(c.is_viable for c in candidates)} defined with all "
               "arguments nontrivial")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--max-brackets", type=int, default=None,
              help="bracket bound for candidate products (default: no bound)")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
def wdelta(file, max_brackets, as_json):
    """Try to match a basis of H_*(Z_K) by Whitehead product classes."""
    K = load_complex(file)
    _report_out(wdelta_evidence(K, max_brackets), as_json)


@main.command("verify-paper")
def verify_paper():
    """Re-run all built-in reference-example checks."""
    try:
        ok = verify_mod.run_all(click.echo)
    except NotAComplex as exc:
        click.echo(f"internal invariant violated: {exc}", err=True)
        raise click.exceptions.Exit(EXIT_INTERNAL)
    if not ok:
        raise click.exceptions.Exit(EXIT_VERIFY_FAIL)


def entrypoint():
    try:
        # click returns the Exit code instead of raising in this mode
        rv = main(standalone_mode=False)
        if isinstance(rv, int):
            sys.exit(rv)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.ClickException as exc:
        exc.show()
        sys.exit(EXIT_INPUT)
    except click.Abort:
        sys.exit(EXIT_INPUT)
    except NotAComplex as exc:
        click.echo(f"internal invariant violated: {exc}", err=True)
        sys.exit(EXIT_INTERNAL)
    except MomentAngleError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


if __name__ == "__main__":
    entrypoint()
