"""Command-line surface: expand, tableaux, check, witnesses, verify.

Exit codes: 0 success/verified, 1 multiplicity found or predicate refuted,
2 usage error, 3 tableau budget exceeded.
"""

from __future__ import annotations

import functools
import json
import os
import sys

import click

from . import classify
from .classify import DEFAULT_MAX_TABLEAUX, THEOREMS
from .ctableaux import enumerate_sct
from .errors import BudgetExceededError, capped
from .qsym import (
    f_component_count,
    f_to_m,
    is_fmf,
    multiplicity_witnesses,
    qs_f,
    skew_schur_f,
)
from .shapes import SkewShape
from .young import enumerate_syt, lr_expansion


def _parse_parts(text: str | None, what: str) -> tuple[int, ...]:
    if not text:
        raise click.UsageError(f"missing or empty {what}")
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise click.UsageError(f"malformed {what}: {text!r}")
    if any(p < 1 for p in parts):
        raise click.UsageError(f"{what} parts must be positive: {text!r}")
    return parts


def _parse_partition(text: str | None, what: str = "partition") -> tuple[int, ...]:
    parts = _parse_parts(text, what)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise click.UsageError(f"{what} must be weakly decreasing: {text!r}")
    return parts


def _parse_shape(outer: str | None, inner: str | None) -> SkewShape:
    outer_parts = _parse_partition(outer, "outer")
    inner_parts = _parse_partition(inner, "inner") if inner else ()
    try:
        return SkewShape(outer_parts, inner_parts)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _source(kind, composition, partition, outer, inner):
    """Resolve --kind plus index flags into a composition or shape."""
    if kind == "qs":
        return _parse_parts(composition, "composition")
    if kind == "schur":
        return SkewShape(_parse_partition(partition))
    return _parse_shape(outer, inner)


def _emit_json(obj) -> None:
    click.echo(json.dumps(obj, indent=2))


def _budget_guarded(f):
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except BudgetExceededError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)

    return wrapper


_kind_option = click.option(
    "--kind", type=click.Choice(["qs", "schur", "skew"]), required=True
)
_index_options = [
    click.option("--composition", default=None, help="comma-separated parts"),
    click.option("--partition", default=None, help="comma-separated parts"),
    click.option("--outer", default=None, help="outer partition of a skew shape"),
    click.option("--inner", default=None, help="inner partition (default: empty)"),
]
_format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text"
)
_budget_option = click.option(
    "--budget", type=int, default=DEFAULT_MAX_TABLEAUX, show_default=True
)


def _with(options, f):
    for option in reversed(options):
        f = option(f)
    return f


@click.group()
def main() -> None:
    """Expansions of Schur-like functions in the fundamental quasisymmetric
    basis, and exhaustive verification of their classification predicates."""


@main.command()
@_kind_option
@click.option(
    "--basis", type=click.Choice(["f", "m", "schur"]), default="f", show_default=True
)
@_format_option
@_budget_option
@_budget_guarded
def expand(kind, basis, fmt, budget, composition, partition, outer, inner) -> None:
    """Print a basis expansion for the requested index object."""
    source = _source(kind, composition, partition, outer, inner)
    if basis == "schur":
        if kind != "skew":
            raise click.UsageError("--basis schur requires --kind skew")
        result = lr_expansion(source, budget)
    else:
        if kind == "qs":
            result = qs_f(source, budget)
        else:
            result = skew_schur_f(source, budget)
        if basis == "m":
            result = f_to_m(result)
    if fmt == "json":
        _emit_json(result.to_json_obj())
    else:
        click.echo(result.to_text())


expand = _with(_index_options, expand)


@main.command()
@_kind_option
@_format_option
@_budget_option
@_budget_guarded
def tableaux(kind, fmt, budget, composition, partition, outer, inner) -> None:
    """Stream the standard tableaux of the requested shape."""
    source = _source(kind, composition, partition, outer, inner)
    if kind == "qs":
        stream = capped(
            enumerate_sct(source), budget, f"composition tableaux of shape {source}"
        )
    else:
        stream = capped(enumerate_syt(source), budget, f"tableaux of shape {source}")
    if fmt == "json":
        _emit_json([t.to_json_obj() for t in stream])
    else:
        blocks = [t.to_text() for t in stream]
        click.echo("\n\n".join(blocks) if blocks else "(no tableaux)")


tableaux = _with(_index_options, tableaux)


@main.command()
@_kind_option
@_format_option
@_budget_option
@_budget_guarded
def check(kind, fmt, budget, composition, partition, outer, inner) -> None:
    """Report multiplicity-freeness and the number of F-components."""
    source = _source(kind, composition, partition, outer, inner)
    expansion = (
        qs_f(source, budget) if kind == "qs" else skew_schur_f(source, budget)
    )
    free = is_fmf(expansion)
    components = f_component_count(expansion)
    if fmt == "json":
        _emit_json({"fmf": free, "components": components})
    else:
        click.echo(f"fmf: {'true' if free else 'false'}")
        click.echo(f"components: {components}")
    sys.exit(0 if free else 1)


check = _with(_index_options, check)


@main.command()
@_kind_option
@_format_option
@_budget_option
@_budget_guarded
def witnesses(kind, fmt, budget, composition, partition, outer, inner) -> None:
    """Print a colliding pair of tableaux for every repeated descent set."""
    source = _source(kind, composition, partition, outer, inner)
    found = multiplicity_witnesses(source, budget)
    if fmt == "json":
        _emit_json(
            [
                {
                    "degree": d.degree,
                    "descents": sorted(d.members),
                    "first": a.to_json_obj(),
                    "second": b.to_json_obj(),
                }
                for d, a, b in found
            ]
        )
    else:
        if not found:
            click.echo("no repeated descent sets")
        for d, a, b in found:
            click.echo(f"descents {sorted(d.members)}:")
            click.echo(a.to_text())
            click.echo("--")
            click.echo(b.to_text())
    sys.exit(1 if found else 0)


witnesses = _with(_index_options, witnesses)


@main.command()
@click.option("--theorem", type=click.Choice(list(THEOREMS)), required=True)
@click.option("--max-n", "max_n", type=int, required=True)
@_budget_option
@click.option(
    "--threads",
    type=int,
    default=lambda: os.cpu_count() or 1,
    help="worker threads (default: available parallelism)",
)
@_format_option
@_budget_guarded
def verify(theorem, max_n, budget, threads, fmt) -> None:
    """Exhaustively compare a classification predicate with brute force."""
    if max_n < 1:
        raise click.UsageError("--max-n must be at least 1")
    if threads < 1:
        raise click.UsageError("--threads must be at least 1")
    report = classify.verify(theorem, max_n, budget, threads)
    if fmt == "json":
        _emit_json(report.to_json_obj())
    else:
        click.echo(report.to_text())
    sys.exit(0 if report.verified else 1)


if __name__ == "__main__":
    main()
