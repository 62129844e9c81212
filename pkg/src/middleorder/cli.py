"""Command-line surface: tables, Hasse diagrams, one-shot queries and
verification suites.

Exit codes: 0 on success, 1 on verification failure, 2 on usage or
parse errors.
"""
from __future__ import annotations

import click

from . import counting, heyting, involutions, orders, parking, verify
from .permutations import (
    format_inversion_sequence,
    format_permutation,
    from_inversion_sequence,
    inversion_sequence,
    parse_inversion_sequence,
    parse_permutation,
)
from .posets import FinitePoset

DIAGRAM_LIMIT = 5


@click.group()
def main() -> None:
    """Explore the middle order on permutations."""


# ---------------------------------------------------------------------------
# table


@main.command("table")
@click.argument("kind", type=click.Choice(counting.TABLE_KINDS))
@click.option("--n", "n", type=int, required=True, help="Largest row to emit.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(("csv", "json", "oeis")),
    default="csv",
    show_default=True,
)
def cmd_table(kind: str, n: int, fmt: str) -> None:
    """Emit rows 1..N of a counting table."""
    if not 1 <= n <= counting.COUNTING_LIMIT:
        raise click.UsageError(f"n must be in [1, {counting.COUNTING_LIMIT}]")
    try:
        rows = counting.table_rows(kind, n)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if fmt == "csv":
        click.echo(counting.rows_to_csv(rows), nl=False)
    elif fmt == "json":
        click.echo(counting.rows_to_json(kind, rows), nl=False)
    else:
        click.echo(counting.rows_to_bfile(rows), nl=False)


# ---------------------------------------------------------------------------
# hasse

ORDERS = ("middle", "bruhat", "weak", "involutions", "regular", "parking")


def _build_poset(order: str, n: int) -> FinitePoset:
    if order == "middle":
        return orders.middle_poset(n)
    if order == "bruhat":
        return orders.bruhat_poset(n)
    if order == "weak":
        return orders.weak_poset(n)
    if order == "involutions":
        return involutions.involution_poset(n)
    if order == "regular":
        return heyting.regular_subposet(n)
    return parking.parking_poset(n)


def _node_text(label, order: str, style: str) -> str:
    if order == "parking":
        return parking.format_parking(label)
    if style == "invseq":
        return format_inversion_sequence(inversion_sequence(label))
    return format_permutation(label)


@main.command("hasse")
@click.option("--order", type=click.Choice(ORDERS), default="middle", show_default=True)
@click.option("--n", "n", type=int, required=True)
@click.option(
    "--labels",
    "style",
    type=click.Choice(("word", "invseq")),
    default="word",
    show_default=True,
    help="Node labels: one-line notation or inversion sequence.",
)
@click.option("--limit", type=int, default=DIAGRAM_LIMIT, show_default=True,
              help="Largest n accepted.")
def cmd_hasse(order: str, n: int, style: str, limit: int) -> None:
    """Print the Hasse diagram of an order as a DOT digraph."""
    if n < 1:
        raise click.UsageError("n must be >= 1")
    if n > limit:
        raise click.UsageError(f"n = {n} exceeds the diagram limit {limit}")
    poset = _build_poset(order, n)
    relabeled = FinitePoset(
        [_node_text(lab, order, style) for lab in poset.labels],
        poset._above,
    )
    click.echo(relabeled.to_dot(name=order), nl=False)


# ---------------------------------------------------------------------------
# query


@main.command("query")
@click.argument("expr", nargs=-1, required=True)
def cmd_query(expr: tuple[str, ...]) -> None:
    """Evaluate a one-shot expression.

    \b
    invseq W      inversion sequence of W
    perm X        permutation with inversion sequence X
    meet V W      middle-order meet
    join V W      middle-order join
    mobius V W    middle-order Moebius value
    mobius-inv W  Moebius value of [identity, W] among involutions
    heyting V W   relative pseudocomplement V ~> W
    pseudo V      pseudocomplement of V
    euler W       Euler characteristic of W
    covers W      elements covering W, one per line
    """
    try:
        click.echo(_evaluate(list(expr)))
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _evaluate(tokens: list[str]) -> str:
    op, args = tokens[0], tokens[1:]
    arity = {
        "invseq": 1, "perm": 1, "meet": 2, "join": 2, "mobius": 2,
        "mobius-inv": 1, "heyting": 2, "pseudo": 1, "euler": 1, "covers": 1,
    }
    if op not in arity:
        raise ValueError(f"unknown operation {op!r}")
    if len(args) != arity[op]:
        raise ValueError(f"{op} takes {arity[op]} argument(s), got {len(args)}")
    if op == "perm":
        return format_permutation(from_inversion_sequence(parse_inversion_sequence(args[0])))
    words = [parse_permutation(a) for a in args]
    if op == "invseq":
        return format_inversion_sequence(inversion_sequence(words[0]))
    if op == "meet":
        return format_permutation(orders.meet(*words))
    if op == "join":
        return format_permutation(orders.join(*words))
    if op == "mobius":
        return str(orders.mobius_middle(*words))
    if op == "mobius-inv":
        return str(involutions.mobius_involution_ideal(words[0]))
    if op == "heyting":
        return format_permutation(heyting.relative_pseudocomplement(*words))
    if op == "pseudo":
        return format_permutation(heyting.pseudocomplement(words[0]))
    if op == "euler":
        return str(counting.euler_characteristic(words[0]))
    return "\n".join(format_permutation(w) for w in orders.upper_covers(words[0]))


# ---------------------------------------------------------------------------
# verify


@main.command("verify")
@click.option(
    "--suite",
    type=click.Choice(tuple(verify.SUITES) + ("all",)),
    default="all",
    show_default=True,
)
@click.option("--n-max", "n_max", type=int, default=None,
              help="Run each check only up to this size.")
@click.option("--limit", type=int, default=None,
              help="Override --n-max for deep local runs.")
@click.pass_context
def cmd_verify(ctx: click.Context, suite: str, n_max: int | None, limit: int | None) -> None:
    """Run a verification suite; exit 1 if any check fails."""
    effective = limit if limit is not None else n_max
    results = verify.run_suite(suite, effective)
    failures = 0
    for result in results:
        status = "pass" if result.ok else "FAIL"
        line = f"[{status}] {result.name}"
        if not result.ok:
            failures += 1
            if result.detail:
                line += f"  ({result.detail})"
        click.echo(line)
    click.echo(f"{len(results) - failures}/{len(results)} checks passed")
    if failures:
        ctx.exit(1)


if __name__ == "__main__":
    main()
