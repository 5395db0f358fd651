"""Command-line front end. Thin client over the service handlers.

Exit codes: 0 success, 1 usage errors, 2 domain errors (bad mathematical
input such as a Nonparity pair). Diagnostics go to stderr; data to stdout.
With --json each result is wrapped as {"command": ..., "result": ...}.
"""

from __future__ import annotations

import json
import sys

import click

from . import service
from .errors import AdjkitError, ParseError


def _emit(ctx: click.Context, command: str, result, text: str) -> None:
    if ctx.obj["json"]:
        click.echo(json.dumps({"command": command, "result": result}, sort_keys=True))
    else:
        click.echo(text)


def _read_doc(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None


@click.group()
@click.option("--json", "json_mode", is_flag=True, help="emit JSON results")
@click.option("--fuel", type=int, default=10_000, show_default=True,
              help="rewrite step budget for the zig-zag verifier")
@click.option("--max-n", type=int, default=None, help="depth cap for generated corpora")
@click.option("--seed", type=int, default=0, show_default=True,
              help="seed for randomized corpus generation")
@click.pass_context
def cli(ctx: click.Context, json_mode: bool, fuel: int, max_n: int | None, seed: int) -> None:
    """Symbolic toolkit for higher-adjunctibility combinatorics."""
    ctx.obj = {"json": json_mode, "fuel": fuel, "max_n": max_n, "seed": seed}


@cli.command()
@click.argument("a")
@click.argument("b")
@click.pass_context
def parity(ctx: click.Context, a: str, b: str) -> None:
    """Parity class comparison of two dexterity functions."""
    result = service.handle_parity(a, b)
    _emit(ctx, "parity", result, result)
    if result == "Nonparity":
        sys.exit(2)


@cli.command()
@click.argument("a")
@click.pass_context
def canonical(ctx: click.Context, a: str) -> None:
    """Canonical representative of A's parity class."""
    result = service.handle_canonical(a)
    _emit(ctx, "canonical", result, result)


@cli.command()
@click.argument("a")
@click.argument("j", type=int)
@click.pass_context
def interchange(ctx: click.Context, a: str, j: int) -> None:
    """Negate entries J and J+1 of a dexterity function."""
    result = service.handle_interchange(a, j)
    _emit(ctx, "interchange", result, result)


@cli.command()
@click.argument("a")
@click.argument("b")
@click.pass_context
def normalize(ctx: click.Context, a: str, b: str) -> None:
    """Interchange witness rewriting A into B (parity pairs only)."""
    positions = service.handle_normalize(a, b)
    _emit(ctx, "normalize", positions, "[" + ", ".join(map(str, positions)) + "]")


@cli.command()
@click.argument("file", type=click.Path())
@click.pass_context
def saturate(ctx: click.Context, file: str) -> None:
    """Close a fact-base JSON file under the adjunctibility inference rules."""
    result = service.handle_saturate(_read_doc(file))
    _emit(ctx, "saturate", result, json.dumps(result, indent=2, sort_keys=True))


@cli.command()
@click.argument("a")
@click.argument("b")
@click.argument("k", type=int)
@click.argument("n", type=int)
@click.pass_context
def oppose(ctx: click.Context, a: str, b: str, k: int, n: int) -> None:
    """Opposite function attached to the dexterity pair (A, B) at offset K."""
    result = service.handle_oppose(a, b, k, n)
    _emit(ctx, "oppose", result, result)


@cli.command()
@click.argument("variant")
@click.argument("n", type=int)
@click.pass_context
def opbuild(ctx: click.Context, variant: str, n: int) -> None:
    """Named opposite function: even_op, odd_op, constant_id, constant_op."""
    result = service.handle_opbuild(variant, n)
    _emit(ctx, "opbuild", result, result)


@cli.command(name="tree-classes")
@click.argument("n", type=int)
@click.pass_context
def tree_classes(ctx: click.Context, n: int) -> None:
    """Dexterity-tree class count at depth N via the recurrence."""
    result = service.handle_tree_classes(n)
    _emit(ctx, "tree-classes", result, result)


@cli.command(name="tree-brute")
@click.argument("n", type=int)
@click.pass_context
def tree_brute(ctx: click.Context, n: int) -> None:
    """Dexterity-tree class count at depth N by exhaustive union-find."""
    result = service.handle_tree_brute(n)
    _emit(ctx, "tree-brute", result, result["class_count"])


@cli.command()
@click.argument("n", type=int)
@click.pass_context
def wreath(ctx: click.Context, n: int) -> None:
    """Involution count in the depth-(N+1) binary tree automorphism group."""
    result = service.handle_wreath(n)
    _emit(ctx, "wreath", result, result)


@cli.command(name="tree-equiv")
@click.argument("s")
@click.argument("t")
@click.pass_context
def tree_equiv(ctx: click.Context, s: str, t: str) -> None:
    """Decide interchange-equivalence of two dexterity trees."""
    result = service.handle_tree_equiv(s, t)
    _emit(ctx, "tree-equiv", result, "equivalent" if result["equivalent"] else "inequivalent")


@cli.command(name="schema")
@click.argument("f")
@click.argument("k", type=int)
@click.argument("dex")
@click.option("--full", is_flag=True, help="two-sided records at every node")
@click.pass_context
def schema(ctx: click.Context, f: str, k: int, dex: str, full: bool) -> None:
    """Adjunction-record tower over morphism F at level K driven by DEX."""
    result = service.handle_schema(f, k, dex, full)
    lines = [f"records: {len(result['records'])}"]
    for rec in result["records"]:
        name = rec["name"] or "-"
        lines.append(f"{name} {rec['side']} {rec['left']} -| {rec['right']}")
    _emit(ctx, "schema", result, "\n".join(lines))


@cli.command(name="compose-adj")
@click.argument("file", type=click.Path())
@click.pass_context
def compose_adj(ctx: click.Context, file: str) -> None:
    """Compose the two adjunction records a context document names."""
    result = service.handle_compose_adj(_read_doc(file), ctx.obj["fuel"])
    text = "\n".join(f"{key}: {result[key]}" for key in ("left", "right", "unit", "counit", "zigzag"))
    _emit(ctx, "compose-adj", result, text)


@cli.command(name="verify-zigzag")
@click.argument("file", type=click.Path())
@click.pass_context
def verify_zigzag(ctx: click.Context, file: str) -> None:
    """Run the bounded zig-zag verifier on the record a document names."""
    result = service.handle_verify_zigzag(_read_doc(file), ctx.obj["fuel"])
    _emit(ctx, "verify-zigzag", result, result["status"])
    if result["status"] == "TypeError":
        sys.exit(2)


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except SystemExit as exc:  # raised by handlers that force a specific code
        return int(exc.code or 0)
    except (click.UsageError, click.ClickException) as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except AdjkitError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except click.exceptions.Abort:
        return 1
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
