#!/usr/bin/env python3

"""
Replay a saved operation script against one implementation and the oracle
"""

from pathlib import Path

import click

from errors import TrieError
from mapkit import run_differential, script_from_text, script_to_text
from registry import IMPLEMENTATIONS
from utils import console, get_logger

logger = get_logger(__name__)


@click.command()
@click.option(
    "--impl", "impl_tag", type=click.Choice(sorted(IMPLEMENTATIONS)), default="canonical"
)
@click.option("--shrink/--no-shrink", default=True, help="minimize a failing script")
@click.argument("script_file", type=click.Path(exists=True, dir_okay=False))
def main(impl_tag, shrink, script_file):
    """Print the differential report of SCRIPT_FILE; exit 1 on divergence"""
    try:
        script = script_from_text(Path(script_file).read_text(encoding="utf-8"))
    except TrieError as e:
        console.print(f"[red]✗[/red] {e}")
        raise SystemExit(1) from e
    logger.info("replaying %d steps against %s", len(script), impl_tag)
    result = run_differential(IMPLEMENTATIONS[impl_tag], script, shrink=shrink)
    if result.ok:
        console.print(f"[green]✓[/green] {impl_tag}: {result.trials} steps agree with the oracle")
        return
    console.print(
        f"[red]✗[/red] {impl_tag}: step {result.failed_step}: {result.first_failure}"
    )
    click.echo(script_to_text(result.script), nl=False)
    raise SystemExit(1)


if __name__ == "__main__":
    main()
