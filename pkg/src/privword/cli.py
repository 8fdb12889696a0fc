"""Command-line front end: check, census, verify, bounds."""

from __future__ import annotations

import json
import logging
import math
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import click
import pandas as pd

from .bounds.family import BoundParams, h, hbar, omega, rho, sigma
from .config import DEFAULT_BUDGET, ENV_PREFIX
from .engines.census.enumerate import CensusConfig, census_table
from .exceptions import BudgetExceededError, InvalidInputError, NotSupportedError
from .harness.suites import SuiteConfig
from .verify import run_suite, suite_names
from .words.borders import border_chain, classify
from .words.word import Word

logger = logging.getLogger(__name__)

EXIT_VIOLATION = 1


class InputError(click.ClickException):
    exit_code = 2


class BudgetError(click.ClickException):
    exit_code = 3


@contextmanager
def _errors() -> Iterator[None]:
    try:
        yield
    except BudgetExceededError as e:
        raise BudgetError(str(e)) from e
    except (InvalidInputError, NotSupportedError) as e:
        raise InputError(str(e)) from e


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text, nl=not text.endswith("\n"))
    else:
        out.write_text(text, encoding="utf-8", newline="\n")
        logger.info("wrote %s", out)


@click.group()
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logs on stderr.")
def main(verbose: int) -> None:
    """Privileged and closed words: census, avoidance and bound verification."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s"
    )


@main.command()
@click.argument("word")
@click.option("--q", type=int, default=None, help="Alphabet size; inferred from the letters.")
def check(word: str, q: int | None) -> None:
    """Classify WORD (letters a, b, c, ...) as closed and/or privileged."""
    with _errors():
        u = Word.from_text(word, q)
        closed, privileged, _ = classify(u.symbols)
        bc = border_chain(u)
    click.echo(f"word: {word}")
    click.echo(f"q: {u.q}")
    click.echo("border array: " + " ".join(map(str, bc.border_array)))
    chain = " ".join(f'{m}:"{u.prefix(m)}"x{bc.occ[m]}' for m in bc.chain)
    click.echo(f"chain: {chain}")
    click.echo(f"closed: {str(closed).lower()}")
    click.echo(f"privileged: {str(privileged).lower()}")


def _census_json(frame: pd.DataFrame) -> str:
    rows = []
    for rec in frame.to_dict(orient="records"):
        n = int(rec["n"])
        priv = {k[1:]: int(v) for k, v in rec.items() if k.startswith("m") and int(k[1:]) < n}
        rows.append(
            {"n": n, "q": int(rec["q"]), "B": int(rec["B"]), "C": int(rec["C"]), "priv": priv}
        )
    return json.dumps(rows, indent=2) + "\n"


@main.command()
@click.option("--q", type=int, default=2, show_default=True)
@click.option("--max-n", type=int, required=True)
@click.option("--threads", type=int, default=1, show_default=True, envvar=ENV_PREFIX + "THREADS")
@click.option("--budget", type=int, default=DEFAULT_BUDGET, envvar=ENV_PREFIX + "BUDGET")
@click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True
)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)
def census(q: int, max_n: int, threads: int, budget: int, fmt: str, out: Path | None) -> None:
    """Exact B(n), C(n) and priv(n, m) for n = 1..MAX_N."""
    with _errors():
        cfg = CensusConfig(workers=threads, budget=budget)
        frame = census_table(q, max_n, cfg=cfg).to_frame()
    if fmt == "csv":
        _emit(frame.to_csv(index=False, lineterminator="\n"), out)
    else:
        _emit(_census_json(frame), out)


@main.command()
@click.option("--suite", type=click.Choice(suite_names()), default="all", show_default=True)
@click.option("--q", type=int, default=2, show_default=True)
@click.option("--max-n", type=int, default=14, show_default=True)
@click.option("--kappa", type=float, default=2.0, show_default=True)
@click.option("--threads", type=int, default=1, show_default=True, envvar=ENV_PREFIX + "THREADS")
@click.option("--budget", type=int, default=DEFAULT_BUDGET, envvar=ENV_PREFIX + "BUDGET")
@click.option(
    "--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True
)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--list", "list_suites", is_flag=True, help="Print the suite names and exit.")
@click.pass_context
def verify(
    ctx: click.Context,
    suite: str,
    q: int,
    max_n: int,
    kappa: float,
    threads: int,
    budget: int,
    fmt: str,
    out: Path | None,
    list_suites: bool,
) -> None:
    """Run a verification suite; exit 1 if any check is violated."""
    if list_suites:
        for name in suite_names():
            click.echo(name)
        return
    with _errors():
        cfg = SuiteConfig(q=q, max_n=max_n, kappa=kappa, workers=threads, budget=budget)
        report = run_suite(suite, cfg)
    _emit(report.to_json() + "\n" if fmt == "json" else report.to_csv(), out)
    summary = report.summary()
    click.echo(
        f"{suite}: {summary['checks']} checks, {summary['violations']} violations", err=True
    )
    if report.violations:
        ctx.exit(EXIT_VIOLATION)


@main.command()
@click.option("--q", type=int, default=2, show_default=True)
@click.option("--j", type=int, default=1, show_default=True)
@click.option("--n", "ns", type=int, multiple=True, required=True, help="Repeatable.")
@click.option("--kappa", type=float, default=2.0, show_default=True)
def bounds(q: int, j: int, ns: tuple[int, ...], kappa: float) -> None:
    """Evaluate omega, h, hbar, sigma^[j], rho^[j] and log10(rho^[j] q^n)."""
    rows = []
    with _errors():
        params = BoundParams(q=q, j=j, kappa=kappa)
        for n in ns:
            r = rho(j, n)
            rows.append(
                {
                    "n": n,
                    "omega": omega(n, params),
                    "h": h(n, params),
                    "hbar": hbar(n, params),
                    "sigma": sigma(j, n),
                    "rho": r,
                    "log10_rho_qn": math.log10(r) + n * math.log10(q),
                }
            )
    frame = pd.DataFrame(rows)
    click.echo(frame.to_csv(index=False, float_format="%.6g", lineterminator="\n"), nl=False)
