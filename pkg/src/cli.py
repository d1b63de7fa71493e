"""moduli-intersections command line.

Results go to stdout, logs to stderr. Exit codes: 0 success, 1 a
verification suite failed, 2 bad input.
"""

import json
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Iterator, Optional

# Add src directory to path for imports when run directly
_src_dir = Path(__file__).parent
if str(_src_dir) not in sys.path:
    sys.path.insert(0, str(_src_dir))

import typer
from pydantic import ValidationError

from checks.suites import run_suite
from commands import cohft_payload, number_payload, table_payload, wp_payload
from evaluator.brackets import EvalRoute
from indexing.errors import ModuliError
from params import CohftParams, NumberParams, Suite, TableParams, VerifyParams, WpParams
from settings import configure_logging

EXIT_FAILED = 1
EXIT_USAGE = 2

app = typer.Typer(
    help="Exact psi, kappa and lambda_1 intersection numbers in genus 0 and 1.",
    no_args_is_help=True,
    add_completion=False,
)

JsonFlag = Annotated[bool, typer.Option("--json", help="Emit JSON instead of text")]
Genus = Annotated[int, typer.Option("--genus", "-g", help="0 or 1")]


@contextmanager
def _usage_errors() -> Iterator[None]:
    try:
        yield
    except (ModuliError, ValidationError) as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(EXIT_USAGE) from None


def _emit(payload: dict, as_json: bool, text: str):
    typer.echo(json.dumps(payload, indent=2) if as_json else text)


@app.callback()
def main_options(
    verbose: Annotated[bool, typer.Option("--verbose", "-v", help="Debug logging on stderr")] = False,
):
    with _usage_errors():
        configure_logging("DEBUG" if verbose else None)


@app.command()
def number(
    genus: Genus,
    tau: Annotated[str, typer.Option(help="psi exponents, e.g. 0:3,1:1")] = "",
    kappa: Annotated[str, typer.Option(help="kappa exponents, e.g. 1:2")] = "",
    lambda_r: Annotated[Optional[int], typer.Option("--lambda", help="power of lambda_1 (tau_0 only)")] = None,
    route: Annotated[EvalRoute, typer.Option(help="evaluation route")] = EvalRoute.SPLITTING,
    as_json: JsonFlag = False,
):
    """Print one bracket <tau^m kappa^p>_g as p/q."""
    with _usage_errors():
        params = NumberParams(genus=genus, tau=tau, kappa=kappa, lambda_r=lambda_r, route=route)
        payload = number_payload(params)
    _emit(payload, as_json, payload["value"])


@app.command()
def table(
    genus: Genus,
    n_max: Annotated[int, typer.Option(help="largest number of points")] = 6,
    dim_max: Annotated[int, typer.Option(help="largest |m| + |p|")] = 6,
    as_json: JsonFlag = False,
):
    """Print every nonzero bracket of a genus within the bounds."""
    with _usage_errors():
        payload = table_payload(TableParams(genus=genus, n_max=n_max, dim_max=dim_max))
    _emit(payload, as_json, "\n".join(f"{row['bracket']} = {row['value']}" for row in payload["rows"]))


@app.command()
def verify(
    suite: Annotated[Suite, typer.Argument(help="which suite to run")],
    n_max: Annotated[Optional[int], typer.Option(help="routes: largest number of points")] = None,
    dim_max: Annotated[Optional[int], typer.Option(help="routes: largest |m| + |p|")] = None,
    t_max: Annotated[Optional[int], typer.Option(help="series: largest t index")] = None,
    s_max: Annotated[Optional[int], typer.Option(help="series: largest s index")] = None,
    degree: Annotated[Optional[int], typer.Option(help="series: total degree")] = None,
    max_sum: Annotated[Optional[int], typer.Option(help="closed-form: largest sum of b")] = None,
    order: Annotated[Optional[int], typer.Option(help="getzler: x-order of the potentials")] = None,
    s: Annotated[Optional[str], typer.Option("--s", help="getzler: s coordinates, e.g. 1=1/2,2=0")] = None,
    u: Annotated[Optional[str], typer.Option("--u", help="getzler: u coordinate")] = None,
    seed: Annotated[Optional[int], typer.Option(help="product-rule: random seed")] = None,
    as_json: JsonFlag = False,
):
    """Run a verification suite; exit 1 if any check fails."""
    given = {
        "n_max": n_max, "dim_max": dim_max, "t_max": t_max, "s_max": s_max, "degree": degree,
        "max_sum": max_sum, "order": order, "s": s, "u": u, "seed": seed,
    }
    with _usage_errors():
        params = VerifyParams(suite=suite, **{k: v for k, v in given.items() if v is not None})
        result = run_suite(params)
    payload = result.to_dict()
    lines = []
    for report in payload["reports"]:
        status = "PASS" if report["passed"] else "FAIL"
        lines.append(f"{status} {report['name']}: {report['checked']} checked, {report['violations']} violations")
        if report["first_counterexample"]:
            lines.append(f"  first counterexample: {report['first_counterexample']}")
    lines.append("all passed" if result.passed else "FAILED")
    _emit(payload, as_json, "\n".join(lines))
    if not result.passed:
        raise typer.Exit(EXIT_FAILED)


def _float_cell(value: float | None) -> str:
    return "-" if value is None else f"{value:.6g}"


@app.command()
def wp(
    genus: Genus,
    n_max: Annotated[int, typer.Option(help="largest number of points")] = 50,
    asymptotic: Annotated[bool, typer.Option("--asymptotic", help="compare with the large-n asymptotics")] = False,
    as_json: JsonFlag = False,
):
    """Weil-Petersson volumes w_{g,n} = <kappa_1^(3g-3+n)>."""
    with _usage_errors():
        payload = wp_payload(WpParams(genus=genus, n_max=n_max, asymptotic=asymptotic))
    rows = payload["rows"]
    width = max(len(row["w"]) for row in rows)
    lines = []
    if asymptotic:
        lines.append(f"gamma0 = {payload['gamma0']:.12f}  C = {payload['C']:.10f}")
        lines.append(f"{'n':>4}  {'w':>{width}}  {'asymptote (float)':>18}  {'ratio (float)':>14}")
        for row in rows:
            lines.append(f"{row['n']:>4}  {row['w']:>{width}}  {_float_cell(row['asymptote']):>18}  "
                         f"{_float_cell(row['ratio']):>14}")
        trend = payload["trend"]
        lines.append(f"|ratio / {trend['limit']:.6g} - 1| decreasing at the checkpoints: {trend['decreasing']}")
    else:
        for row in rows:
            lines.append(f"{row['n']:>4}  {row['w']:>{width}}")
    _emit(payload, as_json, "\n".join(lines))


@app.command()
def cohft(
    s: Annotated[Optional[str], typer.Option("--s", help="s coordinates, e.g. 1=1/2,2=0")] = None,
    u: Annotated[Optional[str], typer.Option("--u", help="u coordinate, e.g. 1/3")] = None,
    order: Annotated[Optional[int], typer.Option(help="x-order of the potentials")] = None,
    as_json: JsonFlag = False,
):
    """Potentials Phi_0, Phi_1 of the rank one theory at (s, u)."""
    with _usage_errors():
        params = CohftParams(s=s, u=u, **({"order": order} if order is not None else {}))
        payload = cohft_payload(params)
    lines = []
    for name in ("phi0", "phi1"):
        terms = " + ".join(f"{row['coefficient']}*x^{row['exponents'].get('x', 0)}" for row in payload[name])
        lines.append(f"{name} = {terms or '0'} + O(x^{payload['order'] + 1})")
    lines.append(f"getzler_ok = {payload['getzler_ok']}")
    _emit(payload, as_json, "\n".join(lines))


def main():
    app()


if __name__ == "__main__":
    main()
