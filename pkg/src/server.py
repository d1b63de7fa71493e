"""Moduli Intersections MCP Server - exact intersection numbers for LLM clients."""

import sys
from pathlib import Path

# Add src directory to path for imports when run directly
_src_dir = Path(__file__).parent
if str(_src_dir) not in sys.path:
    sys.path.insert(0, str(_src_dir))
if str(_src_dir.parent) not in sys.path:
    sys.path.insert(0, str(_src_dir.parent))

from typing import Annotated

from mcp.server.fastmcp import FastMCP
from pydantic import ValidationError

from checks.suites import run_suite
from commands import cohft_payload, number_payload, table_payload, wp_payload
from evaluator.brackets import EvalRoute
from indexing.errors import ModuliError
from params import CohftParams, NumberParams, Suite, TableParams, VerifyParams, WpParams
from settings import configure_logging

mcp = FastMCP(
    "Moduli Intersections",
    instructions="""Exact intersection numbers of psi, kappa and lambda_1 classes
on the moduli spaces of stable curves of genus 0 and 1.

Tools:
- intersection_number: one bracket <tau^m kappa^p>_g as p/q (start here)
- intersection_table: every nonzero bracket within bounds
- run_verification: machine checks of the recursions and generating-function identities
- weil_petersson_table: volumes w_{g,n} and their large-n asymptotics
- cohft_potential: rank one CohFT potentials at a point (s, u)

Index syntax: "0:3,1:1" means tau_0^3 tau_1. Rationals are "p/q" strings.
"""
)


@mcp.tool()
def intersection_number(
    genus: Annotated[int, "Genus, 0 or 1"],
    tau: Annotated[str, "psi exponents as position:multiplicity, e.g. '0:3,1:1'"] = "",
    kappa: Annotated[str, "kappa exponents as position:multiplicity, positions >= 1"] = "",
    lambda_r: Annotated[int | None, "Power of lambda_1; tau must then be tau_0 only"] = None,
    route: Annotated[str, "splitting, puncture-dilaton or closed-form"] = "splitting",
) -> dict:
    """Evaluate one bracket <tau^m kappa^p>_g exactly.

    Returns: {genus, m, p, value} with value a "p/q" string. Off-dimension
    brackets are 0; unstable ones return an error.
    """
    try:
        params = NumberParams(genus=genus, tau=tau, kappa=kappa, lambda_r=lambda_r, route=EvalRoute(route))
        return number_payload(params)
    except (ModuliError, ValidationError, ValueError) as e:
        return {"error": str(e)}


@mcp.tool()
def intersection_table(
    genus: Annotated[int, "Genus, 0 or 1"],
    n_max: Annotated[int, "Largest number of marked points"] = 6,
    dim_max: Annotated[int, "Largest |m| + |p|"] = 6,
) -> dict:
    """List every nonzero bracket of one genus within the bounds."""
    try:
        return table_payload(TableParams(genus=genus, n_max=n_max, dim_max=dim_max))
    except (ModuliError, ValidationError, ValueError) as e:
        return {"error": str(e)}


@mcp.tool()
def run_verification(
    suite: Annotated[str, "routes, charge, genus1-log, kappa-log, annihilators, getzler, closed-form, lambda, product-rule or all"],
    t_max: Annotated[int, "Largest t index of the series window"] = 3,
    s_max: Annotated[int, "Largest s index of the series window"] = 3,
    degree: Annotated[int, "Total degree of the series window"] = 6,
    n_max: Annotated[int, "routes: largest number of points"] = 6,
    dim_max: Annotated[int, "routes: largest |m| + |p|"] = 6,
) -> dict:
    """Run a verification suite.

    Every check is exact rational equality. Returns a summary with pass/fail
    counts and, per check, the first counterexample if there is one.
    """
    try:
        params = VerifyParams(suite=Suite(suite), t_max=t_max, s_max=s_max, degree=degree,
                              n_max=n_max, dim_max=dim_max)
        return run_suite(params).to_dict()
    except (ModuliError, ValidationError, ValueError) as e:
        return {"error": str(e)}


@mcp.tool()
def weil_petersson_table(
    genus: Annotated[int, "Genus, 0 or 1"],
    n_max: Annotated[int, "Largest number of marked points"] = 20,
    asymptotic: Annotated[bool, "Add the asymptote, the ratio and the Bessel constants"] = False,
) -> dict:
    """Weil-Petersson volumes w_{g,n} = integral of kappa_1^(3g-3+n)."""
    try:
        return wp_payload(WpParams(genus=genus, n_max=n_max, asymptotic=asymptotic))
    except (ModuliError, ValidationError, ValueError) as e:
        return {"error": str(e)}


@mcp.tool()
def cohft_potential(
    s: Annotated[str, "s coordinates as index=value, e.g. '1=1/2,2=0'"] = "",
    u: Annotated[str, "u coordinate, e.g. '1/3'"] = "0",
    order: Annotated[int, "x-order of the potentials"] = 12,
) -> dict:
    """Potentials Phi_0, Phi_1 of the normalized rank one CohFT at (s, u).

    Returns both series as coefficient rows plus getzler_ok, whether the
    pair satisfies Getzler's genus one equation.
    """
    try:
        return cohft_payload(CohftParams(s=s, u=u, order=order))
    except (ModuliError, ValidationError, ValueError) as e:
        return {"error": str(e)}


def main():
    """Run the MCP server."""
    configure_logging()
    mcp.run(transport="stdio")


if __name__ == "__main__":
    main()
