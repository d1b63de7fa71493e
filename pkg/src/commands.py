"""Command implementations shared by the CLI and the MCP server.

Each returns a JSON-ready dict; rationals are always `p/q` strings.
"""

import logging

from cohft.potentials import check_getzler, parse_point, potential_from_point
from evaluator.brackets import bracket, evaluate, lambda_bracket
from evaluator.keys import enumerate_keys
from indexing.errors import InvalidIndexError, UnstableError
from indexing.rationals import format_rational
from params import CohftParams, NumberParams, TableParams, WpParams
from volumes.bessel import bessel_constants
from volumes.weil_petersson import (
    RATIO_LIMITS,
    VolumeRow,
    asymptotic_ratio_table,
    first_stable_n,
    ratio_trend,
    wp_volume,
)

logger = logging.getLogger(__name__)


def number_payload(params: NumberParams) -> dict:
    """One bracket, or <kappa^p lambda_1^r tau_0^n>_g when lambda_r is given."""
    m, p = params.m, params.p
    payload = {"genus": params.genus, "m": m.to_text(), "p": p.to_text()}
    if params.lambda_r is not None:
        if m.positions not in ((), (0,)):
            raise InvalidIndexError("lambda_1 brackets take tau_0 insertions only")
        value = lambda_bracket(p, params.lambda_r, m.get(0), params.genus)
        payload["lambda_r"] = params.lambda_r
    else:
        value = bracket(params.genus, m, p, params.route)
    payload["value"] = format_rational(value)
    return payload


def table_payload(params: TableParams) -> dict:
    """Every nonzero bracket of the genus within the bounds."""
    rows = []
    for key in enumerate_keys(params.genus, params.n_max, params.dim_max):
        value = evaluate(key)
        if value:
            rows.append({"m": key.m.to_text(), "p": key.p.to_text(), "bracket": str(key),
                         "value": format_rational(value)})
    logger.info("table genus %d: %d nonzero brackets", params.genus, len(rows))
    return {"genus": params.genus, "n_max": params.n_max, "dim_max": params.dim_max, "rows": rows}


def wp_payload(params: WpParams) -> dict:
    """Volumes w_{g,n} for n <= n_max, with the asymptotic comparison on request."""
    payload: dict = {"genus": params.genus}
    if params.asymptotic:
        rows = asymptotic_ratio_table(params.genus, params.n_max)
        payload.update(bessel_constants().to_dict())
        payload["trend"] = ratio_trend(rows, RATIO_LIMITS[params.genus])
    else:
        start = first_stable_n(params.genus)
        if params.n_max < start:
            raise UnstableError(f"no stable n <= {params.n_max} in genus {params.genus}")
        rows = [VolumeRow(n, wp_volume(params.genus, n), None, None) for n in range(start, params.n_max + 1)]
    payload["rows"] = [row.to_dict() for row in rows]
    return payload


def cohft_payload(params: CohftParams) -> dict:
    """Potentials at a point (s, u) and whether they satisfy Getzler's equation."""
    point = parse_point(params.s, params.u)
    pair = potential_from_point(point, params.order)
    residual = check_getzler(pair)
    return {"point": point.to_dict(), **pair.to_dict(), "getzler_ok": residual.is_zero()}
