"""Exact evaluation of <tau^m kappa^p>_g in genus 0 and 1."""

from .brackets import EvalRoute, bracket, evaluate, kappa_bracket, lambda_bracket
from .closed_form import psi_closed_g1, psi_multinomial_g0
from .keys import IntersectionKey, KeyOutcome, enumerate_keys, make_key, require_key
from .puncture import eval_puncture_dilaton
from .recursion import eval_g0, eval_g1

__all__ = [
    "IntersectionKey", "KeyOutcome", "make_key", "require_key", "enumerate_keys",
    "EvalRoute", "evaluate", "bracket", "kappa_bracket", "lambda_bracket",
    "eval_g0", "eval_g1", "eval_puncture_dilaton", "psi_multinomial_g0", "psi_closed_g1",
]
