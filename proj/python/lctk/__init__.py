"""Exact log canonical thresholds of plane curve germs.

Polynomials are passed as text such as ``"x^2 + y^3"`` or as the JSON
object form; rational results come back as :class:`fractions.Fraction`.
"""

import json
from fractions import Fraction

from . import _lctk
from ._lctk import DomainError, Error, ParseError

__all__ = [
    "DomainError",
    "Error",
    "ParseError",
    "certify_family",
    "constants",
    "fano_check",
    "h0",
    "h_squared",
    "inequality_report",
    "is_well_formed",
    "lct",
    "lct_bounds",
    "lct_certify",
    "lct_exact",
    "min_m",
    "multiply",
    "newton_polygon",
    "normalize",
    "replay",
    "weighted_leading_term",
    "weighted_multiplicity",
]

_RATIONAL_KEYS = {
    "value", "lower", "upper", "tau", "sigma", "lambda", "diagonal_crossing",
    "evaluated_min", "root", "lhs", "rhs", "c_max", "d_max",
}


def _convert(key, value):
    if key in _RATIONAL_KEYS and isinstance(value, str):
        return Fraction(value)
    if key == "margins":
        return [Fraction(v) for v in value]
    return _fractions(value)


def _fractions(obj):
    if isinstance(obj, dict):
        return {k: _convert(k, v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_fractions(v) for v in obj]
    return obj


def _arg(value):
    return value if isinstance(value, str) else json.dumps(value)


normalize = _lctk.normalize
multiply = _lctk.multiply
weighted_leading_term = _lctk.weighted_leading_term
weighted_multiplicity = _lctk.weighted_multiplicity
is_well_formed = _lctk.is_well_formed
fano_check = _lctk.fano_check


def newton_polygon(poly):
    return _fractions(json.loads(_lctk.newton_polygon(_arg(poly))))


def lct_bounds(poly, weights):
    """Two-sided bounds from one weight vector, or None without a singularity."""
    return _fractions(json.loads(_lctk.lct_bounds(_arg(poly), list(weights))))


def lct_exact(poly):
    return _fractions(json.loads(_lctk.lct_exact(_arg(poly))))


def lct(poly):
    """The exact threshold as a Fraction; raises if it could not be decided."""
    r = lct_exact(poly)
    if r["conclusion"] != "exact":
        raise Error("threshold not determined: " + r["certificate"].get("reason", r["conclusion"]))
    return r["certificate"]["value"]


def lct_certify(product, context, distinguished=0):
    return _fractions(json.loads(_lctk.lct_certify(_arg(product), _arg(context), distinguished)))


def replay(certificate):
    """None when every recorded step checks out, otherwise the first failure."""
    if not isinstance(certificate, str):
        certificate = json.dumps(certificate, default=str)
    return _lctk.replay(certificate)


def h0(weights, degree, twist):
    return int(_lctk.h0(list(weights), degree, twist))


def h_squared(weights, degree):
    return Fraction(_lctk.h_squared(list(weights), degree))


def constants(n, m):
    return _fractions(json.loads(_lctk.constants(n, m)))


def inequality_report(n):
    return _fractions(json.loads(_lctk.inequality_report(n)))


def min_m(n, claim, horizon=50):
    return _fractions(json.loads(_lctk.min_m(n, claim, horizon)))


def certify_family(n, m, r_low, r_high, seed, trials, jobs=1):
    return _fractions(json.loads(_lctk.run_family(n, m, _arg(r_low), _arg(r_high), seed, trials, jobs)))
