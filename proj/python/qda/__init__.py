"""Exact sign-pattern and discriminant-slice computations for degree 5.

Rational inputs may be int, str ("p/q" or a decimal) or fractions.Fraction.
Rational outputs are fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _qda
from ._qda import NotFound, OnBoundary, OnCoordinateHyperplane, OnDiscriminant

__all__ = [
    "NotFound",
    "OnBoundary",
    "OnCoordinateHyperplane",
    "OnDiscriminant",
    "admissible_pairs",
    "classify",
    "cli",
    "descartes_pair",
    "evidence_scan",
    "orbits",
    "realize",
    "render_ab_plane",
    "render_slice",
    "rules",
    "scan",
    "slice",
    "survey",
    "tables",
    "to_fraction",
    "zone",
]


def _arg(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def to_fraction(text):
    """Converts a "num/den" string from a JSON result."""
    return Fraction(text)


def orbits(degree=5):
    return json.loads(_qda.orbits(degree))


def admissible_pairs(sp):
    return _qda.admissible_pairs(sp)


def descartes_pair(sp):
    return _qda.descartes_pair(sp)


def realize(sp, pos, neg, attempts=20000, seed=0x5EED):
    return json.loads(_qda.realize(sp, pos, neg, attempts, seed))


def zone(a, b):
    return _qda.zone(_arg(a), _arg(b))


def classify(a, b, c, d):
    return json.loads(_qda.classify(_arg(a), _arg(b), _arg(c), _arg(d)))


def slice(a, b, samples=512):  # noqa: A001
    return json.loads(_qda.slice(_arg(a), _arg(b), samples))


def scan(a, b):
    return json.loads(_qda.scan(_arg(a), _arg(b)))


def tables():
    return json.loads(_qda.tables())


def survey(evidence=100000):
    return json.loads(_qda.survey(evidence))


def evidence_scan(sp, pos, neg, samples=100000):
    return json.loads(_qda.evidence_scan(sp, pos, neg, samples))


def rules(a, b):
    return json.loads(_qda.rules(_arg(a), _arg(b)))


def render_slice(a, b):
    return _qda.render_slice(_arg(a), _arg(b))


def render_ab_plane(x_lo=-3, x_hi=2, y_lo=-5, y_hi=4, m_curve=False):
    return _qda.render_ab_plane(_arg(x_lo), _arg(x_hi), _arg(y_lo), _arg(y_hi), m_curve)


def cli(*args):
    """Runs a command line in-process; returns (exit code, stdout, stderr)."""
    return _qda.cli([str(a) for a in args])
