"""Rational Korselt sets of semiprimes N = pq.

Rational values are returned as :class:`fractions.Fraction`. ``base_check``,
``verify`` and ``tables`` return the same report the command-line tool prints
with ``--format json``, plus an ``exit_code`` key.
"""

from ._korselt import (
    HypothesisNotMet,
    KorseltError,
    NotSemiprime,
    NotSquarefree,
    OverflowError,
    ParseError,
    RangeError,
    ScaleGuard,
    ZeroDenominator,
    __version__,
    base_check,
    factor_squarefree,
    is_carmichael,
    is_korselt_base,
    is_prime,
    korselt_set,
    korselt_set_oracle,
    korselt_weights,
    tables,
    verify,
    z_korselt_set,
)

__all__ = [
    "HypothesisNotMet",
    "KorseltError",
    "NotSemiprime",
    "NotSquarefree",
    "OverflowError",
    "ParseError",
    "RangeError",
    "ScaleGuard",
    "ZeroDenominator",
    "__version__",
    "base_check",
    "factor_squarefree",
    "is_carmichael",
    "is_korselt_base",
    "is_prime",
    "korselt_set",
    "korselt_set_oracle",
    "korselt_weights",
    "tables",
    "verify",
    "z_korselt_set",
]
