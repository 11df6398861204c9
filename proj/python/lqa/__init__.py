"""q-analogues of weight multiplicities for the classical Lie algebras.

Partitions are sequences of ints (``()`` for the empty partition); polynomials
and truncated series come back as ``{degree: coefficient}`` dicts.
"""

from ._lqa import (
    CorruptCache,
    InvalidWeight,
    NotUniversal,
    OutOfRegime,
    branching,
    cache_load,
    cache_save,
    degrees,
    harmonic_coeff_stable,
    k_direct,
    k_limit,
    k_recurrence,
    lr_coefficient,
    pieri_expand,
    q_kostant,
    stable_pieri,
    suites,
    sym_mult_finite,
    sym_mult_stable,
    verify,
    weyl_order,
)


def format_series(series):
    """Render a {degree: coefficient} dict the way the command-line tool does."""
    terms = []
    for deg in sorted(series):
        c = series[deg]
        if c == 0:
            continue
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            mono = "q" if deg == 1 else f"q^{deg}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not terms:
            terms.append(body if c > 0 else "-" + body)
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


__all__ = [name for name in dir() if not name.startswith("_")]
