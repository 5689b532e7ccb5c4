"""Computer algebra in the boolean ring Z2[x1..xn]/(x1^2+x1,...,xn^2+xn).

Polynomial arithmetic, varieties, ideal operations, exact model counting and
satisfiability, all without Groebner bases.
"""

from ._core import (
    BoolPoly,
    GuardError,
    ParseError,
    SatReport,
    SolutionCount,
    colon,
    count_solutions,
    cyclic13,
    defining_polynomial,
    equivalences,
    factorize,
    full_sum,
    ideal_intersect,
    ideal_sum,
    interpolation_nf,
    inverse_variety,
    member,
    normal_form,
    pair_family,
    parity_odd,
    parse_dimacs,
    particular_solution,
    phi,
    pol,
    random_quadratic_system,
    sat,
    separator,
    stone_transform,
    variety,
)

__all__ = [
    "BoolPoly",
    "GuardError",
    "ParseError",
    "SatReport",
    "SolutionCount",
    "colon",
    "count_solutions",
    "cyclic13",
    "defining_polynomial",
    "equivalences",
    "factorize",
    "full_sum",
    "ideal_intersect",
    "ideal_sum",
    "interpolation_nf",
    "inverse_variety",
    "member",
    "normal_form",
    "pair_family",
    "parity_odd",
    "parse_dimacs",
    "particular_solution",
    "phi",
    "pol",
    "random_quadratic_system",
    "sat",
    "separator",
    "stone_transform",
    "variety",
]

__version__ = "0.1.0"
