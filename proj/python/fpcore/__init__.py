"""Exact generalized inverses and orders of finite potent operators."""

from fractions import Fraction

from ._fpcore import (
    FpcoreError,
    IndexTooLarge,
    Operator,
    ParseError,
    core_dagger,
    core_inverse,
    core_of_mp,
    counterexample_a,
    counterexample_b,
    cn_parts,
    drazin,
    gamma,
    generate_above,
    group_inverse,
    hasse,
    index,
    is_ep,
    moore_penrose,
    order_leq,
    preimage_growth_csv,
    run_random_suite,
)

__all__ = [
    "FpcoreError", "IndexTooLarge", "Operator", "ParseError", "cn_parts", "core_dagger",
    "core_inverse", "core_of_mp", "counterexample_a", "counterexample_b", "drazin", "gamma",
    "generate_above", "group_inverse", "hasse", "index", "is_ep", "matrix", "moore_penrose",
    "order_leq", "preimage_growth_csv", "run_random_suite", "to_matrix",
]


def _pair(value):
    if isinstance(value, complex):
        raise TypeError("use a (re, im) tuple of exact numbers instead of complex")
    if isinstance(value, tuple):
        re, im = value
        return str(Fraction(re)), str(Fraction(im))
    return str(Fraction(value)), "0"


def matrix(rows, *, gaussian=False, countable=False):
    """Build an operator from a square list of rows.

    Entries may be ints, Fractions, "p/q" strings, or (re, im) tuples when
    gaussian is true. A countable operator kills every basis vector past the
    given rows.
    """
    return Operator.from_rows([[_pair(x) for x in row] for row in rows], gaussian, countable)


def to_matrix(op):
    """Entries as Fractions, or (re, im) Fraction pairs for a Gaussian operator."""
    out = []
    for row in op.rows():
        if op.gaussian:
            out.append([(Fraction(re), Fraction(im)) for re, im in row])
        else:
            out.append([Fraction(re) for re, _ in row])
    return out
