"""
sweep.py - build every [n,k] code up to a length bound and tabulate whether
each generator is good (and optionally prefix-good).
"""

from time import perf_counter
from typing import *

from frozendict import frozendict
from pandas import DataFrame

from ..base.printutils import status
from ..construct.explicit import generator_explicit
from ..construct.extension import generator_column_extended
from ..construct.recursive import generator_recursive
from ..goodness.checks import is_prefix_good
from ..exceptions.Exceptions import NotGoodError

# CLI method name -> builder taking (p, k, n)
BUILDERS = frozendict(
    {
        "recursive": lambda p, k, n: generator_recursive(k, n, p),
        "explicit": lambda p, k, n: generator_explicit(p, k, n),
        "column": lambda p, k, n: generator_column_extended(k, n, p),
    }
)

SWEEP_COLUMNS = ["p", "k", "n", "method", "good", "prefix_good", "seconds"]


def sweep_constructions(
    primes: Iterable[int],
    max_n: int,
    method: Literal["recursive", "explicit", "column"] = "recursive",
    prefix: bool = False,
    verbose: bool = False,
) -> DataFrame:
    """
    Construct the generator for every p in primes and every 1 <= k <= n <= max_n.

    A generator that fails the goodness check on construction is recorded
    with good=False instead of raising.

    Params:
        primes (Iterable[int]): Field sizes to sweep.
        max_n (int): Largest code length.
        method (Literal["recursive", "explicit", "column"]): The construction.
        prefix (bool): Also check prefix-goodness. prefix_good is None otherwise.
        verbose (bool): Print one progress line per (p, n).

    Returns:
        DataFrame: Columns p, k, n, method, good, prefix_good, seconds.
    """
    if method not in BUILDERS:
        raise ValueError(f"Invalid method {method}. Valid methods are: {list(BUILDERS.keys())}.")
    build = BUILDERS[method]
    rows = []
    for p in primes:
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                began = perf_counter()
                try:
                    code = build(p, k, n)
                    good = True
                except NotGoodError:
                    code, good = None, False
                prefix_good = None
                if prefix:
                    prefix_good = bool(code is not None and is_prefix_good(code.G))
                rows.append(
                    {
                        "p": p,
                        "k": k,
                        "n": n,
                        "method": method,
                        "good": good,
                        "prefix_good": prefix_good,
                        "seconds": perf_counter() - began,
                    }
                )
            status(f"p={p} n={n}: {n} code(s) built.", verbose)
    return DataFrame(rows, columns=SWEEP_COLUMNS)
