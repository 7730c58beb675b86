"""
binomial.py - binomial coefficients modulo a prime, digit by digit in base p.
"""

from math import comb
from typing import List, Union

from .field import FieldElement, PrimeField, as_field


def base_p_digits(n: int, p: int) -> List[int]:
    """
    Digits of n in base p, least significant first. 0 has no digits.
    """
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return digits


def binom_mod_p(n: int, k: int, p: Union[int, PrimeField]) -> FieldElement:
    """
    C(n, k) mod p as a product of per-digit binomials (Lucas).

    Factorials are never formed, so no division by multiples of p can occur.

    Params:
        n (int): Upper argument, n >= 0.
        k (int): Lower argument, k >= 0.
        p (Union[int, PrimeField]): The prime modulus or its field.

    Returns:
        FieldElement: C(n, k) mod p; zero when k > n.
    """
    fld = as_field(p)
    if n < 0 or k < 0:
        raise ValueError(f"binom_mod_p needs n, k >= 0, got n={n}, k={k}.")
    if k > n:
        return fld.zero
    q = fld.p
    result = 1
    while k:
        n, ni = divmod(n, q)
        k, ki = divmod(k, q)
        if ki > ni:
            return fld.zero
        result = result * comb(ni, ki) % q
    return FieldElement(result, fld)


def binom_int(n: int, k: int) -> int:
    """
    Exact integer binomial; 0 when k > n or either argument is negative.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)
