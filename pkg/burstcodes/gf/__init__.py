"""
Arithmetic in the prime field Z_p and binomial coefficients modulo p.
"""

from .field import (
    PrimeField,
    FieldElement,
    as_field,
    is_prime,
    galois_field,
    add,
    sub,
    mul,
    neg,
    inv,
)
from .binomial import binom_mod_p, binom_int, base_p_digits
