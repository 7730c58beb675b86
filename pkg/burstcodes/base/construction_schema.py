"""
construction_schema.py - contains the CONSTRUCTION_SCHEMA lookup for the burstcodes package.

The CONSTRUCTION_SCHEMA dictionary describes every provenance tag a Code can carry:
which builder produces it, whether the result is in systematic form (I_k P), and
which CLI flag selects it.
"""

from frozendict import frozendict

# frozen schema for all constructions:
CONSTRUCTION_SCHEMA = frozendict(
    {
        "recursive": {
            "builder": "generator_recursive",
            "systematic": True,
            "cli": "construct --method recursive",
            "description": "(I_k P_{k,n-k}) with the 0/1 matrix P built by alternately stacking and appending identity blocks.",
            "output_shape": "k x n",
        },
        "explicit": {
            "builder": "generator_explicit",
            "systematic": True,
            "cli": "construct --method explicit",
            "description": "(I_k Q_{k,n-k}) with Q filled by binomial coefficients mod p. Every prefix of at least k columns is good.",
            "output_shape": "k x n",
        },
        "column-extended": {
            "builder": "generator_column_extended",
            "systematic": True,
            "cli": "construct --method column",
            "description": "I_k grown one column at a time, each column solving B x = (1, ..., 1) against the current matrix.",
            "output_shape": "k x n",
        },
        "extended-dim": {
            "builder": "extend_fixed_dimension",
            "systematic": True,
            "cli": "extend --mode dimension",
            "description": "(I_k I_k P) from a good (I_k P): length grows by k, dimension is kept.",
            "output_shape": "k x (k + n)",
        },
        "extended-red": {
            "builder": "extend_fixed_redundancy",
            "systematic": True,
            "cli": "extend --mode redundancy",
            "description": "[[I_r, 0, I_r], [0, I_k, P]] from a good (I_k P) with r = n - k: length grows by r, redundancy is kept.",
            "output_shape": "n x (2n - k)",
        },
        "manual": {
            "builder": "Code.manual",
            "systematic": False,
            "cli": "--in FILE",
            "description": "Any user-supplied matrix that passes the goodness check.",
            "output_shape": "k x n",
        },
    }
)
