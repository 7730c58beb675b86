"""
limits.py - frozen size limits and defaults shared across burstcodes.
"""

from frozendict import frozendict

LIMITS = frozendict(
    {
        # moduli must satisfy 2 <= p < max_modulus
        "max_modulus": 2**16,
        # largest row/column count accepted by the matrix file format
        "max_dimension": 512,
        # M_m is 2^m x 2^m
        "max_m_exponent": 9,
        "default_enumerate_limit": 4096,
        "default_threads": 1,
        "json_schema_version": 1,
    }
)
