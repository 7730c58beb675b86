"""
burstcodes - optimal burst-erasure codes over prime fields

Build [n,k] linear codes over Z_p whose generator matrices are good (every k
cyclically consecutive columns are independent), so that any single burst of
n - k erasures, wrap-around included, can be corrected. Also included: the
brute-force goodness oracles, a systematic encoder/decoder and a seeded
packet-erasure channel simulator.
"""

from .help import schema_query
from .base.base_list import BaseList
from .base.limits import LIMITS

from .gf import PrimeField, FieldElement, binom_mod_p
from .linalg import Matrix, IntegerMatrix
from .construct import (
    Code,
    generator_recursive,
    generator_explicit,
    generator_column_extended,
    extend_fixed_dimension,
    extend_fixed_redundancy,
    dual_generator,
    extension_columns,
)
from .goodness import is_good, is_prefix_good, is_information_set
from .codec import ERASURE, BurstPattern, ReceivedWord, encode, erase, decode
from .harness import ChannelModel, SimReport, run_simulation, read_matrix, write_matrix

from . import gf
from . import linalg
from . import construct
from . import goodness
from . import codec
from . import harness
