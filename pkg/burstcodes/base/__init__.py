"""
Basic functionality / helpers for burstcodes.
"""

from .base_list import BaseList
from .construction_schema import CONSTRUCTION_SCHEMA
from .limits import LIMITS
from .cyclic import cyclic_interval, as_cyclic_interval
