"""
Brute-force verification oracles for good matrices, prefix-goodness and information sets.
"""

from .data_classes import WindowReport
from .checks import (
    is_good,
    is_prefix_good,
    is_information_set,
    window_reports,
    failing_windows,
    complement_positions,
    burst_decodable_bruteforce,
)
