"""
Matrix file I/O, the channel simulator and construction sweeps.
"""

from .data_classes import ChannelModel, SimReport, trial_generator
from .simulate import run_simulation, run_trial
from .matrix_io import (
    parse_matrix,
    format_matrix,
    read_matrix,
    write_matrix,
    golden_example_path,
    golden_example,
)
from .sweep import sweep_constructions, BUILDERS
