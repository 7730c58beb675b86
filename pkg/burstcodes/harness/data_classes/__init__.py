from .channel import ChannelModel, trial_generator
from .sim_report import SimReport
