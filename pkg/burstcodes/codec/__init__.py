"""
Encoding and burst-erasure decoding.
"""

from .data_classes import ERASURE, Erasure, BurstPattern, ReceivedWord
from .codec import encode, erase, decode, decoding_window, ambiguous_pair
