"""
Exceptions for burstcodes.
"""

from .Exceptions import *
