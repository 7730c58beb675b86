from .burst import ERASURE, ERASURE_SIGIL, Erasure, BurstPattern, ReceivedWord, Symbol
