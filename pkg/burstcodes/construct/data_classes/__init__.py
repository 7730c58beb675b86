from .code import Code, Provenance
