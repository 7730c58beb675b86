"""
help.py - Gives help on the different constructions and what to expect from them.
"""

from json import dumps
from typing import Union

from .base.construction_schema import CONSTRUCTION_SCHEMA


def schema_query(construction: str = None, pretty: bool = False) -> Union[str, dict]:
    """
    Using the CONSTRUCTION_SCHEMA dictionary, this function will return the information
    for either every construction or a single one.

    Params:
        construction (str) [optional]: The provenance tag to get help for, e.g. "explicit".
        pretty (bool) [optional]: Whether to return the information as a string or as a dictionary. [False = return dict, True = return indented str]

    Raises:
        ValueError: If construction is not a known provenance tag.
    """

    # no construction given: the whole schema
    if construction is None:
        schema = {name: dict(entry) for name, entry in CONSTRUCTION_SCHEMA.items()}
        return dumps(schema, indent=4) if pretty else schema

    construction = construction.lower()
    if construction not in CONSTRUCTION_SCHEMA.keys():
        raise ValueError(
            f"Invalid construction {construction}. Available constructions are: {list(CONSTRUCTION_SCHEMA.keys())}"
        )

    entry = dict(CONSTRUCTION_SCHEMA[construction])
    return dumps(entry, indent=4) if pretty else entry
