"""
matrix_io.py - the matrix text format.

    p k n
    k lines of n space-separated entries in [0, p-1]

LF line endings, single spaces, no trailing whitespace, a final newline.
Parse errors carry the 1-based line and column of the offending character.
"""

from importlib.resources import files
from pathlib import Path
from typing import *

import numpy as np

from ..base.limits import LIMITS
from ..gf.field import PrimeField
from ..linalg.matrix import Matrix
from ..exceptions.Exceptions import FieldError, MatrixFormatError

GOLDEN_EXAMPLE = "example_28x45.txt"


def _tokens(line: str, lineno: int) -> List[Tuple[int, str]]:
    """
    Split a line on single spaces, returning (column, token) pairs.
    """
    if line == "":
        raise MatrixFormatError("empty line", line=lineno, column=1)
    if line != line.rstrip():
        raise MatrixFormatError("trailing whitespace", line=lineno, column=len(line.rstrip()) + 1)
    out = []
    column = 1
    for token in line.split(" "):
        if token == "":
            raise MatrixFormatError("expected a single space between entries", line=lineno, column=column)
        if not token.isdigit() or not token.isascii():
            bad = next(i for i, ch in enumerate(token) if not (ch.isascii() and ch.isdigit()))
            raise MatrixFormatError(f"unexpected character {token[bad]!r}", line=lineno, column=column + bad)
        out.append((column, token))
        column += len(token) + 1
    return out


def parse_matrix(text: str) -> Matrix:
    """
    Parse the matrix text format.

    Params:
        text (str): The file contents.

    Returns:
        Matrix: The k x n matrix over Z_p.

    Raises:
        MatrixFormatError: On a malformed header, a non-prime or unsupported p,
            an entry out of range, ragged rows, or a wrong number of rows.
    """
    if "\r" in text:
        lineno = text[: text.index("\r")].count("\n") + 1
        column = text.index("\r") - (text.rfind("\n", 0, text.index("\r")) + 1) + 1
        raise MatrixFormatError("CR line endings are not allowed", line=lineno, column=column)
    if not text.endswith("\n"):
        raise MatrixFormatError(
            "missing final newline", line=text.count("\n") + 1, column=len(text.split("\n")[-1]) + 1
        )
    lines = text[:-1].split("\n")

    header = _tokens(lines[0], 1)
    if len(header) != 3:
        raise MatrixFormatError(f"header must be 'p k n', found {len(header)} field(s)", line=1, column=1)
    (pcol, ptok), (kcol, ktok), (ncol, ntok) = header
    try:
        field = PrimeField(int(ptok))
    except FieldError as e:
        raise MatrixFormatError(e.message, line=1, column=pcol)
    k, n = int(ktok), int(ntok)
    if k > LIMITS["max_dimension"]:
        raise MatrixFormatError(f"k={k} exceeds {LIMITS['max_dimension']}", line=1, column=kcol)
    if n < 1 or n > LIMITS["max_dimension"]:
        raise MatrixFormatError(f"n={n} is outside 1..{LIMITS['max_dimension']}", line=1, column=ncol)

    rows = lines[1:]
    if len(rows) != k:
        lineno = len(lines) + 1 if len(rows) < k else k + 2
        raise MatrixFormatError(f"expected {k} row(s), found {len(rows)}", line=lineno, column=1)

    entries = np.zeros((k, n), dtype=np.int64)
    for i, line in enumerate(rows):
        lineno = i + 2
        tokens = _tokens(line, lineno)
        if len(tokens) != n:
            column = tokens[n][0] if len(tokens) > n else len(line) + 1
            raise MatrixFormatError(f"expected {n} entries, found {len(tokens)}", line=lineno, column=column)
        for j, (column, token) in enumerate(tokens):
            value = int(token)
            if value >= field.p:
                raise MatrixFormatError(
                    f"entry {value} is outside [0, {field.p - 1}]", line=lineno, column=column
                )
            entries[i, j] = value
    return Matrix(entries, field)


def format_matrix(M: Matrix) -> str:
    """
    Render M in the matrix text format, final newline included.
    """
    lines = [f"{M.p} {M.rows} {M.cols}"]
    lines.extend(" ".join(str(v) for v in row) for row in M.to_list())
    return "\n".join(lines) + "\n"


def read_matrix(path: Union[str, Path]) -> Matrix:
    with open(path, "r", encoding="ascii", newline="") as f:
        return parse_matrix(f.read())


def write_matrix(M: Matrix, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="ascii", newline="") as f:
        f.write(format_matrix(M))


def golden_example_path() -> Path:
    """
    Path of the shipped 28 x 45 binary example.
    """
    return Path(str(files("burstcodes.data").joinpath(GOLDEN_EXAMPLE)))


def golden_example() -> Matrix:
    return read_matrix(golden_example_path())
