"""
Console helpers for burstcodes.

colorize -> wrap text in an ANSI colour when the stream is a terminal.
status -> verbose progress line on stderr.
"""

import sys
from threading import Lock

# define constants for CLI colors:
RED = "\033[91m"
GREEN = "\033[92m"
YELLOW = "\033[93m"
RESET = "\033[0m"

LOCK = Lock()


def colorize(text: str, color: str, stream=None) -> str:
    """
    Wrap text in an ANSI colour code.

    Colour is only applied when the target stream is a TTY, so piped
    output and captured test output stay plain.

    Params:
        text (str): The text to colour.
        color (str): One of RED, GREEN, YELLOW.
        stream: The stream the text will be written to. Defaults to sys.stdout.

    Returns:
        str: The (possibly) coloured text.
    """
    stream = stream if stream is not None else sys.stdout
    isatty = getattr(stream, "isatty", None)
    if isatty is not None and isatty():
        return f"{color}{text}{RESET}"
    return text


def status(message: str, verbose: bool = True) -> None:
    """
    Print a progress message to stderr when verbose is set.

    Params:
        message (str): The message to print.
        verbose (bool): Whether to print at all.
    """
    if not verbose:
        return
    with LOCK:
        print(colorize(message, YELLOW, sys.stderr), file=sys.stderr)
