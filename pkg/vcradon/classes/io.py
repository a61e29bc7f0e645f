"""
Reading and writing class files.

A class file holds one concept per line as a 0/1 string. Blank lines and lines starting
with '#' are ignored, all data lines have the same length and no concept may repeat.
The path '-' stands for standard input or output.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Iterable, TextIO, Union

from vcradon.errors import ClassFileError
from .conceptclass import ConceptClass

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def parse_class(lines: Union[str, Iterable[str]]) -> ConceptClass:
    r"""
    Parse the class file format.

    Args:
        lines: the whole text, or an iterable of lines

    Returns:
        the ConceptClass; its domain size is the common line length

    Raises:
        ClassFileError: on a non 0/1 character, unequal lengths, duplicates, or a file without concepts
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    n = None
    seen = {}
    for lineno, raw in enumerate(lines, start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if set(s) - {"0", "1"}:
            raise ClassFileError(f"'{s}' is not a 0/1 string.", lineno)
        if n is None:
            n = len(s)
        elif len(s) != n:
            raise ClassFileError(f"concept '{s}' has length {len(s)}, expected {n}.", lineno)
        if s in seen:
            raise ClassFileError(f"concept '{s}' repeats line {seen[s]}.", lineno)
        seen[s] = lineno
    if n is None:
        raise ClassFileError("no concepts found.")
    return ConceptClass(n, seen)


def format_class(C: ConceptClass, header: str | None = None) -> str:
    out = []
    if header:
        out.extend(f"# {h}" for h in header.splitlines())
    out.extend(C.to_strings())
    return "\n".join(out) + "\n"


def read_class(path: PathLike, stdin: TextIO | None = None) -> ConceptClass:
    if str(path) == "-":
        return parse_class((stdin or sys.stdin).read())
    with open(path, "r") as f:
        C = parse_class(f)
    logger.debug("read %r from %s", C, path)
    return C


def write_class(C: ConceptClass, path: PathLike, header: str | None = None, stdout: TextIO | None = None):
    r"""
    Write C in the class file format, with an optional '#' header.
    """
    text = format_class(C, header)
    if str(path) == "-":
        (stdout or sys.stdout).write(text)
        return
    with open(path, "w") as f:
        f.write(text)
    logger.debug("wrote %r to %s", C, path)
