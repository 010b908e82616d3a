"""
Algebra text format
-------------------
    # comment
    n 3 top 2
    arrow:
    2 2 2
    1 2 2
    0 1 2
    double_arrow:        (optional)
    ...
    labels:              (optional, n whitespace-separated tokens)
    0 1/2 1

Line and column numbers in parse errors are 1-based.
"""
import re
from typing import Dict, List, Optional, Tuple

import aiofiles

from source.CoreAlgebra import FiniteAlgebra
from source.ErrorHandling import AlgebraParseError, InvalidAlgebraError

SECTIONS = ("arrow", "double_arrow", "labels")

_TOKEN = re.compile(r"\S+")

Token = Tuple[str, int, int]


def _tokenize(text: str) -> List[List[Token]]:
    """Non-empty lines as lists of (token, line, column); comments removed."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [(m.group(), number, m.start() + 1) for m in _TOKEN.finditer(content)]
        if tokens:
            lines.append(tokens)
    return lines


def _integer(token: Token) -> int:
    text, line, column = token
    try:
        return int(text)
    except ValueError:
        raise AlgebraParseError(line, column, f"expected an integer, found '{text}'")


def _header(tokens: List[Token]) -> Tuple[int, int]:
    words = [t[0] for t in tokens]
    if len(tokens) != 4 or words[0] != "n" or words[2] != "top":
        _, line, column = tokens[0]
        raise AlgebraParseError(line, column, "header must read 'n <size> top <index>'")
    size, top = _integer(tokens[1]), _integer(tokens[3])
    if size < 1:
        raise AlgebraParseError(tokens[1][1], tokens[1][2], f"size {size} is not positive")
    if not 0 <= top < size:
        raise AlgebraParseError(tokens[3][1], tokens[3][2], f"top {top} is out of range [0, {size})")
    return size, top


def _table(rows: List[List[Token]], size: int, name: str, section_line: int) -> List[List[int]]:
    if len(rows) != size:
        raise AlgebraParseError(section_line, 1, f"{name} needs {size} rows, found {len(rows)}")
    table = []
    for row in rows:
        if len(row) != size:
            raise AlgebraParseError(row[0][1], row[0][2], f"{name} row needs {size} entries, found {len(row)}")
        values = []
        for token in row:
            value = _integer(token)
            if not 0 <= value < size:
                raise AlgebraParseError(token[1], token[2], f"entry {value} is out of range [0, {size})")
            values.append(value)
        table.append(values)
    return table


def parse_algebra(text: str) -> FiniteAlgebra:
    lines = _tokenize(text)
    if not lines:
        raise AlgebraParseError(1, 1, "empty algebra file")
    size, top = _header(lines[0])

    sections: Dict[str, Tuple[int, List[List[Token]]]] = {}
    current: Optional[str] = None
    for tokens in lines[1:]:
        word, line, column = tokens[0]
        if len(tokens) == 1 and word.endswith(":"):
            name = word[:-1]
            if name not in SECTIONS:
                raise AlgebraParseError(line, column, f"unknown section '{name}'")
            if name in sections:
                raise AlgebraParseError(line, column, f"duplicate section '{name}'")
            sections[name] = (line, [])
            current = name
            continue
        if current is None:
            raise AlgebraParseError(line, column, "expected a section header such as 'arrow:'")
        sections[current][1].append(tokens)

    if "arrow" not in sections:
        raise AlgebraParseError(lines[0][0][1], 1, "missing 'arrow:' section")
    arrow = _table(sections["arrow"][1], size, "arrow", sections["arrow"][0])
    double = None
    if "double_arrow" in sections:
        double = _table(sections["double_arrow"][1], size, "double_arrow", sections["double_arrow"][0])
    labels = None
    if "labels" in sections:
        line, rows = sections["labels"]
        tokens = [token for row in rows for token in row]
        if len(tokens) != size:
            raise AlgebraParseError(line, 1, f"labels needs {size} tokens, found {len(tokens)}")
        labels = tuple(token[0] for token in tokens)
    try:
        return FiniteAlgebra(size=size, top=top, arrow=arrow, double_arrow=double, labels=labels)
    except InvalidAlgebraError as e:
        raise AlgebraParseError(1, 1, e.what)


def render_algebra(alg: FiniteAlgebra, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {row}" for row in comment.splitlines())
    lines.append(f"n {alg.size} top {alg.top}")
    lines.append("arrow:")
    lines.extend(" ".join(str(int(v)) for v in row) for row in alg.arrow)
    if alg.double_arrow is not None:
        lines.append("double_arrow:")
        lines.extend(" ".join(str(int(v)) for v in row) for row in alg.double_arrow)
    if alg.labels is not None:
        lines.append("labels:")
        lines.append(" ".join(alg.labels))
    return "\n".join(lines) + "\n"


def load_algebra(path: str) -> FiniteAlgebra:
    with open(path, "r", encoding="utf-8") as f:
        return parse_algebra(f.read())


async def read_algebra(path: str) -> FiniteAlgebra:
    async with aiofiles.open(path, "r", encoding="utf-8") as f:
        return parse_algebra(await f.read())


async def write_algebra(path: str, alg: FiniteAlgebra, comment: Optional[str] = None):
    async with aiofiles.open(path, "w", encoding="utf-8") as f:
        await f.write(render_algebra(alg, comment))
