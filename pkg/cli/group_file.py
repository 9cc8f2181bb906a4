"""
Plain-text Coxeter matrix files.

Format::

    # comment
    rank 3
    m 1 2 3
    m 2 3 4

Pairs that are not listed commute (entry 2); ``inf`` marks an infinite
entry.
"""

import logging
from pathlib import Path
from typing import List, Optional

from core.coxeter_system import CoxeterSystem, system_from_matrix
from core.scalar import INF
from utils.error_handler import GroupFileParseError

logger = logging.getLogger(__name__)


def _parse_int(token: str, line_number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GroupFileParseError(line_number, f"{what} must be an integer, got {token!r}")


def parse_group_matrix(text: str) -> List[List]:
    """
    Parse group-file text into a Coxeter matrix.

    Raises:
        GroupFileParseError: On the first malformed line
    """
    rank: Optional[int] = None
    matrix: List[List] = []
    seen_pairs = set()
    last_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()

        if tokens[0] == "rank":
            if rank is not None:
                raise GroupFileParseError(line_number, "duplicate rank line")
            if len(tokens) != 2:
                raise GroupFileParseError(line_number, "expected 'rank <m>'")
            rank = _parse_int(tokens[1], line_number, "rank")
            if rank < 1:
                raise GroupFileParseError(line_number, f"rank must be at least 1, got {rank}")
            matrix = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
            continue

        if tokens[0] != "m":
            raise GroupFileParseError(line_number, f"unknown directive {tokens[0]!r}")
        if rank is None:
            raise GroupFileParseError(line_number, "'m' line before 'rank'")
        if len(tokens) != 4:
            raise GroupFileParseError(line_number, "expected 'm <i> <j> <v>'")

        i = _parse_int(tokens[1], line_number, "i")
        j = _parse_int(tokens[2], line_number, "j")
        if i == j:
            raise GroupFileParseError(line_number, f"i = j = {i}; diagonal entries are fixed to 1")
        if i > j:
            raise GroupFileParseError(line_number, f"expected i < j, got {i} > {j}")
        if i < 1 or j > rank:
            raise GroupFileParseError(line_number, f"indices must lie in 1..{rank}, got {i} {j}")
        if (i, j) in seen_pairs:
            raise GroupFileParseError(line_number, f"duplicate pair {i} {j}")
        seen_pairs.add((i, j))

        if tokens[3] == "inf":
            value = INF
        else:
            value = _parse_int(tokens[3], line_number, "v")
            if value < 2:
                raise GroupFileParseError(line_number, f"entry must be >= 2 or inf, got {value}")
        matrix[i - 1][j - 1] = matrix[j - 1][i - 1] = value

    if rank is None:
        raise GroupFileParseError(max(last_line, 1), "missing 'rank <m>' line")
    return matrix


def parse_group_file(text: str, name: Optional[str] = None) -> CoxeterSystem:
    """Parse group-file text into a Coxeter system."""
    return system_from_matrix(parse_group_matrix(text), name=name)


def load_group_file(path: Path) -> CoxeterSystem:
    """Read and parse a group file; the system is named after the file stem."""
    path = Path(path)
    with open(path, "r") as f:
        text = f.read()
    system = parse_group_file(text, name=path.stem)
    logger.debug(f"Loaded group file {path} (rank {system.rank})")
    return system


def format_group_file(system: CoxeterSystem, comment: str = "") -> str:
    """Group-file text for a system; commuting pairs are omitted."""
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"rank {system.rank}")
    for i in range(system.rank):
        for j in range(i + 1, system.rank):
            m = system.coxeter_matrix[i][j]
            if m != 2:
                lines.append(f"m {i + 1} {j + 1} {'inf' if m == INF else m}")
    return "\n".join(lines) + "\n"
