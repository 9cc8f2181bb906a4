"""
Text and JSON rendering of words, factorizations and braids, and parsing
of command-line arguments.

Words are space-separated generator indices (``e`` is the identity);
factorizations are ``;``-separated words.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

from core.coxeter_system import CoxeterSystem, Element
from hurwitz.factorization import Factorization
from utils.error_handler import ContractError


def parse_word(text: str) -> Tuple[int, ...]:
    """Parse ``"1 2 1"``; ``"e"`` or blank is the empty word."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise ContractError("words are space-separated generator indices", repr(text))


def parse_element(system: CoxeterSystem, text: str) -> Element:
    return system.element_from_word(parse_word(text))


def parse_factorization(system: CoxeterSystem, text: str) -> Factorization:
    """Parse ``"1 2 1 ; 1"`` into a factorization of reflections."""
    text = text.strip()
    if not text:
        return Factorization((), system)
    return Factorization([parse_element(system, part) for part in text.split(";")], system)


def parse_generator_list(system: CoxeterSystem, text: str) -> List[Element]:
    """Reflections given as ``;``-separated words."""
    return [parse_element(system, part) for part in text.split(";") if part.strip()]


def format_word(word: Sequence[int]) -> str:
    return " ".join(str(i) for i in word) if word else "e"


def format_element(w: Element) -> str:
    return format_word(w.canonical_word())


def format_factorization(f: Factorization) -> str:
    """``"1 ; 2"``; ``"()"`` for the empty factorization."""
    if not len(f):
        return "()"
    return " ; ".join(format_element(t) for t in f)


def factorization_to_json(f: Factorization) -> List[List[int]]:
    return [list(t.canonical_word()) for t in f]


def format_table(rows: Iterable[Sequence], headers: Optional[Sequence[str]] = None) -> str:
    """Left-aligned plain-text table."""
    rows = [[str(c) for c in row] for row in rows]
    if headers:
        rows.insert(0, [str(h) for h in headers])
    if not rows:
        return ""
    widths = [max(len(row[i]) for row in rows if i < len(row)) for i in range(max(len(r) for r in rows))]
    lines = []
    for k, row in enumerate(rows):
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
        if headers and k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)
