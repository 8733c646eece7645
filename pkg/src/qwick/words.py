"""Operator words over the annihilator/creator alphabet, plus the text grammar.

A word is a finite ordered sequence of letters, each letter either an
annihilator (``c``) or a creator (``c+``).  Positions are 1-based in all
external I/O (text renderings, diagram edges, error messages).

Grammar accepted by :func:`parse_word`::

    word   := item*
    item   := atom power?
    atom   := letter | "(" word ")"
    letter := ("c" | "a") ("+" | "†")?
    power  := "^" positive-integer

Whitespace separates tokens and is otherwise ignored.  ``a``/``a+`` are
aliases for ``c``/``c+``; the Unicode dagger is accepted as ``+``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "LetterType",
    "ANNIHILATOR",
    "CREATOR",
    "Word",
    "ParseError",
    "parse_word",
    "render_word",
    "word_counts",
    "MAX_EXPONENT",
    "MAX_WORD_LENGTH",
]

# Guards against accidental blow-up at parse time, before any enumeration
# limit applies.
MAX_EXPONENT = 10**4
MAX_WORD_LENGTH = 10**6


class LetterType(enum.Enum):
    """The two letter types of the deformed boson alphabet."""

    ANNIHILATOR = "c"
    CREATOR = "c+"

    def __repr__(self) -> str:
        return self.name


ANNIHILATOR = LetterType.ANNIHILATOR
CREATOR = LetterType.CREATOR


class ParseError(ValueError):
    """Word text violates the grammar.

    ``offset`` is the byte offset (UTF-8) of the offending token in the
    input text.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"parse error at byte {offset}: {message}")
        self.message = message
        self.offset = offset


@dataclass(frozen=True)
class Word:
    """An immutable sequence of letters.

    ``letters`` uses normal Python 0-based indexing internally; use
    :meth:`type_at` for the 1-based position convention of diagrams and
    external I/O.
    """

    letters: tuple[LetterType, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if not isinstance(letter, LetterType):
                raise TypeError(f"not a letter: {letter!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[LetterType]:
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def type_at(self, position: int) -> LetterType:
        """Letter at 1-based ``position``."""
        if not 1 <= position <= len(self.letters):
            raise IndexError(f"position {position} not in 1..{len(self.letters)}")
        return self.letters[position - 1]

    @property
    def creators(self) -> int:
        return sum(1 for letter in self.letters if letter is CREATOR)

    @property
    def annihilators(self) -> int:
        return len(self.letters) - self.creators

    def __str__(self) -> str:
        return render_word(self)


def word_counts(word: Word) -> tuple[int, int]:
    """Return ``(creators, annihilators)`` for ``word``."""
    return word.creators, word.annihilators


def render_word(word: Word) -> str:
    """Canonical text for ``word``; ``parse_word`` round-trips it.

    Runs of equal letters are compressed with powers, e.g. ``c^2 c+``.
    """
    parts: list[str] = []
    i = 0
    letters = word.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] is letters[i]:
            j += 1
        token = "c" if letters[i] is ANNIHILATOR else "c+"
        run = j - i
        parts.append(token if run == 1 else f"{token}^{run}")
        i = j
    return " ".join(parts)


_LETTER_HEADS = {"c", "a"}
_DAGGERS = {"+", "†"}


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    """Split ``text`` into ``(kind, value, char_index)`` tokens."""
    tokens: list[tuple[str, object, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _LETTER_HEADS:
            if i + 1 < n and text[i + 1] in _DAGGERS:
                tokens.append(("letter", CREATOR, i))
                i += 2
            else:
                tokens.append(("letter", ANNIHILATOR, i))
                i += 1
        elif ch == "(":
            tokens.append(("lparen", None, i))
            i += 1
        elif ch == ")":
            tokens.append(("rparen", None, i))
            i += 1
        elif ch == "^":
            tokens.append(("caret", None, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", _byte_offset(text, i))
    return tokens


def _byte_offset(text: str, char_index: int) -> int:
    return len(text[:char_index].encode("utf-8"))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def error(self, message: str, token_index: int | None = None) -> ParseError:
        if token_index is None:
            token_index = self.pos
        if token_index < len(self.tokens):
            char_index = self.tokens[token_index][2]
        else:
            char_index = len(self.text)
        return ParseError(message, _byte_offset(self.text, char_index))

    def peek(self) -> str | None:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return None

    def parse(self) -> list[LetterType]:
        letters = self.parse_items()
        if self.pos < len(self.tokens):
            raise self.error("unbalanced ')'")
        return letters

    def parse_items(self) -> list[LetterType]:
        letters: list[LetterType] = []
        while True:
            kind = self.peek()
            if kind is None or kind == "rparen":
                return letters
            letters.extend(self.parse_item())
            if len(letters) > MAX_WORD_LENGTH:
                raise self.error(
                    f"expanded word exceeds {MAX_WORD_LENGTH} letters"
                )

    def parse_item(self) -> list[LetterType]:
        kind, value, _ = self.tokens[self.pos]
        start = self.pos
        if kind == "letter":
            self.pos += 1
            atom = [value]
        elif kind == "lparen":
            self.pos += 1
            atom = self.parse_items()
            if self.peek() != "rparen":
                raise self.error("unbalanced '('", start)
            self.pos += 1
            if not atom:
                raise self.error("empty group", start)
        elif kind == "caret":
            raise self.error("'^' must follow a letter or group")
        elif kind == "int":
            raise self.error("number without preceding '^'")
        else:
            raise self.error("unexpected token")
        if self.peek() == "caret":
            caret_index = self.pos
            self.pos += 1
            if self.peek() != "int":
                raise self.error("'^' must be followed by a positive integer", caret_index)
            exponent = self.tokens[self.pos][1]
            if exponent < 1:
                raise self.error("exponent must be positive", self.pos)
            if exponent > MAX_EXPONENT:
                raise self.error(f"exponent exceeds {MAX_EXPONENT}", self.pos)
            if exponent * len(atom) > MAX_WORD_LENGTH:
                raise self.error(
                    f"expanded word exceeds {MAX_WORD_LENGTH} letters", self.pos
                )
            self.pos += 1
            atom = atom * exponent
        return atom


def parse_word(text: str) -> Word:
    """Parse word text into the fully expanded letter sequence.

    Powers and parenthesized groups are expanded left to right; a group
    raised to the power ``k`` is repeated ``k`` times in order.  Raises
    :class:`ParseError` (with byte offset) on any malformed input; a parse
    error never yields a partial word.
    """
    return Word(tuple(_Parser(text).parse()))
