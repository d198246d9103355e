"""Letters, free reduction and the text grammar of words.

Words are written as space separated tokens ``y``, ``x<i>`` and ``t<i>``,
each optionally raised to a signed integer power: ``y^-1 t1 x2^3``. The empty
string is the empty word.

Inside group elements the two factors are stored as tuples of integer codes
(``Code``): a horizontal letter ``y`` is ``1`` and ``x_i`` is ``i + 1``, a
vertical letter ``t_i`` is ``i``; inverses are negated codes.
"""
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from fp_walls.errors import IndexOutOfRange, WordParseError

Code = int
HorizWord = tuple[Code, ...]
VertWord = tuple[Code, ...]

Y_CODE: Code = 1

_TOKEN = re.compile(r"^(y|x(\d+)|t(\d+))(?:\^(-?\d+))?$")


class Kind(str, Enum):
    X = "x"
    Y = "y"
    T = "t"


@dataclass(frozen=True, slots=True, order=True)
class GenLetter:
    kind: Kind
    index: int = 0
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"Letter sign must be +1 or -1, got {self.sign}")
        if self.kind is Kind.Y and self.index != 0:
            raise ValueError("The letter y carries no index")
        if self.kind is not Kind.Y and self.index < 1:
            raise ValueError(f"Letter {self.kind.value} needs an index >= 1")

    @property
    def name(self) -> str:
        return "y" if self.kind is Kind.Y else f"{self.kind.value}{self.index}"

    @property
    def is_vertical(self) -> bool:
        return self.kind is Kind.T

    def inverse(self) -> "GenLetter":
        return GenLetter(self.kind, self.index, -self.sign)

    def code(self) -> Code:
        if self.kind is Kind.T:
            return self.sign * self.index
        if self.kind is Kind.Y:
            return self.sign * Y_CODE
        return self.sign * (self.index + 1)

    def __str__(self) -> str:
        return self.name if self.sign > 0 else f"{self.name}^-1"


Word = tuple[GenLetter, ...]


def Y(sign: int = 1) -> GenLetter:
    return GenLetter(Kind.Y, 0, sign)


def X(i: int, sign: int = 1) -> GenLetter:
    return GenLetter(Kind.X, i, sign)


def T(i: int, sign: int = 1) -> GenLetter:
    return GenLetter(Kind.T, i, sign)


def horizontal_letter(code: Code) -> GenLetter:
    sign = 1 if code > 0 else -1
    a = abs(code)
    return Y(sign) if a == Y_CODE else X(a - 1, sign)


def vertical_letter(code: Code) -> GenLetter:
    return T(abs(code), 1 if code > 0 else -1)


def reduce_codes(codes: Iterable[Code]) -> tuple[Code, ...]:
    stack: list[Code] = []
    for c in codes:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


def invert_codes(codes: Sequence[Code]) -> tuple[Code, ...]:
    return tuple(-c for c in reversed(codes))


def reduce(word: Iterable[GenLetter]) -> Word:
    """Free reduction of a word."""
    stack: list[GenLetter] = []
    for letter in word:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def invert_word(word: Sequence[GenLetter]) -> Word:
    return tuple(letter.inverse() for letter in reversed(word))


def power_word(word: Sequence[GenLetter], k: int) -> Word:
    base = tuple(word) if k >= 0 else invert_word(word)
    return reduce(base * abs(k))


def parse_word(text: str, n: Optional[int] = None) -> Word:
    """Parse the word grammar; indices are checked against ``n`` when given."""
    letters: list[GenLetter] = []
    for token in text.split():
        m = _TOKEN.match(token)
        if m is None:
            raise WordParseError(token)
        head, xi, ti, exponent = m.groups()
        if head == "y":
            letter = Y()
        else:
            index = int(xi or ti)
            if index < 1 or (n is not None and index > n):
                raise IndexOutOfRange(index, n if n is not None else 0, token)
            letter = X(index) if xi else T(index)
        k = int(exponent) if exponent is not None else 1
        if k < 0:
            letter = letter.inverse()
        letters.extend([letter] * abs(k))
    return tuple(letters)


def format_word(word: Sequence[GenLetter]) -> str:
    """Canonical print: runs of one letter collapse into a single caret token."""
    tokens: list[str] = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = (j - i) * word[i].sign
        tokens.append(word[i].name if run == 1 else f"{word[i].name}^{run}")
        i = j
    return " ".join(tokens)


def format_horizontal(codes: Sequence[Code]) -> str:
    return format_word([horizontal_letter(c) for c in codes])


def format_vertical(codes: Sequence[Code]) -> str:
    return format_word([vertical_letter(c) for c in codes])
