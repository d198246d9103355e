"""Normal forms and arithmetic in G_n = F_{n+1} x| F_n.

Every element is stored in tw-form ``(t, w)``: a reduced vertical word
followed by a reduced horizontal word. The automorphism convention is
``t^-1 u t = sigma(t)(u)``, so ``sigma(t t') = sigma(t') o sigma(t)`` and

    (t1, w1) (t2, w2) = (t1 t2, sigma(t2)(w1) w2).
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from fp_walls.core.words import (
    Code,
    GenLetter,
    HorizWord,
    Kind,
    T,
    VertWord,
    Word,
    X,
    Y,
    Y_CODE,
    format_horizontal,
    format_vertical,
    invert_codes,
    parse_word,
    reduce,
    reduce_codes,
)
from fp_walls.errors import FPError, IndexOutOfRange


@dataclass(frozen=True, slots=True)
class Element:
    t: VertWord = ()
    w: HorizWord = ()

    @property
    def is_identity(self) -> bool:
        return not self.t and not self.w

    def format(self) -> str:
        t = format_vertical(self.t) or "ε"
        w = format_horizontal(self.w) or "ε"
        return f"({t}, {w})"

    def sort_key(self) -> tuple[int, str]:
        return (len(self.t) + len(self.w), self.format())

    def __str__(self) -> str:
        return self.format()


IDENTITY = Element()


def _sigma_letter(code: Code, w: Iterable[Code]) -> list[Code]:
    # sigma(t_i^s)(y) = y x_i^s and sigma(t_i^s)(y^-1) = x_i^-s y^-1
    s = 1 if code > 0 else -1
    x = abs(code) + 1
    out: list[Code] = []
    for c in w:
        if c == Y_CODE:
            out.append(Y_CODE)
            out.append(s * x)
        elif c == -Y_CODE:
            out.append(-s * x)
            out.append(-Y_CODE)
        else:
            out.append(c)
    return out


def sigma_apply(t: Sequence[Code], w: Sequence[Code]) -> HorizWord:
    """Image of the horizontal word ``w`` under sigma(t), reduced."""
    if not t:
        return reduce_codes(w)
    image: Iterable[Code] = w
    for code in t:
        image = _sigma_letter(code, image)
    return reduce_codes(image)


def multiply(a: Element, b: Element) -> Element:
    if not b.t:
        return Element(a.t, reduce_codes(a.w + b.w))
    return Element(reduce_codes(a.t + b.t), reduce_codes(sigma_apply(b.t, a.w) + b.w))


def invert(a: Element) -> Element:
    t_inv = invert_codes(a.t)
    return Element(t_inv, sigma_apply(t_inv, invert_codes(a.w)))


def multiply_letter(a: Element, letter: GenLetter) -> Element:
    """Right multiplication by a single generator, the Cayley graph step."""
    code = letter.code()
    if letter.kind is Kind.T:
        t = a.t[:-1] if a.t and a.t[-1] == -code else a.t + (code,)
        return Element(t, sigma_apply((code,), a.w))
    w = a.w[:-1] if a.w and a.w[-1] == -code else a.w + (code,)
    return Element(a.t, w)


def element_of_letter(letter: GenLetter) -> Element:
    if letter.kind is Kind.T:
        return Element((letter.code(),), ())
    return Element((), (letter.code(),))


def element_of_word(word: Iterable[GenLetter]) -> Element:
    g = IDENTITY
    for letter in word:
        g = multiply_letter(g, letter)
    return g


def power(a: Element, k: int) -> Element:
    base = a if k >= 0 else invert(a)
    result = IDENTITY
    for _ in range(abs(k)):
        result = multiply(result, base)
    return result


def commutator(a: Element, b: Element) -> Element:
    """[a, b] = a b a^-1 b^-1"""
    return multiply(multiply(a, b), multiply(invert(a), invert(b)))


def project_vertical(a: Element) -> Element:
    return Element(a.t, ())


def to_wt_form(a: Element) -> tuple[HorizWord, VertWord]:
    """The unique factorisation a = w' t with w' horizontal and t vertical."""
    return sigma_apply(invert_codes(a.t), a.w), a.t


def from_wt_form(w: Sequence[Code], t: Sequence[Code]) -> Element:
    return Element(tuple(t), sigma_apply(t, w))


def _x_substitution(i: int, sign: int) -> Word:
    # x_i = y^-1 t_i^-1 y t_i
    word = (Y(-1), T(i, -1), Y(), T(i))
    if sign > 0:
        return word
    return tuple(letter.inverse() for letter in reversed(word))


@lru_cache(maxsize=1 << 18)
def to_smin_word(a: Element) -> Word:
    """A word over y, t_1..t_n evaluating to ``a``."""
    letters: list[GenLetter] = [T(abs(c), 1 if c > 0 else -1) for c in a.t]
    for c in a.w:
        sign = 1 if c > 0 else -1
        if abs(c) == Y_CODE:
            letters.append(Y(sign))
        else:
            letters.extend(_x_substitution(abs(c) - 1, sign))
    return reduce(letters)


def smin_length(a: Element) -> int:
    return len(to_smin_word(a))


def to_s_word(a: Element) -> Word:
    """The tw-form read as a word over the full generating set S."""
    letters = [T(abs(c), 1 if c > 0 else -1) for c in a.t]
    for c in a.w:
        sign = 1 if c > 0 else -1
        letters.append(Y(sign) if abs(c) == Y_CODE else X(abs(c) - 1, sign))
    return tuple(letters)


def grid_word(i: int, exponents: Sequence[int]) -> Word:
    """t_i^k0 y t_i^k1 y^-1 ... t_i^k(2l) y t_i^k(2l+1) y^-1"""
    if len(exponents) % 2 != 0 or not exponents:
        raise FPError(f"grid_word needs an even, non-empty exponent list, got {list(exponents)}")
    letters: list[GenLetter] = []
    for k_even, k_odd in zip(exponents[0::2], exponents[1::2]):
        letters.extend([T(i, 1 if k_even > 0 else -1)] * abs(k_even))
        letters.append(Y())
        letters.extend([T(i, 1 if k_odd > 0 else -1)] * abs(k_odd))
        letters.append(Y(-1))
    return reduce(letters)


@dataclass(frozen=True, slots=True)
class GroupContext:
    """The rank parameter n of G_n together with its generating sets."""

    n: int = 2
    _smin: Word = field(init=False, repr=False, compare=False)
    _s: Word = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 2:
            raise FPError(f"Rank n must be at least 2, got {self.n}")
        smin = (Y(),) + tuple(T(i) for i in range(1, self.n + 1))
        s = tuple(X(i) for i in range(1, self.n + 1)) + smin
        object.__setattr__(self, "_smin", smin + tuple(letter.inverse() for letter in smin))
        object.__setattr__(self, "_s", s + tuple(letter.inverse() for letter in s))

    @property
    def identity(self) -> Element:
        return IDENTITY

    @property
    def indices(self) -> range:
        return range(1, self.n + 1)

    def check_index(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(i, self.n)
        return i

    def next_index(self, i: int) -> int:
        """i + 1 taken cyclically in 1..n"""
        return i % self.n + 1

    def smin_letters(self) -> Word:
        """y, t_1..t_n followed by their inverses."""
        return self._smin

    def s_letters(self) -> Word:
        """x_1..x_n, y, t_1..t_n followed by their inverses."""
        return self._s

    def letters(self, genset: str) -> Word:
        if genset == "smin":
            return self._smin
        if genset == "s":
            return self._s
        raise FPError(f"Generating set '{genset}' not recognized")

    def generator(self, kind: Kind | str, i: int = 0) -> Element:
        kind = Kind(kind)
        if kind is Kind.Y:
            return element_of_letter(Y())
        self.check_index(i)
        return element_of_letter(T(i) if kind is Kind.T else X(i))

    def parse(self, text: str) -> Word:
        return parse_word(text, self.n)

    def element(self, text: str) -> Element:
        return element_of_word(self.parse(text))
