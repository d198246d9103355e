"""The y-exponent morphism phi and level rewriting of its kernel.

An element of Ker(phi) is a product of level letters u(j,k) = y^k t_j y^-k.
Reading a word left to right while tracking the running y-exponent k, each
t_j^s emits u(j,k)^s and each x_i^s emits (u(i,k-1)^-1 u(i,k))^s.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from sympy import Matrix, zeros
from sympy.matrices.normalforms import hermite_normal_form

from fp_walls.core import (
    IDENTITY,
    Element,
    GenLetter,
    GroupContext,
    Kind,
    T,
    Word,
    X,
    Y,
    element_of_word,
    format_word,
    multiply,
    to_smin_word,
    to_wt_form,
)
from fp_walls.errors import NotInKernel, PropertyViolation
from fp_walls.types.reports import KernelPresentation, RelatorCheck

logger = logging.getLogger(__name__)

LevelKey = tuple[int, int]


@dataclass(frozen=True, slots=True, order=True)
class LevelLetter:
    j: int
    k: int
    sign: int = 1

    @property
    def key(self) -> LevelKey:
        return (self.j, self.k)

    def inverse(self) -> "LevelLetter":
        return LevelLetter(self.j, self.k, -self.sign)

    def __str__(self) -> str:
        return f"u({self.j},{self.k})" + ("" if self.sign > 0 else "^-1")


LevelWord = tuple[LevelLetter, ...]


def reduce_levels(letters: Iterable[LevelLetter]) -> LevelWord:
    stack: list[LevelLetter] = []
    for letter in letters:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def invert_levels(lw: Sequence[LevelLetter]) -> LevelWord:
    return tuple(letter.inverse() for letter in reversed(lw))


def format_levels(lw: Sequence[LevelLetter]) -> str:
    return " ".join(str(letter) for letter in lw)


@dataclass(frozen=True, slots=True)
class LevelVector:
    """Exponent sums per level key; zero entries are never stored."""

    entries: tuple[tuple[LevelKey, int], ...] = ()

    @classmethod
    def from_counts(cls, counts: Mapping[LevelKey, int]) -> "LevelVector":
        return cls(tuple(sorted((key, e) for key, e in counts.items() if e != 0)))

    def as_dict(self) -> dict[LevelKey, int]:
        return dict(self.entries)

    def support(self) -> set[LevelKey]:
        return {key for key, _ in self.entries}

    def __add__(self, other: "LevelVector") -> "LevelVector":
        counts = self.as_dict()
        for key, e in other.entries:
            counts[key] = counts.get(key, 0) + e
        return LevelVector.from_counts(counts)

    def __neg__(self) -> "LevelVector":
        return LevelVector(tuple((key, -e) for key, e in self.entries))

    def __sub__(self, other: "LevelVector") -> "LevelVector":
        return self + (-other)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def format(self) -> str:
        return " ".join(f"({j},{k}):{e}" for (j, k), e in self.entries)


def phi(a: Element) -> int:
    """y-exponent sum; x letters are y-neutral."""
    return sum(1 if c == 1 else -1 for c in a.w if abs(c) == 1)


def phi_i(a: Element, i: int) -> int:
    """x_i exponent sum of the horizontal part of the wt-form (not a morphism)."""
    w, _ = to_wt_form(a)
    code = i + 1
    return sum(1 if c == code else -1 for c in w if abs(c) == code)


def word_phi(word: Iterable[GenLetter]) -> int:
    return sum(letter.sign for letter in word if letter.kind is Kind.Y)


def rewrite_levels(word: Iterable[GenLetter]) -> LevelWord:
    """Level word of a kernel word over S_min (x letters are also accepted)."""
    word = tuple(word)
    total = word_phi(word)
    if total != 0:
        raise NotInKernel(total)
    k = 0
    out: list[LevelLetter] = []
    for letter in word:
        if letter.kind is Kind.Y:
            k += letter.sign
        elif letter.kind is Kind.T:
            out.append(LevelLetter(letter.index, k, letter.sign))
        else:
            pair = [LevelLetter(letter.index, k - 1, -1), LevelLetter(letter.index, k, 1)]
            out.extend(pair if letter.sign > 0 else [p.inverse() for p in reversed(pair)])
    return reduce_levels(out)


@lru_cache(maxsize=4096)
def _level_element(j: int, k: int, sign: int) -> Element:
    ys = [Y(1 if k > 0 else -1)] * abs(k)
    word = ys + [T(j, sign)] + [y.inverse() for y in reversed(ys)]
    return element_of_word(word)


def eval_levels(lw: Iterable[LevelLetter]) -> Element:
    g = IDENTITY
    for letter in lw:
        g = multiply(g, _level_element(letter.j, letter.k, letter.sign))
    return g


def level_word(a: Element) -> LevelWord:
    return rewrite_levels(to_smin_word(a))


def alpha(a: Element) -> LevelVector:
    """Abelianised level exponents of a kernel element."""
    return alpha_of_levels(level_word(a))


class IntegerLattice:
    """A sublattice of the free abelian group on level keys.

    The basis is the Hermite normal form of the spanning vectors, one column
    per basis vector over the sorted key support. Each column vanishes below
    its pivot row and pivot rows strictly increase, so reducing from the last
    pivot upwards gives a canonical remainder.
    """

    def __init__(self, vectors: Iterable[LevelVector] = ()):
        vectors = [v for v in vectors if v]
        self.keys: list[LevelKey] = sorted(set().union(*(v.support() for v in vectors)))
        self._index = {key: r for r, key in enumerate(self.keys)}
        if vectors:
            spanning = Matrix([[v.as_dict().get(key, 0) for v in vectors] for key in self.keys])
            self.basis: Matrix = hermite_normal_form(spanning)
        else:
            self.basis = zeros(len(self.keys), 0)
        self._pivots = [
            max(r for r in range(self.basis.rows) if self.basis[r, c] != 0) for c in range(self.basis.cols)
        ]
        if any(a >= b for a, b in zip(self._pivots, self._pivots[1:])):
            raise PropertyViolation(f"Lattice basis is not in echelon form: pivots {self._pivots}")

    @property
    def rank(self) -> int:
        return self.basis.cols

    def basis_vectors(self) -> list[LevelVector]:
        return [
            LevelVector.from_counts({key: int(self.basis[r, c]) for r, key in enumerate(self.keys)})
            for c in range(self.basis.cols)
        ]

    def remainder(self, vector: LevelVector) -> LevelVector:
        """Canonical representative of vector + lattice."""
        counts = vector.as_dict()
        column = Matrix([counts.get(key, 0) for key in self.keys])
        for c in reversed(range(self.basis.cols)):
            p = self._pivots[c]
            q = column[p] // self.basis[p, c]
            if q:
                column = column - q * self.basis[:, c]
        reduced = {key: e for key, e in counts.items() if key not in self._index}
        reduced.update({key: int(column[r]) for r, key in enumerate(self.keys)})
        return LevelVector.from_counts(reduced)

    def contains(self, vector: LevelVector) -> bool:
        return not self.remainder(vector)


def group_relators(ctx: GroupContext) -> list[tuple[str, Word]]:
    """Defining relators t_j^-1 x_i t_j x_i^-1 and t_j^-1 y t_j x_j^-1 y^-1."""
    relators: list[tuple[str, Word]] = []
    for j in ctx.indices:
        for i in ctx.indices:
            relators.append((f"commute(x{i},t{j})", (T(j, -1), X(i), T(j), X(i, -1))))
        relators.append((f"twist(y,t{j})", (T(j, -1), Y(), T(j), X(j, -1), Y(-1))))
    return relators


def _cyclic_reduce(lw: LevelWord) -> LevelWord:
    lw = reduce_levels(lw)
    while len(lw) >= 2 and lw[0] == lw[-1].inverse():
        lw = lw[1:-1]
    return lw


def _rotations(lw: LevelWord) -> set[LevelWord]:
    return {lw[r:] + lw[:r] for r in range(max(len(lw), 1))}


def _commutator_word(i: int, j: int, k: int) -> LevelWord:
    a = (LevelLetter(i, k - 1, -1), LevelLetter(i, k, 1))
    b = (LevelLetter(j, k, 1),)
    return a + b + invert_levels(a) + invert_levels(b)


def derive_kernel_presentation(ctx: GroupContext, level_range: int) -> KernelPresentation:
    """Rewrite every y^k-conjugate of a defining relator into level letters.

    A rewritten relator is accepted when it is empty or, up to cyclic
    rotation and inversion, the commutator [u(i,k-1)^-1 u(i,k), u(j,k)].
    """
    if level_range < 1:
        raise ValueError(f"level_range must be at least 1, got {level_range}")
    checks: list[RelatorCheck] = []
    for name, relator in group_relators(ctx):
        for k in range(-level_range, level_range + 1):
            ys = (Y(1 if k > 0 else -1),) * abs(k)
            conjugated = ys + relator + tuple(y.inverse() for y in reversed(ys))
            lw = rewrite_levels(conjugated)
            evaluates_to_identity = eval_levels(lw).is_identity
            abelian_zero = not alpha_of_levels(lw)
            cyclic = _cyclic_reduce(lw)
            if not cyclic:
                shape = "empty"
            else:
                shape = "unrecognized"
                i, j = _relator_indices(name)
                target = _cyclic_reduce(_commutator_word(i, j, k))
                if cyclic in _rotations(target) or cyclic in _rotations(_cyclic_reduce(invert_levels(target))):
                    shape = "commutator"
            checks.append(
                RelatorCheck(
                    relator=format_word(relator),
                    level=k,
                    rewritten=format_levels(lw),
                    shape=shape,
                    evaluates_to_identity=evaluates_to_identity,
                    abelian_zero=abelian_zero,
                )
            )
    verified = all(c.shape != "unrecognized" and c.evaluates_to_identity and c.abelian_zero for c in checks)
    if not verified:
        logger.warning("Kernel presentation check failed over level range %d", level_range)
    else:
        logger.debug("Kernel presentation verified: %d relators over level range %d", len(checks), level_range)
    return KernelPresentation(n=ctx.n, level_range=level_range, relators=checks, verified=verified)


def alpha_of_levels(lw: Iterable[LevelLetter]) -> LevelVector:
    counts: dict[LevelKey, int] = {}
    for letter in lw:
        counts[letter.key] = counts.get(letter.key, 0) + letter.sign
    return LevelVector.from_counts(counts)


def _relator_indices(name: str) -> tuple[int, int]:
    # commute(x<i>,t<j>) carries both indices; twist(y,t<j>) only j
    inner = name[name.index("(") + 1:-1]
    first, second = inner.split(",")
    j = int(second[1:])
    i = int(first[1:]) if first.startswith("x") else j
    return i, j
