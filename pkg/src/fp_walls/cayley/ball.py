"""Finite balls of the Cayley graphs over S and S_min."""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional

from fp_walls.core import (
    Element,
    GenLetter,
    GroupContext,
    Word,
    element_of_word,
    format_word,
    multiply_letter,
    parse_word,
)
from fp_walls.errors import ResourceLimit

logger = logging.getLogger(__name__)


@dataclass
class Ball:
    radius: int
    genset: str
    letters: Word
    distances: dict[Element, int] = field(default_factory=dict)
    parents: dict[Element, tuple[Element, GenLetter]] = field(default_factory=dict, repr=False)
    _order: Optional[list[Element]] = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.distances)

    def __contains__(self, g: Element) -> bool:
        return g in self.distances

    @property
    def order(self) -> list[Element]:
        """Vertices by distance, then canonical print."""
        if self._order is None:
            self._order = sorted(self.distances, key=lambda g: (self.distances[g], g.format()))
        return self._order

    def spheres(self) -> list[int]:
        sizes = [0] * (self.radius + 1)
        for d in self.distances.values():
            sizes[d] += 1
        return sizes

    def sphere(self, r: int) -> list[Element]:
        return [g for g in self.order if self.distances[g] == r]

    def inner(self, r: int) -> list[Element]:
        return [g for g in self.order if self.distances[g] <= r]

    def geodesic_word(self, g: Element) -> Word:
        letters: list[GenLetter] = []
        while g in self.parents:
            g, letter = self.parents[g]
            letters.append(letter)
        return tuple(reversed(letters))

    def neighbors(self, g: Element) -> Iterator[tuple[GenLetter, Element]]:
        for letter in self.letters:
            h = multiply_letter(g, letter)
            if h in self.distances:
                yield letter, h

    def edges(self) -> Iterator[tuple[Element, GenLetter, Element]]:
        """Each 1-cell once, oriented along its positive letter."""
        positive = [letter for letter in self.letters if letter.sign > 0]
        for g in self.order:
            for letter in positive:
                h = multiply_letter(g, letter)
                if h in self.distances:
                    yield g, letter, h


def ball(ctx: GroupContext, radius: int, genset: str = "smin", cap: int = 2_000_000) -> Ball:
    """Breadth-first ball of the given radius, deduplicated by normal form."""
    if radius < 0:
        raise ValueError(f"Radius must be non-negative, got {radius}")
    letters = ctx.letters(genset)
    result = Ball(radius, genset, letters)
    result.distances[ctx.identity] = 0
    frontier = [ctx.identity]
    for d in range(1, radius + 1):
        projected = len(result.distances) + len(frontier) * (len(letters) - 1)
        if projected > cap:
            raise ResourceLimit(f"Projected ball of radius {d} ({projected} vertices)", cap)
        next_frontier: list[Element] = []
        for g in frontier:
            for letter in letters:
                h = multiply_letter(g, letter)
                if h not in result.distances:
                    result.distances[h] = d
                    result.parents[h] = (g, letter)
                    next_frontier.append(h)
        frontier = next_frontier
        logger.debug("Sphere %d over %s: %d vertices", d, genset, len(frontier))
    logger.info("Ball of radius %d over %s: %d vertices", radius, genset, len(result))
    return result


def naive_ball_size(ctx: GroupContext, radius: int, genset: str = "smin") -> int:
    """Count by evaluating every reduced word and deduplicating sorted prints."""
    letters = ctx.letters(genset)
    prints = [ctx.identity.format()]
    for length in range(1, radius + 1):
        for word in product(letters, repeat=length):
            if any(a == b.inverse() for a, b in zip(word, word[1:])):
                continue
            prints.append(element_of_word(word).format())
    prints.sort()
    return sum(1 for k, p in enumerate(prints) if k == 0 or p != prints[k - 1])


@dataclass(frozen=True, slots=True)
class PathEdge:
    position: int
    start: Element
    letter: GenLetter
    end: Element

    @property
    def cell(self) -> tuple[Element, GenLetter]:
        """The 1-cell as (base, positive letter)."""
        if self.letter.sign > 0:
            return self.start, self.letter
        return self.end, self.letter.inverse()


@dataclass(frozen=True)
class Path:
    base: Element
    word: Word

    @classmethod
    def parse(cls, ctx: GroupContext, text: str, base: Optional[Element] = None) -> "Path":
        return cls(base if base is not None else ctx.identity, parse_word(text, ctx.n))

    def vertices(self) -> list[Element]:
        out = [self.base]
        for letter in self.word:
            out.append(multiply_letter(out[-1], letter))
        return out

    def edges(self) -> list[PathEdge]:
        vs = self.vertices()
        return [PathEdge(k, vs[k], letter, vs[k + 1]) for k, letter in enumerate(self.word)]

    @property
    def end(self) -> Element:
        return self.vertices()[-1]

    def __str__(self) -> str:
        return f"{self.base} . {format_word(self.word) or 'ε'}"
