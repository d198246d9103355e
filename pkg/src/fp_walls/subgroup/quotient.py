"""Finite quotients of G used as negative membership certificates.

A quotient test maps G homomorphically onto a finite group; when the image
of g misses the image of H_i, g is certainly not in H_i. Every test checks
that the defining relators die before it may be used.
"""
import logging
from abc import ABC, abstractmethod
from collections import deque
from typing import Hashable, Iterable

import numpy as np

from fp_walls.core import Element, GenLetter, GroupContext, Kind, invert, to_s_word
from fp_walls.errors import PropertyViolation
from fp_walls.levels import group_relators
from fp_walls.subgroup.generators import h_generators

logger = logging.getLogger(__name__)


class QuotientTest(ABC):
    """Sound negative certificate through a finite quotient."""

    name: str

    @abstractmethod
    def verify(self) -> None:
        ...

    @abstractmethod
    def excludes(self, i: int, g: Element) -> bool:
        ...

    @abstractmethod
    def coset_key(self, i: int, g: Element) -> Hashable:
        """An invariant of the left coset g H_i."""
        ...


class AffineQuotient(QuotientTest):
    """Affine maps of (Z/m)^{n+1} with coordinates x_1..x_n, y.

    x_j and y act as unit translations; t_j acts linearly by
    A_j = I - E(x_j, y), so that A_j^-1 e_y = e_y + e_{x_j}.
    Matrices are numpy arrays reduced mod m and keyed by their bytes.
    """

    def __init__(self, ctx: GroupContext, modulus: int = 2):
        if modulus < 2:
            raise ValueError(f"Modulus must be at least 2, got {modulus}")
        self.ctx = ctx
        self.modulus = modulus
        self.name = f"affine-mod-{modulus}"
        self._dim = ctx.n + 2
        self._identity = np.identity(self._dim, dtype=np.int64)
        self._images: dict[int, dict[bytes, np.ndarray]] = {}
        self._verified = False

    def _translation(self, coordinate: int, s: int) -> np.ndarray:
        a = self._identity.copy()
        a[coordinate, self._dim - 1] = s % self.modulus
        return a

    def _unipotent(self, j: int, s: int) -> np.ndarray:
        a = self._identity.copy()
        a[j - 1, self.ctx.n] = (-s) % self.modulus
        return a

    def _letter(self, letter: GenLetter) -> np.ndarray:
        if letter.is_vertical:
            return self._unipotent(letter.index, letter.sign)
        coordinate = self.ctx.n if letter.kind is Kind.Y else letter.index - 1
        return self._translation(coordinate, letter.sign)

    def _product(self, letters: Iterable[GenLetter]) -> np.ndarray:
        result = self._identity
        for letter in letters:
            result = (result @ self._letter(letter)) % self.modulus
        return result

    def rho(self, g: Element) -> np.ndarray:
        return self._product(to_s_word(g))

    def verify(self) -> None:
        relators = group_relators(self.ctx)
        for name, relator in relators:
            # relators are evaluated letter by letter, not through normal forms
            if not np.array_equal(self._product(relator), self._identity):
                raise PropertyViolation(f"Relator {name} survives in quotient {self.name}")
        self._verified = True
        logger.debug("Quotient %s verified on %d relators", self.name, len(relators))

    def image(self, i: int) -> dict[bytes, np.ndarray]:
        """Closure of the images of the H_i generators, keyed by matrix bytes."""
        if i not in self._images:
            if not self._verified:
                self.verify()
            gens = h_generators(self.ctx, i)
            mats = [self.rho(h) for h in gens] + [self.rho(invert(h)) for h in gens]
            seen = {self._identity.tobytes(): self._identity}
            queue = deque(seen.values())
            while queue:
                a = queue.popleft()
                for b in mats:
                    c = (a @ b) % self.modulus
                    key = c.tobytes()
                    if key not in seen:
                        seen[key] = c
                        queue.append(c)
            self._images[i] = seen
            logger.debug("Image of H_%d in %s has %d elements", i, self.name, len(seen))
        return self._images[i]

    def excludes(self, i: int, g: Element) -> bool:
        return self.rho(g).tobytes() not in self.image(i)

    def coset_key(self, i: int, g: Element) -> Hashable:
        a = self.rho(g)
        return min(((a @ h) % self.modulus).tobytes() for h in self.image(i).values())
