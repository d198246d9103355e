"""Three-valued membership in the vertizontal stabilizers H_i.

Negative answers are certified by invariants that contain H_i: the y-exponent
phi, the abelianised level vector alpha (reduced modulo the lattice spanned
by the generators) and registered finite quotients. Positive answers come
with a generator word that is re-evaluated before it is returned. What
neither side settles is answered from a stabilized enumeration of H_i inside
a ball, or left Unknown.
"""
import heapq
import itertools
import logging
import threading
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Optional, Sequence

from fp_walls.core import IDENTITY, Element, GroupContext, invert, multiply, smin_length
from fp_walls.errors import BudgetExceeded, PropertyViolation
from fp_walls.levels import (
    IntegerLattice,
    LevelVector,
    alpha,
    derive_kernel_presentation,
    level_word,
    phi,
)
from fp_walls.subgroup.generators import evaluate_witness, h_generators
from fp_walls.subgroup.quotient import AffineQuotient, QuotientTest
from fp_walls.types.config import SearchBudget
from fp_walls.types.membership import (
    CertifiedIn,
    CertifiedOut,
    Membership3,
    StabilizedOut,
    Unknown,
)
from fp_walls.types.reports import StabilizationReport

logger = logging.getLogger(__name__)

Witness = tuple[tuple[int, int], ...]


@dataclass(frozen=True, slots=True)
class SubgroupId:
    i: int

    def check(self, ctx: GroupContext) -> int:
        return ctx.check_index(self.i)


@dataclass
class SubgroupBall:
    i: int
    radius: int
    elements: dict[Element, Witness] = field(default_factory=dict)
    report: Optional[StabilizationReport] = None


def _steps(gens: Sequence[Element]) -> list[tuple[int, int, Element, Element]]:
    steps = []
    for index, g in enumerate(gens):
        g_inv = invert(g)
        steps.append((index, 1, g, g_inv))
        steps.append((index, -1, g_inv, g))
    return steps


def enumerate_subgroup_ball(
    ctx: GroupContext,
    i: int,
    radius: int,
    depth: int,
    slack: int = 4,
    expand_margin: int = 2,
    max_elements: int = 200_000,
) -> SubgroupBall:
    """Breadth-first enumeration of H_i by generator depth.

    Elements longer than radius + expand_margin (S_min length of their
    representative) are not expanded; elements of length at most radius are
    retained together with a witness. The run stops once `slack` consecutive
    depths add no retained element, when the frontier runs empty, or at
    generator depth `depth`.
    """
    if radius < 0 or depth < 1:
        raise ValueError(f"Need radius >= 0 and depth >= 1, got radius={radius}, depth={depth}")
    steps = _steps(h_generators(ctx, i))
    witnesses: dict[Element, Witness] = {IDENTITY: ()}
    retained: dict[Element, Witness] = {IDENTITY: ()}
    pruned: set[Element] = set()
    frontier = [IDENTITY]
    last_new = 0
    level = 0
    exhausted = False

    def report(stabilized: bool) -> StabilizationReport:
        return StabilizationReport(
            i=i,
            radius=radius,
            depth_reached=level,
            slack=slack,
            last_new_depth=last_new,
            stabilized=stabilized,
            exhausted=exhausted,
            elements=len(retained),
            visited=len(witnesses),
        )

    while level < depth:
        level += 1
        next_frontier: list[Element] = []
        for g in frontier:
            for index, sign, factor, _ in steps:
                h = multiply(g, factor)
                if h in witnesses or h in pruned:
                    continue
                length = smin_length(h)
                if length > radius + expand_margin:
                    pruned.add(h)
                    continue
                witnesses[h] = witnesses[g] + ((index, sign),)
                next_frontier.append(h)
                if length <= radius:
                    retained[h] = witnesses[h]
                    last_new = level
                if len(witnesses) > max_elements:
                    partial = SubgroupBall(i, radius, retained, report(False))
                    raise BudgetExceeded(
                        f"H_{i} enumeration visited more than {max_elements} elements", partial=partial
                    )
        frontier = next_frontier
        if not frontier:
            exhausted = True
            break
        if level - last_new >= slack:
            break

    stabilized = exhausted or level - last_new >= slack
    logger.debug(
        "H_%d ball: radius %d, %d retained, depth %d, stabilized=%s", i, radius, len(retained), level, stabilized
    )
    return SubgroupBall(i, radius, retained, report(stabilized))


class MembershipOracle:
    """Memoizing membership oracle for H_1..H_n.

    Certified verdicts are final. Heuristic verdicts (StabilizedOut, Unknown)
    are reused only for budgets they cover, otherwise recomputed.
    """

    def __init__(
        self,
        ctx: GroupContext,
        budget: Optional[SearchBudget] = None,
        quotients: Optional[list[QuotientTest]] = None,
        presentation_levels: int = 2,
    ):
        self.ctx = ctx
        self.budget = budget or SearchBudget()
        self.quotients = quotients if quotients is not None else [AffineQuotient(ctx, 2)]
        for q in self.quotients:
            q.verify()
        presentation = derive_kernel_presentation(ctx, presentation_levels)
        if not presentation.verified:
            raise PropertyViolation("Kernel relators are not all commutators; alpha certificates are unsound")
        self._lock = threading.Lock()
        self._cache: dict[tuple[int, Element], tuple[Membership3, SearchBudget]] = {}
        self._gens: dict[int, list[Element]] = {}
        self._lattices: dict[int, IntegerLattice] = {}
        self._balls: dict[tuple[int, int, int, int, int], Optional[SubgroupBall]] = {}
        self._slots: dict[int, dict] = {}
        self.stats: Counter = Counter()

    def generators(self, i: int) -> list[Element]:
        if i not in self._gens:
            self._gens[i] = h_generators(self.ctx, i)
        return self._gens[i]

    def lattice(self, i: int) -> IntegerLattice:
        """Lattice spanned by alpha of the H_i generators."""
        if i not in self._lattices:
            self._lattices[i] = IntegerLattice(alpha(g) for g in self.generators(i))
        return self._lattices[i]

    def _generator_slots(self, i: int) -> dict:
        # generator positions: x_j, t_j for j != i in order, then y x_i y^-1 t_i, x_i t_i^-1
        if i not in self._slots:
            slots: dict = {}
            position = 0
            for j in self.ctx.indices:
                if j != i:
                    slots[("x", j)] = position
                    slots[("t", j)] = position + 1
                    position += 2
            slots["up"] = position
            slots["down"] = position + 1
            self._slots[i] = slots
        return self._slots[i]

    def level_witness(self, i: int, g: Element) -> Optional[Witness]:
        """Read a witness off the level word when it only uses letters of H_i.

        H_i contains u(j,-1), u(j,0) for j != i, u(i,1) and u(i,-1).
        """
        if phi(g) != 0:
            return None
        slots = self._generator_slots(i)
        out: list[tuple[int, int]] = []
        for letter in level_word(g):
            s = letter.sign
            if letter.j != i and letter.k == 0:
                out.append((slots[("t", letter.j)], s))
            elif letter.j != i and letter.k == -1:
                # u(j,-1) = x_j^-1 t_j
                x, t = slots[("x", letter.j)], slots[("t", letter.j)]
                out.extend([(x, -1), (t, 1)] if s > 0 else [(t, -1), (x, 1)])
            elif letter.j == i and letter.k == 1:
                out.append((slots["up"], s))
            elif letter.j == i and letter.k == -1:
                # u(i,-1) = (x_i t_i^-1)^-1
                out.append((slots["down"], -s))
            else:
                return None
        return tuple(out)

    def search(self, i: int, g: Element, budget: SearchBudget) -> tuple[Optional[Witness], int]:
        """Best-first search peeling generator factors off both ends of g."""
        steps = _steps(self.generators(i))
        counter = itertools.count()
        heap = [(smin_length(g), 0, next(counter), g, (), ())]
        seen = {g}
        nodes = 0
        while heap and nodes < budget.max_nodes:
            _, depth, _, current, left, right = heapq.heappop(heap)
            nodes += 1
            core = self.level_witness(i, current)
            if core is not None:
                return left + core + right, nodes
            if depth >= budget.depth:
                continue
            for index, sign, factor, factor_inv in steps:
                # current = factor * rest  or  current = rest * factor
                for rest, new_left, new_right in (
                    (multiply(factor_inv, current), left + ((index, sign),), right),
                    (multiply(current, factor_inv), left, ((index, sign),) + right),
                ):
                    if rest in seen:
                        continue
                    seen.add(rest)
                    heapq.heappush(heap, (smin_length(rest), depth + 1, next(counter), rest, new_left, new_right))
        return None, nodes

    def subgroup_ball(self, i: int, radius: int, budget: Optional[SearchBudget] = None) -> Optional[SubgroupBall]:
        budget = budget or self.budget
        key = (i, radius, budget.depth, budget.slack, budget.expand_margin)
        with self._lock:
            if key in self._balls:
                return self._balls[key]
        try:
            ball = enumerate_subgroup_ball(
                self.ctx, i, radius, budget.depth, budget.slack, budget.expand_margin, budget.max_elements
            )
        except BudgetExceeded as e:
            logger.warning("%s; StabilizedOut verdicts unavailable at radius %d", e, radius)
            ball = e.partial
        with self._lock:
            self._balls[key] = ball
        return ball

    def _certified_in(self, i: int, g: Element, witness: Witness) -> CertifiedIn:
        if evaluate_witness(self.generators(i), list(witness)) != g:
            raise PropertyViolation(f"Witness for {g} in H_{i} does not evaluate back")
        return CertifiedIn(witness=list(witness))

    def coset_signature(self, i: int, b: Element) -> Hashable:
        """An invariant of the left coset b H_i."""
        f = phi(b)
        shift = Element((), (-1,) * f if f > 0 else (1,) * (-f))
        residue = self.lattice(i).remainder(alpha(multiply(shift, b)))
        return (f, residue.entries, tuple(q.coset_key(i, b) for q in self.quotients))

    def decide(self, i: int, g: Element, budget: SearchBudget) -> Membership3:
        if phi(g) != 0:
            return CertifiedOut(certificate="phi")
        if not self.lattice(i).contains(alpha(g)):
            return CertifiedOut(certificate="alpha-support")
        for q in self.quotients:
            if q.excludes(i, g):
                return CertifiedOut(certificate=f"quotient:{q.name}")
        witness, nodes = self.search(i, g, budget)
        if witness is not None:
            return self._certified_in(i, g, witness)
        if smin_length(g) <= budget.radius:
            ball = self.subgroup_ball(i, budget.radius, budget)
            if ball is not None:
                if g in ball.elements:
                    return self._certified_in(i, g, ball.elements[g])
                if ball.report is not None and ball.report.stabilized:
                    logger.debug("H_%d membership of %s relies on stabilized enumeration", i, g)
                    return StabilizedOut(
                        radius=ball.radius,
                        depth=ball.report.depth_reached,
                        slack=ball.report.slack,
                        stabilized_at=ball.report.last_new_depth,
                    )
        logger.debug("H_%d membership of %s unknown after %d nodes", i, g, nodes)
        return Unknown(depth=budget.depth, nodes=nodes)

    def membership(self, i: int, g: Element, budget: Optional[SearchBudget] = None) -> Membership3:
        budget = budget or self.budget
        key = (i, g)
        with self._lock:
            cached = self._cache.get(key)
            if cached is not None:
                verdict, used = cached
                if verdict.verdict.startswith("certified") or used.covers(budget):
                    self.stats["hits"] += 1
                    return verdict
        self.ctx.check_index(i)
        verdict = self.decide(i, g, budget)
        with self._lock:
            self.stats[verdict.verdict] += 1
            self._cache[key] = (verdict, budget)
        return verdict

    def is_member(self, i: int, g: Element, budget: Optional[SearchBudget] = None) -> Optional[bool]:
        return self.membership(i, g, budget).is_member


def alpha_support(ctx: GroupContext, i: int) -> set[tuple[int, int]]:
    """Union of the level supports of the H_i generators."""
    support: set[tuple[int, int]] = set()
    for g in h_generators(ctx, i):
        support |= alpha(g).support()
    return support


def alpha_lattice(ctx: GroupContext, i: int) -> list[LevelVector]:
    return IntegerLattice(alpha(g) for g in h_generators(ctx, i)).basis_vectors()
