"""Acceptance suite: ten checks, each reported as a CheckResult."""
import logging
import random
from statistics import mean
from typing import Callable, Optional

from fp_walls.cayley import (
    ball,
    components_minus_Ei,
    coverage_minus_Ei,
    fixture_paths,
    split_minus_Ei,
    validate_fixture,
)
from fp_walls.core import (
    Element,
    GroupContext,
    Word,
    element_of_letter,
    element_of_word,
    grid_word,
    invert,
    multiply,
    power,
    reduce,
    to_smin_word,
    to_wt_form,
)
from fp_walls.cube import (
    NonCrossing,
    SideTable,
    Unresolved,
    collect_walls,
    crossing_graph,
    element_identities,
    non_crossing_fixtures,
    standard_family,
    vertical_vertizontal_family,
    witness_fixtures,
)
from fp_walls.errors import UnresolvedEdge
from fp_walls.levels import group_relators, phi_i
from fp_walls.subgroup import MembershipOracle
from fp_walls.types import (
    CheckResult,
    Confidence,
    CrossingGraphReport,
    OmegaReport,
    ProperRow,
    RunConfig,
    weakest,
)
from fp_walls.utils import ordered_map
from fp_walls.walls import Side, omega, side, vertizontal_parity

logger = logging.getLogger(__name__)

KERNEL_TRIALS = 10_000
CLOSED_FORM_TRIALS = 500
COVERAGE_THRESHOLD = 0.99


def random_word(rng: random.Random, ctx: GroupContext, max_length: int) -> Word:
    letters = ctx.smin_letters()
    word = [rng.choice(letters) for _ in range(rng.randint(0, max_length))]
    return reduce(word)


def random_element(rng: random.Random, ctx: GroupContext, max_length: int = 12) -> Element:
    return element_of_word(random_word(rng, ctx, max_length))


_SEVERITY = {"pass": 0, "degraded": 1, "contradicted": 2, "fail": 3}


def _worse(a: str, b: str) -> str:
    return max(a, b, key=_SEVERITY.__getitem__)


def _status(ok: bool, confidence: Confidence) -> str:
    if not ok:
        return "fail" if confidence is Confidence.CERTIFIED else "degraded"
    return "pass" if confidence is Confidence.CERTIFIED else "degraded"


def check_group_kernel(ctx: GroupContext, config: RunConfig, oracle: MembershipOracle) -> CheckResult:
    rng = random.Random(config.seed)
    failures = []
    for _ in range(KERNEL_TRIALS):
        a, b, c = (random_element(rng, ctx) for _ in range(3))
        if multiply(multiply(a, b), c) != multiply(a, multiply(b, c)):
            failures.append(f"associativity at {a}, {b}, {c}")
        if not multiply(a, invert(a)).is_identity:
            failures.append(f"inverse at {a}")
        if element_of_word(to_smin_word(a)) != a:
            failures.append(f"S_min round trip at {a}")
        if len(failures) > 10:
            break
    for i in ctx.indices:
        for j in ctx.indices:
            if ctx.element(f"t{j}^-1 x{i} t{j}") != ctx.element(f"x{i}"):
                failures.append(f"t{j} does not commute with x{i}")
        if ctx.element(f"t{i}^-1 y t{i}") != ctx.element(f"y x{i}"):
            failures.append(f"t{i}^-1 y t{i} != y x{i}")
    if ctx.element("y t1") != ctx.element("t1 y x1"):
        failures.append("y t1 != t1 y x1")
    return CheckResult(
        name="group-kernel",
        status="fail" if failures else "pass",
        details="; ".join(failures[:10]) or f"{KERNEL_TRIALS} random triples",
    )


def check_closed_form(ctx: GroupContext, config: RunConfig, oracle: MembershipOracle) -> CheckResult:
    rng = random.Random(config.seed + 1)
    failures = []
    for _ in range(CLOSED_FORM_TRIALS):
        i = rng.choice(list(ctx.indices))
        ks = [rng.randint(-5, 5) for _ in range(2 * rng.randint(1, 5))]
        g = element_of_word(grid_word(i, ks))
        odd = sum(ks[1::2])
        expected = (ctx.element(f"y x{i}^{odd} y^-1").w, ctx.element(f"t{i}^{sum(ks)}").t)
        if to_wt_form(g) != expected or phi_i(g, i) != odd:
            failures.append(f"i={i} ks={ks}")
    return CheckResult(
        name="closed-form",
        status="fail" if failures else "pass",
        details="; ".join(failures[:10]) or f"{CLOSED_FORM_TRIALS} exponent tuples",
    )


def check_wall_counts(ctx: GroupContext, config: RunConfig, oracle: MembershipOracle) -> CheckResult:
    e = ctx.identity

    def only(i: int, count: int) -> dict[int, int]:
        return {j: count if j == i else 0 for j in ctx.indices}

    reports: list[tuple[OmegaReport, dict]] = [
        (omega(oracle, e, ctx.element("y")), {"total": 1, "horizontal": 1, "vertical": 0, "vertizontal": only(1, 0)})
    ]
    for i in ctx.indices:
        r = omega(oracle, e, ctx.element(f"t{i}"))
        reports.append((r, {"total": 2, "vertical": 1, "horizontal": 0, "vertizontal": only(i, 1)}))
        r = omega(oracle, e, ctx.element(f"x{i}"))
        reports.append((r, {"total": 2, "vertical": 0, "horizontal": 0, "vertizontal": only(i, 2)}))
    for k in range(1, 7):
        r = omega(oracle, e, power(ctx.element("x1"), k))
        reports.append((r, {"total": 2 * k, "vertical": 0, "horizontal": 0, "vertizontal": only(1, 2 * k)}))
    mismatches = []
    for report, expected in reports:
        for name, value in expected.items():
            if getattr(report, name) != value:
                mismatches.append(f"omega({report.g}, {report.h}).{name} = {getattr(report, name)}, expected {value}")
    confidence = weakest(*(r.confidence for r, _ in reports))
    return CheckResult(
        name="wall-counts",
        status=_status(not mismatches, confidence),
        details="; ".join(mismatches) or "omega(e,y)=1, omega(e,t_i)=2, omega(e,x_i)=2, omega(e,x1^k)=2k",
        data={"omega": [r.model_dump(mode="json") for r, _ in reports]},
    )


def check_separation(ctx: GroupContext, config: RunConfig, oracle: MembershipOracle) -> CheckResult:
    b = ball(ctx, config.radii.components, cap=config.caps.vertices)
    notes = []
    status = "pass"
    data = {}
    for i in ctx.indices:
        sep = split_minus_Ei(oracle, i, b, config.budget)
        report = components_minus_Ei(oracle, i, b, separation=sep)
        coverage = coverage_minus_Ei(oracle, i, b, config.radii.coverage_margin, separation=sep)
        data[f"i={i}"] = {"components": report.model_dump(), "coverage": coverage.model_dump()}
        if not report.disjoint:
            status = _worse(status, "fail" if report.certified else "degraded")
            notes.append(f"components of e and t{i} meet")
        elif not report.certified:
            status = _worse(status, "degraded")
            notes.append(f"i={i}: {report.unresolved} unresolved, {report.stabilized_edges} stabilized edges")
        if coverage.fraction < COVERAGE_THRESHOLD:
            status = _worse(status, "degraded")
            notes.append(f"i={i}: coverage {coverage.fraction:.4f}")
    return CheckResult(name="separation", status=status, details="; ".join(notes) or "components disjoint", data=data)


def check_fixtures(ctx: GroupContext, config: RunConfig, oracle: MembershipOracle) -> CheckResult:
    reports = [validate_fixture(oracle, i, f, config.budget) for i in ctx.indices for f in fixture_paths(ctx, i)]
    bad = [f"i={r.i} {r.name}" for r in reports if not (r.endpoint_ok and r.avoids_Ei)]
    unresolved = sum(r.unresolved for r in reports)
    status = "fail" if bad else ("degraded" if unresolved else "pass")
    return CheckResult(
        name="fixtures",
        status=status,
        details="; ".join(bad) or f"{len(reports)} paths validated",
        data={"fixtures": [r.model_dump() for r in reports]},
    )


def check_membership(ctx: GroupContext, config: RunConfig, oracle: MembershipOracle) -> CheckResult:
    notes = []
    status = "pass"
    for k in range(-5, 6):
        for word in (f"y t1^{k} y^-1", f"y^-1 t1^{k} y"):
            m = oracle.membership(1, ctx.element(word), config.budget)
            if m.is_member is False:
                status = "fail"
                notes.append(f"{word} reported outside H_1")
            elif m.verdict != "certified_in":
                status = _worse(status, "degraded")
                notes.append(f"{word}: {m.verdict}")
    for word in ("t1", "y", "t2 t1"):
        m = oracle.membership(1, ctx.element(word), config.budget)
        if m.is_member is True:
            status = "fail"
            notes.append(f"{word} reported inside H_1")
        elif m.verdict != "certified_out":
            status = _worse(status, "degraded")
            notes.append(f"{word}: {m.verdict}")
    hball = oracle.subgroup_ball(1, config.radii.subgroup, config.budget)
    report = hball.report if hball is not None else None
    if report is None or not report.stabilized:
        status = _worse(status, "degraded")
        notes.append("H_1 ball enumeration did not stabilize")
    return CheckResult(
        name="membership",
        status=status,
        details="; ".join(notes) or "fixtures certified, H_1 ball stabilized",
        data={"stabilization": report.model_dump() if report else None},
    )


def _relator_loop(ctx: GroupContext) -> Word:
    _, relator = group_relators(ctx)[0]
    return tuple(letter for x in relator for letter in to_smin_word(element_of_letter(x)))


def check_parity(ctx: GroupContext, config: RunConfig, oracle: MembershipOracle) -> CheckResult:
    rng = random.Random(config.seed + 2)
    b = ball(ctx, config.radii.parity, cap=config.caps.vertices)
    loop = _relator_loop(ctx)
    sample = rng.sample(b.order, min(config.samples, len(b)))
    disagreements = []
    unresolved = 0
    tiers = [Confidence.CERTIFIED]
    for g in sample:
        direct = to_smin_word(g)
        cut = rng.randint(0, len(direct))
        paths = [direct, b.geodesic_word(g), direct[:cut] + loop + direct[cut:]]
        for i in ctx.indices:
            try:
                results = [vertizontal_parity(oracle, i, p, config.budget) for p in paths]
            except UnresolvedEdge:
                unresolved += 1
                continue
            tiers.extend(c for _, c in results)
            if len({p for p, _ in results}) > 1:
                disagreements.append(f"i={i} g={g}")
    confidence = weakest(*tiers)
    if disagreements:
        status = "fail" if confidence is Confidence.CERTIFIED else "degraded"
    else:
        status = "degraded" if unresolved or confidence is not Confidence.CERTIFIED else "pass"
    return CheckResult(
        name="parity",
        status=status,
        details="; ".join(disagreements[:10]) or f"{len(sample)} elements, 3 paths each, {unresolved} unresolved",
    )


def _combinations(oracle: MembershipOracle, keys, elements) -> set[tuple[Side, Side]]:
    return {(side(oracle, keys[0], g)[0], side(oracle, keys[1], g)[0]) for g in elements}


def crossing_audit(ctx: GroupContext, oracle: MembershipOracle, wall_radius: int, search_radius: int, cap: int) -> dict:
    """Crossing graph of the walls of a ball together with the standard family."""
    registry = collect_walls(oracle, ball(ctx, wall_radius, cap=cap))
    family = [registry.add(k) for k in standard_family(ctx)]
    table = SideTable.build(oracle, registry.keys, ball(ctx, search_radius, cap=cap))
    graph = crossing_graph(table, ctx.n)
    return {"registry": registry, "family": family, "graph": graph}


def _family_gaps(audit: dict) -> tuple[list[str], list[str]]:
    """Standard-family pairs without a crossing witness, split into resolved non-crossings and unresolved pairs."""
    graph = audit["graph"]
    labels = graph.report.walls
    refuted, unresolved = [], []
    family = sorted(set(audit["family"]))
    for k, a in enumerate(family):
        for b in family[k + 1:]:
            verdict = graph.verdicts[(a, b)]
            if isinstance(verdict, NonCrossing):
                refuted.append(f"{labels[a]} x {labels[b]}")
            elif isinstance(verdict, Unresolved):
                unresolved.append(f"{labels[a]} x {labels[b]}")
    return refuted, unresolved


def _clique_status(report: CrossingGraphReport, refuted: list[str], notes: list[str]) -> str:
    """contradicted when the 2n+2 bound is provably not attained, degraded when unresolved pairs may hide it"""
    if not (report.within_bound and report.composition_ok):
        notes.append(f"max clique {report.max_clique} against bound {report.bound}, composition_ok={report.composition_ok}")
        return "fail"
    if report.max_clique >= report.bound:
        return "degraded" if report.unresolved_pairs else "pass"
    notes.append(f"max clique {report.max_clique} below the bound {report.bound}")
    if refuted or not report.unresolved_pairs:
        return "contradicted"
    return "degraded"


def check_crossing(ctx: GroupContext, config: RunConfig, oracle: MembershipOracle) -> CheckResult:
    notes = []
    status = "pass"
    for left, right in element_identities(ctx):
        if ctx.element(left) != ctx.element(right):
            return CheckResult(name="crossing", status="fail", details=f"{left} != {right}")
    for fixture in witness_fixtures(ctx):
        try:
            combos = _combinations(oracle, fixture.walls, fixture.elements(ctx))
        except UnresolvedEdge:
            combos = set()
        if len(combos) != 4:
            status = "degraded"
            notes.append(f"witnesses of {fixture.name} realize {len(combos)} combinations")
    for fixture in non_crossing_fixtures(ctx):
        combos = _combinations(oracle, fixture.walls, fixture.elements(ctx))
        notes.append(f"{fixture.name}: listed elements realize {len(combos)} combinations")

    wall_radius, search_radius = config.radii.crossing_walls, config.radii.crossing_search
    audit = crossing_audit(ctx, oracle, wall_radius, search_radius, config.caps.vertices)
    report = audit["graph"].report
    refuted, unresolved = _family_gaps(audit)
    if refuted:
        notes.append("standard family pairs that do not cross: " + ", ".join(refuted))
    if unresolved:
        notes.append("standard family pairs left unresolved: " + ", ".join(unresolved))
    status = _worse(status, _clique_status(report, refuted, notes))
    return CheckResult(
        name="crossing",
        status=status,
        details="; ".join(notes),
        data={
            "wall_radius": wall_radius,
            "search_radius": search_radius,
            "refuted_pairs": refuted,
            "report": report.model_dump(),
        },
    )


def check_dimension_scaling(ctx: GroupContext, config: RunConfig, oracle: MembershipOracle) -> CheckResult:
    ctx3 = GroupContext(3)
    oracle3 = MembershipOracle(ctx3, config.budget)
    wall_radius, search_radius = config.radii.scaling_walls, config.radii.crossing_search
    audit = crossing_audit(ctx3, oracle3, wall_radius, search_radius, config.caps.vertices)
    report = audit["graph"].report
    registry = audit["registry"]
    clique = [registry.add(k) for k in vertical_vertizontal_family(ctx3)]
    graph = audit["graph"].graph
    is_clique = all(graph.has_edge(a, b) for k, a in enumerate(clique) for b in clique[k + 1:])
    refuted, _ = _family_gaps(audit)
    notes = [f"walls of B_{wall_radius}, witnesses in B_{search_radius}"]
    if not is_clique:
        notes.append("V1 with T_i, yT_i is not a clique")
    status = _clique_status(report, refuted, notes)
    if not is_clique and status == "pass":
        status = "degraded"
    return CheckResult(
        name="dimension-scaling",
        status=status,
        details="; ".join(notes),
        data={
            "wall_radius": wall_radius,
            "search_radius": search_radius,
            "refuted_pairs": refuted,
            "report": report.model_dump(),
        },
    )


_WORKERS: dict[str, tuple[MembershipOracle, RunConfig]] = {}


def _omega_task(task: tuple[str, Element]) -> OmegaReport:
    # one oracle per worker process and configuration
    config_json, g = task
    if config_json not in _WORKERS:
        config = RunConfig.model_validate_json(config_json)
        _WORKERS[config_json] = (MembershipOracle(GroupContext(config.n), config.budget), config)
    oracle, config = _WORKERS[config_json]
    return omega(oracle, oracle.ctx.identity, g, config.budget)


def batch_omega(oracle: MembershipOracle, config: RunConfig, elements: list[Element]) -> list[OmegaReport]:
    """omega(e, g) for each g, in worker processes when config.jobs > 1."""
    if config.jobs <= 1:
        return [omega(oracle, oracle.ctx.identity, g, config.budget) for g in elements]
    config_json = config.model_dump_json()
    return ordered_map(_omega_task, [(config_json, g) for g in elements], jobs=config.jobs)


def properness_rows(ctx: GroupContext, config: RunConfig, oracle: MembershipOracle, radius: Optional[int] = None) -> list[ProperRow]:
    radius = config.radii.properness if radius is None else radius
    rng = random.Random(config.seed + 3)
    b = ball(ctx, radius, cap=config.caps.vertices)
    rows = []
    for r in range(1, radius + 1):
        sphere = b.sphere(r)
        sample = rng.sample(sphere, min(config.samples, len(sphere)))
        reports = batch_omega(oracle, config, sample)
        values = [rep.total for rep in reports]
        rows.append(
            ProperRow(
                r=r,
                min_omega=min(values),
                mean_omega=round(mean(values), 4),
                samples=len(values),
                confidence=weakest(*(rep.confidence for rep in reports)),
            )
        )
        logger.info("Properness r=%d: min %d, mean %.3f", r, rows[-1].min_omega, rows[-1].mean_omega)
    return rows


def check_properness(ctx: GroupContext, config: RunConfig, oracle: MembershipOracle) -> CheckResult:
    rows = properness_rows(ctx, config, oracle)
    notes = []
    drops = [(a.r, b.r) for a, b in zip(rows, rows[1:]) if b.min_omega < a.min_omega]
    if drops:
        logger.warning("Minimum omega decreases between spheres %s", drops)
        notes.append(f"min omega not monotone at {drops}")
    if any(row.min_omega < 1 for row in rows):
        status = "fail"
    elif any(row.confidence is not Confidence.CERTIFIED for row in rows):
        status = "degraded"
    else:
        status = "pass"
    return CheckResult(
        name="properness",
        status=status,
        details="; ".join(notes) or "min omega >= 1 on every sphere",
        data={"rows": [row.model_dump(mode="json") for row in rows]},
    )


CHECKS: list[tuple[str, Callable[[GroupContext, RunConfig, MembershipOracle], CheckResult]]] = [
    ("group-kernel", check_group_kernel),
    ("closed-form", check_closed_form),
    ("wall-counts", check_wall_counts),
    ("separation", check_separation),
    ("fixtures", check_fixtures),
    ("membership", check_membership),
    ("parity", check_parity),
    ("crossing", check_crossing),
    ("dimension-scaling", check_dimension_scaling),
    ("properness", check_properness),
]


def verify_all(config: RunConfig, oracle: Optional[MembershipOracle] = None) -> list[CheckResult]:
    """Run the checks in order, stopping after the first fail or contradicted check."""
    ctx = GroupContext(config.n)
    oracle = oracle or MembershipOracle(ctx, config.budget)
    results = []
    for name, check in CHECKS:
        logger.info("Running check %s", name)
        result = check(ctx, config, oracle)
        results.append(result)
        if result.status in ("fail", "contradicted"):
            logger.error("Check %s %s: %s", name, result.status, result.details)
            break
    return results
