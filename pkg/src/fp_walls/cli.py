"""Command line entry point ``fp``.

Exit codes: 0 success, 1 usage or parse error, 2 results relied on
StabilizedOut or unresolved verdicts, 3 a checked property was violated.
"""
import argparse
import csv
import io
import logging
import sys
from typing import Any, Optional, Sequence

from fp_walls.cayley import (
    Path,
    ball,
    ball_dot,
    components_minus_Ei,
    coverage_minus_Ei,
    fixture_paths,
    naive_ball_size,
    split_minus_Ei,
    validate_fixture,
)
from fp_walls.core import (
    GroupContext,
    format_horizontal,
    format_vertical,
    format_word,
    invert,
    multiply,
    sigma_apply,
    to_smin_word,
    to_wt_form,
)
from fp_walls.cube import collect_walls, orientation_vectors
from fp_walls.errors import FPError, PropertyViolation, ResourceLimit, UnresolvedEdge
from fp_walls.levels import alpha, format_levels, level_word, phi, phi_i
from fp_walls.loader import ConfigLoader
from fp_walls.subgroup import MembershipOracle
from fp_walls.types import (
    Artifact,
    Confidence,
    MembershipRecord,
    RunConfig,
    weakest,
)
from fp_walls.utils import SummaryRenderer
from fp_walls.utils.text import SUMMARY_CHECK, SUMMARY_COMPONENTS, SUMMARY_OMEGA
from fp_walls.verify import properness_rows, verify_all
from fp_walls.walls import WallRegistry, omega, parse_wall_spec, separates, side, walls_crossed

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOWNGRADED = 2
EXIT_VIOLATION = 3

# radii field each --radius flag overrides
RADIUS_FIELD = {
    "hball": "subgroup",
    "ball": "counting",
    "components": "components",
    "coverage": "components",
    "crossing": "crossing_search",
    "cubulate": "crossing_search",
    "properness": "properness",
}


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML or JSON run configuration")
    common.add_argument("--n", type=int, help="Rank parameter of G_n")
    common.add_argument("--radius", type=int, help="Ball radius of the command")
    common.add_argument("--depth", type=int, help="Oracle search depth")
    common.add_argument("--slack", type=int, help="Stabilization slack")
    common.add_argument("--jobs", type=int, help="Worker processes")
    common.add_argument("--seed", type=int, help="Random seed")
    common.add_argument("--format", choices=["json", "csv", "dot", "text"], help="Artifact format")
    common.add_argument("--out", help="Output path")
    common.add_argument("--cap-vertices", type=int, dest="cap_vertices", help="Vertex cap of balls")
    common.add_argument("--i", type=int, default=1, dest="index", help="Vertizontal family index")
    common.add_argument("--margin", type=int, help="Coverage margin")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("--quiet", action="store_true")
    return common


def build_parser() -> Parser:
    common = _common()
    parser = Parser(prog="fp", description="Walls and cubulation of Formanek-Procesi groups")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    def add(name: str, *words: str, **extra: Any) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common])
        for w in words:
            p.add_argument(w)
        for flag, kwargs in extra.items():
            p.add_argument(f"--{flag}", **kwargs)
        return p

    add("nf", "word")
    add("mul", "a", "b")
    add("inv", "word")
    add("sigma", "t", "w")
    add("smin", "word")
    add("wt", "word")
    add("phi", "word")
    add("phii", "word")
    add("levels", "word")
    add("alpha", "word")
    add("member", "word")
    add("hball")
    add("ball", genset={"choices": ["smin", "s"], "default": "smin"})
    add("components")
    add("coverage")
    add("fixtures")
    add("side", "word", wall={"required": True})
    add("crossed", "word")
    add("omega", "g", "h")
    add("separates", "g", "h", wall={"required": True})
    add("crossing")
    add("cubulate")
    add("properness")
    add("verify-all")
    return parser


def make_config(args: argparse.Namespace) -> RunConfig:
    overrides: dict[str, Any] = {}
    if args.n is not None:
        overrides["n"] = args.n
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.jobs is not None:
        overrides["jobs"] = args.jobs
    budget = {k: v for k, v in (("depth", args.depth), ("slack", args.slack)) if v is not None}
    if budget:
        overrides["budget"] = budget
    output = {k: v for k, v in (("format", args.format), ("out", args.out)) if v is not None}
    if output:
        overrides["output"] = output
    if args.cap_vertices is not None:
        overrides["caps"] = {"vertices": args.cap_vertices}
    radii = {}
    if args.radius is not None and args.command in RADIUS_FIELD:
        radii[RADIUS_FIELD[args.command]] = args.radius
    if args.margin is not None:
        radii["coverage_margin"] = args.margin
    if radii:
        overrides["radii"] = radii
    base = ConfigLoader.load(args.config) if args.config else RunConfig()
    return ConfigLoader.merge(base, overrides)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


class Runner:
    """Executes one subcommand; returns (text summary, result payload, confidence, extra renderings)."""

    def __init__(self, config: RunConfig, args: argparse.Namespace):
        self.config = config
        self.args = args
        self.ctx = GroupContext(config.n)
        self._oracle: Optional[MembershipOracle] = None

    @property
    def oracle(self) -> MembershipOracle:
        if self._oracle is None:
            self._oracle = MembershipOracle(self.ctx, self.config.budget)
        return self._oracle

    def element(self, text: str):
        return self.ctx.element(text)

    def run(self) -> tuple[str, Any, Confidence, dict[str, str]]:
        handler = getattr(self, "cmd_" + self.args.command.replace("-", "_"))
        return handler()

    # group arithmetic
    def cmd_nf(self):
        g = self.element(self.args.word)
        return g.format(), {"element": g.format()}, Confidence.CERTIFIED, {}

    def cmd_mul(self):
        g = multiply(self.element(self.args.a), self.element(self.args.b))
        return g.format(), {"element": g.format()}, Confidence.CERTIFIED, {}

    def cmd_inv(self):
        g = invert(self.element(self.args.word))
        return g.format(), {"element": g.format()}, Confidence.CERTIFIED, {}

    def cmd_sigma(self):
        t, w = self.element(self.args.t), self.element(self.args.w)
        if t.w or w.t:
            raise FPError("sigma takes a word in t letters and a word in x, y letters")
        image = format_horizontal(sigma_apply(t.t, w.w)) or "ε"
        return image, {"image": image}, Confidence.CERTIFIED, {}

    def cmd_smin(self):
        word = format_word(to_smin_word(self.element(self.args.word)))
        return word, {"word": word}, Confidence.CERTIFIED, {}

    def cmd_wt(self):
        w, t = to_wt_form(self.element(self.args.word))
        w_text, t_text = format_horizontal(w) or "ε", format_vertical(t) or "ε"
        return f"({w_text}, {t_text})", {"w": w_text, "t": t_text}, Confidence.CERTIFIED, {}

    # levels
    def cmd_phi(self):
        value = phi(self.element(self.args.word))
        return str(value), {"phi": value}, Confidence.CERTIFIED, {}

    def cmd_phii(self):
        value = phi_i(self.element(self.args.word), self.ctx.check_index(self.args.index))
        return str(value), {"phi_i": value, "i": self.args.index}, Confidence.CERTIFIED, {}

    def cmd_levels(self):
        text = format_levels(level_word(self.element(self.args.word)))
        return text, {"levels": text}, Confidence.CERTIFIED, {}

    def cmd_alpha(self):
        text = alpha(self.element(self.args.word)).format()
        return text, {"alpha": text}, Confidence.CERTIFIED, {}

    # subgroup
    def cmd_member(self):
        g = self.element(self.args.word)
        m = self.oracle.membership(self.args.index, g)
        record = MembershipRecord(i=self.args.index, element=g.format(), membership=m, budget=self.config.budget.model_dump())
        return f"{g} in H_{self.args.index}: {m.verdict}", record.model_dump(), m.confidence, {}

    def cmd_hball(self):
        hb = self.oracle.subgroup_ball(self.args.index, self.config.radii.subgroup)
        report = hb.report
        confidence = Confidence.CERTIFIED if report.stabilized else Confidence.UNRESOLVED
        text = f"H_{self.args.index} in B_{hb.radius}: {len(hb.elements)} elements, stabilized={report.stabilized}"
        result = {"report": report.model_dump(), "elements": [g.format() for g in sorted(hb.elements, key=lambda g: g.sort_key())]}
        return text, result, confidence, {}

    # Cayley balls
    def cmd_ball(self):
        b = ball(self.ctx, self.config.radii.counting, self.args.genset, self.config.caps.vertices)
        spheres = b.spheres()
        result = {"radius": b.radius, "genset": b.genset, "vertices": len(b), "spheres": spheres}
        if b.radius <= 6:
            result["reference"] = naive_ball_size(self.ctx, b.radius, b.genset)
        return f"|B_{b.radius}| = {len(b)}, spheres {spheres}", result, Confidence.CERTIFIED, {"dot": ball_dot(b)}

    def _components(self):
        i = self.ctx.check_index(self.args.index)
        b = ball(self.ctx, self.config.radii.components, cap=self.config.caps.vertices)
        return i, b, split_minus_Ei(self.oracle, i, b)

    def cmd_components(self):
        i, b, sep = self._components()
        report = components_minus_Ei(self.oracle, i, b, separation=sep)
        confidence = Confidence.CERTIFIED if report.certified else (
            Confidence.UNRESOLVED if report.unresolved else Confidence.STABILIZED
        )
        if not report.disjoint and report.certified:
            raise PropertyViolation(f"Components of e and t{i} meet in B_{b.radius} minus E_{i}")
        text = SummaryRenderer.render(SUMMARY_COMPONENTS, report.model_dump())
        return text, report.model_dump(), confidence, {"dot": ball_dot(b, self.oracle, i)}

    def cmd_coverage(self):
        i, b, sep = self._components()
        report = coverage_minus_Ei(self.oracle, i, b, self.config.radii.coverage_margin, separation=sep)
        confidence = Confidence.CERTIFIED if sep.certified else Confidence.STABILIZED
        return f"coverage {report.fraction:.4f}", report.model_dump(), confidence, {}

    def cmd_fixtures(self):
        i = self.ctx.check_index(self.args.index)
        reports = [validate_fixture(self.oracle, i, f) for f in fixture_paths(self.ctx, i)]
        if any(not (r.endpoint_ok and r.avoids_Ei) for r in reports):
            raise PropertyViolation(f"A rerouting path for i={i} fails validation")
        confidence = Confidence.UNRESOLVED if any(r.unresolved for r in reports) else Confidence.CERTIFIED
        text = "\n".join(f"{r.name}: end {r.reached_end}, avoids E_{i}: {r.avoids_Ei}" for r in reports)
        return text, [r.model_dump() for r in reports], confidence, {}

    # walls
    def cmd_side(self):
        key = parse_wall_spec(self.ctx, self.args.wall)
        s, confidence = side(self.oracle, key, self.element(self.args.word))
        return s.value, {"wall": key.record().model_dump(), "side": s.value}, confidence, {}

    def cmd_crossed(self):
        registry = WallRegistry(self.oracle)
        report = walls_crossed(registry, Path.parse(self.ctx, self.args.word))
        record = report.record(registry)
        text = "\n".join(f"{c.position}: {c.wall.label} ({c.sign:+d})" for c in record.crossings)
        return text, record.model_dump(), report.confidence, {}

    def cmd_omega(self):
        report = omega(self.oracle, self.element(self.args.g), self.element(self.args.h))
        text = SummaryRenderer.render(SUMMARY_OMEGA, report.model_dump(mode="json"))
        return text, report.model_dump(mode="json"), report.confidence, {}

    def cmd_separates(self):
        key = parse_wall_spec(self.ctx, self.args.wall)
        split, confidence = separates(self.oracle, key, self.element(self.args.g), self.element(self.args.h))
        return str(split).lower(), {"wall": key.label, "separates": split}, confidence, {}

    # cube
    def _fragment(self):
        walls = ball(self.ctx, self.config.radii.crossing_walls, cap=self.config.caps.vertices)
        search = ball(self.ctx, self.config.radii.crossing_search, cap=self.config.caps.vertices)
        registry = collect_walls(self.oracle, walls)
        return orientation_vectors(self.oracle, search, registry)

    def _cube_confidence(self, fragment) -> Confidence:
        tiers = list(fragment.table.confidence) + [fragment.registry.confidence]
        if fragment.crossing.report.unresolved_pairs:
            tiers.append(Confidence.UNRESOLVED)
        return weakest(*tiers)

    def _check_cube(self, fragment) -> None:
        report = fragment.crossing.report
        if not (report.within_bound and report.composition_ok):
            raise PropertyViolation(f"Crossing graph breaks the clique bounds: {report.max_clique} against {report.bound}")

    def cmd_crossing(self):
        fragment = self._fragment()
        self._check_cube(fragment)
        report = fragment.crossing.report
        text = f"walls {len(report.walls)}, crossing pairs {len(report.crossing_pairs)}, max clique {report.max_clique} (bound {report.bound})"
        return text, report.model_dump(), self._cube_confidence(fragment), {"dot": fragment.dot()}

    def cmd_cubulate(self):
        fragment = self._fragment()
        self._check_cube(fragment)
        record = fragment.record()
        if record.bit_violations:
            raise PropertyViolation(f"{record.bit_violations} ball edges change unexpected wall bits")
        text = f"{len(record.vertices)} vertices over {len(record.walls)} walls, max clique {record.crossing.max_clique}"
        return text, record.model_dump(), self._cube_confidence(fragment), {"dot": fragment.dot()}

    # scans
    def cmd_properness(self):
        rows = properness_rows(self.ctx, self.config, self.oracle)
        if any(row.min_omega < 1 for row in rows):
            raise PropertyViolation("A sampled element at distance >= 1 is separated from e by no wall")
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["r", "min_omega", "mean_omega", "samples", "confidence"])
        for row in rows:
            writer.writerow([row.r, row.min_omega, row.mean_omega, row.samples, row.confidence.value])
        confidence = weakest(*(row.confidence for row in rows))
        return buffer.getvalue().rstrip("\n"), [row.model_dump(mode="json") for row in rows], confidence, {
            "csv": buffer.getvalue()
        }

    def cmd_verify_all(self):
        results = verify_all(self.config, self.oracle)
        text = "\n".join(SummaryRenderer.render(SUMMARY_CHECK, r.model_dump()) for r in results)
        statuses = {r.status for r in results}
        if "fail" in statuses:
            confidence = Confidence.UNRESOLVED
        elif "degraded" in statuses:
            confidence = Confidence.STABILIZED
        else:
            confidence = Confidence.CERTIFIED
        return text, [r.model_dump(mode="json") for r in results], confidence, {}


def render_artifact(command: str, config: RunConfig, text: str, result: Any, confidence: Confidence, extra: dict[str, str]) -> str:
    fmt = config.output.format
    if fmt == "json":
        artifact = Artifact(command=command, config=config, confidence=confidence, result=result)
        return artifact.model_dump_json(indent=2)
    if fmt in extra:
        return extra[fmt]
    if fmt != "text":
        raise FPError(f"Format {fmt} is not available for command {command}")
    return text


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"fp: {e}", file=sys.stderr)
        return EXIT_USAGE
    level = logging.WARNING - 10 * args.verbose if not args.quiet else logging.ERROR
    logging.basicConfig(level=max(level, logging.DEBUG), format="%(levelname)s %(name)s: %(message)s")

    try:
        config = make_config(args)
        text, result, confidence, extra = Runner(config, args).run()
        _emit(render_artifact(args.command, config, text, result, confidence, extra), config.output.out)
    except PropertyViolation as e:
        logger.error("%s", e)
        return EXIT_VIOLATION
    except UnresolvedEdge as e:
        logger.warning("%s", e)
        return EXIT_DOWNGRADED
    except (FPError, ResourceLimit, ValueError) as e:
        print(f"fp: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.command == "verify-all":
        statuses = {r["status"] for r in result}
        if statuses & {"fail", "contradicted"}:
            return EXIT_VIOLATION
        return EXIT_DOWNGRADED if "degraded" in statuses else EXIT_OK
    return EXIT_OK if confidence is Confidence.CERTIFIED else EXIT_DOWNGRADED


if __name__ == "__main__":
    sys.exit(main())
