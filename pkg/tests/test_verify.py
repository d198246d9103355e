import pytest

from fp_walls.types import CrossingGraphReport, Radii, RunConfig
from fp_walls.verify import (
    batch_omega,
    check_closed_form,
    _clique_status,
    check_crossing,
    check_dimension_scaling,
    check_fixtures,
    check_group_kernel,
    check_parity,
    check_wall_counts,
    properness_rows,
)


@pytest.fixture(scope="module")
def config() -> RunConfig:
    return RunConfig(samples=20, radii=Radii(parity=3, properness=3, crossing_walls=1, crossing_search=3))


def test_closed_form(ctx2, config, oracle2):
    assert check_closed_form(ctx2, config, oracle2).status == "pass"


def test_wall_counts(ctx2, config, oracle2):
    result = check_wall_counts(ctx2, config, oracle2)
    assert result.status == "pass", result.details


def test_fixtures(ctx2, config, oracle2):
    result = check_fixtures(ctx2, config, oracle2)
    assert result.status == "pass", result.details
    assert len(result.data["fixtures"]) == 16


def test_parity_is_path_independent(ctx2, config, oracle2):
    result = check_parity(ctx2, config, oracle2)
    assert result.status != "fail", result.details


def test_properness_rows(ctx2, config, oracle2):
    rows = properness_rows(ctx2, config, oracle2)
    assert [row.r for row in rows] == [1, 2, 3]
    assert all(row.min_omega >= 1 for row in rows)
    assert rows[0].min_omega == 1


def test_crossing_check_reports_the_missing_dimension(ctx2, config, oracle2):
    result = check_crossing(ctx2, config, oracle2)
    report = result.data["report"]
    assert result.status in ("degraded", "contradicted"), result.details
    assert report["max_clique"] < report["bound"]
    assert result.data["wall_radius"] == config.radii.crossing_walls
    assert result.data["search_radius"] == config.radii.crossing_search
    if result.status == "contradicted":
        assert result.data["refuted_pairs"] or report["unresolved_pairs"] == 0


def _report(max_clique: int, unresolved: int = 0, composition_ok: bool = True) -> CrossingGraphReport:
    return CrossingGraphReport(
        n=2,
        search_radius=4,
        walls=[],
        unresolved_pairs=unresolved,
        max_clique=max_clique,
        bound=6,
        within_bound=max_clique <= 6,
        composition_ok=composition_ok,
    )


@pytest.mark.parametrize(
    "report, refuted, status",
    [
        (_report(6), [], "pass"),
        (_report(6, unresolved=3), [], "degraded"),
        (_report(5), [], "contradicted"),
        (_report(5, unresolved=3), ["h: x z:1:(ε, y)"], "contradicted"),
        (_report(5, unresolved=3), [], "degraded"),
        (_report(7), [], "fail"),
        (_report(4, composition_ok=False), [], "fail"),
    ],
)
def test_clique_status_separates_refutation_from_budget(report, refuted, status):
    notes = []
    assert _clique_status(report, refuted, notes) == status
    assert bool(notes) == (report.max_clique != report.bound or not report.composition_ok)


@pytest.mark.slow
def test_dimension_scaling_uses_configured_radii(config, oracle2, ctx2):
    scaled = config.model_copy(update={"radii": config.radii.model_copy(update={"scaling_walls": 1, "crossing_search": 3})})
    result = check_dimension_scaling(ctx2, scaled, oracle2)
    assert result.status != "fail", result.details
    assert result.data["wall_radius"] == 1
    assert result.data["search_radius"] == 3
    assert result.data["report"]["n"] == 3
    assert result.data["report"]["max_clique"] <= 8


@pytest.mark.slow
def test_group_kernel(ctx2, config, oracle2):
    assert check_group_kernel(ctx2, config, oracle2).status == "pass"


@pytest.mark.slow
def test_batch_omega_in_workers(ctx2, config, oracle2):
    elements = [ctx2.element(w) for w in ("y", "t1", "x2", "y t1", "t2^-1 y")]
    inline = [r.total for r in batch_omega(oracle2, config, elements)]
    parallel = [r.total for r in batch_omega(oracle2, config.model_copy(update={"jobs": 2}), elements)]
    assert inline == parallel == [1, 2, 2, 3, 3]
