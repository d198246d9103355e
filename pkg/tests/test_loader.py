import json

import pytest

from fp_walls.loader import ConfigLoader
from fp_walls.types import RunConfig


def test_load_yaml(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("n: 3\nradii:\n  components: 4\nbudget:\n  depth: 12\n", encoding="utf-8")
    config = ConfigLoader.load(str(path))
    assert config.n == 3
    assert config.radii.components == 4
    assert config.radii.counting == RunConfig().radii.counting
    assert config.budget.depth == 12


def test_load_json_with_overrides(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"seed": 7, "budget": {"slack": 6}}), encoding="utf-8")
    config = ConfigLoader.load(str(path), {"budget": {"depth": 30}, "jobs": 2})
    assert config.seed == 7
    assert config.jobs == 2
    assert (config.budget.depth, config.budget.slack) == (30, 6)


def test_empty_file_gives_defaults(tmp_path):
    path = tmp_path / "empty.yml"
    path.write_text("", encoding="utf-8")
    assert ConfigLoader.load(str(path)) == RunConfig()


@pytest.mark.parametrize(
    "name, content",
    [("run.txt", "n: 2"), ("run.yaml", "n: [2"), ("run.json", "{n: 2")],
)
def test_bad_files(tmp_path, name, content):
    path = tmp_path / name
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ValueError):
        ConfigLoader.load(str(path))


def test_missing_file(tmp_path):
    with pytest.raises(ValueError):
        ConfigLoader.load(str(tmp_path / "absent.yaml"))


def test_rank_is_validated():
    with pytest.raises(ValueError):
        RunConfig(n=1)
    with pytest.raises(ValueError):
        ConfigLoader.merge(RunConfig(), {"budget": {"depth": 0}})


def test_budget_cover():
    small = RunConfig().budget
    large = small.model_copy(update={"depth": small.depth + 5})
    assert large.covers(small)
    assert not small.covers(large)
