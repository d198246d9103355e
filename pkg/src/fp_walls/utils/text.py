from abc import ABC, abstractmethod
from functools import lru_cache
from typing import Any, Dict, Type

from jinja2 import Environment, StrictUndefined, Template


class ReportRenderer(ABC):
    """Turns a report payload into text."""

    @classmethod
    @abstractmethod
    def render(cls, template: str, variables: Dict[str, Any]) -> str:
        ...


class SummaryRenderer(ReportRenderer):
    """One-line summaries built with str.format over a report dump"""

    @classmethod
    def render(cls, template: str, variables: Dict[str, Any]) -> str:
        try:
            return template.format(**variables)
        except KeyError as e:
            raise ValueError(f"Report has no field '{e.args[0]}' used by summary template") from e
        except (IndexError, ValueError) as e:
            raise ValueError(f"Malformed summary template: {e}") from e


_DOT_ENV = Environment(undefined=StrictUndefined, autoescape=False, trim_blocks=True, lstrip_blocks=True)


@lru_cache(maxsize=16)
def _compile(template: str) -> Template:
    return _DOT_ENV.from_string(template)


class DotRenderer(ReportRenderer):
    """Graphviz documents from jinja2 templates; compiled templates are cached"""

    @classmethod
    def render(cls, template: str, variables: Dict[str, Any]) -> str:
        try:
            return _compile(template).render(variables)
        except Exception as e:
            raise ValueError(f"Error rendering DOT graph: {e}") from e


Renderers: dict[str, Type[ReportRenderer]] = {
    "summary": SummaryRenderer,
    "dot": DotRenderer,
}


# Ball subgraph; edges of E_i are drawn red
BALL_DOT = """graph ball {
  node [shape=point];
{% for v in vertices %}
  "{{ v }}";
{% endfor %}
{% for e in edges %}
  "{{ e.a }}" -- "{{ e.b }}" [label="{{ e.label }}"{% if e.cut %}, color=red, penwidth=2{% endif %}{% if e.unresolved %}, style=dashed{% endif %}];
{% endfor %}
}
"""

CROSSING_DOT = """graph crossing {
  node [shape=box];
{% for w in walls %}
  w{{ loop.index0 }} [label="{{ w }}"];
{% endfor %}
{% for a, b in pairs %}
  w{{ a }} -- w{{ b }};
{% endfor %}
}
"""

SUMMARY_OMEGA = "omega({g}, {h}) = {total} (vertical {vertical}, horizontal {horizontal}, vertizontal {vertizontal}) [{confidence}]"
SUMMARY_COMPONENTS = (
    "i={i} R={radius}: |C(e)|={component_e} |C(t_i)|={component_ti} disjoint={disjoint} "
    "stranded={stranded} unresolved={unresolved} certified={certified}"
)
SUMMARY_CHECK = "[{status:>8}] {name}: {details}"


def render(kind: str, template: str, variables: Dict[str, Any]) -> str:
    if kind not in Renderers:
        raise ValueError(f"Renderer type {kind} not recognized")
    return Renderers[kind].render(template, variables)
