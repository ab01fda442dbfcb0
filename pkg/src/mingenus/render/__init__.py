from .report import ReportSchemaError, deserialize_report, serialize_construction, serialize_report
from .svg import layout_scene, render_graph_stage, render_kirby, render_link_stage

__all__ = [
    "ReportSchemaError",
    "deserialize_report",
    "layout_scene",
    "render_graph_stage",
    "render_kirby",
    "render_link_stage",
    "serialize_construction",
    "serialize_report",
]
