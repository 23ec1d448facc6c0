"""
src/symmetra/core/io.py

JSON persistence: single artifacts (read_document/write_document) and whole
Project graphs as job files (save_project/load_project).

Job file layout:
    {"config": {...JobConfig...},
     "nodes": [{"id", "command", "params": {...}}],
     "connections": [{"from": id, "output": name, "to": id, "input": name}]}
"""
import json
import logging
import sys
from typing import Any, Callable, Dict, Optional, TextIO, Type

from symmetra.core.config import JobConfig
from symmetra.core.errors import ConfigError, ParseError
from symmetra.core.project import Operation, Project

Resolver = Callable[[str], Type[Operation]]

logger = logging.getLogger(__name__)


def dumps(doc: Any) -> str:
    """Canonical JSON text: sorted keys, fixed separators."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def write_document(doc: Any, stream: Optional[TextIO] = None):
    stream = stream or sys.stdout
    stream.write(dumps(doc))
    stream.write("\n")


def read_document(source: Optional[str] = None, stream: Optional[TextIO] = None) -> Any:
    """Reads one JSON document from a file path, or from stream (stdin by default)."""
    try:
        if source is not None:
            with open(source, "r", encoding="utf-8") as f:
                return json.load(f)
        return json.load(stream or sys.stdin)
    except json.JSONDecodeError as exc:
        raise ParseError(f"Input is not a JSON document: {exc}") from exc
    except OSError as exc:
        raise ParseError(f"Cannot read {source}: {exc}") from exc


def project_to_json(project: Project) -> Dict[str, Any]:
    nodes = [{"id": n.id, "command": n.operation.command,
              "params": {p.name: p.value for p in n.parameters}} for n in project.nodes]
    connections = []
    for n in project.nodes:
        for sock in n.input_sockets:
            for src in sock.connections:
                connections.append({"from": src.node.id, "output": src.name, "to": n.id, "input": sock.name})
    return {"config": project.config.to_json(), "nodes": nodes, "connections": connections}


def project_from_json(doc: Dict[str, Any], resolve: Resolver, config: Optional[JobConfig] = None) -> Project:
    """
    Rebuilds a Project. `resolve` maps a node's command to its Operation class.
    The job's own config block is layered over `config`.
    """
    try:
        config = JobConfig.from_json(doc.get("config", {}), config)
        project = Project(config)
        for entry in doc["nodes"]:
            node = project.add_node(resolve(entry["command"]), node_id=entry.get("id"))
            for name, value in entry.get("params", {}).items():
                node.set_parameter(name, value)
        for link in doc.get("connections", []):
            project.connect(project.get_node(link["from"]), link["output"],
                            project.get_node(link["to"]), link["input"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ParseError(f"Malformed job file: {exc}") from exc
    return project


def save_project(project: Project, filepath: str):
    """
    Saves the graph (operations, parameter values, connections) as a JSON job file.
    """
    with open(filepath, "w", encoding="utf-8") as f:
        write_document(project_to_json(project), f)
    logger.info("Project saved to %s", filepath)


def load_project(filepath: str, resolve: Resolver, config: Optional[JobConfig] = None) -> Project:
    project = project_from_json(read_document(filepath), resolve, config)
    logger.info("Project loaded from %s", filepath)
    return project
