"""
src/symmetra/cli.py

Command-line surface. Every registered operation with a command name is a
subcommand; its Parameters become flags. One JSON document goes to standard
output, diagnostics go to standard error.

Exit codes: 0 success, 1 failing report or unmet --expect, 2 usage or
configuration error.
"""
import argparse
import logging
import sys
from typing import Dict, List, Optional

from symmetra.core.config import load_config
from symmetra.core.errors import ConfigError, SymmetraError
from symmetra.core.io import load_project, read_document, write_document
from symmetra.core.objects import (
    EXIT_USAGE,
    BoolParam,
    ChoiceParam,
    IntParam,
    Parameter,
)
from symmetra.core.project import Project
from symmetra.operations import ALL_OPERATIONS, JsonSource, operation_by_command

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _global_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    g = p.add_argument_group("global options")
    g.add_argument("--config", help="JSON configuration file (default: $SYMMETRA_CONFIG).")
    g.add_argument("--numeric", action="store_true", help="Specialise indeterminates to rationals.")
    g.add_argument("--q", help="Numeric value of q as p/q text (default: 7/5).")
    g.add_argument("--tolerance", type=float, help="Tolerance for complex evaluation.")
    g.add_argument("--indeterminates", help="Comma separated indeterminate names, q first.")
    g.add_argument("--value", action="append", default=[], metavar="NAME=P/Q",
                   help="Numeric value of an indeterminate other than q (repeatable).")
    g.add_argument("--seed", type=int, help="Seed for numeric draws.")
    g.add_argument("--log-level", choices=LOG_LEVELS, default="WARNING", dest="log_level")
    g.add_argument("--input", help="Read the consumed artifact from this file instead of standard input.")
    return p


def _add_parameter(sub: argparse.ArgumentParser, param: Parameter):
    positional = getattr(param, "positional", False)
    if positional:
        kwargs = {"nargs": "?", "default": param.default, "help": param.label}
        if isinstance(param, ChoiceParam):
            kwargs["choices"] = param.options
        sub.add_argument(param.name, **kwargs)
        return
    flag = "--" + param.name.replace("_", "-")
    if isinstance(param, BoolParam):
        sub.add_argument(flag, action="store_true", dest=param.name, help=param.label)
    elif isinstance(param, IntParam):
        sub.add_argument(flag, type=int, dest=param.name, help=f"{param.label} (default: {param.default})")
    elif isinstance(param, ChoiceParam):
        sub.add_argument(flag, choices=param.options, dest=param.name, help=f"{param.label} (default: {param.default})")
    else:
        sub.add_argument(flag, dest=param.name, help=param.label)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symmetra",
        description="Symmetries of the quantum plane: families, verification and bounded search.",
        allow_abbrev=False,
    )
    parents = [_global_flags()]
    subparsers = parser.add_subparsers(dest="command", required=True)
    for op_cls in ALL_OPERATIONS:
        if not op_cls.command or op_cls.command == JsonSource.command:
            continue
        sub = subparsers.add_parser(op_cls.command, parents=parents, help=op_cls.description,
                                    description=op_cls.description, allow_abbrev=False)
        for param in op_cls().parameters:
            _add_parameter(sub, param)
    batch = subparsers.add_parser("batch", parents=parents, help="Run a saved job file.", allow_abbrev=False)
    batch.add_argument("jobfile", help="JSON job file written by save_project.")
    return parser


def _parse_values(items: List[str]) -> Dict[str, str]:
    values = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise ConfigError(f"--value expects NAME=P/Q, got {item!r}")
        values[name.strip()] = value.strip()
    return values


def _config_from_args(args: argparse.Namespace):
    overrides = {
        "mode": "numeric" if args.numeric else None,
        "q": args.q,
        "tolerance": args.tolerance,
        "seed": args.seed,
    }
    if args.indeterminates:
        overrides["indeterminates"] = tuple(n.strip() for n in args.indeterminates.split(",") if n.strip())
    if args.value:
        overrides["values"] = _parse_values(args.value)
    return load_config(args.config, overrides)


def _run_batch(args, config) -> int:
    project = load_project(args.jobfile, operation_by_command, config)
    results, code = {}, 0
    for node in project.sinks():
        outputs = node.compute()
        results[node.id] = {name: wrapper.to_json() for name, wrapper in outputs.items()}
        code = max([code] + [w.exit_code for w in outputs.values()])
    write_document(results)
    return code


def _run_operation(args, config) -> int:
    project = Project(config)
    node = project.add_node(operation_by_command(args.command))
    for param in node.parameters:
        value = getattr(args, param.name, None)
        if value is not None:
            node.set_parameter(param.name, value)
    if node.input_sockets:
        source = project.add_node(JsonSource)
        source.operation.preloaded = read_document(args.input)
        project.connect(source, "document", node, node.input_sockets[0].name)
    outputs = node.compute()
    (wrapper,) = outputs.values()
    write_document(wrapper.to_json())
    return wrapper.exit_code


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = _config_from_args(args)
        logger.debug("Configuration: %s", config.to_json())
        if args.command == "batch":
            return _run_batch(args, config)
        return _run_operation(args, config)
    except (SymmetraError, ValueError) as exc:
        print(f"symmetra {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> int:
    return run(argv)
