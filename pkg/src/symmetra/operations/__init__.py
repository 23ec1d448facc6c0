"""
src/symmetra/operations/__init__.py

Registry of all available operations.
The CLI builds one subcommand per operation with a command name.
"""
from typing import Type

from symmetra.core.errors import ParseError
from symmetra.core.project import Operation

from .checks import LineVerify, Verify
from .families import Conjugate, ConjugateLine, LineFamily, PlaneFamily
from .group import Order, PBWNormalize, SigmaPower
from .io import JsonSource
from .search import Search

# Structure: { "Category Name": [Class1, Class2] }

OPERATIONS_REGISTRY = {
    "Input": [
        JsonSource,
    ],
    "Families": [
        PlaneFamily,
        LineFamily,
        Conjugate,
        ConjugateLine,
    ],
    "Verification": [
        Verify,
        LineVerify,
    ],
    "Automorphisms": [
        Order,
        SigmaPower,
    ],
    "Quantum Group": [
        PBWNormalize,
    ],
    "Search": [
        Search,
    ],
}

ALL_OPERATIONS = [op for cat in OPERATIONS_REGISTRY.values() for op in cat]


def operation_by_command(command: str) -> Type[Operation]:
    for op in ALL_OPERATIONS:
        if op.command == command:
            return op
    raise ParseError(f"Unknown operation {command!r}")
