"""
src/symmetra/operations/io.py

Operations for reading artifacts, and the helpers consumers use to unwrap them.
"""
from typing import Union

from symmetra.algebra.actions import Action, LineAction, action_from_json
from symmetra.core.errors import ParseError
from symmetra.core.io import read_document
from symmetra.core.objects import DataWrapper, JsonData, StringParam
from symmetra.core.project import Operation
from symmetra.operations.data import ActionData, LineActionData


class JsonSource(Operation):
    name = "JSON Source"
    command = "source"
    description = "Reads one JSON document from a file, or from standard input."
    category = "Input"

    def __init__(self, config=None):
        super().__init__(config)
        self.outputs = [{'name': 'document', 'type': JsonData}]
        self.parameters = [
            StringParam('path', 'File path (standard input when empty)'),
        ]
        # documents handed over in memory (the CLI pipes stdin this way)
        self.preloaded = None

    def execute(self, inputs, params):
        if self.preloaded is not None:
            return {'document': JsonData(self.preloaded)}
        return {'document': JsonData(read_document(params['path'] or None))}


def unwrap_action(wrapper: DataWrapper, field, line: bool = False) -> Union[Action, LineAction]:
    """Action held by a wrapper; JSON documents are decoded against `field`."""
    if wrapper is None:
        raise ParseError("No action was supplied")
    if isinstance(wrapper, (ActionData, LineActionData)):
        act = wrapper.data
    else:
        doc = wrapper.to_json()
        if not isinstance(doc, dict):
            raise ParseError("Expected an action JSON object")
        act = action_from_json(doc, field)
    expected = LineAction if line else Action
    if not isinstance(act, expected):
        raise ParseError(f"Expected a {'line' if line else 'plane'} action, got {type(act).__name__}")
    return act
