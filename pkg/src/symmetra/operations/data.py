"""
src/symmetra/operations/data.py

Wrappers for the algebra objects that flow between nodes, and the base
class of operations that need the job's scalar field.
"""
from symmetra.algebra.actions import Action, LineAction, action_to_json
from symmetra.algebra.autgroup import Auto
from symmetra.algebra.report import Report
from symmetra.algebra.scalars import ScalarField
from symmetra.algebra.uqsl2 import PBWElement
from symmetra.core.objects import EXIT_FAILED, EXIT_OK, DataWrapper
from symmetra.core.project import Operation


class ActionData(DataWrapper):
    """Wraps a candidate symmetry of the quantum plane."""
    def __init__(self, data: Action, metadata: dict = None):
        super().__init__(data, metadata)
        if not isinstance(data, Action):
            raise TypeError("ActionData must wrap an Action")

    def to_json(self):
        return action_to_json(self.data)


class LineActionData(DataWrapper):
    def __init__(self, data: LineAction, metadata: dict = None):
        super().__init__(data, metadata)
        if not isinstance(data, LineAction):
            raise TypeError("LineActionData must wrap a LineAction")

    def to_json(self):
        return action_to_json(self.data)


class AutoData(DataWrapper):
    """Wraps an automorphism, optionally with extra result fields (order, verdict)."""
    def __init__(self, data: Auto, metadata: dict = None):
        super().__init__(data, metadata)
        if not isinstance(data, Auto):
            raise TypeError("AutoData must wrap an Auto")

    def to_json(self):
        return {**self.data.to_json(), **self.metadata}


class ReportData(DataWrapper):
    """A verification report; a failing report exits with code 1."""
    def __init__(self, data: Report, metadata: dict = None):
        super().__init__(data, metadata)
        if not isinstance(data, Report):
            raise TypeError("ReportData must wrap a Report")

    def to_json(self):
        return self.data.to_json(failures_only=self.metadata.get("failures_only", False))

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.data.passed else EXIT_FAILED


class PBWData(DataWrapper):
    def __init__(self, data: PBWElement, metadata: dict = None):
        super().__init__(data, metadata)
        if not isinstance(data, PBWElement):
            raise TypeError("PBWData must wrap a PBWElement")

    def to_json(self):
        return {"terms": self.data.to_json(), "text": str(self.data), **self.metadata}


class FieldOperation(Operation):
    """An operation whose scalars live in the field its JobConfig describes."""

    @property
    def field(self) -> ScalarField:
        return ScalarField.from_config(self.config)
