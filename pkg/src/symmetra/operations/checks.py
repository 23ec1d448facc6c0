"""
src/symmetra/operations/checks.py

Verification operations. Their report exits with 1 when any check fails.
"""
import logging

from symmetra.algebra.actions import ratio_check
from symmetra.algebra.verifier import support_weight_check, verify_line_action, verify_module_algebra
from symmetra.core.objects import BoolParam, DataWrapper, IntParam
from symmetra.operations.data import FieldOperation, ReportData
from symmetra.operations.io import unwrap_action

logger = logging.getLogger(__name__)


class Verify(FieldOperation):
    name = "Verify Module Algebra"
    command = "verify"
    description = "Checks the module-algebra axioms on all monomials of a degree box."
    category = "Verification"

    def __init__(self, config=None):
        super().__init__(config)
        self.inputs = [{'name': 'action', 'type': DataWrapper}]
        self.outputs = [{'name': 'report', 'type': ReportData}]
        self.parameters = [
            IntParam('N', 'Degree bound N (0 uses the configured bound)', default=0, min_val=0, max_val=64),
            IntParam('pair_bound', 'Degree bound for Leibniz pairs', default=1, min_val=0, max_val=8),
            BoolParam('ratios', 'Add the coefficient-ratio and support-weight checks (weight actions)'),
            BoolParam('failures_only', 'List failing checks only'),
        ]

    def execute(self, inputs, params):
        act = unwrap_action(inputs.get('action'), self.field)
        N = params['N'] or self.config.degree_bound
        report = verify_module_algebra(act, N=N, pair_bound=params['pair_bound'])
        if params['ratios']:
            if act.is_weight:
                report.extend(ratio_check(act))
                report.extend(support_weight_check(act))
            else:
                logger.warning("Ratio checks skipped: k does not act by weights")
        return {'report': ReportData(report, {'failures_only': params['failures_only']})}


class LineVerify(FieldOperation):
    name = "Verify Line Action"
    command = "line-verify"
    description = "Checks the module-algebra axioms for a symmetry of the Laurent line."
    category = "Verification"

    def __init__(self, config=None):
        super().__init__(config)
        self.inputs = [{'name': 'action', 'type': DataWrapper}]
        self.outputs = [{'name': 'report', 'type': ReportData}]
        self.parameters = [
            IntParam('N', 'Degree bound N', default=6, min_val=1, max_val=64),
            IntParam('pair_bound', 'Degree bound for Leibniz pairs', default=2, min_val=0, max_val=8),
            BoolParam('failures_only', 'List failing checks only'),
        ]

    def execute(self, inputs, params):
        act = unwrap_action(inputs.get('action'), self.field, line=True)
        report = verify_line_action(act, N=params['N'], pair_bound=params['pair_bound'])
        return {'report': ReportData(report, {'failures_only': params['failures_only']})}
