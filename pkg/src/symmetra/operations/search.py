"""
src/symmetra/operations/search.py

The bounded-support solver as an operation.
"""
import logging

from symmetra.algebra.search import run_job
from symmetra.core.objects import BoolParam, ChoiceParam, IntParam, JsonData, StringParam
from symmetra.core.project import Operation

logger = logging.getLogger(__name__)


class Search(Operation):
    name = "Symmetry Search"
    command = "search"
    description = "Finds all symmetries with a given k whose images are supported in a box."
    category = "Search"

    def __init__(self, config=None):
        super().__init__(config)
        self.outputs = [{'name': 'result', 'type': JsonData}]
        self.parameters = [
            StringParam('sigma', 'Matrix k,l,m,n', default='1,0,0,1'),
            StringParam('alpha', 'Unit alpha (numeric mode draws it when empty)'),
            StringParam('beta', 'Unit beta (numeric mode draws it when empty)'),
            IntParam('B', 'Box bound B (0 uses the configured bound)', default=0, min_val=0, max_val=16),
            BoolParam('exhaustive', 'Disable support pruning'),
            ChoiceParam('expect', 'Expected outcome', options=['any', 'empty', 'nonempty'], default='any'),
        ]

    def execute(self, inputs, params):
        job = {"sigma": params['sigma'], "prune": not params['exhaustive']}
        if params['B']:
            job["B"] = params['B']
        if params['alpha'] is not None:
            job["alpha"] = params['alpha']
        if params['beta'] is not None:
            job["beta"] = params['beta']
        result = run_job(job, self.config)

        expect = params['expect']
        found = bool(result["solutions"])
        failed = (expect == 'empty' and found) or (expect == 'nonempty' and not found)
        if failed:
            logger.warning("search expected %s, found %d solutions", expect, len(result["solutions"]))
        return {'result': JsonData(result, {'failed': failed})}
