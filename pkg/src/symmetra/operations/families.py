"""
src/symmetra/operations/families.py

Operations that build symmetries: the classified plane and line families,
and conjugation of an existing action by an automorphism.
"""
from symmetra.algebra import actions
from symmetra.algebra.autgroup import Auto, LineAuto, as_matrix
from symmetra.algebra.scalars import Unit
from symmetra.core.objects import ChoiceParam, DataWrapper, IntParam, StringParam
from symmetra.operations.data import ActionData, FieldOperation, LineActionData
from symmetra.operations.io import unwrap_action


class PlaneFamily(FieldOperation):
    name = "Plane Family"
    command = "family"
    description = "Builds a member of a classified family of symmetries of the quantum plane."
    category = "Families"

    def __init__(self, config=None):
        super().__init__(config)
        self.outputs = [{'name': 'action', 'type': ActionData}]
        self.parameters = [
            ChoiceParam('kind', 'Family', options=['generic', 'minus-identity'], default='generic',
                        positional=True),
            IntParam('u', 'Exponent u in alpha^u beta^v = q^2', default=1, min_val=-16, max_val=16),
            IntParam('v', 'Exponent v in alpha^u beta^v = q^2', default=0, min_val=-16, max_val=16),
            StringParam('alpha', 'Unit alpha', default='q^2'),
            StringParam('beta', 'Unit beta', default='t'),
            StringParam('a', 'Scale a of e', default='a'),
        ]

    def execute(self, inputs, params):
        field = self.field
        if params['kind'] == 'generic':
            act = actions.generic_family(field, params['u'], params['v'], params['alpha'], params['beta'],
                                         params['a'])
        else:
            act = actions.minus_identity_family(field, params['alpha'], params['beta'])
        return {'action': ActionData(act)}


class LineFamily(FieldOperation):
    name = "Line Family"
    command = "line-family"
    description = "Builds a symmetry of the Laurent polynomials in one variable."
    category = "Families"

    def __init__(self, config=None):
        super().__init__(config)
        self.outputs = [{'name': 'action', 'type': LineActionData}]
        self.parameters = [
            ChoiceParam('kind', 'Family', options=list(actions.LINE_KINDS), default='weight', positional=True),
            StringParam('gamma', 'Unit gamma in k(z) = gamma z^(+-1)', default='q^2'),
            StringParam('a', 'Scale a of e', default='a'),
            IntParam('r', 'Degree r of e(z)', default=2, min_val=-16, max_val=16),
        ]

    def execute(self, inputs, params):
        act = actions.line_family(self.field, params['kind'], params['gamma'], params['a'], params['r'])
        return {'action': LineActionData(act)}


class Conjugate(FieldOperation):
    name = "Conjugate"
    command = "conjugate"
    description = "Conjugates an action by the automorphism (sigma, alpha, beta)."
    category = "Families"

    def __init__(self, config=None):
        super().__init__(config)
        self.inputs = [{'name': 'action', 'type': DataWrapper}]
        self.outputs = [{'name': 'action', 'type': ActionData}]
        self.parameters = [
            StringParam('sigma', 'Matrix k,l,m,n', default='1,0,0,1'),
            StringParam('alpha', 'Unit alpha', default='1'),
            StringParam('beta', 'Unit beta', default='1'),
        ]

    def execute(self, inputs, params):
        act = unwrap_action(inputs.get('action'), self.field)
        phi = Auto(as_matrix(params['sigma']), Unit.parse(params['alpha']), Unit.parse(params['beta']))
        return {'action': ActionData(actions.conjugate(act, phi))}


class ConjugateLine(FieldOperation):
    name = "Conjugate Line Action"
    command = "line-conjugate"
    description = "Conjugates a line action by z -> gamma z^sign."
    category = "Families"

    def __init__(self, config=None):
        super().__init__(config)
        self.inputs = [{'name': 'action', 'type': DataWrapper}]
        self.outputs = [{'name': 'action', 'type': LineActionData}]
        self.parameters = [
            ChoiceParam('sign', 'Exponent sign of z', options=['1', '-1'], default='-1'),
            StringParam('gamma', 'Unit gamma', default='1'),
        ]

    def execute(self, inputs, params):
        act = unwrap_action(inputs.get('action'), self.field, line=True)
        psi = LineAuto(int(params['sign']), Unit.parse(params['gamma']))
        return {'action': LineActionData(actions.conjugate_line(act, psi))}
