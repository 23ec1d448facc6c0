"""
src/symmetra/operations/group.py

Operations on the automorphism group of the plane and on U_q(sl2) words.
"""
from symmetra.algebra import autgroup
from symmetra.algebra.autgroup import Auto, SigmaPowerForm, as_matrix
from symmetra.algebra.scalars import Unit
from symmetra.algebra.search import finite_order_obstruction
from symmetra.algebra.uqsl2 import (
    antipode,
    coproduct,
    counit,
    parse_word,
    pbw_normalize,
)
from symmetra.core.objects import ChoiceParam, DataWrapper, IntParam, JsonData, StringParam
from symmetra.core.project import Operation
from symmetra.operations.data import AutoData, FieldOperation, PBWData


class Order(Operation):
    name = "Automorphism Order"
    command = "order"
    description = "Order of (sigma, alpha, beta) up to a bound, with the finite-order obstruction verdict."
    category = "Automorphisms"

    def __init__(self, config=None):
        super().__init__(config)
        self.outputs = [{'name': 'auto', 'type': AutoData}]
        self.parameters = [
            StringParam('sigma', 'Matrix k,l,m,n', default='1,0,0,1'),
            StringParam('alpha', 'Unit alpha', default='1'),
            StringParam('beta', 'Unit beta', default='1'),
            IntParam('max_order', 'Search bound (0 uses the configured bound)', default=0, min_val=0, max_val=1000),
        ]

    def execute(self, inputs, params):
        phi = Auto(as_matrix(params['sigma']), Unit.parse(params['alpha']), Unit.parse(params['beta']))
        verdict = finite_order_obstruction(phi, params['max_order'] or self.config.max_order)
        return {'auto': AutoData(phi, verdict.to_json())}


class SigmaPower(Operation):
    name = "Sigma Power"
    command = "sigma-power"
    description = "sigma^N for hyperbolic sigma, exactly, from the eigenvalue closed form."
    category = "Automorphisms"

    def __init__(self, config=None):
        super().__init__(config)
        self.outputs = [{'name': 'power', 'type': JsonData}]
        self.parameters = [
            StringParam('sigma', 'Matrix k,l,m,n', default='2,1,1,1'),
            IntParam('N', 'Exponent N', default=1, min_val=-1000, max_val=1000),
        ]

    def execute(self, inputs, params):
        form = SigmaPowerForm.of(params['sigma'])
        power = form.entries(params['N'])
        doc = {
            "sigma": [list(r) for r in form.sigma],
            "N": params['N'],
            "power": [list(r) for r in power],
            "closed_form": {"lambda": str(form.lam), "a": str(form.a), "b": str(form.b),
                            "c": str(form.c), "d": str(form.d)},
            "identities_hold": form.check_identities(),
            "iterated_agrees": power == autgroup.mat_power_iterated(form.sigma, params['N']),
        }
        return {'power': JsonData(doc)}


class PBWNormalize(FieldOperation):
    name = "PBW Normalize"
    command = "pbw-normalize"
    description = "Normal form f^i k^j e^l of a word, or its coproduct, counit or antipode."
    category = "Quantum Group"

    def __init__(self, config=None):
        super().__init__(config)
        self.outputs = [{'name': 'element', 'type': DataWrapper}]
        self.parameters = [
            StringParam('word', "Word such as 'e f k'", default='1', positional=True),
            ChoiceParam('show', 'Result', options=['normal', 'coproduct', 'counit', 'antipode'], default='normal'),
            ChoiceParam('strategy', 'Rewrite order', options=['leftmost', 'rightmost'], default='leftmost'),
        ]

    def execute(self, inputs, params):
        field = self.field
        word = parse_word(params['word'])
        show = params['show']
        if show == 'coproduct':
            t = coproduct(field, word)
            return {'element': JsonData({"word": params['word'], "coproduct": t.to_json(), "text": str(t)})}
        if show == 'counit':
            return {'element': JsonData({"word": params['word'], "counit": field.format(counit(field, word))})}
        if show == 'antipode':
            return {'element': PBWData(antipode(field, word), {"word": params['word'], "show": show})}
        return {'element': PBWData(pbw_normalize(field, word, params['strategy']),
                                   {"word": params['word'], "show": show})}
