"""
Exact algebra for symmetries of the quantum plane: scalars, Laurent
elements, U_q(sl2), automorphisms, actions, verification and search.
"""
