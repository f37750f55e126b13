from .base import FAMILIES, FamilyBase, family_names, get_family, register_family
from .prop1 import gen_prop1_cocoa, gen_prop1_dpw, prop1_alphabet
from .cocoa_c import c_alphabet, gen_c_member, gen_cocoa_C, gen_dpw_C, lasso_in_C_member
from .windows import (
    gen_cocoa_L, gen_cocoa_Lhat, gen_dcw_L, gen_dcw_Lhat, gen_dpw_P, gen_dpw_Phat,
    greatest_pair, hat_mapping, lasso_in_L, lasso_in_Lhat, window_alphabet
)
from .theorem2 import downward_closure, gamma, gen_cocoa_theorem2, nondominated, theorem2_color
from .example31 import gen_example31_cocoa, gen_example31_dpw, lasso_in_example31
from .random_automata import random_chain, random_chains, random_cobuchi
