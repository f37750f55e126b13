from .core import (
    empty_cobuchi, ensure_valid, is_deterministic, reachable_restrict, reachable_states,
    rename_letters, scc_decompose, terminal_sccs, universal_cobuchi, validate_automaton
)
from .lasso import (
    cocoa_accepts, cocoa_color, default_bounds, dpw_accepts, dpw_color, enumerate_lassos,
    ncw_accepts, random_lassos, sample_lassos
)
from .constructions import (
    cocoa_to_dpw, dcw_conjunction, dcw_disjunction, dpw_complement, mh_determinize
)
from .decision import (
    dpw_contains, dpw_equivalent, dpw_is_empty, is_empty, is_universal, multi_parity_witness,
    residual_partition
)
from .chain import chain_validate, cocoa_complement, cocoa_size
from .lowerbound import certify_lower_bound, closed_under, lemma1_split, verify_certificate
