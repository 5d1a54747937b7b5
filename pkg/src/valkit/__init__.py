"""valkit: values of modular functions at real quadratic irrationals."""
from .certify import CertReport, SearchDomain, extremize, run_suite
from .cycle import ValResult, cycle_integral_direct, hat_S, re_val, val_complex, D, S_F, S_L, S_U, S_U_split
from .geometry import Mat2, epsilon, fixed_points, word_to_matrix
from .modfunc import ModularFunction, constant_function, evaluate, j_coefficients, j_function, load_function
from .surd import QuadSurd, cf_compare, cf_expand, compare, normalize, value_of_period
from .words import PeriodicWord, even_form, markov_tree, markov_words, opposite, rotation

__version__ = "0.1.0"

__all__ = [
    "CertReport", "SearchDomain", "extremize", "run_suite",
    "ValResult", "cycle_integral_direct", "hat_S", "re_val", "val_complex", "D", "S_F", "S_L", "S_U", "S_U_split",
    "Mat2", "epsilon", "fixed_points", "word_to_matrix",
    "ModularFunction", "constant_function", "evaluate", "j_coefficients", "j_function", "load_function",
    "QuadSurd", "cf_compare", "cf_expand", "compare", "normalize", "value_of_period",
    "PeriodicWord", "even_form", "markov_tree", "markov_words", "opposite", "rotation",
]
