"""Conversions between rational expressions and weighted automata."""

from .automaton import (
    Automaton,
    accessible,
    backward_closure,
    check_morphism,
    eval_word,
    isomorphic,
    loop_complexity,
    loop_index,
    minimal_quotient,
    trim,
    truncated_behaviour,
)
from .delta import (
    continuation_map,
    derive,
    derive_word,
    derived_term_automaton,
    derived_terms,
    eggan_automaton,
    is_star_normal,
    standard_automaton,
    star_normal_form,
    thompson,
)
from .equiv import Verdict, equivalent_automata, equivalent_exprs
from .expr import constant_term, metrics, reduce_trivial, star_height
from .gamma import (
    mcnaughton_yamada,
    recursive_behaviour,
    recursive_method,
    state_elimination,
    system_solution,
)
from .lincomb import LinComb
from .natural import simplify_natural
from .semiring import SemiringTag, Weight
from .series import TruncatedSeries, truncated_series
from .syntax import parse, to_string
from .textformat import automaton_from_text, automaton_to_dot, automaton_to_text

__version__ = "0.1.0"
