"""Decision-theoretic agents as quantifiers and selection functions over finite domains."""

from .agents import (
    AgentSpec,
    averaging_quantifier,
    dishonest_quantifier,
    honest_quantifier,
    ideal_move_quantifier,
    ideal_move_selection,
    safe_quantifier,
    second_best_quantifier,
    weighted_averaging_quantifier,
)
from .core import (
    Context,
    FiniteDomain,
    Quantifier,
    SelectionFunction,
    Subset,
    eval_quantifier,
    eval_selection,
    image,
    make_context,
    preimage_count,
    table_quantifier,
    table_selection,
)
from .orders import (
    ChoiceFunction,
    PartialOrder,
    argmax_selection_numeric,
    choice_quantifier,
    make_partial_order,
    max_quantifier_numeric,
    maximal_elements,
    order_max_quantifier,
    order_selection,
    sub_maximal_elements,
)
from .properties import (
    EnumerationBudget,
    PropertyReport,
    Witness,
    attainment_witness,
    attains,
    enumerate_contexts,
    is_attainable,
    is_context_independent,
    is_strongly_attainable,
    is_total,
    reconstruct_choice_function,
)
from .reflexive import (
    ProfileRule,
    coordinating_selection,
    coordination_rule,
    fix_quantifier,
    fix_selection,
    fixpoints,
    induce_context,
    keynesian_quantifier,
    keynesian_selection,
    majority,
    majority_rule,
    voting_judge_quantifier,
)

__version__ = "0.1.0"
