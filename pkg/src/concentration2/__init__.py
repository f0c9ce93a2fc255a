"""Numerical semigroups with concentration two.

Invariants, the enumeration trees by multiplicity and by elementary
multiplicity, the Frobenius-number classes, and Wilf's inequality checks.
"""

from .classes import (
    FrobeniusClass,
    alpha,
    ascend,
    class_children,
    class_members,
    enumerate_c2_frobenius,
    irreducible_c2,
    irreducibles_with_frobenius,
    is_irreducible,
)
from .errors import *  # noqa: F401,F403
from .semigroup import (
    NumericalSemigroup,
    add_frobenius,
    concentration_of,
    contains,
    elementary_from_upper_set,
    from_gaps,
    from_generators,
    is_concentration_two,
    is_elementary,
    next_element,
    ordinary,
    remove_element,
)
from .trees import (
    EnumerationRequest,
    Mode,
    TreeNode,
    children_elementary_tree,
    children_multiplicity_tree,
    count_c2,
    enumerate_by_genus,
    level_sizes,
    tree_height,
    walk_tree,
)
from .wilf import WilfRecord, WilfReport, verify_family, wilf_check

__version__ = "0.1.0"
