"""Class groups of definite binary quadratic forms and completely
p-primitive classes, decided constructively and verified by brute force."""

from .classgroup import (
    ClassGroup,
    ProperClass,
    ambiguous_classes,
    compose,
    compose_forms,
    element_order,
    enumerate_classes,
    identity_form,
    inverse_class,
)
from .intarith import Valuation, divisors, kronecker, valuation
from .pprim import (
    TwoSquareSolution,
    Verdict,
    build_isometry,
    classify,
    classify_all,
    p_square_in_class,
    solve_two_square,
)
from .qform import (
    BinaryForm,
    IntMap2,
    Reduction,
    apply_map,
    discriminant,
    improper_automorph,
    inverse_rep,
    is_ambiguous,
    is_reduced,
    omega,
    reduce,
)
from .repcount import (
    RepRecord,
    Spectrum,
    enumerate_solutions,
    mass,
    rep_counts,
    rep_profile,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryForm",
    "ClassGroup",
    "IntMap2",
    "ProperClass",
    "RepRecord",
    "Reduction",
    "Spectrum",
    "TwoSquareSolution",
    "Valuation",
    "Verdict",
    "__version__",
    "ambiguous_classes",
    "apply_map",
    "build_isometry",
    "classify",
    "classify_all",
    "compose",
    "compose_forms",
    "discriminant",
    "divisors",
    "element_order",
    "enumerate_classes",
    "enumerate_solutions",
    "identity_form",
    "improper_automorph",
    "inverse_class",
    "inverse_rep",
    "is_ambiguous",
    "is_reduced",
    "kronecker",
    "mass",
    "omega",
    "p_square_in_class",
    "rep_counts",
    "rep_profile",
    "reduce",
    "solve_two_square",
    "spectrum",
    "valuation",
]
