"""Exact Hodge-number data of weighted projective spaces.

Age spectra over the weight lattice, hypergeometric operator reduction and
parameter profiles, Ehrhart lattice-point cross-checks, classification of
canonical weighted 3-spaces, and quotient presentations of the pencil
compactification.  All arithmetic is exact (integers and fractions).
"""

from .ages import (
    AgeSpectrum,
    BoxElement,
    SpectralValue,
    WeightTuple,
    age_spectrum,
    box_element,
    is_canonical,
    lambda_value,
    make_weights,
)
from .classify import (
    ClassificationRecord,
    HypersurfaceSpec,
    classify_weights,
    enumerate_canonical,
    general_hypersurface_quasismooth,
    general_hypersurface_well_formed,
    monomials_of_degree,
)
from .ehrhart import (
    EhrhartPolynomialData,
    LatticeContext,
    SimplexFace,
    ehrhart_data,
    hodge_via_inclusion_exclusion,
    interior_points,
    strict_count,
)
from .hypergeom import (
    HodgeProfile,
    OperatorForm,
    ParamMultiset,
    build_parameter_sets,
    cancel,
    conjecture_hodge,
    operator_forms,
    verify_proposition,
)
from .toric import (
    QuotientPresentation,
    TableRow,
    facet_curve_genus,
    monomial_in_N,
    quotient_presentation,
    table_row,
    validate_table2,
)

__version__ = "0.1.0"

__all__ = [
    "AgeSpectrum",
    "BoxElement",
    "ClassificationRecord",
    "EhrhartPolynomialData",
    "HodgeProfile",
    "HypersurfaceSpec",
    "LatticeContext",
    "OperatorForm",
    "ParamMultiset",
    "QuotientPresentation",
    "SimplexFace",
    "SpectralValue",
    "TableRow",
    "WeightTuple",
    "age_spectrum",
    "box_element",
    "build_parameter_sets",
    "cancel",
    "classify_weights",
    "conjecture_hodge",
    "ehrhart_data",
    "enumerate_canonical",
    "facet_curve_genus",
    "general_hypersurface_quasismooth",
    "general_hypersurface_well_formed",
    "hodge_via_inclusion_exclusion",
    "interior_points",
    "is_canonical",
    "lambda_value",
    "make_weights",
    "monomial_in_N",
    "monomials_of_degree",
    "operator_forms",
    "quotient_presentation",
    "strict_count",
    "table_row",
    "validate_table2",
    "verify_proposition",
]
