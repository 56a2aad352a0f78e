"""chainforms: exact-arithmetic simplicial cohomology operations.

Chain-level cup and cup-i products, Steenrod squares, Bockstein operators,
Poincare duality pairings, Q/Z-valued torsion linking forms, Wu and
Stiefel-Whitney classes, and a quadratic-reciprocity toy model -- all over
exact integers, with no floating point anywhere.
"""

from .cochains import Cochain, coboundary, cup, cup_i, pullback
from .cohomology import CohomologyBasis, CohomologyClass, cohomology, torsion_generators
from .complexes import (
    ComplexFormatError,
    Orientation,
    SimplicialComplex,
    SizeBoundExceeded,
    TopologyError,
    closed_pseudomanifold_check,
    orient,
    parse_complex,
    product_complex,
)
from .duality import (
    FundamentalData,
    TorsionForm,
    WuReport,
    alternation_report,
    bockstein_square_identity,
    diagonal_class,
    duality_check,
    fundamental_data,
    linking_form,
    pairing_n,
    pushforward_wu_check,
    stiefel_whitney_classes,
    wu_classes,
    wu_report,
)
from .quadratic import PrimePair, epsilon, lk_mod2, reciprocity_scan
from .rings import F2, Ring, Z, Zmod
from .steenrod import (
    SecondaryClass,
    bockstein,
    cartan_check,
    integral_bockstein,
    reduction,
    secondary_bockstein,
    sq,
    total_sq,
)

__version__ = "0.1.0"
