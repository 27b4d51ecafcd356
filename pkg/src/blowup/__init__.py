"""Adjacency spectra, closed blowups, and kth-eigenvalue ratio bounds."""

from .bounds import (
    BlowupSpectrum,
    BoundCertificate,
    LimitRatio,
    TableRow,
    asymptotic_lower,
    best_known_ratio,
    blowup_spectrum,
    certify,
    finite_ratio,
    kth_largest_of_blowup,
    limit_ratio,
    nikiforov_upper,
    reference_lower,
    reproduce_table,
)
from .errors import (
    GraphParseError,
    InfeasibleIntersectionArray,
    InfeasibleSrgParameters,
    InternalConsistencyError,
    NumericError,
    TableMismatchError,
)
from .exact import Quadratic
from .families import (
    IntersectionArray,
    SpectralDescriptor,
    SrgParams,
    asserted_descriptor,
    blowup_descriptor,
    complement_descriptor,
    complete_descriptor,
    cycle_descriptor,
    drg_spectrum,
    explicit_descriptor,
    gosset_descriptor,
    icosahedron,
    icosahedron_descriptor,
    johnson,
    johnson_descriptor,
    paley,
    paley_descriptor,
    parse_expression,
    petersen,
    petersen_descriptor,
    srg_spectrum,
    taylor_co3_descriptor,
    union_descriptor,
)
from .graphs import (
    Graph,
    cartesian_product,
    closed_blowup_graph,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    g6_decode,
    g6_encode,
)
from .search import (
    SearchConfig,
    SearchResult,
    c3_campaign,
    exhaustive_max,
    local_search,
    stream_max,
)
from .spectra import (
    Spectrum,
    blowup_transform,
    eigen_spectrum,
    kth_largest,
    spectrum_invariant_checks,
)

__version__ = "0.1.0"

__all__ = [
    "BlowupSpectrum",
    "BoundCertificate",
    "Graph",
    "GraphParseError",
    "InfeasibleIntersectionArray",
    "InfeasibleSrgParameters",
    "InternalConsistencyError",
    "IntersectionArray",
    "LimitRatio",
    "NumericError",
    "Quadratic",
    "SearchConfig",
    "SearchResult",
    "SpectralDescriptor",
    "Spectrum",
    "SrgParams",
    "TableMismatchError",
    "TableRow",
    "asserted_descriptor",
    "asymptotic_lower",
    "best_known_ratio",
    "blowup_descriptor",
    "blowup_spectrum",
    "blowup_transform",
    "c3_campaign",
    "cartesian_product",
    "certify",
    "closed_blowup_graph",
    "complement",
    "complement_descriptor",
    "complete",
    "complete_descriptor",
    "cycle",
    "cycle_descriptor",
    "disjoint_union",
    "drg_spectrum",
    "eigen_spectrum",
    "empty",
    "exhaustive_max",
    "explicit_descriptor",
    "finite_ratio",
    "g6_decode",
    "g6_encode",
    "gosset_descriptor",
    "icosahedron",
    "icosahedron_descriptor",
    "johnson",
    "johnson_descriptor",
    "kth_largest",
    "kth_largest_of_blowup",
    "limit_ratio",
    "local_search",
    "nikiforov_upper",
    "paley",
    "paley_descriptor",
    "parse_expression",
    "petersen",
    "petersen_descriptor",
    "reference_lower",
    "reproduce_table",
    "spectrum_invariant_checks",
    "srg_spectrum",
    "stream_max",
    "taylor_co3_descriptor",
    "union_descriptor",
]
