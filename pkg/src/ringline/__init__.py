"""Projective lines over small finite rings.

Cayley-table rings, free cyclic submodules of R^2, the unimodular and
non-unimodular sectors of the generalized projective line, their
neighbour/distant structure, and the condensation of the non-unimodular
sector onto reference ring lines.
"""

from .errors import (
    AxiomViolation,
    EmptySector,
    EmptyStructure,
    FileError,
    IdentityMissing,
    MixedUnimodularity,
    NonUniquePartition,
    NotPartition,
    OrderTooLarge,
    ParseError,
    RinglineError,
    SamePoint,
    TooLarge,
    UnknownFormat,
    UnsupportedField,
)
from .rings import (
    DEFAULT_MAX_ORDER,
    ISOMORPHISM_MAX_ORDER,
    FiniteRing,
    Ideal,
    are_isomorphic,
    enumerate_ideals,
    ideal_size_census,
    soft_max_order,
    validate_tables,
)
from .constructors import (
    SUPPORTED_FIELD_ORDERS,
    bundled_ring_path,
    construct,
    dual_numbers,
    galois_field,
    integers_mod,
    load_ring_file,
    product,
    ternions,
    write_ring_file,
)
from .line import (
    CyclicSubmodule,
    ProjectiveLine,
    compute_line,
    cyclic_submodule,
    is_unimodular,
    line_to_dict,
    line_to_json,
    unimodularity_witness,
)
from .geometry import (
    SECTORS,
    RelationGraph,
    SectorPartition,
    cross_sector_check,
    export_graph,
    max_distant_cliques,
    max_neighbour_cliques,
    private_vectors,
    relation,
    sector_points,
    unimodular_partition,
)
from .condense import (
    DEFAULT_CATALOG,
    CondensateIdentification,
    IncidenceStructure,
    StructureIsomorphism,
    VectorClass,
    condensate_distant_analysis,
    condense,
    identify_condensate,
    reference_structure,
    structures_isomorphic,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomViolation",
    "CondensateIdentification",
    "CyclicSubmodule",
    "DEFAULT_CATALOG",
    "DEFAULT_MAX_ORDER",
    "EmptySector",
    "EmptyStructure",
    "FileError",
    "FiniteRing",
    "ISOMORPHISM_MAX_ORDER",
    "Ideal",
    "IdentityMissing",
    "IncidenceStructure",
    "MixedUnimodularity",
    "NonUniquePartition",
    "NotPartition",
    "OrderTooLarge",
    "ParseError",
    "ProjectiveLine",
    "RelationGraph",
    "RinglineError",
    "SECTORS",
    "SUPPORTED_FIELD_ORDERS",
    "SamePoint",
    "SectorPartition",
    "StructureIsomorphism",
    "TooLarge",
    "UnknownFormat",
    "UnsupportedField",
    "VectorClass",
    "are_isomorphic",
    "bundled_ring_path",
    "compute_line",
    "condensate_distant_analysis",
    "condense",
    "construct",
    "cross_sector_check",
    "cyclic_submodule",
    "dual_numbers",
    "enumerate_ideals",
    "export_graph",
    "galois_field",
    "ideal_size_census",
    "identify_condensate",
    "integers_mod",
    "is_unimodular",
    "line_to_dict",
    "line_to_json",
    "load_ring_file",
    "max_distant_cliques",
    "max_neighbour_cliques",
    "private_vectors",
    "product",
    "reference_structure",
    "relation",
    "sector_points",
    "soft_max_order",
    "structures_isomorphic",
    "ternions",
    "unimodular_partition",
    "unimodularity_witness",
    "validate_tables",
    "write_ring_file",
]
