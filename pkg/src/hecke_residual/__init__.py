"""Exact classification of generic residual points for affine Hecke algebras."""

from .errors import (
    ConfigurationError,
    DomainError,
    HeckeResidualError,
    InvalidJumpsError,
    InvariantViolation,
    NotResidualError,
    UnsupportedError,
)
from .linform import LinForm, Q
from .partitions import Bipartition, Partition
from .roots import RootSystem, build_root_system, dominant_representative, elliptic_class_count
from .residual import (
    ConfluenceRow,
    GenericFamily,
    Hyperplane,
    confluence_table,
    enumerate_generic_orbits,
    evaluate_orbit,
    is_generic_residual,
    is_linear_residual,
    regularity_hyperplanes,
)

__version__ = "0.1.0"
