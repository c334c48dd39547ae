"""Rigidity of Schubert classes in cominuscule spaces."""

from .cominuscule import CominusculeSpace, HassePoset, SchubertClass, build_space, degree, enumerate_classes
from .errors import ConsistencyError, ExtremalClassError, InvalidInput, SchurFlexError
from .invariants import AJInvariant, compute_aJ, ideal_from_aj
from .rigidity import ObstructionReport, FlexCertificate, classify, flex_certificate, is_rigid, obstruction_report
from .rootsys import RootSystem, build_root_system
from .translation import (
    PartitionIndex,
    aj_to_partition,
    class_to_partition,
    incidence_description,
    partition_to_aj,
    partition_to_class,
    rigid_by_partition,
)
from .weyl import poincare_dual

__all__ = [
    "AJInvariant",
    "CominusculeSpace",
    "ConsistencyError",
    "ExtremalClassError",
    "FlexCertificate",
    "HassePoset",
    "InvalidInput",
    "ObstructionReport",
    "PartitionIndex",
    "RootSystem",
    "SchubertClass",
    "SchurFlexError",
    "aj_to_partition",
    "build_root_system",
    "build_space",
    "class_to_partition",
    "classify",
    "compute_aJ",
    "degree",
    "enumerate_classes",
    "flex_certificate",
    "ideal_from_aj",
    "incidence_description",
    "is_rigid",
    "obstruction_report",
    "partition_to_aj",
    "partition_to_class",
    "poincare_dual",
    "rigid_by_partition",
]
