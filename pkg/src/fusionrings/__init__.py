"""Exact workbench for fusion rings and modular data built from finite groups."""

__version__ = "0.1.0"

from .cyclo import Cyclotomic, root_of_unity
from .perms import (
    GroupAction,
    PermGroup,
    Permutation,
    alternating_group,
    cyclic_group,
    dihedral_group,
    symmetric_group,
)
from .rings import FusionRing

__all__ = [
    "Cyclotomic",
    "FusionRing",
    "GroupAction",
    "PermGroup",
    "Permutation",
    "alternating_group",
    "cyclic_group",
    "dihedral_group",
    "root_of_unity",
    "symmetric_group",
]
