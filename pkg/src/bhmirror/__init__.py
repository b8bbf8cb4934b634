"""Exact verification of mirror duality of bigraded chiral ring
dimensions for invertible potentials with diagonal symmetry groups.

All arithmetic is exact (integers and `fractions.Fraction`); there is no
floating point anywhere in the package.
"""

from .potentials import (LatticeData, ModelError, Potential, SymmetryGroup,
                         aut_group, cy_check, dual_group,
                         exponential_grading_element, lattice_data,
                         make_potential, sl_subgroup, subgroup_closure,
                         transpose_potential)
from .milnor import (MilnorError, is_nondegenerate, milnor_dims,
                     orbifold_a_table, orbifold_b_table, reflect_table)
from .complexes import ComplexError, RingComplex, bigraded_table
from .unified import (MembershipWitness, ToricMirrorData, UnifiedError,
                      bh_toric_data, key_lemma_witness, make_toric_data,
                      unified_condition)

__version__ = "0.1.0"

__all__ = [
    "LatticeData", "ModelError", "Potential", "SymmetryGroup",
    "aut_group", "cy_check", "dual_group", "exponential_grading_element",
    "lattice_data", "make_potential", "sl_subgroup", "subgroup_closure",
    "transpose_potential",
    "MilnorError", "is_nondegenerate", "milnor_dims",
    "orbifold_a_table", "orbifold_b_table", "reflect_table",
    "ComplexError", "RingComplex", "bigraded_table",
    "MembershipWitness", "ToricMirrorData", "UnifiedError",
    "bh_toric_data", "key_lemma_witness", "make_toric_data",
    "unified_condition",
    "__version__",
]
