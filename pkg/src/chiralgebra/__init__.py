"""Algebra of central molecular chirality from Fischer projections.

Quick tour::

    >>> from chiralgebra import operator, compose
    >>> compose(operator("R", 8), operator("R", 9)).name
    'R5'
"""

from .algebra import (
    IDENTITY,
    MIRROR,
    CharPoly,
    CharPolyClass,
    CommutatorDecomposition,
    EigenSet,
    Kind,
    Operator,
    Root,
    all_operators,
    by_name,
    cayley_table,
    char_poly,
    commutator,
    compose,
    determinant,
    eigen,
    eigenvalues,
    group_dimension,
    inverse,
    inversions,
    operator,
    rotations,
)
from .aufbau import AufbauTrace, VerifiedAddition, add_centre, aufbau_sequence, verified_add_centre
from .classifier import (
    ChiralityIndex,
    Classification,
    chirality_index,
    classify,
    enumerate_projections,
    mirror_tetra,
    rotationally_superimposable,
)
from .exceptions import (
    ChiralityError,
    ConsistencyError,
    InvariantViolation,
    ParseError,
    StateError,
    StructureError,
)
from .molfile import parse_molecule, read_molecule, serialize_molecule
from .tetra import (
    Bond,
    ChainMolecule,
    Ligand,
    Link,
    Tetrahedron,
    apply_at,
    apply_operator,
    bond_count,
    bond_value,
    sum_vector,
)

__version__ = "0.1.0"
