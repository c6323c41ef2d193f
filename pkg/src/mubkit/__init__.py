"""mubkit: Latin squares, net designs, and mutually unbiased bases.

The pipeline: build mutually orthogonal Latin squares (squares), turn them
into a net design (net), read each design row as a set of operator exponents
(weyl), diagonalize the commuting ones (spectra), and test the resulting
bases for unbiasedness (mub).
"""

from .gf import FieldSpec, factorize, prime_power
from .mub import (
    MubReport,
    PrimePowerDecomposition,
    design_mubs,
    is_unbiased,
    max_clique,
    tensor_mub,
    unbiased_graph,
    ws_mub_number,
)
from .net import (
    NetDesign,
    NetError,
    net_from_mols,
    representative_cells,
    validate_net,
)
from .spectra import (
    Basis,
    Degenerate,
    ResidualFailure,
    build_x,
    build_z,
    common_eigenbasis,
    hermitian_eigensystem,
    joint_eigenbasis,
    lemma_verify,
    permutation_T,
    weyl_matrix,
)
from .squares import (
    LatinSquare,
    MolsFamily,
    are_orthogonal,
    builtin_mols10,
    ff_complete_mols,
    macneish_bound,
    macneish_family,
    macneish_product,
    quantum_macneish_bound,
    validate_latin,
)
from .weyl import (
    CommutingClass,
    ExponentPair,
    cell_commutes,
    crt_split,
    decompose_prime_power,
    enumerate_classes,
    symplectic,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "CommutingClass",
    "Degenerate",
    "ExponentPair",
    "FieldSpec",
    "LatinSquare",
    "MolsFamily",
    "MubReport",
    "NetDesign",
    "NetError",
    "PrimePowerDecomposition",
    "ResidualFailure",
    "are_orthogonal",
    "build_x",
    "build_z",
    "builtin_mols10",
    "cell_commutes",
    "common_eigenbasis",
    "crt_split",
    "decompose_prime_power",
    "design_mubs",
    "enumerate_classes",
    "factorize",
    "ff_complete_mols",
    "hermitian_eigensystem",
    "is_unbiased",
    "joint_eigenbasis",
    "lemma_verify",
    "macneish_bound",
    "macneish_family",
    "macneish_product",
    "max_clique",
    "net_from_mols",
    "permutation_T",
    "prime_power",
    "quantum_macneish_bound",
    "representative_cells",
    "symplectic",
    "tensor_mub",
    "unbiased_graph",
    "validate_latin",
    "validate_net",
    "weyl_matrix",
    "ws_mub_number",
]
