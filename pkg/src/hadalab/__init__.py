"""hadalab: algebra of binary +-1 sequences under shift, reversal and
decimation, with invariant-family machinery, circulant Hadamard and Barker
searches, and brute-force audits of the documented claims."""

from ._kernels import BACKEND
from .errors import (
    BadModulus,
    BadOrder,
    HadalabError,
    LengthMismatch,
    NotAUnit,
    NotInvariant,
    NotPrime,
    NotTwoLevel,
    RankTooLarge,
    ShiftOutOfRange,
    TooLarge,
    UnsupportedDegree,
)
from .families import TwoLevelSeq, legendre, mseq
from .numth import (
    CosetPartition,
    TurynVerdict,
    UnitGroupInfo,
    cyclotomic_cosets,
    mu_count,
    mult_order,
    turyn_admissible,
    unit_group,
)
from .search import (
    OrbitReport,
    ResultCache,
    SearchResult,
    barker,
    hadamard_full,
    hadamard_in_invariant,
    orbit_under_decimation,
)
from .seqcore import (
    AutocorrVector,
    BinarySeq,
    CyclicClass,
    aperiodic_autocorr,
    autocorr_vector,
    canonical_rotation,
    decimate,
    is_circulant_hadamard,
    is_symmetric,
    product,
    reverse,
    shift,
    weight,
)
from .sring import (
    InvariantFamily,
    LatticeGraph,
    SubwordClassification,
    c2n_translate,
    classify_subwords,
    code,
    enumerate_family,
    includes,
    invariant_family,
    lattice,
    member,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    # errors
    "HadalabError", "NotAUnit", "LengthMismatch", "ShiftOutOfRange",
    "BadModulus", "NotPrime", "UnsupportedDegree", "RankTooLarge",
    "TooLarge", "NotInvariant", "BadOrder", "NotTwoLevel",
    # sequences
    "BinarySeq", "AutocorrVector", "CyclicClass", "shift", "reverse",
    "decimate", "product", "weight", "autocorr_vector", "aperiodic_autocorr",
    "is_circulant_hadamard", "is_symmetric", "canonical_rotation",
    # number theory
    "CosetPartition", "UnitGroupInfo", "TurynVerdict", "cyclotomic_cosets",
    "mult_order", "unit_group", "mu_count", "turyn_admissible",
    # invariant families
    "InvariantFamily", "LatticeGraph", "SubwordClassification",
    "invariant_family", "code", "member", "enumerate_family", "includes",
    "lattice", "classify_subwords", "c2n_translate",
    # named families
    "TwoLevelSeq", "legendre", "mseq",
    # searches
    "SearchResult", "OrbitReport", "ResultCache", "hadamard_full",
    "hadamard_in_invariant", "barker", "orbit_under_decimation",
]
