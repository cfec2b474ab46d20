"""Hilbert-space latent semantic analysis with Fock-space passage vectors
and CHSH Bell-text scoring."""

from .corpus import TermDocMatrix, Vocabulary, build_matrix, entropy_weight, tokenize
from .errors import TextspaceError
from .fock import FockVector
from .semantic import SemanticSpace, build_supercharge, cosine, purify_diagonal
from .spectral import SVDTriple, embed_square, jacobi_eigh, svd, truncate

__all__ = [
    "TermDocMatrix",
    "Vocabulary",
    "build_matrix",
    "entropy_weight",
    "tokenize",
    "TextspaceError",
    "FockVector",
    "SemanticSpace",
    "build_supercharge",
    "cosine",
    "purify_diagonal",
    "SVDTriple",
    "embed_square",
    "jacobi_eigh",
    "svd",
    "truncate",
]

__version__ = "0.1.0"
