"""End-to-end LSA walkthrough on the woodchuck passage.

Builds the 16x4 count matrix, decomposes it, performs the rank-1 reduction,
and prints how the how/much similarity changes.
"""
import numpy as np

from textspace.corpus import build_matrix
from textspace.semantic import SemanticSpace, build_supercharge, cosine
from textspace.spectral import svd, truncate

SENTENCES = [
    "How much wood would a woodchuck chuck if a woodchuck could chuck wood?",
    "Woodchuck would chuck as much wood as a woodchuck could chuck if a "
    "woodchuck could chuck wood.",
    "Could woodchuck chuck 35 cubic feet of dirt?",
    "If a woodchuck could chuck wood woodchuck would chuck 700 pounds of wood.",
]


def main() -> None:
    matrix = build_matrix(SENTENCES, exclude={"as"})
    print("vocabulary:", ", ".join(matrix.vocab.words))
    print("counts:")
    print(matrix.entries.astype(int))

    triple = svd(matrix.entries)
    print("\nsingular values:", np.round(triple.singulars, 4))

    reduced = truncate(triple, 1)
    print("\nrank-1 reduced matrix (rounded):")
    print(np.round(reduced, 2))

    raw = SemanticSpace(matrix.entries, vocab=matrix.vocab)
    low = SemanticSpace(reduced, vocab=matrix.vocab)
    m1, m2 = raw.word_index("how"), raw.word_index("much")
    print(f"\ncos(how, much) raw:     {cosine(raw, m1, m2):.6f}")
    print(f"cos(how, much) reduced: {cosine(low, m1, m2):.6f}")

    h = build_supercharge(raw).h
    top = np.linalg.eigvalsh(h)[::-1][:4]
    print("\ntop eigenvalues of Q^2 (each appears twice, once per block):")
    print(np.round(top, 4))


if __name__ == "__main__":
    main()
