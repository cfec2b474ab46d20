"""Command-line front end: corpus -> SVD -> similarity, plus the Bell tools.

Exit codes: 0 success, 1 usage error, 2 data error. Numeric output on stdout
uses 6 significant digits; files keep full precision.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import bell, corpus, fock, semantic, spectral
from .errors import TextspaceError


class _UsageExit(Exception):
    def __init__(self, message: str):
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; we reserve 2 for data errors
    def error(self, message: str):
        raise _UsageExit(message)


def _fmt(x: float) -> str:
    return format(float(x), ".6g")


def _build_parser() -> _Parser:
    parser = _Parser(prog="textspace",
                     description="Term-document LSA and Bell-text tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest",
                       help="build a term-document matrix from a corpus file "
                            "(one document per line)")
    p.add_argument("corpus", help="UTF-8 text, one document per line")
    p.add_argument("--out", required=True, help="matrix file to write")

    p = sub.add_parser("svd",
                       help="decompose a matrix and optionally write the "
                            "rank-reduced matrix")
    p.add_argument("matrix", help="matrix file from `ingest`")
    p.add_argument("--rank", type=int, default=None,
                   help="singular values to keep (default: full rank)")
    p.add_argument("--out", help="decomposition file to write")
    p.add_argument("--reduced", help="matrix file for the truncated matrix")

    p = sub.add_parser("similar",
                       help="raw and rank-reduced cosine between two words")
    p.add_argument("matrix")
    p.add_argument("--rank", type=int, default=None,
                   help="reduction rank (default: full rank)")
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("bell-score",
                       help="regroup an a-p text and print mean G, quadruple "
                            "count, skipped characters")
    p.add_argument("text", help="file of a-p characters; newlines ignored")

    p = sub.add_parser("bell-simulate", help="simulate a measurement text")
    p.add_argument("--model", choices=["quantum", "classical"], required=True)
    p.add_argument("--groups", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)

    sub.add_parser("fock-demo",
                   help="print the Stein-phrase vectors and their norms")
    return parser


def _load_space(path: str, rank: int | None):
    matrix = corpus.TermDocMatrix.load(path)
    triple = spectral.svd(matrix.entries)
    if rank is None:
        rank = len(triple.singulars)
    return matrix, triple, rank


def _cmd_ingest(args) -> int:
    docs = corpus.read_corpus(args.corpus)
    corpus.build_matrix(docs).save(args.out)
    return 0


def _cmd_svd(args) -> int:
    matrix, triple, rank = _load_space(args.matrix, args.rank)
    reduced = spectral.truncate(triple, rank)
    print("\t".join(_fmt(s) for s in triple.singulars))
    if args.out:
        triple.save(args.out)
    if args.reduced:
        corpus.TermDocMatrix(vocab=matrix.vocab, entries=reduced).save(args.reduced)
    return 0


def _cmd_similar(args) -> int:
    matrix, triple, rank = _load_space(args.matrix, args.rank)
    raw_space = semantic.SemanticSpace(matrix.entries, vocab=matrix.vocab)
    reduced_space = semantic.SemanticSpace(spectral.truncate(triple, rank),
                                           vocab=matrix.vocab)
    m1 = raw_space.word_index(args.word1)
    m2 = raw_space.word_index(args.word2)
    raw = semantic.cosine(raw_space, m1, m2)
    reduced = semantic.cosine(reduced_space, m1, m2)
    print(f"{args.word1}\t{args.word2}\t{_fmt(raw)}\t{_fmt(reduced)}")
    return 0


def _cmd_bell_score(args) -> int:
    text = bell.read_bell_text(args.text)
    mean_g, n_quads, skipped = bell.chsh_score(text)
    print(f"{_fmt(mean_g)}\t{n_quads}\t{skipped}")
    return 0


def _cmd_bell_simulate(args) -> int:
    if args.model == "quantum":
        groups = bell.simulate_quantum(args.groups, args.seed)
    else:
        groups = bell.simulate_classical(args.groups, args.seed)
    text = bell.encode_pairs(groups)
    with open(args.out, "w", encoding="utf-8") as fh:
        for start in range(0, len(text), 80):
            fh.write(text[start:start + 80] + "\n")
    return 0


def _cmd_fock_demo(args) -> int:
    names = ("s1 (bag of words)", "s2 (rose + 3 is*a*rose)",
             "s3 ((rose + 3 is) + 3 a*rose)")
    for name, vec in zip(names, fock.stein_phrases()):
        parts = []
        for degree in vec.degrees():
            coeffs = np.asarray(vec.component(degree)).ravel()
            parts.append(f"deg {degree}: [" + ", ".join(_fmt(c) for c in coeffs) + "]")
        print(f"{name}: " + "; ".join(parts) + f"; norm = {_fmt(vec.norm())}")
    return 0


_COMMANDS = {
    "ingest": _cmd_ingest,
    "svd": _cmd_svd,
    "similar": _cmd_similar,
    "bell-score": _cmd_bell_score,
    "bell-simulate": _cmd_bell_simulate,
    "fock-demo": _cmd_fock_demo,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageExit as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (TextspaceError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
