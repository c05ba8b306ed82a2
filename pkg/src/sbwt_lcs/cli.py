"""Command-line front end: build, lcs, verify, dump, query, bench.

Exit codes: 0 success, 1 usage error, 2 I/O or file-format error,
3 cross-validation failure.
"""

from __future__ import annotations

import argparse
import re
import resource
import statistics
import struct
import sys
import time
from random import Random

import numpy as np

from .index import (
    ColexInterval,
    FormatError,
    SbwtIndex,
    build_index,
    load_index,
    save_index,
)
from .lcs_basic import decode_spectrum, lcs_basic
from .lcs_linear import lcs_linear, lcs_linear_endpoints
from .lcs_superalphabet import lcs_super
from .oracle import SortedSpectrum, extended_spectrum, naive_lcs
from .queries import SuffixInterval, left_contract, lookup
from .stats import BuildStats

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_VERIFY = 3

MAX_K = 4096

LCS_MAGIC = b"LCSARR01"
_LCS_HEADER = struct.Struct("<8sQB")

ALGORITHMS = ("basic", "super", "linear", "linear-endpoints")

_RC = str.maketrans("ACGT", "TGCA")
_SPLIT_NON_ACGT = re.compile(r"[^ACGT]+")


# ---------------------------------------------------------------------------
# file formats


def read_fasta(path: str) -> list[tuple[str, str]]:
    """FASTA records as (header, uppercased sequence), in file order."""
    records: list[tuple[str, str]] = []
    header = None
    chunks: list[str] = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith(">"):
                if header is not None:
                    records.append((header, "".join(chunks)))
                header = line[1:].strip()
                chunks = []
            elif header is None:
                raise FormatError(f"{path}: sequence data before first FASTA header")
            else:
                chunks.append(line.upper())
    if header is not None:
        records.append((header, "".join(chunks)))
    return records


def clean_pieces(sequences: list[str], add_rc: bool) -> list[str]:
    """Split each sequence at non-ACGT symbols; optionally add reverse strands."""
    pieces = [p for seq in sequences for p in _SPLIT_NON_ACGT.split(seq) if p]
    if add_rc:
        pieces += [p.translate(_RC)[::-1] for p in pieces]
    return pieces


def lcs_value_width(k: int) -> int:
    """Smallest of 1, 2, 4 bytes that holds k-1."""
    if k - 1 <= 0xFF:
        return 1
    if k - 1 <= 0xFFFF:
        return 2
    return 4


def save_lcs(values: np.ndarray, k: int, path: str) -> None:
    width = lcs_value_width(k)
    with open(path, "wb") as fh:
        fh.write(_LCS_HEADER.pack(LCS_MAGIC, len(values), width))
        fh.write(values.astype(f"<u{width}").tobytes())


def load_lcs(path: str) -> np.ndarray:
    with open(path, "rb") as fh:
        data = fh.read()
    if len(data) < _LCS_HEADER.size:
        raise FormatError(f"{path}: truncated LCS file")
    magic, n, width = _LCS_HEADER.unpack_from(data)
    if magic != LCS_MAGIC:
        raise FormatError(f"{path}: bad magic {magic!r}")
    if width not in (1, 2, 4):
        raise FormatError(f"{path}: invalid value width {width}")
    expected = _LCS_HEADER.size + n * width
    if len(data) < expected:
        raise FormatError(f"{path}: truncated LCS file")
    if len(data) > expected:
        raise FormatError(f"{path}: trailing data after LCS payload")
    raw = np.frombuffer(data, dtype=f"<u{width}", count=n, offset=_LCS_HEADER.size)
    return raw.astype(np.int32)


# ---------------------------------------------------------------------------
# commands


def _construct(index: SbwtIndex, algorithm: str, width: int, stats=None) -> np.ndarray:
    if algorithm == "basic":
        return lcs_basic(index, stats)
    if algorithm == "super":
        return lcs_super(index, width, stats)
    if algorithm == "linear":
        return lcs_linear(index, stats)
    if algorithm == "linear-endpoints":
        return lcs_linear_endpoints(index, stats)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def cmd_build(args) -> int:
    if not 1 <= args.k <= MAX_K:
        print(f"error: k must be in 1..{MAX_K}", file=sys.stderr)
        return EXIT_USAGE
    try:
        records = read_fasta(args.input)
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    pieces = clean_pieces([seq for _, seq in records], args.add_rc)
    if not any(len(p) >= args.k for p in pieces):
        print(f"error: no {args.k}-mers extracted from {args.input}", file=sys.stderr)
        return EXIT_IO
    index = build_index(extended_spectrum(pieces, args.k))
    try:
        save_index(index, args.output)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"n={index.n} k={index.k}")
    return EXIT_OK


def cmd_lcs(args) -> int:
    try:
        index = load_index(args.index)
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    start = time.perf_counter()
    values = _construct(index, args.algorithm, args.super_width)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    peak_bytes = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024
    try:
        save_lcs(values, index.k, args.output)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"algo={args.algorithm} ms={elapsed_ms:.3f} bytes={peak_bytes}")
    return EXIT_OK


def _verify_one(spectrum: SortedSpectrum, label: str) -> int:
    index = build_index(spectrum)
    arrays = [
        ("naive", naive_lcs(spectrum)),
        ("basic", lcs_basic(index)),
        ("super", lcs_super(index, 2)),
        ("linear", lcs_linear(index)),
        ("linear-endpoints", lcs_linear_endpoints(index)),
    ]
    reference = arrays[0][1]
    for name, values in arrays[1:]:
        if (values != reference).any():
            bad = int(np.argmax(values != reference))
            row = " ".join(f"{n}={int(v[bad])}" for n, v in arrays)
            before = spectrum.kmers[bad - 1] if bad else "-"
            print(
                f"mismatch in {label} at rank {bad + 1}: {row} "
                f"(k-mers {before} | {spectrum.kmers[bad]})",
                file=sys.stderr,
            )
            return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.random:
        rng = Random(args.seed)
        for trial in range(args.trials):
            k = args.k if args.k else rng.randint(1, 12)
            strings = [
                "".join(rng.choice("ACGT") for _ in range(rng.randint(1, args.length)))
                for _ in range(args.count)
            ]
            code = _verify_one(extended_spectrum(strings, k), f"trial {trial} (k={k})")
            if code != EXIT_OK:
                return code
        print(f"verified {args.trials} random trials")
        return EXIT_OK
    if not args.input or not args.k:
        print("error: verify needs an input file and -k, or --random", file=sys.stderr)
        return EXIT_USAGE
    if not 1 <= args.k <= MAX_K:
        print(f"error: k must be in 1..{MAX_K}", file=sys.stderr)
        return EXIT_USAGE
    try:
        records = read_fasta(args.input)
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    pieces = clean_pieces([seq for _, seq in records], False)
    code = _verify_one(extended_spectrum(pieces, args.k), args.input)
    if code == EXIT_OK:
        print("verified")
    return code


def cmd_dump(args) -> int:
    try:
        index = load_index(args.index)
        values = load_lcs(args.lcs) if args.lcs else None
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    if values is not None and len(values) != index.n:
        print(
            f"error: LCS file has {len(values)} entries, index has n={index.n}",
            file=sys.stderr,
        )
        return EXIT_IO
    spectrum = decode_spectrum(index)
    for i, kmer in enumerate(spectrum.kmers):
        subset = index.subset_at(i + 1) or "-"
        if values is None:
            print(f"{i + 1}\t{kmer}\t{subset}")
        else:
            print(f"{i + 1}\t{kmer}\t{subset}\t{int(values[i])}")
    return EXIT_OK


def cmd_query(args) -> int:
    try:
        index = load_index(args.index)
        values = load_lcs(args.lcs)
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    if len(values) != index.n:
        print(
            f"error: LCS file has {len(values)} entries, index has n={index.n}",
            file=sys.stderr,
        )
        return EXIT_IO
    if args.action == "lookup":
        for kmer in args.kmers:
            try:
                rank = lookup(index, kmer)
            except ValueError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_USAGE
            print(f"{kmer}\t{rank if rank is not None else 'absent'}")
        return EXIT_OK
    # contract
    try:
        lo, hi = (int(x) for x in args.interval.split(","))
    except ValueError:
        print(f"error: malformed interval {args.interval!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = left_contract(
            values, SuffixInterval(ColexInterval(lo, hi), args.suffix_len), args.point
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"{result.interval.lo}\t{result.interval.hi}\t{result.suffix_len}")
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        index = load_index(args.index)
    except (OSError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    algorithms = args.algorithms.split(",")
    for algo in algorithms:
        if algo not in ALGORITHMS:
            print(f"error: unknown algorithm {algo!r}", file=sys.stderr)
            return EXIT_USAGE
    print("algorithm\tk\tn\tmedian_ms\trank_queries\trounds")
    for algo in algorithms:
        times = []
        stats = BuildStats()
        for _ in range(args.repeats):
            stats = BuildStats()
            start = time.perf_counter()
            _construct(index, algo, args.super_width, stats)
            times.append((time.perf_counter() - start) * 1000.0)
        print(
            f"{algo}\t{index.k}\t{index.n}\t{statistics.median(times):.3f}"
            f"\t{stats.rank_queries}\t{stats.rounds}"
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; this artifact reserves 2 for I/O."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sbwt-lcs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build an index from FASTA")
    p.add_argument("input", help="FASTA file")
    p.add_argument("-k", type=int, required=True, help="k-mer size (1..4096)")
    p.add_argument("-o", "--output", required=True, help="index output path")
    p.add_argument(
        "--add-rc", action="store_true", help="also index reverse complements"
    )
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("lcs", help="construct the LCS array of an index")
    p.add_argument("index")
    p.add_argument("-o", "--output", required=True, help="LCS output path")
    p.add_argument("-a", "--algorithm", choices=ALGORITHMS, default="linear")
    p.add_argument("--super-width", type=int, default=2)
    p.set_defaults(func=cmd_lcs)

    p = sub.add_parser("verify", help="cross-check all construction paths")
    p.add_argument("input", nargs="?", help="FASTA file (omit with --random)")
    p.add_argument("-k", type=int, help="k-mer size; random per trial if omitted")
    p.add_argument("--random", action="store_true", help="synthetic random mode")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--count", type=int, default=3, help="strings per random trial")
    p.add_argument("--length", type=int, default=80, help="max random string length")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dump", help="print rank/k-mer/subset/LCS table")
    p.add_argument("index")
    p.add_argument("lcs", nargs="?", help="optional LCS file")
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("query", help="lookup k-mers or contract an interval")
    p.add_argument("index")
    p.add_argument("lcs")
    actions = p.add_subparsers(dest="action", required=True)
    pl = actions.add_parser("lookup")
    pl.add_argument("kmers", nargs="+")
    pc = actions.add_parser("contract")
    pc.add_argument("--interval", required=True, help="lo,hi (1-based, inclusive)")
    pc.add_argument("--suffix-len", type=int, required=True)
    pc.add_argument("--point", type=int, required=True)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("bench", help="time the construction algorithms")
    p.add_argument("index")
    p.add_argument(
        "--algorithms", default=",".join(ALGORITHMS), help="comma-separated list"
    )
    p.add_argument("-r", "--repeats", type=int, default=3)
    p.add_argument("--super-width", type=int, default=2)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
