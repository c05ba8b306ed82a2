"""Succinct subset-matrix index over a sorted k-mer spectrum.

The matrix has one row per base and one column per k-mer in colex order;
row c, column i is set iff c extends the (k-1)-suffix of the i-th k-mer
(recorded only at the first column of a run of equal suffixes). Together
with the cumulative last-symbol counts C this supports LF-style right
extension of colex intervals in constant time per rank query.

All ranks in the public API are 1-based; internal arrays are 0-based.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import BinaryIO, NamedTuple

import numpy as np

from .alphabet import BASES, BASE_CODES
from .oracle import SortedSpectrum

MAGIC = b"SBWTLCS1"
_HEADER = struct.Struct("<8sQQ")

# rank directory geometry: absolute counts every 8 words, word offsets below
_SUPER_WORDS = 8


class FormatError(ValueError):
    """Raised when a serialized index or LCS file is malformed."""


class ColexInterval(NamedTuple):
    """1-based inclusive interval of colex ranks sharing a suffix."""

    lo: int
    hi: int

    def __len__(self) -> int:
        return self.hi - self.lo + 1


class Bitvector:
    """Immutable bitvector with O(1) rank via a two-level directory.

    Superblocks hold absolute counts every 512 bits; blocks hold 16-bit
    offsets per 64-bit word. rank(i) counts set bits among the first i.
    """

    __slots__ = ("n", "popcount", "_words", "_super", "_block")

    def __init__(self, bits: np.ndarray):
        bits = np.asarray(bits, dtype=bool)
        self.n = len(bits)
        packed = np.packbits(bits, bitorder="little")
        nwords = (self.n + 63) >> 6
        buf = np.zeros((nwords + 1) * 8, dtype=np.uint8)  # one zero pad word
        buf[: len(packed)] = packed
        self._words = buf.view(np.uint64)
        cum = np.zeros(len(self._words) + 1, dtype=np.uint64)
        np.cumsum(np.bitwise_count(self._words), out=cum[1:])
        self._super = cum[::_SUPER_WORDS].copy()
        self._block = (cum - np.repeat(self._super, _SUPER_WORDS)[: len(cum)]).astype(np.uint16)
        self.popcount = int(cum[-1])

    def test(self, i: int) -> bool:
        """Value of bit i (0-based)."""
        if not 0 <= i < self.n:
            raise IndexError(f"bit index {i} out of range for length {self.n}")
        return bool((int(self._words[i >> 6]) >> (i & 63)) & 1)

    def rank(self, i: int) -> int:
        """Number of set bits among bits 0..i-1; 0 <= i <= n."""
        if not 0 <= i <= self.n:
            raise IndexError(f"rank position {i} out of range for length {self.n}")
        q = i >> 6
        r = int(self._super[q >> 3]) + int(self._block[q])
        rem = i & 63
        if rem:
            r += (int(self._words[q]) & ((1 << rem) - 1)).bit_count()
        return r

    def rank_many(self, i: np.ndarray) -> np.ndarray:
        """Vectorized rank over an array of positions in [0, n]."""
        i = np.asarray(i, dtype=np.int64)
        q = i >> 6
        base = self._super[q >> 3].astype(np.int64) + self._block[q]
        rem = (i & 63).astype(np.uint64)
        masked = self._words[q] & ((np.uint64(1) << rem) - np.uint64(1))
        return base + np.bitwise_count(masked).astype(np.int64)

    def to_bool(self) -> np.ndarray:
        raw = self._words.view(np.uint8)
        return np.unpackbits(raw, count=self.n, bitorder="little").astype(bool)

    def packed_bytes(self) -> bytes:
        """LSB-first packed bits, exactly ceil(n/8) bytes."""
        return self._words.view(np.uint8)[: (self.n + 7) >> 3].tobytes()


@dataclass(frozen=True)
class SubsetMatrix:
    """One bitvector per base, all of length n; total set bits is n-1."""

    n: int
    rows: tuple[Bitvector, ...]  # indexed by base code - 1 (A, C, G, T)

    def row(self, base: str) -> Bitvector:
        return self.rows[BASE_CODES[base] - 1]


@dataclass(frozen=True)
class CumulativeCounts:
    """counts[c] = number of k-mers whose last symbol sorts below base c.

    The $ sentinel is counted, so counts['A'] is always 1: this folds the
    +1 rank offset of the all-$ row into the extension formula.
    """

    values: tuple[int, int, int, int]

    def __getitem__(self, base: str) -> int:
        return self.values[BASE_CODES[base] - 1]


class SbwtIndex:
    """Queryable subset-matrix index: matrix + cumulative counts + order k."""

    def __init__(self, k: int, row_bits: np.ndarray):
        """row_bits: bool array of shape (4, n), rows in A,C,G,T order."""
        if k < 1:
            raise ValueError("k must be >= 1")
        row_bits = np.asarray(row_bits, dtype=bool)
        if row_bits.ndim != 2 or row_bits.shape[0] != 4 or row_bits.shape[1] < 1:
            raise ValueError("expected a 4 x n bit matrix with n >= 1")
        self.k = k
        self.n = int(row_bits.shape[1])
        self.matrix = SubsetMatrix(self.n, tuple(Bitvector(r) for r in row_bits))
        pops = [bv.popcount for bv in self.matrix.rows]
        if sum(pops) != self.n - 1:
            raise FormatError(
                f"inconsistent subset matrix: {sum(pops)} set bits for n={self.n}"
            )
        cum = [1]
        for p in pops[:-1]:
            cum.append(cum[-1] + p)
        self.counts = CumulativeCounts(tuple(cum))
        # 0-based columns carrying each base, in column order (the LF fill order)
        self.char_columns = tuple(np.flatnonzero(row_bits[c]) for c in range(4))
        # 0-based destination slice [start, stop) of each base's LF block
        self.lf_slices = tuple(
            (cum[c], cum[c] + pops[c]) for c in range(4)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SbwtIndex):
            return NotImplemented
        return (
            self.k == other.k
            and self.n == other.n
            and all(
                a.packed_bytes() == b.packed_bytes()
                for a, b in zip(self.matrix.rows, other.matrix.rows)
            )
        )

    def subset_at(self, rank: int) -> str:
        """Alphabet-ordered subset characters of the given 1-based rank."""
        if not 1 <= rank <= self.n:
            raise IndexError(f"rank {rank} out of range 1..{self.n}")
        return "".join(
            c for ci, c in enumerate(BASES) if self.matrix.rows[ci].test(rank - 1)
        )


def build_index(s: SortedSpectrum) -> SbwtIndex:
    """Assemble the subset matrix and counts from a sorted spectrum.

    Fails if the spectrum is not prefix-closed (some k-mer would have no
    predecessor), since the LF mapping is then not a bijection.
    """
    kmers = s.kmers
    n = len(kmers)
    members = set(kmers)
    rows = np.zeros((4, n), dtype=bool)
    enders = [0] * 5
    prev_suffix = None
    for i, x in enumerate(kmers):
        last = x[-1]
        if last != "$" and last not in BASE_CODES:
            raise ValueError(f"invalid symbol {last!r} in k-mer {x!r}")
        enders[0 if last == "$" else BASE_CODES[last]] += 1
        suffix = x[1:]
        if suffix != prev_suffix:
            for ci, ch in enumerate(BASES):
                if suffix + ch in members:
                    rows[ci, i] = True
        prev_suffix = suffix

    if enders[0] != 1:
        raise ValueError("spectrum must contain exactly one $-terminated k-mer")
    index = SbwtIndex(s.k, rows)
    # closure: each base's LF block must exactly hold that base's enders
    boundary = 1
    for ci, ch in enumerate(BASES):
        if index.counts[ch] != boundary:
            raise ValueError(f"spectrum is not prefix-closed at base {ch}")
        boundary += enders[ci + 1]
    if boundary != n:
        raise ValueError("spectrum is not prefix-closed")
    return index


def char_rank(index: SbwtIndex, base: str, i: int) -> int:
    """Set bits of the base's row among columns 1..i (i may be 0)."""
    if base not in BASE_CODES:
        raise ValueError(f"invalid base {base!r}")
    return index.matrix.row(base).rank(i)


def extend_right(
    index: SbwtIndex, lo: int, hi: int, base: str
) -> ColexInterval | None:
    """Interval of suffix (alpha + base) given the interval of alpha.

    Returns None when no k-mer has the extended suffix.
    """
    if not 1 <= lo <= hi <= index.n:
        raise ValueError(f"invalid interval [{lo}, {hi}] for n={index.n}")
    if base not in BASE_CODES:
        raise ValueError(f"invalid base {base!r}")
    row = index.matrix.row(base)
    c = index.counts[base]
    low_rank = row.rank(lo - 1)
    high_rank = row.rank(hi)
    if low_rank == high_rank:
        return None
    return ColexInterval(c + low_rank + 1, c + high_rank)


def enumerate_right(index: SbwtIndex, lo: int, hi: int) -> str:
    """Bases whose right extension of [lo, hi] is nonempty, in order."""
    if not 1 <= lo <= hi <= index.n:
        raise ValueError(f"invalid interval [{lo}, {hi}] for n={index.n}")
    out = []
    for base in BASES:
        row = index.matrix.row(base)
        if row.rank(hi) > row.rank(lo - 1):
            out.append(base)
    return "".join(out)


@dataclass(frozen=True)
class ConcatRep:
    """Concatenated subset representation, width-generalized.

    labels holds one packed super-character per edge; boundaries is the
    bitvector 1 0^(group size) per group, where groups are index columns at
    width 1 and parent edges after each alphabet expansion. src and dest
    are the 1-based endpoint ranks of each edge's label path; they are
    derived bookkeeping that stands in for re-scanning boundaries with a
    working copy of the counts.
    """

    width: int
    n: int
    labels: np.ndarray
    boundaries: np.ndarray
    src: np.ndarray
    dest: np.ndarray

    def boundary_string(self) -> str:
        return "".join("1" if b else "0" for b in self.boundaries)

    def groups(self) -> list[np.ndarray]:
        """Per-group label arrays, decoded from the boundary bitvector."""
        starts = np.flatnonzero(self.boundaries)
        sizes = np.diff(np.append(starts, len(self.boundaries))) - 1
        offsets = np.concatenate(([0], np.cumsum(sizes)))
        return [self.labels[offsets[g] : offsets[g + 1]] for g in range(len(starts))]


def to_concat(index: SbwtIndex) -> ConcatRep:
    """Width-1 concatenated representation of the subset matrix."""
    n = index.n
    bits = np.stack([bv.to_bool() for bv in index.matrix.rows])
    flat = np.flatnonzero(bits.T.ravel())  # column-major, bases in order
    src0 = flat >> 2
    codes = (flat & 3).astype(np.int64) + 1
    dest = np.empty(len(flat), dtype=np.int64)
    for ci, ch in enumerate(BASES):
        mask = codes == ci + 1
        cnt = int(mask.sum())
        dest[mask] = index.counts[ch] + 1 + np.arange(cnt)
    sizes = bits.sum(axis=0).astype(np.int64)
    boundaries = np.zeros(n + len(flat), dtype=bool)
    starts = np.arange(n) + np.concatenate(([0], np.cumsum(sizes)[:-1]))
    boundaries[starts] = True
    return ConcatRep(
        width=1,
        n=n,
        labels=codes,
        boundaries=boundaries,
        src=src0 + 1,
        dest=dest,
    )


def save_index(index: SbwtIndex, sink) -> None:
    """Write the binary index format: magic, k, n, then the four rows."""
    own = not hasattr(sink, "write")
    fh: BinaryIO = open(sink, "wb") if own else sink
    try:
        fh.write(_HEADER.pack(MAGIC, index.k, index.n))
        for bv in index.matrix.rows:
            fh.write(bv.packed_bytes())
    finally:
        if own:
            fh.close()


def load_index(source) -> SbwtIndex:
    """Read an index written by save_index, recomputing and checking counts."""
    if hasattr(source, "read"):
        data = source.read()
    else:
        with open(source, "rb") as fh:
            data = fh.read()
    if len(data) < _HEADER.size:
        raise FormatError("truncated index file: missing header")
    magic, k, n = _HEADER.unpack_from(data)
    if magic[:7] != MAGIC[:7]:
        raise FormatError(f"bad magic {magic!r}")
    if magic != MAGIC:
        raise FormatError(f"unsupported index version {magic!r}")
    if k < 1 or n < 1:
        raise FormatError(f"invalid header values k={k} n={n}")
    row_bytes = (n + 7) >> 3
    expected = _HEADER.size + 4 * row_bytes
    if len(data) < expected:
        raise FormatError("truncated index file")
    if len(data) > expected:
        raise FormatError("trailing data after index payload")
    rows = np.zeros((4, n), dtype=bool)
    for c in range(4):
        start = _HEADER.size + c * row_bytes
        raw = np.frombuffer(data, dtype=np.uint8, count=row_bytes, offset=start)
        bits = np.unpackbits(raw, bitorder="little")
        if bits[n:].any():
            raise FormatError("nonzero padding bits in row data")
        rows[c] = bits[:n]
    try:
        return SbwtIndex(int(k), rows)
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
