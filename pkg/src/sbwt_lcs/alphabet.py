"""DNA alphabet with a $ sentinel that sorts below every base.

Codes are fixed: $=0, A=1, C=2, G=3, T=4. Because the ASCII order of
'$ACGT' matches the code order, plain string comparison of k-mers (and of
reversed k-mers, for colexicographic order) agrees with the code order.
"""

from __future__ import annotations

import numpy as np

DOLLAR = "$"
BASES = "ACGT"
SYMBOLS = DOLLAR + BASES  # index in this string == numeric code
SIGMA = len(BASES)  # the sentinel is not counted

DOLLAR_CODE = 0
BASE_CODES = {c: i + 1 for i, c in enumerate(BASES)}

_CODE_TO_ASCII = np.frombuffer(SYMBOLS.encode("ascii"), dtype=np.uint8).copy()


def check_bases(s: str, what: str = "string") -> None:
    """Raise ValueError unless every symbol of s is one of ACGT."""
    for ch in s:
        if ch not in BASE_CODES:
            raise ValueError(f"invalid symbol {ch!r} in {what}: expected one of ACGT")


def decode(codes: np.ndarray) -> str:
    """uint8 code array -> symbol string."""
    return _CODE_TO_ASCII[codes].tobytes().decode("ascii")


def colex_key(kmer: str) -> str:
    """Sort key realizing colexicographic order over $ACGT strings."""
    return kmer[::-1]
