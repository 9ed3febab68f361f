"""Compressed-subset prefix-ranking codec for packet channels.

Every information word x is tied to the balanced word y it Knuth-balances
to.  The words tied to a given y form its subset; ranking x inside that
subset needs a shorter prefix than Knuth's inversion index.  On a packet
channel (explicit end-of-packet), already balanced words travel with no
prefix at all and the balanced member can be dropped from every subset,
which caps the subset size at k/2 instead of k/2 + 1.

Schemes
-------
KNUTH         inversion-index prefix, ceil(log2 k) bits
BASELINE_FL   rank in the uncompressed subset, ceil(log2 (k/2+1)) bits
PROPOSED_FL   rank in the compressed subset, ceil(log2 (k/2)) bits
PROPOSED_VL   rank in max(1, ceil(log2 lambda)) bits, lambda = subset size
PROPOSED_FULL PROPOSED_FL with the prefix re-encoded into balanced sextets
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import CorruptPacketError
from .knuth import ceil_log2, ka_encode
from .words import (
    check_word,
    first_balancing_index,
    invert_prefix,
    is_balanced,
    rds_extrema,
)


class Scheme(enum.Enum):
    KNUTH = 0
    BASELINE_FL = 1
    PROPOSED_FL = 2
    PROPOSED_VL = 3
    PROPOSED_FULL = 4


#: Schemes that send already balanced words prefix-less.
PREFIX_LESS_SCHEMES = frozenset(
    {Scheme.PROPOSED_FL, Scheme.PROPOSED_VL, Scheme.PROPOSED_FULL}
)


@dataclass(frozen=True)
class SubsetListing:
    """Ordered candidate list for one balanced word."""

    y: str
    members: tuple[str, ...]
    includes_balanced: bool

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Packet:
    """One transmitted codeword; its length is the end-of-packet information."""

    bits: str

    def __post_init__(self) -> None:
        check_word(self.bits)

    @property
    def bit_length(self) -> int:
        return len(self.bits)


@lru_cache(maxsize=65536)
def _members(y: str, includes_balanced: bool) -> tuple[str, ...]:
    k = len(y)
    unbalanced = []
    balanced = None
    for j in range(1, k + 1):
        cand = invert_prefix(y, j)
        if first_balancing_index(cand) != j:
            continue
        if is_balanced(cand):
            # invariant: each subset holds exactly one balanced word
            assert balanced is None, f"two balanced members under {y!r}"
            balanced = cand
        else:
            unbalanced.append(cand)
    assert balanced is not None, f"no balanced member under {y!r}"
    unbalanced.sort()
    if includes_balanced:
        unbalanced.append(balanced)
    return tuple(unbalanced)


def subset_members(y: str, includes_balanced: bool) -> SubsetListing:
    """All words whose first-index balancing lands on ``y``, in prefix order.

    Unbalanced members come first in ascending lexicographic order; the
    unique balanced member is appended last when ``includes_balanced`` is
    set (the uncompressed baseline listing) and omitted otherwise.
    """
    check_word(y)
    if len(y) % 2 or not is_balanced(y):
        raise ValueError(f"subset listings exist only for balanced words, got {y!r}")
    return SubsetListing(
        y=y, members=_members(y, includes_balanced), includes_balanced=includes_balanced
    )


def subset_size_rds(y: str) -> int:
    """Compressed-subset size of ``y`` straight from its running-sum span.

    The size equals the number of distinct running-sum levels ``y`` visits
    minus one, i.e. max - min of the unit-step partial sums.  Equality with
    the enumerated listing is asserted exhaustively in the test suite.
    """
    check_word(y)
    if len(y) % 2 or not is_balanced(y):
        raise ValueError(f"running-sum size rule needs a balanced word, got {y!r}")
    hi, lo = rds_extrema(y)
    return hi - lo


def prefix_length(k: int, scheme: Scheme, lam: int | None = None) -> int:
    """Prefix bit count for a scheme at block length ``k``.

    ``lam`` (the compressed-subset size) is required for PROPOSED_VL only.
    The variable-length rule keeps a 1-bit floor for unbalanced words so a
    rank prefix can never be confused with the prefix-less balanced case.
    """
    if k % 2 or k < 4:
        raise ValueError(f"prefix lengths are defined for even k >= 4, got {k}")
    if scheme is Scheme.PROPOSED_VL:
        if lam is None:
            raise ValueError("PROPOSED_VL prefix length needs the subset size")
        if not 1 <= lam <= k // 2:
            raise ValueError(f"subset size {lam} outside 1..{k // 2}")
        return max(1, ceil_log2(lam))
    if lam is not None:
        raise ValueError(f"subset size is meaningful only for PROPOSED_VL, not {scheme.name}")
    if scheme is Scheme.KNUTH:
        return ceil_log2(k)
    if scheme is Scheme.BASELINE_FL:
        return ceil_log2(k // 2 + 1)
    if scheme is Scheme.PROPOSED_FL:
        return ceil_log2(k // 2)
    if scheme is Scheme.PROPOSED_FULL:
        r = ceil_log2(k // 2)
        return 6 * ((r + 3) // 4)
    raise ValueError(f"unknown scheme {scheme!r}")


def _check_block(x: str, scheme: Scheme) -> int:
    check_word(x)
    k = len(x)
    if k % 2 or k < 2:
        raise ValueError(f"block length must be even >= 2, got {k}")
    if k < 4 and scheme in (Scheme.PROPOSED_FL, Scheme.PROPOSED_FULL):
        raise ValueError(f"{scheme.name} needs k >= 4 (a zero-bit rank prefix at k={k} "
                         "would collide with the prefix-less balanced case)")
    return k


def encode_packet(x: str, scheme: Scheme) -> Packet:
    """Encode one information word into a self-contained packet."""
    k = _check_block(x, scheme)
    if scheme is Scheme.PROPOSED_FULL:
        from . import fourb6b  # deferred: fourb6b builds on this module

        return fourb6b.full_encode(x)
    if scheme is Scheme.KNUTH:
        return Packet(ka_encode(x).bits)
    if scheme in PREFIX_LESS_SCHEMES and is_balanced(x):
        return Packet(x)
    e = first_balancing_index(x)
    y = invert_prefix(x, e)
    listing = _members(y, includes_balanced=True)
    rank = listing.index(x)
    if scheme is Scheme.BASELINE_FL:
        nbits = ceil_log2(k // 2 + 1)
    elif scheme is Scheme.PROPOSED_FL:
        nbits = ceil_log2(k // 2)
    elif scheme is Scheme.PROPOSED_VL:
        lam = len(listing) - 1
        nbits = max(1, ceil_log2(lam))
    else:
        raise ValueError(f"unknown scheme {scheme!r}")
    assert rank < (1 << nbits), "rank cannot exceed its prefix space"
    return Packet(format(rank, f"0{nbits}b") + y)


def _split_ranked(p: Packet, k: int, nbits: int) -> tuple[int, str]:
    if p.bit_length != nbits + k:
        raise CorruptPacketError(
            f"expected {nbits + k} bits ({nbits}-bit prefix + {k}), got {p.bit_length}"
        )
    prefix, y = p.bits[:nbits], p.bits[nbits:]
    if not is_balanced(y):
        raise CorruptPacketError(f"payload {y!r} is not balanced")
    return int(prefix, 2), y


def _member_at(y: str, rank: int, includes_balanced: bool) -> str:
    listing = _members(y, includes_balanced)
    if rank >= len(listing):
        raise CorruptPacketError(
            f"rank {rank} outside subset of size {len(listing)} for {y!r}"
        )
    return listing[rank]


def decode_packet(p: Packet, k: int, scheme: Scheme) -> str:
    """Decode one packet back to its information word.

    The packet's bit length stands in for the end-of-packet marker, so the
    variable-length scheme learns its prefix length from ``bit_length - k``.
    """
    if k % 2 or k < 2:
        raise ValueError(f"block length must be even >= 2, got {k}")
    if k < 4 and scheme in (Scheme.PROPOSED_FL, Scheme.PROPOSED_FULL):
        raise ValueError(f"{scheme.name} needs k >= 4")
    if scheme is Scheme.PROPOSED_FULL:
        from . import fourb6b

        return fourb6b.full_decode(p, k)
    if scheme is Scheme.KNUTH:
        rank, y = _split_ranked(p, k, ceil_log2(k))
        e = rank + 1
        if e > k:
            raise CorruptPacketError(f"inversion index {e} exceeds k={k}")
        return invert_prefix(y, e)
    if scheme in PREFIX_LESS_SCHEMES and p.bit_length == k:
        if not is_balanced(p.bits):
            raise CorruptPacketError(f"prefix-less payload {p.bits!r} is not balanced")
        return p.bits
    if scheme is Scheme.BASELINE_FL:
        rank, y = _split_ranked(p, k, ceil_log2(k // 2 + 1))
        return _member_at(y, rank, includes_balanced=True)
    if scheme is Scheme.PROPOSED_FL:
        rank, y = _split_ranked(p, k, ceil_log2(k // 2))
        return _member_at(y, rank, includes_balanced=False)
    if scheme is Scheme.PROPOSED_VL:
        nbits = p.bit_length - k
        if nbits < 1:
            raise CorruptPacketError(
                f"packet of {p.bit_length} bits is too short for k={k}"
            )
        rank, y = _split_ranked(p, k, nbits)
        lam = len(_members(y, includes_balanced=False))
        if nbits != max(1, ceil_log2(lam)):
            raise CorruptPacketError(
                f"{nbits}-bit prefix inconsistent with subset size {lam} of {y!r}"
            )
        return _member_at(y, rank, includes_balanced=False)
    raise ValueError(f"unknown scheme {scheme!r}")
