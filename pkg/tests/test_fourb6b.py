"""4B6B code tests: the sixteen-codeword table, invalid sextets, full balancing."""

import itertools

import pytest

from balpack.errors import CorruptPacketError, InvalidSextetError
from balpack.fourb6b import (
    balance_prefix,
    decode_sextet,
    encode_nibble,
    encoded_prefix_bits,
    full_decode,
    full_encode,
)
from balpack.subsets import Packet, Scheme, encode_packet
from balpack.words import is_balanced

# Reference 4B6B table the smallest-index rule must reproduce bit for bit.
SEXTET_TABLE = {
    "0000": "110010", "0001": "100101", "0010": "101001", "0011": "110100",
    "0100": "110001", "0101": "100110", "0110": "101010", "0111": "100011",
    "1000": "011100", "1001": "010110", "1010": "011010", "1011": "001101",
    "1100": "001011", "1101": "010101", "1110": "011001", "1111": "001110",
}


def test_encode_nibble_reproduces_table():
    assert {n: encode_nibble(n) for n in SEXTET_TABLE} == SEXTET_TABLE


def test_sextets_distinct_weight3():
    sextets = set(SEXTET_TABLE.values())
    assert len(sextets) == 16
    assert all(s.count("1") == 3 for s in sextets)


def test_decode_sextet_roundtrip_all_16():
    for nibble, sextet in SEXTET_TABLE.items():
        assert decode_sextet(sextet) == nibble


def test_decode_sextet_examples():
    assert decode_sextet("110010") == "0000"
    assert decode_sextet("001101") == "1011"


def test_decode_sextet_rejects_wrong_weight():
    with pytest.raises(InvalidSextetError):
        decode_sextet("111100")
    with pytest.raises(InvalidSextetError):
        decode_sextet("000000")


def test_decode_sextet_rejects_non_codeword():
    # weight 3 but not in the table: rule-decode then re-encode mismatches
    with pytest.raises(InvalidSextetError):
        decode_sextet("111000")


def test_decode_sextet_rejects_every_non_codeword():
    codewords = set(SEXTET_TABLE.values())
    for bits in itertools.product("01", repeat=6):
        s = "".join(bits)
        if s in codewords:
            assert encode_nibble(decode_sextet(s)) == s
        else:
            with pytest.raises(InvalidSextetError):
                decode_sextet(s)


def test_nibble_length_validation():
    with pytest.raises(ValueError):
        encode_nibble("010")
    with pytest.raises(ValueError):
        decode_sextet("01010")


def test_balance_prefix_examples():
    assert balance_prefix("1") == "011100"
    assert balance_prefix("0") == "110010"
    assert balance_prefix("10") == "011100"
    assert balance_prefix("10111011") == encode_nibble("1011") * 2


def test_balance_prefix_rejects_empty():
    with pytest.raises(ValueError):
        balance_prefix("")


def test_balance_prefix_output_balanced():
    for r in range(1, 9):
        for bits in itertools.product("01", repeat=r):
            out = balance_prefix("".join(bits))
            assert len(out) == 6 * ((r + 3) // 4)
            assert is_balanced(out)


def test_full_encode_examples():
    assert full_encode("1111").bits == "011100" + "0011"
    assert full_encode("0101").bits == "0101"
    assert full_decode(Packet("0111000011"), 4) == "1111"


def test_full_encode_matches_scheme_dispatch():
    for x in ("1111", "0010", "0101"):
        assert encode_packet(x, Scheme.PROPOSED_FULL) == full_encode(x)


@pytest.mark.parametrize("k", [4, 6, 8, 10])
def test_full_roundtrip_and_balance_exhaustive(k):
    nbits = encoded_prefix_bits(k)
    for bits in itertools.product("01", repeat=k):
        x = "".join(bits)
        packet = full_encode(x)
        assert is_balanced(packet.bits)
        assert packet.bit_length in (k, k + nbits)
        assert full_decode(packet, k) == x


def test_full_decode_errors():
    with pytest.raises(CorruptPacketError):
        full_decode(Packet("0111"), 4)  # k bits but unbalanced
    with pytest.raises(CorruptPacketError):
        full_decode(Packet("01110000110"), 4)  # 11 bits: no valid split
    with pytest.raises(InvalidSextetError):
        full_decode(Packet("1110000011"), 4)  # prefix is not a codeword
    with pytest.raises(ValueError):
        full_decode(Packet("0101"), 3)


def test_full_decode_rejects_nonzero_padding():
    # r = 1 at k = 4, so three pad bits follow the rank bit; "1100" instead
    # of "1000" decodes to a valid sextet whose padding is not all zero
    packet = Packet(encode_nibble("1100") + "0011")
    with pytest.raises(CorruptPacketError):
        full_decode(packet, 4)
