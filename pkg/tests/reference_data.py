"""Published sequences used as frozen reference values."""

_SHARED = (
    "1111111000000011111011110011110100000100001100001011100011100100"
    "0110111011000100111010110011001011011010"
)
S7 = _SHARED + "011010100010100100101010"
L7 = _SHARED + "100010100110100100101010"
RL_SEEDED = "1010100100110001101100111001010110100010000101110111100000011111"
