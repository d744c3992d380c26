"""Encode a message with a folded code over GF(16), damage one column, and
list-decode it back.  Prints each intermediate object."""
import random

from foldecode import codec, decoder, field_new
from foldecode.function_field import RationalBackend

F = field_new(2, 4)
code = codec.make_params(RationalBackend(F), m=4, N=3, l=2)
dp = decoder.make_decoder_params(code, s=2)
print(f"q={code.q} m={code.m} N={code.N} l={code.l} k={code.k} rate={code.rate}")
print("windows:", [[P.coords[0] for P in w] for w in code.windows])
print(dp.summary())

rng = random.Random(3)
msg = codec.random_message(code, rng)
word = codec.encode(code, msg)
print("message ", codec.message_to_hex(msg))
for i, col in enumerate(word):
    print(f"column {i}", [hex(x) for x in col])

received = codec.corrupt(word, [1], seed=5, q=code.q)
print("received column 1", [hex(x) for x in received[1]])
print("columns in error:", codec.column_distance(word, received), "budget:", dp.budget)

res = decoder.decode(received, dp)
print("solution space dimension:", res.affine_dim)
for h in res.messages:
    tag = "  <- sent" if tuple(h) == tuple(msg) else ""
    print("candidate", codec.message_to_hex(h), tag)

r = decoder.radius(dp)
print(f"radius {r.tau} of the columns, fold limit s/(s+1) = {dp.s}/{dp.s + 1}")
