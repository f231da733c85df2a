# Truncated pro-l Burau matrices for data (N, w_i), with the word oracle alongside.
import random

from burau_lab.freegroup import parse_word
from burau_lab.proell import (
    GaloisElemData,
    assemble_matburau,
    decompose,
    direct_oracle,
    split_oracle,
)
from burau_lab.verify import random_galois_data

s, l, K, M = 4, 3, 2, 2
d = GaloisElemData(s, l, K, M, 4, {2: parse_word("x2 x1^-1 x3", s), 3: parse_word("x1^2", s)})
print(d.ring)
for i, w in d.words.items():
    dec = decompose(w)
    print(f"w{i} = {w}: tail {dec.tail}, head {dec.head}")

A = assemble_matburau(d)
print(A)
print("oracle agrees:", A == direct_oracle(d))

L, Mm, Kk = split_oracle(d)
print("diagonal part\n", L, sep="")

# %% a batch of random data
rng = random.Random(0)
hits = sum(assemble_matburau(e) == direct_oracle(e) for e in (random_galois_data(rng, 5, l, K, M) for _ in range(50)))
print(f"{hits}/50 agree")
