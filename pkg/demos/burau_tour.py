# Burau matrices from scratch: closed forms next to the word computation.
from burau_lab.burau import braid_oracle, burau_generator, burau_of_braid
from burau_lab.freegroup import BraidWord, Word, artin_apply, parse_braid
from burau_lab.groupring import abelianize_R0

s = 5

# %% the Artin action on words
g = BraidWord.gen(2, s)
for j in range(1, s):
    print(f"s2: x{j} -> {artin_apply(g, Word.gen(j, s))}")

# %% images of beta_j = xj x1^-1 land in R0; abelianizing gives the columns
for j in range(2, s):
    beta = Word([(j, 1), (1, -1)], s)
    print(f"s2(beta_{j}) = {artin_apply(g, beta)}  ->  {abelianize_R0(artin_apply(g, beta))}")

print(burau_generator(2, s))

# %% a longer braid, both ways
b = parse_braid("s1 s2^-1 s3 s1", s)
print(burau_of_braid(b))
print("matches rewriting:", burau_of_braid(b) == braid_oracle(b))
