#!/usr/bin/env python3
# Induced FI-modules made concrete: every symmetric-group representation
# spreads out over all finite sets, with injections acting by explicit
# block matrices.

from math import comb

from fistab import (
    PresentationMatrix,
    decompose_at,
    horizontal_strip_extensions,
    induced_action,
    induced_block_action,
    specht_action,
)
from fistab.combinatorics import compose, hook_length_count, partitions

# The module induced from the irreducible of shape lam has, at a set of
# size n, one block of dimension dim(lam) for every monotone injection of
# [|lam|] into [n].  An injection f acts by routing each block to the one
# matching its image, twisted by a permutation action.
lam = (1,)
f = (3, 1)  # an injection [2] -> [3]
print(f"action of {f} on the module induced from shape {lam}:")
print(induced_action(lam, f, 3))
print()

# Functoriality: composing injections multiplies the matrices in reverse.
g = (2, 4, 1)  # [3] -> [4]
lhs = induced_action(lam, f, 3) * induced_action(lam, g, 4)
rhs = induced_action(lam, compose(g, f), 4)
print(f"contravariant composition holds: {lhs == rhs}")
print()

# The same construction applies to any representation, not just an
# irreducible; the trivial representation gives pure routing matrices.
route = induced_block_action(lambda s: specht_action((2,), s), 2, (1, 3, 4), 4)
print("routing matrix for the trivial rank-one representation:")
print(route)
print()

# Degree-wise, the induced module of shape lam decomposes over the shapes
# extending lam by a horizontal strip (one new box per column at most).
k = sum(lam)
for n in range(k, 6):
    extensions = horizontal_strip_extensions(lam, n)
    dim = hook_length_count(lam) * comb(n, k)
    parts = " + ".join(f"dim{mu}" for mu in extensions)
    total = sum(hook_length_count(mu) for mu in extensions)
    print(f"  degree {n}: {dim} = {parts} = {total}")
print()

# The free module on one degree-k generator stacks every induced module
# of size k, once per tableau.  Its brute-force decomposition therefore
# counts tableaux of strip-contracted shapes:
k = 3
free = PresentationMatrix((k,), ())
print(f"decomposition of the free module on a degree-{k} generator, degree 5:")
for mu, count in decompose_at(free, 5).items():
    if count:
        matching = [
            lam for lam in partitions(k)
            if mu in horizontal_strip_extensions(lam, 5)
        ]
        tableaux = " + ".join(f"#tab{lam}" for lam in matching)
        print(f"  {count} x {mu}  (= {tableaux})")
