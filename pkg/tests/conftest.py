import random

import pytest

from fistab import FormalSum, PresentationMatrix
from fistab.combinatorics import all_injections

E_FILE = """\
# one generator of degree 3, one four-term cyclic relation of degree 4
generators: 3
relations: 4
entry 1 1 : [1 2 3] + [2 3 4] + [3 4 1] + [4 1 2]
"""


@pytest.fixture(scope="session")
def e_presentation() -> PresentationMatrix:
    """The running example: a degree-3 generator with a cyclic relation."""
    return PresentationMatrix(
        (3,), (4,),
        {(0, 0): FormalSum(3, 4, {
            (1, 2, 3): 1, (2, 3, 4): 1, (3, 4, 1): 1, (4, 1, 2): 1,
        })},
    )


def free_module(k: int) -> PresentationMatrix:
    """One generator of degree k, no relations."""
    return PresentationMatrix((k,), ())


def torsion_presentation() -> PresentationMatrix:
    """A degree-0 generator killed by the unique injection into [1]."""
    return PresentationMatrix(
        (0,), (1,), {(0, 0): FormalSum(0, 1, {(): 1})}
    )


def random_presentation(rng: random.Random) -> PresentationMatrix:
    """A small random presentation with generator degrees <= 3, relation
    degrees <= 4, and coefficients in -2..2.

    Relation degrees start at the largest generator degree so that every
    shape in the eventual table is visible at the onset degree.
    """
    num_gens = rng.randint(1, 2)
    num_rels = rng.randint(1, 2)
    gens = tuple(rng.randint(0, 3) for _ in range(num_gens))
    rels = tuple(rng.randint(max(gens), 4) for _ in range(num_rels))
    entries = {}
    for i in range(num_gens):
        for j in range(num_rels):
            if rng.random() < 0.25:
                continue
            pool = all_injections(gens[i], rels[j])
            if not pool:
                continue
            terms: dict[tuple[int, ...], int] = {}
            for _ in range(rng.randint(1, 3)):
                f = rng.choice(pool)
                terms[f] = terms.get(f, 0) + rng.choice([-2, -1, 1, 2])
            s = FormalSum(gens[i], rels[j], terms)
            if not s.is_zero:
                entries[(i, j)] = s
    return PresentationMatrix(gens, rels, entries)
