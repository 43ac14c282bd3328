"""Eventual multiplicities, the stable dimension polynomial, and the onset.

Once the degree passes the onset bound (largest generator degree plus
largest relation degree), the decomposition of a finitely presented
FI-module stops changing except for the growing top rows, and its
dimension follows an exact polynomial.  Both are read off from coranks of
the transported presentation matrices, one per partition up to the
largest generator degree.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm

from .combinatorics import Partition, partitions
from .presentation import (
    PresentationMatrix,
    augmentation_matrix,
    induced_raw_presentation,
)


@dataclass(frozen=True)
class MultiplicityTable:
    """Eventual multiplicity of every partition up to the generator bound.

    ``counts`` holds one entry (zeros included) for each partition of
    size at most ``max_generator_degree``; partitions beyond that bound
    have multiplicity 0 implicitly.
    """

    counts: dict[Partition, int]
    max_generator_degree: int
    max_relation_degree: int

    def __getitem__(self, lam: Partition) -> int:
        if sum(lam) > self.max_generator_degree:
            return 0
        return self.counts[tuple(lam)]

    def shapes(self) -> list[Partition]:
        """Partitions in table order: by size, then descending lex."""
        return [
            lam
            for size in range(self.max_generator_degree + 1)
            for lam in partitions(size)
        ]

    def __iter__(self):
        return ((lam, self.counts[lam]) for lam in self.shapes())


def eventual_multiplicities(z: PresentationMatrix) -> MultiplicityTable:
    """Corank of the transported presentation, for every relevant shape."""
    counts = {}
    for size in range(z.max_generator_degree + 1):
        for lam in partitions(size):
            counts[lam] = induced_raw_presentation(lam, z).corank()
    return MultiplicityTable(
        counts, z.max_generator_degree, z.max_relation_degree
    )


def eventual_invariants(z: PresentationMatrix) -> int:
    """Eventual multiplicity of the trivial representation.

    The corank of the augmented presentation; equal to the empty
    partition's entry of the full table.
    """
    return augmentation_matrix(z).corank()


def onset_bound(z: PresentationMatrix) -> int:
    """Degree from which the eventual multiplicities are attained."""
    return z.max_generator_degree + z.max_relation_degree


@dataclass(frozen=True)
class DimensionPolynomial:
    """Exact polynomial giving dim M[n] for every degree n >= onset.

    ``coeffs`` are Fractions, ascending degree, no trailing zeros.
    """

    coeffs: tuple[Fraction, ...]
    onset: int

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def __call__(self, n: int):
        value = sum((c * n**e for e, c in enumerate(self.coeffs)), Fraction(0))
        return int(value) if value.denominator == 1 else value

    def __str__(self):
        if not self.coeffs:
            return "0"
        denom = lcm(*(c.denominator for c in self.coeffs))
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = int(self.coeffs[e] * denom)
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "n" if e == 1 else f"n^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        numerator = " ".join(terms) if terms else "0"
        if denom == 1:
            return numerator
        return f"({numerator})/{denom}"


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def _shape_term(lam: Partition) -> list[Fraction]:
    """Coefficients of the degree polynomial contributed by one shape.

    With m = |lam| and l_i = lam_i + m - i for i = 1..m (missing parts
    count as zero), the term is

        prod_{i<j} (l_i - l_j) / prod_i (l_i)!  *  prod_i (n - l_i),

    a polynomial of degree m; both products are 1 when lam is empty.
    """
    m = sum(lam)
    parts = list(lam) + [0] * (m - len(lam))
    ls = [parts[i] + m - (i + 1) for i in range(m)]
    scalar = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            scalar *= ls[i] - ls[j]
        scalar /= factorial(ls[i])
    poly = [scalar]
    for l in ls:
        poly = _poly_mul(poly, [Fraction(-l), Fraction(1)])
    return poly


def dimension_polynomial(z: PresentationMatrix) -> DimensionPolynomial:
    """The stable dimension polynomial of the presented module.

    Sums each shape's term weighted by its eventual multiplicity; exact
    rational coefficients, valid from the onset bound.
    """
    table = eventual_multiplicities(z)
    total = [Fraction(0)] * (z.max_generator_degree + 1)
    for lam, count in table:
        if count == 0:
            continue
        for e, c in enumerate(_shape_term(lam)):
            total[e] += count * c
    while total and total[-1] == 0:
        total.pop()
    return DimensionPolynomial(tuple(total), onset_bound(z))


__all__ = [
    "DimensionPolynomial",
    "MultiplicityTable",
    "dimension_polynomial",
    "eventual_invariants",
    "eventual_multiplicities",
    "onset_bound",
]
