"""Shared sampling helpers for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from hsw.halg import HPoly, Word
from hsw.monoid import UNIT, ZERO, cyclic

ALPHABET_01 = (ZERO, UNIT)
ALPHABET_01Z = (ZERO, UNIT, cyclic(1))
ALPHABET_01ZZ2 = (ZERO, UNIT, cyclic(1), cyclic(2))

COEFFS = (-3, -2, -1, 1, 2, 3, Fraction(1, 2), Fraction(-2, 3))


def random_word(rng: random.Random, weight: int, alphabet) -> Word:
    return Word(tuple(rng.choice(alphabet) for _ in range(weight)))


def random_poly(
    rng: random.Random,
    max_weight: int,
    alphabet,
    max_terms: int = 2,
) -> HPoly:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        weight = rng.randint(0, max_weight)
        terms.append((random_word(rng, weight, alphabet), rng.choice(COEFFS)))
    return HPoly(terms)
