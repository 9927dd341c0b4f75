"""Shared helpers: deterministic random generators for field and ring values."""

from random import Random

import pytest

from simplexpoly.field import (
    CYCLOTOMIC,
    RATIONAL,
    FieldSpec,
    prime_field,
    random_element,
)
from simplexpoly.poly import Polynomial

ALL_FIELDS = [RATIONAL, prime_field(3), prime_field(5), prime_field(7), CYCLOTOMIC]


@pytest.fixture(params=ALL_FIELDS, ids=repr)
def any_field(request) -> FieldSpec:
    return request.param


def random_polynomial(
    field: FieldSpec,
    arity: int,
    rng: Random,
    max_exp: int = 3,
    max_terms: int = 5,
    nonzero: bool = False,
) -> Polynomial:
    while True:
        raw = {}
        for _ in range(rng.randint(0, max_terms)):
            exps = tuple(rng.randint(0, max_exp) for _ in range(arity))
            raw[exps] = random_element(field, rng)
        p = Polynomial.from_terms(field, arity, raw)
        if not (nonzero and p.is_zero()):
            return p
