"""Shared fixtures: the family corpus used across the property suites."""

import pytest

from polyvis import parse_family

# Linear, pure square, the main quadratic, a denser quadratic, and a cubic
# with a coefficient gap. Degree and shape variety on purpose.
CORPUS_SPECS = ("1", "1,0", "1,1", "2,5", "1,0,1")
CORPUS = tuple(parse_family(s) for s in CORPUS_SPECS)


@pytest.fixture(params=CORPUS_SPECS, ids=lambda s: f"P={s}")
def family(request):
    return parse_family(request.param)
