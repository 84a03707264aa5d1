"""Gamma function oracles and reflection behavior."""
import math

import pytest

from besselprod.errors import DomainError
from besselprod.gammafn import gamma

# frozen 20-digit reference values
ORACLES = [
    (0.5, 1.7724538509055160273),
    (1.0, 1.0),
    (5.0, 24.0),
    (4.7, 15.431411600047435652),
    (-1.3, 3.3283470067886092808),
    (10.0, 362880.0),
]


@pytest.mark.parametrize("x, expected", ORACLES)
def test_gamma_oracles(x, expected):
    assert gamma(x) == pytest.approx(expected, rel=5e-15)


def test_gamma_recurrence():
    for x in (0.3, 1.7, 6.2, -0.8):
        assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-13)


def test_gamma_poles():
    for x in (0.0, -1.0, -5.0):
        with pytest.raises(DomainError):
            gamma(x)
