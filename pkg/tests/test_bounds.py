"""Bound chains: monotone convergence and sandwich verification."""
import pytest

from besselprod.bounds import Mode, convex_chain, starlike_chain
from besselprod.errors import DomainError
from besselprod.radii import Kind

STAR_GRID = {
    Kind.F: (-0.4, 0.0, 0.5, 1.0, 2.5, 10.0),
    Kind.G: (-0.4, 0.0, 0.5, 1.0, 2.5, 10.0),
    Kind.H: (-0.4, 0.0, 0.5, 1.0, 2.5, 10.0),
    Kind.U: (0.5, 1.0, 2.5, 10.0),
    Kind.V: (-0.4, 0.0, 0.5, 1.0, 2.5, 10.0),
    Kind.W: (-0.4, 0.0, 0.5, 1.0, 2.5, 10.0),
}


@pytest.mark.parametrize("kind", list(Kind))
def test_starlike_chains(kind):
    for nu in STAR_GRID[kind]:
        chain = starlike_chain(kind, nu)
        assert chain.verdict, (kind, nu, chain)
        lows, ups = chain.lowers, chain.uppers
        assert all(a < b for a, b in zip(lows, lows[1:]))
        assert all(b < a for a, b in zip(ups, ups[1:]))
        assert all(lo < chain.radius for lo in lows)
        assert all(chain.radius < up for up in ups)
        assert chain.radius < chain.crude_upper


@pytest.mark.parametrize("kind", [Kind.G, Kind.H, Kind.V, Kind.W])
def test_convex_chains(kind):
    for nu in STAR_GRID[kind]:
        chain = convex_chain(kind, nu)
        assert chain.verdict, (kind, nu, chain)


def test_no_convex_chain_for_power_kinds():
    with pytest.raises(DomainError):
        convex_chain(Kind.F, 1.0)
    with pytest.raises(DomainError):
        convex_chain(Kind.U, 1.0)


def test_chain_tightness():
    chain = starlike_chain(Kind.G, 0.0)
    # the k = 4 pair pins the radius to ~7 digits already
    assert chain.uppers[-1] - chain.lowers[-1] < 1e-5 * chain.radius
