from hypothesis import given, strategies as st

from qcisyz.orders import (
    GREVLEX,
    LEX,
    block_elim_key,
    grevlex_key,
    mono_deg,
    mono_divides,
    mono_lcm,
    mono_mul,
    pot_key,
    top_key,
)

monos = st.tuples(
    st.integers(0, 6), st.integers(0, 6), st.integers(0, 6)
)


def test_grevlex_examples():
    x2, xy, y2, xz = (2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1)
    assert grevlex_key(x2) > grevlex_key(xy)
    assert grevlex_key(y2) > grevlex_key(xz)
    assert GREVLEX.compare(x2, xy) > 0


def test_lex_differs_from_grevlex():
    # x*z^2 vs y^3: grevlex prefers the one with less z, lex prefers x
    a, b = (1, 0, 2), (0, 3, 0)
    assert GREVLEX.compare(a, b) < 0
    assert LEX.compare(a, b) > 0


@given(a=monos, b=monos)
def test_order_compatible_with_multiplication(a, b):
    for c in [(1, 0, 0), (0, 2, 1)]:
        if grevlex_key(a) > grevlex_key(b):
            assert grevlex_key(mono_mul(a, c)) > grevlex_key(mono_mul(b, c))


@given(a=monos, b=monos)
def test_total_order_and_degree_refinement(a, b):
    ka, kb = grevlex_key(a), grevlex_key(b)
    assert (ka == kb) == (a == b)
    if mono_deg(a) > mono_deg(b):
        assert ka > kb


@given(a=monos, b=monos)
def test_lcm_and_divisibility(a, b):
    l = mono_lcm(a, b)
    assert mono_divides(a, l) and mono_divides(b, l)
    if mono_divides(a, b):
        assert mono_mul(a, tuple(y - x for x, y in zip(a, b))) == b


def test_module_keys():
    m, n = (1, 0, 0), (0, 1, 0)
    top = top_key(grevlex_key)
    pot = pot_key(grevlex_key)
    blk = block_elim_key(1, grevlex_key)
    # TOP: monomial first, lower position wins ties
    assert top((0, m)) > top((1, m)) > top((0, n))
    # POT: position dominates
    assert pot((1, n)) < pot((0, n))
    # block order: positions below the split dominate everything above
    assert blk((0, n)) > blk((1, m))
