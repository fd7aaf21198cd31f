"""Grammar goldens and the randomized expression-tree round trip: one
thousand generated trees must parse back to the exact value they denote."""

import random

import pytest

from hzknots.laurent import LaurentPoly
from hzknots.polyexpr import ParseError, parse_poly
from hzknots.rational import rat

VZ = ("v", "z")


def test_goldens():
    p = parse_poly("-1*v^4 + 2*v^2 + 1*v^2*z^2")
    assert p == LaurentPoly(VZ, {(4, 0): -1, (2, 0): 2, (2, 2): 1})
    assert parse_poly("1") == LaurentPoly.one(VZ)
    assert parse_poly("  v ^ -3 * z\t") == LaurentPoly(VZ, {(-3, 1): 1})
    assert parse_poly("1/3*v - 7/2") == LaurentPoly(VZ, {(1, 0): rat(1, 3), (0, 0): rat(-7, 2)})
    assert parse_poly("(v + z)*(v - z)") == LaurentPoly(VZ, {(2, 0): 1, (0, 2): -1})
    assert parse_poly("- -v") == LaurentPoly(VZ, {(1, 0): 1})
    assert parse_poly("(1/3)^-2") == LaurentPoly.constant(VZ, 9)
    assert parse_poly("3*-2") == LaurentPoly.constant(VZ, -6)


@pytest.mark.parametrize(
    "text",
    ["", "v +", "(v", "v)", "v^^2", "1/0", "w", "(v + z)^-2", "v ** 2"],
)
def test_rejects_malformed(text):
    with pytest.raises(ParseError) as exc:
        parse_poly(text)
    assert "position" in str(exc.value)


def _gen_tree(rng: random.Random, depth: int):
    """Random expression tree -> (text, exact LaurentPoly value)."""
    if depth <= 0 or rng.random() < 0.3:
        kind = rng.randrange(4)
        if kind == 0:
            n, d = rng.randint(1, 30), rng.randint(1, 9)
            return (f"{n}/{d}" if d > 1 else f"{n}"), LaurentPoly.constant(VZ, rat(n, d))
        if kind == 1:
            return "v", LaurentPoly.var("v", VZ)
        if kind == 2:
            return "z", LaurentPoly.var("z", VZ)
        e = rng.randint(-4, 4)
        name = rng.choice(("v", "z"))
        return f"{name}^{e}", LaurentPoly.var(name, VZ) ** e
    op = rng.random()
    if op < 0.35:
        (ta, va), (tb, vb) = _gen_tree(rng, depth - 1), _gen_tree(rng, depth - 1)
        if rng.random() < 0.5:
            return f"({ta}) + ({tb})", va + vb
        return f"({ta}) - ({tb})", va - vb
    if op < 0.7:
        (ta, va), (tb, vb) = _gen_tree(rng, depth - 1), _gen_tree(rng, depth - 1)
        return f"({ta})*({tb})", va * vb
    if op < 0.85:
        ta, va = _gen_tree(rng, depth - 1)
        return f"-({ta})", -va
    ta, va = _gen_tree(rng, depth - 1)
    e = rng.randint(0, 3)
    return f"({ta})^{e}", va**e


def test_thousand_tree_round_trip():
    rng = random.Random(20260815)
    for _ in range(1000):
        text, value = _gen_tree(rng, 4)
        assert parse_poly(text) == value, text


def test_canonical_render_round_trip():
    rng = random.Random(7)
    seen = 0
    while seen < 200:
        _, value = _gen_tree(rng, 3)
        if value.is_zero:
            continue
        assert parse_poly(value.render()) == value
        seen += 1
