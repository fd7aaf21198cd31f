"""Knot-family identifiers, parameter validation, and crossing-number maps.

Families are addressed by canonical string IDs:

    unknot
    torus:m,n                 torus knot/link with m strands, n leaves
    fam:2k2:k=K               twist family generated by the figure-8 knot
    fam:2k1_2:k=K             twist family generated by 5_2
    fam:2k1_1_2:k=K           twist family generated by 6_2
    fam:2k2_3:k=K             twist family generated by 7_3 (K=0 gives 5_2)
    pretzel:k=K               pretzel family P(-2, 3, -(2k+1)); K=0 gives 5_2
    app:a:k=K .. app:d:k=K    four further twist families
    compose:sum(a,b)          connected sum
    compose:disjoint(a,b)     disjoint union
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from math import gcd

__all__ = [
    "FamilyId",
    "Knot",
    "FamilyError",
    "parse_family_id",
    "format_family_id",
    "crossing_number",
    "k_min",
    "in_printed_range",
    "TWISTED_FAMILIES",
]


class FamilyError(ValueError):
    pass


class FamilyId(Enum):
    UNKNOT = "unknot"
    TORUS = "torus"
    FAM_2K_2 = "fam:2k2"
    FAM_2K1_2 = "fam:2k1_2"
    FAM_2K1_1_2 = "fam:2k1_1_2"
    FAM_2K2_3 = "fam:2k2_3"
    PRETZEL = "pretzel"
    APP_A = "app:a"
    APP_B = "app:b"
    APP_C = "app:c"
    APP_D = "app:d"
    COMPOSE_SUM = "compose:sum"
    COMPOSE_DISJOINT = "compose:disjoint"


# families indexed by a single twist parameter k
TWISTED_FAMILIES = (
    FamilyId.FAM_2K_2,
    FamilyId.FAM_2K1_2,
    FamilyId.FAM_2K1_1_2,
    FamilyId.FAM_2K2_3,
    FamilyId.PRETZEL,
    FamilyId.APP_A,
    FamilyId.APP_B,
    FamilyId.APP_C,
    FamilyId.APP_D,
)

# minimum admissible k per twisted family (k=0 only where the generating
# projection itself belongs to the family)
_K_MIN = {
    FamilyId.FAM_2K_2: 1,
    FamilyId.FAM_2K1_2: 1,
    FamilyId.FAM_2K1_1_2: 1,
    FamilyId.FAM_2K2_3: 0,
    FamilyId.PRETZEL: 0,
    FamilyId.APP_A: 1,
    FamilyId.APP_B: 1,
    FamilyId.APP_C: 1,
    FamilyId.APP_D: 1,
}

# absolute floor below which the defining formulas stop making sense; the
# window between the floor and _K_MIN is reachable only via extrapolation
_K_FLOOR = {
    FamilyId.FAM_2K_2: 0,
    FamilyId.FAM_2K1_2: 0,
    FamilyId.FAM_2K1_1_2: 0,
    FamilyId.FAM_2K2_3: 0,
    FamilyId.PRETZEL: 0,
    FamilyId.APP_A: 1,
    FamilyId.APP_B: 1,
    FamilyId.APP_C: 0,
    FamilyId.APP_D: 0,
}

# total crossing number n as a function of k
_N_OF_K = {
    FamilyId.FAM_2K_2: lambda k: 2 + 2 * k,
    FamilyId.FAM_2K1_2: lambda k: 3 + 2 * k,
    FamilyId.FAM_2K1_1_2: lambda k: 4 + 2 * k,
    FamilyId.FAM_2K2_3: lambda k: 5 + 2 * k,
    FamilyId.PRETZEL: lambda k: 6 + 2 * k,
    FamilyId.APP_A: lambda k: 4 + 2 * k,
    FamilyId.APP_B: lambda k: 4 + 2 * k,
    FamilyId.APP_C: lambda k: 6 + 2 * k,
    FamilyId.APP_D: lambda k: 6 + 2 * k,
}

_K_CAP = 10_000


@dataclass(frozen=True)
class Knot:
    family: FamilyId
    params: tuple = ()
    children: tuple = ()

    def __post_init__(self):
        f = self.family
        if f is FamilyId.UNKNOT:
            if self.params:
                raise FamilyError("unknot takes no parameters")
        elif f is FamilyId.TORUS:
            m, n = self._two()
            if m < 1 or n < 1:
                raise FamilyError(f"torus parameters must be >= 1, got ({m},{n})")
        elif f in (FamilyId.COMPOSE_SUM, FamilyId.COMPOSE_DISJOINT):
            if len(self.children) != 2:
                raise FamilyError("composition requires exactly two children")
        elif f in _K_MIN:
            if len(self.params) != 1:
                raise FamilyError(f"{f.value} takes one parameter")
            (k,) = self.params
            if k < _K_FLOOR[f]:
                raise FamilyError(f"{f.value} is undefined below k={_K_FLOOR[f]}, got k={k}")
            if k > _K_CAP:
                raise FamilyError(f"k={k} exceeds recursion cap {_K_CAP}")
        else:  # pragma: no cover
            raise FamilyError(f"unhandled family {f}")

    def _two(self):
        if len(self.params) != 2:
            raise FamilyError(f"{self.family.value} takes two parameters")
        return self.params

    @property
    def k(self) -> int:
        (k,) = self.params
        return k

    @property
    def is_torus_knot(self) -> bool:
        return self.family is FamilyId.TORUS and gcd(*self.params) == 1

    @property
    def is_knot(self) -> bool:
        """True when the object is a knot (one component), not a link."""
        if self.family is FamilyId.TORUS:
            return self.is_torus_knot
        if self.family in (FamilyId.COMPOSE_SUM, FamilyId.COMPOSE_DISJOINT):
            return self.family is FamilyId.COMPOSE_SUM and all(c.is_knot for c in self.children)
        return True


def crossing_number(knot: Knot) -> int:
    """Total crossing number n of a twisted-family member (sum of its Conway
    numbers), as used by the printed closed forms."""
    if knot.family not in _N_OF_K:
        raise FamilyError(f"{knot.family.value} has no k -> n map")
    return _N_OF_K[knot.family](knot.k)


def k_min(family: FamilyId) -> int:
    return _K_MIN[family]


def in_printed_range(knot: Knot) -> bool:
    """True when the member lies in the range its family's formulas are
    stated for (k >= the generating member's index)."""
    if knot.family not in _K_MIN:
        return True
    return knot.k >= _K_MIN[knot.family]


_TORUS_RE = re.compile(r"^torus:(-?\d+),(-?\d+)$")
_K_RE = re.compile(r"^(fam:2k2|fam:2k1_2|fam:2k1_1_2|fam:2k2_3|pretzel|app:[abcd]):k=(-?\d+)$")
_COMPOSE_RE = re.compile(r"^compose:(sum|disjoint)\((.*)\)$")


def _child_splits(body: str) -> list[tuple[str, str]]:
    """All ways to split at a top-level comma (torus ids contain commas, so
    the first split that parses on both sides wins)."""
    depth = 0
    out = []
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            out.append((body[:i], body[i + 1 :]))
    if not out:
        raise FamilyError(f"composition needs two comma-separated ids: {body!r}")
    return out


def parse_family_id(text: str, extrapolate: bool = False) -> Knot:
    s = text.strip()
    if s == "unknot":
        return Knot(FamilyId.UNKNOT)
    m = _TORUS_RE.match(s)
    if m:
        return Knot(FamilyId.TORUS, (int(m.group(1)), int(m.group(2))))
    m = _K_RE.match(s)
    if m:
        knot = Knot(FamilyId(m.group(1)), (int(m.group(2)),))
        if not extrapolate and not in_printed_range(knot):
            raise FamilyError(
                f"{s}: k below the generating member (k >= {_K_MIN[knot.family]}); "
                "evaluation there is extrapolation and must be requested explicitly"
            )
        return knot
    m = _COMPOSE_RE.match(s)
    if m:
        kind = FamilyId.COMPOSE_SUM if m.group(1) == "sum" else FamilyId.COMPOSE_DISJOINT
        for left, right in _child_splits(m.group(2)):
            try:
                children = (
                    parse_family_id(left, extrapolate),
                    parse_family_id(right, extrapolate),
                )
            except FamilyError:
                continue
            return Knot(kind, (), children)
        raise FamilyError(f"cannot split composition children: {text!r}")
    raise FamilyError(f"unknown family id: {text!r}")


def format_family_id(knot: Knot) -> str:
    f = knot.family
    if f is FamilyId.UNKNOT:
        return "unknot"
    if f is FamilyId.TORUS:
        return f"torus:{knot.params[0]},{knot.params[1]}"
    if f in (FamilyId.COMPOSE_SUM, FamilyId.COMPOSE_DISJOINT):
        kind = "sum" if f is FamilyId.COMPOSE_SUM else "disjoint"
        return f"compose:{kind}({format_family_id(knot.children[0])},{format_family_id(knot.children[1])})"
    return f"{f.value}:k={knot.k}"
