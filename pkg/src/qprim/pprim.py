"""Complete p-primitivity of proper classes, decided constructively.

A class is completely p-primitive when every integer it represents also
has a representation (x, y) with gcd(x, y, p) = 1.  For discriminant
D < 0 and a prime p not dividing D the decision runs in three routes:

  1. (D/p) = -1: never completely p-primitive; p^2 * a is represented
     but only with both coordinates divisible by p.
  2. 4p^2 = m^2 + |D|n^2 solvable with gcd(m, n, p) = 1: every class of
     discriminant D is completely p-primitive, and each class rep f
     carries an explicit scaling isometry T with f o T = p^2 f.
  3. otherwise: a class qualifies iff it has order 4 and its square
     p-primitively represents p^2.

Each verdict carries machine-checkable evidence for its route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .classgroup import ProperClass, compose, element_order, enumerate_classes
from .intarith import is_prime, kronecker
from .qform import BinaryForm, IntMap2, is_discriminant, transformed_coefficients
from .repcount import rep_counts

ROUTE_SYMBOL_MINUS_ONE = "symbol_minus_one"
ROUTE_PRINCIPAL_SQUARE = "principal_square"
ROUTE_ORDER_FOUR_SQUARE = "order_four_square"
ROUTE_ORDER_FOUR_SQUARE_FAILED = "order_four_square_failed"

ROUTES = (
    ROUTE_SYMBOL_MINUS_ONE,
    ROUTE_PRINCIPAL_SQUARE,
    ROUTE_ORDER_FOUR_SQUARE,
    ROUTE_ORDER_FOUR_SQUARE_FAILED,
)


class TwoSquareSolution(NamedTuple):
    """(m, n) with 4p^2 = m^2 + |D|n^2 and gcd(m, n, p) = 1."""

    m: int
    n: int
    p: int


def _check_split(D: int, p: int) -> None:
    if not is_discriminant(D):
        raise ValueError(f"{D} is not a valid negative discriminant")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    s = kronecker(D, p)
    if s == 0:
        raise ValueError(f"p = {p} divides the discriminant {D}")
    if s == -1:
        raise ValueError(f"(D/p) = -1 for D = {D}, p = {p}: no two-square solution")


def solve_two_square(D: int, p: int) -> list[TwoSquareSolution]:
    """All (m, n) with m, n >= 0, 4p^2 = m^2 + |D|n^2, gcd(m, n, p) = 1.

    Sorted by n ascending.  Requires (D/p) = 1; the scan over
    n <= sqrt(4p^2/|D|) is exhaustive.
    """
    _check_split(D, p)
    abs_d = -D
    four_p2 = 4 * p * p
    sols = []
    for n in range(math.isqrt(four_p2 // abs_d) + 1):
        rem = four_p2 - abs_d * n * n
        m = math.isqrt(rem)
        if m * m == rem and math.gcd(math.gcd(m, n), p) == 1:
            sols.append(TwoSquareSolution(m, n, p))
    return sols


def build_isometry(f: BinaryForm, sol: TwoSquareSolution) -> IntMap2:
    """Integer map T with f o T = p^2 f, det T = p^2, T != 0 mod p, p not | tr T.

    T = [[(m + b*n)/2, c*n], [-a*n, (m - b*n)/2]]; its trace is m and its
    determinant is (m^2 - D*n^2)/4 = p^2.
    """
    m, n, p = sol
    if 4 * p * p != m * m - f.D * n * n:
        raise ValueError(f"{sol} does not solve 4p^2 = m^2 + |D|n^2 for D = {f.D}")
    if math.gcd(math.gcd(m, n), p) != 1:
        raise ValueError(f"{sol} is not p-primitive")
    if (m + f.b * n) % 2 != 0:
        raise ValueError(f"parity mismatch between {sol} and form {f}")
    t = IntMap2((m + f.b * n) // 2, f.c * n, -f.a * n, (m - f.b * n) // 2)
    p2 = p * p
    assert t.det == p2
    assert transformed_coefficients(f, t) == (p2 * f.a, p2 * f.b, p2 * f.c)
    assert any(e % p != 0 for e in (t.m11, t.m12, t.m21, t.m22))
    assert m % p != 0  # trace coprime to p
    return t


def p_square_in_class(x: ProperClass, p: int) -> tuple[bool, tuple[int, int] | None]:
    """Whether p^2 is p-primitively represented by x's reduced form, with witness."""
    rec = rep_counts(x.rep, p * p, p)
    for sx, sy in rec.solutions:
        if math.gcd(sx, sy) % p != 0:
            return True, (sx, sy)
    return False, None


@dataclass(frozen=True)
class Verdict:
    """Decision for one (class, p) pair with machine-checkable evidence.

    evidence keys by route:
      symbol_minus_one:         witness (represented, never p-primitively)
      principal_square:         m, n (4p^2 = m^2 + |D|n^2)
      order_four_square:        order, square_form, solution (of p^2)
      order_four_square_failed: order, square_form, square_has_p_square
    """

    cls: ProperClass
    p: int
    completely_p_primitive: bool
    route: str
    evidence: dict

    def to_json(self) -> dict:
        return {
            "cpp": self.completely_p_primitive,
            "evidence": self.evidence,
            "form": list(self.cls.rep.triple()),
            "p": self.p,
            "route": self.route,
        }


def classify(x: ProperClass, p: int) -> Verdict:
    """Decide whether the class x is completely p-primitive (p prime, p not | D)."""
    D = x.D
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    s = kronecker(D, p)
    if s == 0:
        raise ValueError(f"p = {p} divides the discriminant {D}")
    if s == -1:
        # every solution of f = p^2*a has both coordinates divisible by p
        return Verdict(
            x, p, False, ROUTE_SYMBOL_MINUS_ONE, {"witness": p * p * x.rep.a}
        )
    sols = solve_two_square(D, p)
    if sols:
        m, n, _ = sols[0]
        return Verdict(x, p, True, ROUTE_PRINCIPAL_SQUARE, {"m": m, "n": n})
    order = element_order(x)
    square = compose(x, x)
    has_sq, xy = p_square_in_class(square, p)
    if order == 4 and has_sq:
        assert xy is not None
        return Verdict(
            x,
            p,
            True,
            ROUTE_ORDER_FOUR_SQUARE,
            {
                "order": 4,
                "solution": list(xy),
                "square_form": list(square.rep.triple()),
            },
        )
    return Verdict(
        x,
        p,
        False,
        ROUTE_ORDER_FOUR_SQUARE_FAILED,
        {
            "order": order,
            "square_form": list(square.rep.triple()),
            "square_has_p_square": has_sq,
        },
    )


def classify_all(D: int, p: int) -> list[Verdict]:
    """Verdicts for every class of discriminant D, in representative order."""
    return [classify(x, p) for x in enumerate_classes(D).classes]
