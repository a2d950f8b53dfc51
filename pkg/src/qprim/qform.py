"""Binary quadratic forms over Z: unimodular action, Gauss reduction, automorphs.

A form [a, b, c] stands for a*x^2 + b*x*y + c*y^2.  Only negative
discriminants are handled; the constructor pins the positive definite
branch (a > 0) and primitivity (gcd(a, b, c) = 1), so each proper class
has a unique reduced representative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True, order=True)
class IntMap2:
    """Integer substitution (x, y) |-> (m11*x + m12*y, m21*x + m22*y)."""

    m11: int
    m12: int
    m21: int
    m22: int

    @classmethod
    def identity(cls) -> "IntMap2":
        return cls(1, 0, 0, 1)

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return (self.m11 * x + self.m12 * y, self.m21 * x + self.m22 * y)

    def __mul__(self, other: "IntMap2") -> "IntMap2":
        # matrix product: apply_map(f, M * N) == apply_map(apply_map(f, M), N)
        return IntMap2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def rows(self) -> list[list[int]]:
        return [[self.m11, self.m12], [self.m21, self.m22]]

    def __str__(self) -> str:
        return f"[[{self.m11},{self.m12}],[{self.m21},{self.m22}]]"


@dataclass(frozen=True, order=True)
class BinaryForm:
    """Primitive positive definite binary quadratic form a*x^2 + b*x*y + c*y^2."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        d = self.b * self.b - 4 * self.a * self.c
        if d >= 0:
            raise ValueError(f"form {self} has non-negative discriminant {d}")
        if self.a <= 0:
            raise ValueError(f"form {self} is negative definite (a <= 0)")
        if math.gcd(self.a, math.gcd(self.b, self.c)) != 1:
            raise ValueError(f"form {self} is not primitive")

    @property
    def D(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def as_json(self) -> dict[str, int]:
        return {"D": self.D, "a": self.a, "b": self.b, "c": self.c}

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"


class Reduction(NamedTuple):
    """A reduced form together with the det-1 substitution reaching it."""

    form: BinaryForm
    map: IntMap2


def discriminant(f: BinaryForm) -> int:
    return f.D


def is_discriminant(D: int) -> bool:
    """True iff D is a valid negative form discriminant (D < 0, D = 0,1 mod 4)."""
    return D < 0 and D % 4 in (0, 1)


def discriminants_in(dmin: int, dmax: int) -> list[int]:
    """Valid negative discriminants in [dmin, dmax], ascending."""
    return [D for D in range(dmin, min(dmax, -3) + 1) if is_discriminant(D)]


def transformed_coefficients(f: BinaryForm, M: IntMap2) -> tuple[int, int, int]:
    """Coefficients of f(m11*x + m12*y, m21*x + m22*y), without validation.

    Unlike apply_map this never constructs a BinaryForm, so it also serves
    scaled images like f o T = p^2 f whose coefficients are imprimitive.
    """
    a2 = f.evaluate(M.m11, M.m21)
    c2 = f.evaluate(M.m12, M.m22)
    b2 = (
        2 * f.a * M.m11 * M.m12
        + f.b * (M.m11 * M.m22 + M.m12 * M.m21)
        + 2 * f.c * M.m21 * M.m22
    )
    return (a2, b2, c2)


def apply_map(f: BinaryForm, M: IntMap2) -> BinaryForm:
    """The form f o M.  For det M = +-1 this preserves discriminant and primitivity."""
    a2, b2, c2 = transformed_coefficients(f, M)
    return BinaryForm(a2, b2, c2)


def is_reduced(f: BinaryForm) -> bool:
    """Gauss-reduced: |b| <= a <= c, with b >= 0 when |b| = a or a = c."""
    a, b, c = f.a, f.b, f.c
    if not (abs(b) <= a <= c):
        return False
    if b < 0 and (-b == a or a == c):
        return False
    return True


def reduce(f: BinaryForm) -> Reduction:
    """Gauss reduction; returns the reduced form and a det-1 map M with f o M reduced."""
    if f.D >= 0 or f.a <= 0:
        raise ValueError(f"cannot reduce non positive definite form {f}")
    g = f
    total = IntMap2.identity()
    while True:
        a, b, c = g.a, g.b, g.c
        if b <= -a or b > a:
            t = (a - b) // (2 * a)  # shifts b into (-a, a]
            step = IntMap2(1, t, 0, 1)
        elif a > c or (a == c and b < 0):
            step = IntMap2(0, -1, 1, 0)  # [a,b,c] -> [c,-b,a]
        else:
            break
        g = apply_map(g, step)
        total = total * step
    assert is_reduced(g) and total.det == 1
    return Reduction(g, total)


def inverse_rep(f: BinaryForm) -> BinaryForm:
    """Reduced representative of the inverse class (mirror form [a,-b,c], reduced)."""
    return reduce(BinaryForm(f.a, -f.b, f.c)).form


def is_ambiguous(f: BinaryForm) -> bool:
    """For a reduced form: class has order <= 2, i.e. b = 0, a = b or a = c."""
    if not is_reduced(f):
        raise ValueError(f"is_ambiguous expects a reduced form, got {f}")
    return f.b == 0 or f.a == f.b or f.a == f.c


def omega(D: int) -> int:
    """Number of automorphs: 6 for D = -3, 4 for D = -4, else 2."""
    if not is_discriminant(D):
        raise ValueError(f"{D} is not a valid negative discriminant")
    if D == -3:
        return 6
    if D == -4:
        return 4
    return 2


def improper_automorph(f: BinaryForm) -> IntMap2:
    """A det -1 map fixing the ambiguous reduced form f.

    Cases: b = 0 -> (x, y) |-> (x, -y); a = b -> (x, y) |-> (x + y, -y);
    a = c -> (x, y) |-> (y, x).  First matching case wins.
    """
    if not is_ambiguous(f):
        raise ValueError(f"form {f} is not ambiguous")
    if f.b == 0:
        sigma = IntMap2(1, 0, 0, -1)
    elif f.a == f.b:
        sigma = IntMap2(1, 1, 0, -1)
    else:  # a == c
        sigma = IntMap2(0, 1, 1, 0)
    assert sigma.det == -1 and apply_map(f, sigma) == f
    return sigma
