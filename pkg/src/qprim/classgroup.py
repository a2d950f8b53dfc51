"""Proper classes of a negative discriminant under Dirichlet composition."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from . import qform
from .intarith import ext_gcd
from .qform import BinaryForm, is_discriminant


@dataclass(frozen=True, order=True)
class ProperClass:
    """A proper equivalence class, keyed by its unique reduced representative."""

    rep: BinaryForm

    @property
    def D(self) -> int:
        return self.rep.D

    def __str__(self) -> str:
        return str(self.rep)


@dataclass(frozen=True)
class ClassGroup:
    """All proper classes of one discriminant, sorted by representative."""

    D: int
    classes: tuple[ProperClass, ...]
    identity: ProperClass

    @property
    def h(self) -> int:
        return len(self.classes)

    def index_of(self, cls: ProperClass) -> int:
        return self._index[cls]

    @cached_property
    def _index(self) -> dict[ProperClass, int]:
        return {c: i for i, c in enumerate(self.classes)}

    @cached_property
    def composition_table(self) -> tuple[tuple[int, ...], ...]:
        """h x h table of class indices under composition."""
        return tuple(
            tuple(self.index_of(compose(x, y)) for y in self.classes)
            for x in self.classes
        )


@lru_cache(maxsize=None)
def identity_form(D: int) -> ProperClass:
    """Principal class: [1,0,-D/4] for even D, [1,1,(1-D)/4] for odd D."""
    if not is_discriminant(D):
        raise ValueError(f"{D} is not a valid negative discriminant")
    if D % 2 == 0:
        f = BinaryForm(1, 0, -D // 4)
    else:
        f = BinaryForm(1, 1, (1 - D) // 4)
    return ProperClass(qform.reduce(f).form)


@lru_cache(maxsize=None)
def enumerate_classes(D: int) -> ClassGroup:
    """Census of reduced forms: a <= sqrt(|D|/3), b = D (mod 2), 4a | b^2 - D."""
    if not is_discriminant(D):
        raise ValueError(f"{D} is not a valid negative discriminant")
    forms = []
    for a in range(1, math.isqrt(-D // 3) + 1):
        for b in range(-a, a + 1):
            if (b - D) % 2 != 0:
                continue
            num = b * b - D
            if num % (4 * a) != 0:
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue  # tie convention: b >= 0 when |b| = a or a = c
            if math.gcd(a, math.gcd(b, c)) != 1:
                continue
            forms.append(BinaryForm(a, b, c))
    forms.sort()
    classes = tuple(ProperClass(f) for f in forms)
    ident = identity_form(D)
    assert ident in classes
    return ClassGroup(D, classes, ident)


def compose_forms(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Dirichlet composition, returned reduced.

    With e = gcd(a1, a2, (b1+b2)/2), a solution B of

        B = b1 (mod 2*a1/e),  B = b2 (mod 2*a2/e),  B^2 = D (mod 4*a1*a2/e^2)

    always exists; the composite is [a1*a2/e^2, B, e^2*(B^2-D)/(4*a1*a2)].
    B is obtained from a Bezout identity x*a1 + y*a2 + z*(b1+b2)/2 = e and
    taken as the smallest nonnegative solution; any other solution yields
    the same class.
    """
    D = f.D
    if g.D != D:
        raise ValueError(f"discriminant mismatch: {f.D} vs {g.D}")
    a1, b1 = f.a, f.b
    a2, b2 = g.a, g.b
    beta = (b1 + b2) // 2
    g1, x1, y1 = ext_gcd(a1, a2)
    e, t, z = ext_gcd(g1, beta)
    x, y = x1 * t, y1 * t  # now a1*x + a2*y + beta*z = e
    A = (a1 // e) * (a2 // e)
    num = b2 * x * a1 + b1 * y * a2 + z * (b1 * b2 + D) // 2
    assert num % e == 0
    B = (num // e) % (2 * A)
    # the defining congruences must hold; never fail silently
    assert (B - b1) % (2 * a1 // e) == 0
    assert (B - b2) % (2 * a2 // e) == 0
    assert (B * B - D) % (4 * A) == 0
    C = (B * B - D) // (4 * A)
    return qform.reduce(BinaryForm(A, B, C)).form


def compose(x: ProperClass, z: ProperClass) -> ProperClass:
    return ProperClass(compose_forms(x.rep, z.rep))


def inverse_class(x: ProperClass) -> ProperClass:
    return ProperClass(qform.inverse_rep(x.rep))


def element_order(x: ProperClass) -> int:
    """Order of the class in the composition group."""
    ident = identity_form(x.D)
    k, power = 1, x
    while power != ident:
        power = compose(power, x)
        k += 1
    return k


def ambiguous_classes(group: ClassGroup) -> list[ProperClass]:
    """Classes of order <= 2, in representative order."""
    return [c for c in group.classes if compose(c, c) == group.identity]
