"""A ternary spectra identity demo at desk scale.

The family f_m = m^2 x^2 + 3y^2 + 2yz + 5z^2 (m not divisible by 3) and
its index-3 restriction tilde_f_m = f_m(3x + y - z, y, z) share, for
m = 1, the same represented values in the residue class 1 mod 3 except
for the single value 1.  Everything here is verified by exhaustive
lattice-point enumeration; the equivalence of tilde_f_1 with the shape
[4, 6, 7, yz=6, zx=2, xy=0] is additionally searched for over bounded
unimodular changes of basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Vec3 = tuple[int, int, int]


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


@dataclass(frozen=True, order=True)
class TernaryForm:
    """Positive definite integral ternary form
    xx*x^2 + yy*y^2 + zz*z^2 + yz*y*z + zx*z*x + xy*x*y."""

    xx: int
    yy: int
    zz: int
    yz: int
    zx: int
    xy: int

    def __post_init__(self) -> None:
        h = self.doubled_gram()
        m1 = h[0][0]
        m2 = h[0][0] * h[1][1] - h[0][1] * h[0][1]
        if m1 <= 0 or m2 <= 0 or _det3(h) <= 0:
            raise ValueError(f"ternary form {self} is not positive definite")

    def evaluate(self, x: int, y: int, z: int) -> int:
        return (
            self.xx * x * x
            + self.yy * y * y
            + self.zz * z * z
            + self.yz * y * z
            + self.zx * z * x
            + self.xy * x * y
        )

    def doubled_gram(self) -> tuple[tuple[int, int, int], ...]:
        """Integer matrix 2G; the Gram matrix itself may be half-integral."""
        return (
            (2 * self.xx, self.xy, self.zx),
            (self.xy, 2 * self.yy, self.yz),
            (self.zx, self.yz, 2 * self.zz),
        )

    def gram_det(self) -> Fraction:
        """det of the (half-integral) Gram matrix, det(2G)/8."""
        return Fraction(_det3(self.doubled_gram()), 8)

    def polar(self, u: Vec3, v: Vec3) -> int:
        """f(u + v) - f(u) - f(v): the cross coefficient pairing."""
        w = (u[0] + v[0], u[1] + v[1], u[2] + v[2])
        return self.evaluate(*w) - self.evaluate(*u) - self.evaluate(*v)

    def coefficients(self) -> tuple[int, int, int, int, int, int]:
        return (self.xx, self.yy, self.zz, self.yz, self.zx, self.xy)

    def __str__(self) -> str:
        return (
            f"[{self.xx},{self.yy},{self.zz},"
            f"yz={self.yz},zx={self.zx},xy={self.xy}]"
        )


def _det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def substitute(f: TernaryForm, cols: tuple[Vec3, Vec3, Vec3]) -> TernaryForm:
    """f o M for the integer matrix M with the given columns."""
    c1, c2, c3 = cols
    return TernaryForm(
        f.evaluate(*c1),
        f.evaluate(*c2),
        f.evaluate(*c3),
        f.polar(c2, c3),
        f.polar(c3, c1),
        f.polar(c1, c2),
    )


def build_fm(m: int) -> TernaryForm:
    """f_m = m^2 x^2 + 3y^2 + 2yz + 5z^2 for m >= 1 not divisible by 3."""
    if m < 1 or m % 3 == 0:
        raise ValueError(f"m must be >= 1 and not divisible by 3, got {m}")
    return TernaryForm(m * m, 3, 5, 2, 0, 0)


def build_tilde_fm(m: int) -> TernaryForm:
    """f_m(3x + y - z, y, z): f_m restricted to an index-3 sublattice."""
    return substitute(build_fm(m), ((3, 0, 0), (1, 1, 0), (-1, 0, 1)))


def _coordinate_bounds(f: TernaryForm, bound: int) -> tuple[int, int, int]:
    """Per-coordinate |v_i| limits for f(v) <= bound: v_i^2 <= N * (G^-1)_ii."""
    h = f.doubled_gram()
    det_h = _det3(h)
    out = []
    for i in range(3):
        j, k = [t for t in range(3) if t != i]
        cof = h[j][j] * h[k][k] - h[j][k] * h[k][j]
        out.append(math.isqrt(2 * bound * cof // det_h))
    return tuple(out)


def rep_count_table(f: TernaryForm, bound: int) -> dict[int, int]:
    """Representation counts {n: #solutions of f = n} for 1 <= n <= bound."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    xmax, ymax, _ = _coordinate_bounds(f, bound)
    counts: dict[int, int] = {}
    zz2 = 2 * f.zz
    for x in range(-xmax, xmax + 1):
        for y in range(-ymax, ymax + 1):
            rest = f.xx * x * x + f.yy * y * y + f.xy * x * y
            lin = f.yz * y + f.zx * x
            disc = lin * lin - 2 * zz2 * (rest - bound)
            if disc < 0:
                continue
            s = math.isqrt(disc)
            for z in range(_ceil_div(-lin - s, zz2), (-lin + s) // zz2 + 1):
                v = f.zz * z * z + lin * z + rest
                if 1 <= v <= bound:
                    counts[v] = counts.get(v, 0) + 1
    return counts


def ternary_spectrum(f: TernaryForm, bound: int) -> list[int]:
    """Sorted values 1 <= n <= bound represented by f."""
    return sorted(rep_count_table(f, bound))


def unimodular_match(
    f: TernaryForm, g: TernaryForm, entry_bound: int = 3
) -> tuple[tuple[tuple[int, int, int], ...], int] | None:
    """Search for U (entries bounded, det +-1) with f o U = g.

    Returns (rows of U, det U) for the first match in a deterministic
    scan order, or None.  Columns are drawn from the bounded vectors
    whose f-values hit g's diagonal.
    """
    span = range(-entry_bound, entry_bound + 1)
    buckets: dict[int, list[Vec3]] = {g.xx: [], g.yy: [], g.zz: []}
    for v in ((x, y, z) for x in span for y in span for z in span):
        val = f.evaluate(*v)
        if val in buckets:
            buckets[val].append(v)
    for c1 in buckets[g.xx]:
        for c2 in buckets[g.yy]:
            if f.polar(c1, c2) != g.xy:
                continue
            for c3 in buckets[g.zz]:
                if f.polar(c2, c3) != g.yz or f.polar(c3, c1) != g.zx:
                    continue
                rows = tuple(
                    (c1[i], c2[i], c3[i]) for i in range(3)
                )
                d = _det3(rows)
                if d in (1, -1):
                    assert substitute(f, (c1, c2, c3)) == g
                    return rows, d
    return None


@dataclass(frozen=True)
class SpectrumIdentityReport:
    """Exhaustive comparison of f_1 and tilde_f_1 on the class 1 mod 3.

    sets_match: (values of f_1 in 1 mod 3, minus {1}) equals
    (values of tilde_f_1 in 1 mod 3), both up to `bound`.
    """

    bound: int
    sets_match: bool
    sym_diff: tuple[int, ...]
    theta_match: bool
    theta_bound: int
    gram_dets: tuple[Fraction, Fraction]
    change_of_basis: tuple[tuple[int, int, int], ...] | None
    change_det: int | None

    @property
    def ok(self) -> bool:
        return self.sets_match and self.theta_match

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "change_det": self.change_det,
            "change_of_basis": (
                None
                if self.change_of_basis is None
                else [list(r) for r in self.change_of_basis]
            ),
            "gram_dets": [_frac_json(d) for d in self.gram_dets],
            "sets_match": self.sets_match,
            "sym_diff": list(self.sym_diff),
            "theta_bound": self.theta_bound,
            "theta_match": self.theta_match,
        }


def _frac_json(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


#: the reduced shape tilde_f_1 is expected to be equivalent to
REDUCED_SHAPE = (4, 6, 7, 6, 2, 0)


def spectrum_identity_report(
    bound: int = 1000, theta_bound: int = 200, entry_bound: int = 3
) -> SpectrumIdentityReport:
    """Compare the 1 mod 3 values of f_1 and tilde_f_1 up to `bound` and
    cross-check tilde_f_1 against the reduced shape [4,6,7,yz=6,zx=2,xy=0]
    by theta prefix, Gram determinant, and a bounded unimodular search."""
    if bound < 10:
        raise ValueError(f"bound must be >= 10, got {bound}")
    f1 = build_fm(1)
    tf1 = build_tilde_fm(1)
    target = TernaryForm(*REDUCED_SHAPE)
    lhs = {n for n in ternary_spectrum(f1, bound) if n % 3 == 1}
    rhs = {n for n in ternary_spectrum(tf1, bound) if n % 3 == 1}
    sym_diff = tuple(sorted(lhs ^ rhs))
    sets_match = (lhs - {1}) == rhs
    theta_match = rep_count_table(tf1, theta_bound) == rep_count_table(
        target, theta_bound
    )
    match = unimodular_match(tf1, target, entry_bound)
    rows, det = match if match is not None else (None, None)
    return SpectrumIdentityReport(
        bound,
        sets_match,
        sym_diff,
        theta_match,
        theta_bound,
        (tf1.gram_det(), target.gram_det()),
        rows,
        det,
    )


def check_spectrum_identity(bound: int = 1000) -> bool:
    """True iff the two 1 mod 3 value sets agree (after dropping 1) up to bound."""
    return spectrum_identity_report(bound).sets_match
