"""Named partition functions of C^2 and the resolved conifold, and checks
of the identities relating them.

Every identity check returns a :class:`Report`; nothing here raises on an
identity failing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from conifold.characters import (
    NotPalindromic,
    RefinedInvariant,
    SL2Decomp,
    ext_char_6d,
    sl2_decompose,
    specialize_s1,
)
from conifold.series import (
    Monomial4D,
    Monomial6D,
    Series4D,
    Series6D,
    geom_factor_power,
    substitute_4d_to_6d,
)

Box = tuple[int, int]


@dataclass(frozen=True)
class Chamber:
    """Stability chamber C_n by index; ``index=None`` is the PT limit."""

    index: int | None = None

    def __post_init__(self):
        if self.index is not None and self.index < 0:
            raise ValueError("chamber index must be >= 0")

    @property
    def is_pt(self) -> bool:
        return self.index is None

    @classmethod
    def parse(cls, text: str | int) -> "Chamber":
        if isinstance(text, int):
            return cls(text)
        if text.strip().lower() == "pt":
            return cls(None)
        return cls(int(text))

    def __str__(self) -> str:
        return "pt" if self.index is None else str(self.index)


PT = Chamber(None)


def nekrasov_r1(order: int) -> Series4D:
    """Rank-one Nekrasov function: prod over i1, i2 >= 0 of 1/(1 - q1^i1 q2^i2 L)."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    acc = Series4D.unit(order)
    for deg in range(order):
        for i1 in range(deg + 1):
            acc = acc * geom_factor_power(Monomial4D(i1, deg - i1, 1), -1, -1, order)
    return acc


def topstring_Z(box: Box) -> Series6D:
    """prod_{n >= 1} (1 - (-q)^n T)^n, no s-dependence."""
    acc = Series6D.unit(box)
    for n in range(1, box[0] + 1):
        sign = 1 if n % 2 else -1
        acc = acc * geom_factor_power(Monomial6D(n, 1, 0), sign, n, box)
    return acc


def conifold_factors(max_m: int, sign_flip: tuple[int, int] | None = None) -> list[tuple[Monomial6D, int]]:
    """(monomial, sign) pairs for 1 + sign*monomial, one per (m, j) in increasing order.

    The factor for (m, j) is 1 - (-1)^m s^(2j+1-m) q^m T.  ``sign_flip``
    negates one factor's sign; only used to build negative controls.
    """
    out = []
    for m in range(1, max_m + 1):
        for j in range(m):
            sign = 1 if m % 2 else -1
            if sign_flip == (m, j):
                sign = -sign
            out.append((Monomial6D(m, 1, 2 * j + 1 - m), sign))
    return out


def _conifold_product(box: Box, max_m: int, sign_flip=None) -> Series6D:
    acc = Series6D.unit(box)
    for mono, sign in conifold_factors(min(max_m, box[0]), sign_flip):
        acc = acc * geom_factor_power(mono, sign, 1, box)
    return acc


def refined_conifold_Z(box: Box, sign_flip: tuple[int, int] | None = None) -> Series6D:
    """Refined PT series of the resolved conifold, to the (q, T) box."""
    return _conifold_product(box, box[0], sign_flip)


def chamber_Z(box: Box, chamber: Chamber | int, sign_flip: tuple[int, int] | None = None) -> Series6D:
    """Refined series in chamber C_n: the conifold product cut at m <= n."""
    if not isinstance(chamber, Chamber):
        chamber = Chamber(chamber)
    if chamber.is_pt:
        return refined_conifold_Z(box, sign_flip)
    return _conifold_product(box, chamber.index, sign_flip)


# reports


@dataclass
class Report:
    identity: str
    box: Box
    discrepancies: list[dict] = field(default_factory=list)
    detail: str = ""

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "box": list(self.box),
            "status": self.status,
            "discrepancies": self.discrepancies,
        }
        if self.detail:
            out["detail"] = self.detail
        return out


def _diff_cells(lhs: Series6D, rhs: Series6D) -> list[dict]:
    out = []
    for l, m in sorted(set(lhs.cells()) | set(rhs.cells())):
        a, b = lhs.coefficient(l, m), rhs.coefficient(l, m)
        if a != b:
            out.append({"l": l, "m": m, "lhs": a.to_json(), "rhs": b.to_json()})
    return out


def verify_inverse_identity(box: Box, sign_flip=None) -> Report:
    """Z_X * (Nekrasov function after q1=-sq, q2=-q/s, L=-Tq) == 1."""
    lhs = refined_conifold_Z(box, sign_flip) * substitute_4d_to_6d(nekrasov_r1(box[0]), box)
    return Report("inverse", box, _diff_cells(lhs, Series6D.unit(box)))


def verify_exterior_identity(box: Box, chamber: Chamber | int, sign_flip=None) -> Report:
    """Chamber series equals the exterior character of C[x, y] cut at degree n - 1."""
    if not isinstance(chamber, Chamber):
        chamber = Chamber(chamber)
    lhs = chamber_Z(box, chamber, sign_flip)
    rhs = ext_char_6d(box, chamber.index)
    return Report("exterior", box, _diff_cells(lhs, rhs), detail=f"chamber={chamber}")


def verify_topstring(box: Box, sign_flip=None) -> Report:
    """Collapsing s to 1 in the refined series recovers the PT series."""
    lhs = refined_conifold_Z(box, sign_flip).collapse_s()
    return Report("topstring", box, _diff_cells(lhs, topstring_Z(box)))


def verify_sl2(box: Box, chamber: Chamber | int = PT, sign_flip=None) -> Report:
    """Every cell is palindromic and (-1)^(l+m) times it is a genuine sl(2) character."""
    if not isinstance(chamber, Chamber):
        chamber = Chamber(chamber)
    z = chamber_Z(box, chamber, sign_flip)
    bad = []
    for l, m in z.cells():
        p = z.coefficient(l, m)
        if not p.is_palindromic():
            bad.append({"l": l, "m": m, "reason": "not palindromic", "value": p.to_json()})
            continue
        dec = sl2_decompose(p * (-1) ** (l + m))
        if not dec.is_nonnegative():
            bad.append({"l": l, "m": m, "reason": "negative multiplicity", "sl2": dec.to_json()})
    return Report("sl2", box, bad, detail=f"chamber={chamber}")


# invariant tables


@dataclass
class TableRow:
    l: int
    m: int
    invariant: RefinedInvariant
    numeric: int
    sl2: SL2Decomp | None

    def to_json(self) -> dict:
        # every cell has s-exponents of one parity (that of m - l), so the
        # row lists the coefficients of s_min, s_min + 2, ...
        s_min, coeffs = self.invariant.to_strided()
        return {
            "l": self.l,
            "m": self.m,
            "s_min": s_min,
            "coeffs": [str(c) for c in coeffs],
            "P_lm": str(self.numeric),
            "sl2": None if self.sl2 is None else self.sl2.to_json(),
        }


@dataclass
class InvariantTable:
    box: Box
    chamber: Chamber
    rows: list[TableRow]

    @property
    def entries(self) -> dict[tuple[int, int], RefinedInvariant]:
        return {(r.l, r.m): r.invariant for r in self.rows}

    @property
    def numeric(self) -> dict[tuple[int, int], int]:
        return {(r.l, r.m): r.numeric for r in self.rows}

    def row(self, l: int, m: int) -> TableRow | None:
        for r in self.rows:
            if (r.l, r.m) == (l, m):
                return r
        return None

    def to_json(self) -> dict:
        return {
            "box": list(self.box),
            "chamber": str(self.chamber),
            "rows": [r.to_json() for r in self.rows],
        }


def invariant_table(box: Box, chamber: Chamber | int = PT, sign_flip=None) -> InvariantTable:
    """All nonzero refined invariants in the box, with their s = 1 values
    and sl(2) decompositions of the sign-normalized invariant."""
    if not isinstance(chamber, Chamber):
        chamber = Chamber(chamber)
    z = chamber_Z(box, chamber, sign_flip)
    rows = []
    for l, m in z.cells():
        p = z.coefficient(l, m)
        try:
            dec = sl2_decompose(p * (-1) ** (l + m))
        except NotPalindromic:
            dec = None
        rows.append(TableRow(l, m, p, specialize_s1(p), dec))
    return InvariantTable(box, chamber, rows)

