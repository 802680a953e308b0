"""Characters of Sym* and Lambda* of the plane's coordinate ring.

A plane monomial x^a y^b is a generator of weight q1^a q2^b L in the
four-dimensional dictionary, and of weight (-1)^(a+b) s^(a-b) q^(a+b+1) T in
the six-dimensional one (x, y odd of s-weight +1 and -1).  The enumeration
oracles here are deliberately naive and guarded to small bounds.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from conifold.laurent import Laurent
from conifold.series import Monomial6D, Series4D, Series6D, geom_factor_power

RefinedInvariant = Laurent

SYM_ORACLE_MAX = 12
EXT_ORACLE_MAX = 8


class PlaneMonomial(NamedTuple):
    a: int  # x-exponent
    b: int  # y-exponent

    @property
    def degree(self) -> int:
        return self.a + self.b


class NotPalindromic(ValueError):
    pass


class OracleTooLarge(ValueError):
    pass


def plane_monomials(max_degree: int) -> list[PlaneMonomial]:
    """All x^a y^b with a + b <= max_degree, by degree then a."""
    return [PlaneMonomial(a, d - a) for d in range(max_degree + 1) for a in range(d + 1)]


def sym_char_4d(order: int) -> Series4D:
    """Character of Sym* C[x, y] in (q1, q2, L), to total degree ``order``.

    Built Lambda-degree by Lambda-degree from Newton's identity
    k h_k = sum_{i=1..k} p_i h_{k-i}, where p_i is the i-th Adams operation
    applied to the generator character.  This route is independent of the
    product expansion used for the Nekrasov function.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    gens = plane_monomials(order - 1) if order else []
    power_sums = [Series4D({}, order)]
    for i in range(1, order + 1):
        power_sums.append(Series4D({(i * g.a, i * g.b, i): 1 for g in gens}, order))
    h = [Series4D.unit(order)]
    for k in range(1, order + 1):
        acc = Series4D({}, order)
        for i in range(1, k + 1):
            acc = acc + power_sums[i] * h[k - i]
        terms = {}
        for e, c in acc.terms.items():
            q, r = divmod(c, k)
            assert r == 0, "Newton identity left a remainder"
            terms[e] = q
        h.append(Series4D(terms, order))
    total = Series4D({}, order)
    for part in h:
        total = total + part
    return total


def _multisets(gens: list[PlaneMonomial], start: int, budget: int) -> Iterator[list[PlaneMonomial]]:
    yield []
    for i in range(start, len(gens)):
        cost = gens[i].degree + 1
        if cost > budget:
            continue
        for rest in _multisets(gens, i, budget - cost):
            yield [gens[i], *rest]


def sym_char_oracle(order: int) -> Series4D:
    """Enumerate multisets of plane monomials with sum(a + b) + size <= order."""
    if not 0 <= order <= SYM_ORACLE_MAX:
        raise OracleTooLarge(f"multiset oracle is limited to order <= {SYM_ORACLE_MAX}")
    gens = plane_monomials(order - 1) if order else []
    acc: dict[tuple, int] = {}
    for ms in _multisets(gens, 0, order):
        e = (sum(g.a for g in ms), sum(g.b for g in ms), len(ms))
        acc[e] = acc.get(e, 0) + 1
    return Series4D(acc, order)


def _ext_generators(box: tuple[int, int], degree_cap: int | None) -> list[PlaneMonomial]:
    top = box[0] - 1
    if degree_cap is not None:
        if degree_cap < 0:
            raise ValueError("degree_cap must be nonnegative")
        top = min(top, degree_cap - 1)
    return plane_monomials(top) if top >= 0 else []


def ext_char_6d(box: tuple[int, int], degree_cap: int | None = None) -> Series6D:
    """Super character of Lambda* C[x, y] (or of polynomials of degree < cap).

    Product over generators x^a y^b of (1 - (-1)^(a+b+1) s^(a-b) q^(a+b+1) T).
    """
    acc = Series6D.unit(box)
    for g in _ext_generators(box, degree_cap):
        sign = 1 if (g.degree + 1) % 2 else -1
        acc = acc * geom_factor_power(Monomial6D(g.degree + 1, 1, g.a - g.b), sign, 1, box)
    return acc


def _subsets(gens: list[PlaneMonomial], start: int, budget: int, slots: int) -> Iterator[list[PlaneMonomial]]:
    yield []
    if slots == 0:
        return
    for i in range(start, len(gens)):
        cost = gens[i].degree + 1
        if cost > budget:
            continue
        for rest in _subsets(gens, i + 1, budget - cost, slots - 1):
            yield [gens[i], *rest]


def ext_char_oracle(box: tuple[int, int], degree_cap: int | None = None) -> Series6D:
    """Signed enumeration of finite subsets of plane monomials."""
    M, L = box
    if not 0 <= M <= EXT_ORACLE_MAX:
        raise OracleTooLarge(f"subset oracle is limited to qmax <= {EXT_ORACLE_MAX}")
    gens = _ext_generators(box, degree_cap)
    acc: dict[tuple, int] = {}
    for sub in _subsets(gens, 0, M, L):
        deg = sum(g.degree for g in sub)
        e = (deg + len(sub), len(sub), sum(g.a - g.b for g in sub))
        acc[e] = acc.get(e, 0) + (-1) ** deg
    return Series6D(acc, box)


def sl2_character(d: int) -> Laurent:
    """s^d + s^(d-2) + ... + s^(-d), the character of the (d+1)-dim irrep."""
    return Laurent({w: 1 for w in range(-d, d + 1, 2)})


@dataclass(frozen=True)
class SL2Decomp:
    mult: dict[int, int] = field(default_factory=dict)

    def reconstruct(self) -> Laurent:
        out = Laurent()
        for d, k in self.mult.items():
            out = out + sl2_character(d) * k
        return out

    def is_nonnegative(self) -> bool:
        return all(k >= 0 for k in self.mult.values())

    def to_json(self) -> dict[str, int]:
        return {str(d): k for d, k in sorted(self.mult.items(), reverse=True)}


def sl2_decompose(p: Laurent) -> SL2Decomp:
    """Peel irreducible sl(2) characters off a palindromic polynomial, top down.

    Multiplicities may come out negative; callers test that separately.
    """
    if not p.is_palindromic():
        raise NotPalindromic(f"{p!r} is not symmetric under s -> 1/s")
    rest = p
    mult: dict[int, int] = {}
    while rest:
        d = rest.max_exp()
        k = rest[d]
        mult[d] = k
        rest = rest - sl2_character(d) * k
    return SL2Decomp(mult)


def specialize_s1(p: Laurent) -> int:
    return p.at_one()
