"""Exact truncated multivariate series over the integers.

Two fixed variable contexts:

* ``Series4D`` in (q1, q2, L) truncated by total degree ``a + b + c <= order``;
* ``Series6D`` in (q, T, s) with s = t^(1/2) a Laurent variable, truncated by
  a box ``m <= M`` (q-degree) and ``l <= L`` (T-degree).

Values are immutable.  Zero coefficients are never stored, so equality of
series is equality of their term dictionaries plus truncation bound.
"""
from __future__ import annotations

from math import comb
from typing import Iterable, Mapping, NamedTuple

from conifold.laurent import Laurent


class SeriesError(ValueError):
    pass


class ContextMismatch(SeriesError):
    pass


class NotAUnit(SeriesError):
    pass


class OutsideTruncation(SeriesError):
    pass


class Monomial4D(NamedTuple):
    a: int  # q1
    b: int  # q2
    c: int  # Lambda


class Monomial6D(NamedTuple):
    m: int  # q
    l: int  # T
    w: int  # s = t^(1/2), any sign


class Series:
    """Common machinery; subclasses fix the monomial type and truncation."""

    context: str = ""
    _mono: type = tuple
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, int] | None = None):
        clean: dict[tuple, int] = {}
        for e, c in (terms or {}).items():
            e = self._mono(*e)
            self._check_exp(e)
            if c and self._fits(e):
                clean[e] = clean.get(e, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}

    # hooks

    def _check_exp(self, e) -> None:
        raise NotImplementedError

    def _fits(self, e) -> bool:
        raise NotImplementedError

    @staticmethod
    def _grade(e) -> int:
        raise NotImplementedError

    def _max_grade(self) -> int:
        raise NotImplementedError

    def _bound(self):
        raise NotImplementedError

    def _with_bound(self, terms, bound) -> "Series":
        raise NotImplementedError

    def _sort_key(self, e):
        raise NotImplementedError

    # basic protocol

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, e) -> int:
        return self._terms.get(self._mono(*e), 0)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: self._sort_key(kv[0]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (type(self) is type(other) and self._bound() == other._bound()
                and self._terms == other._terms)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._bound(), frozenset(self._terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{tuple(e)}: {c}" for e, c in self.items()[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"{type(self).__name__}({{{body}{more}}}, {self._bound()})"

    def _same_context(self, other: "Series") -> None:
        if type(self) is not type(other):
            raise ContextMismatch(f"cannot combine {self.context} and {getattr(other, 'context', type(other).__name__)} series")

    def one(self) -> "Series":
        zero = self._mono(*([0] * len(self._mono._fields)))
        return self._with_bound({zero: 1}, self._bound())

    def clip(self, bound) -> "Series":
        """Re-truncate to a (not larger) bound."""
        return self._with_bound(self._terms, self._meet(self._bound(), bound))

    # arithmetic

    def __add__(self, other: "Series") -> "Series":
        self._same_context(other)
        bound = self._meet(self._bound(), other._bound())
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return self._with_bound(acc, bound)

    def __neg__(self) -> "Series":
        return self._with_bound({e: -c for e, c in self._terms.items()}, self._bound())

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def scale(self, k: int) -> "Series":
        return self._with_bound({e: k * c for e, c in self._terms.items()}, self._bound())

    def __mul__(self, other: "Series") -> "Series":
        self._same_context(other)
        bound = self._meet(self._bound(), other._bound())
        probe = self._with_bound({}, bound)
        acc: dict[tuple, int] = {}
        right = list(other._terms.items())
        for e1, c1 in self._terms.items():
            for e2, c2 in right:
                e = tuple(x + y for x, y in zip(e1, e2))
                if probe._fits(e):
                    acc[e] = acc.get(e, 0) + c1 * c2
        return self._with_bound(acc, bound)

    def invert(self) -> "Series":
        """Multiplicative inverse of a series whose constant term is exactly 1.

        Solved grade by grade; all coefficients stay integral.
        """
        zero = self._mono(*([0] * len(self._mono._fields)))
        head = {e: c for e, c in self._terms.items() if self._grade(e) == 0}
        if head != {zero: 1}:
            raise NotAUnit(f"constant term must be exactly 1, got {head or 0}")
        tail: dict[int, list] = {}
        for e, c in self._terms.items():
            g = self._grade(e)
            if g:
                tail.setdefault(g, []).append((e, c))
        layers: list[dict] = [{zero: 1}]
        for d in range(1, self._max_grade() + 1):
            acc: dict[tuple, int] = {}
            for g in range(1, d + 1):
                for he, hc in tail.get(g, ()):
                    for ye, yc in layers[d - g].items():
                        e = tuple(x + y for x, y in zip(he, ye))
                        if self._fits(e):
                            acc[e] = acc.get(e, 0) - hc * yc
            layers.append({e: c for e, c in acc.items() if c})
        out: dict[tuple, int] = {}
        for layer in layers:
            out.update(layer)
        return self._with_bound(out, self._bound())

    def to_json(self) -> dict:
        raise NotImplementedError


class Series4D(Series):
    context = "4d"
    _mono = Monomial4D
    __slots__ = ("order",)

    def __init__(self, terms: Mapping[tuple, int] | None = None, order: int = 0):
        if order < 0:
            raise SeriesError("order must be nonnegative")
        self.order = int(order)
        super().__init__(terms)

    def _check_exp(self, e) -> None:
        if min(e) < 0:
            raise SeriesError(f"negative exponent in 4d monomial {tuple(e)}")

    def _fits(self, e) -> bool:
        return e[0] + e[1] + e[2] <= self.order

    @staticmethod
    def _grade(e) -> int:
        return e[0] + e[1] + e[2]

    def _max_grade(self) -> int:
        return self.order

    def _bound(self):
        return self.order

    @staticmethod
    def _meet(x, y):
        return min(x, y)

    def _with_bound(self, terms, bound) -> "Series4D":
        return Series4D(terms, bound)

    def _sort_key(self, e):
        return (e[2], e[0], e[1])

    @classmethod
    def unit(cls, order: int) -> "Series4D":
        return cls({(0, 0, 0): 1}, order)

    def to_json(self) -> dict:
        return {
            "context": "4d",
            "order": self.order,
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.items()],
        }


class Series6D(Series):
    context = "6d"
    _mono = Monomial6D
    __slots__ = ("box",)

    def __init__(self, terms: Mapping[tuple, int] | None = None, box: tuple[int, int] = (0, 0)):
        M, L = box
        if M < 0 or L < 0:
            raise SeriesError("box bounds must be nonnegative")
        self.box = (int(M), int(L))
        super().__init__(terms)

    def _check_exp(self, e) -> None:
        if e[0] < 0 or e[1] < 0:
            raise SeriesError(f"negative q or T exponent in 6d monomial {tuple(e)}")

    def _fits(self, e) -> bool:
        return e[0] <= self.box[0] and e[1] <= self.box[1]

    @staticmethod
    def _grade(e) -> int:
        return e[0] + e[1]

    def _max_grade(self) -> int:
        return self.box[0] + self.box[1]

    def _bound(self):
        return self.box

    @staticmethod
    def _meet(x, y):
        return (min(x[0], y[0]), min(x[1], y[1]))

    def _with_bound(self, terms, bound) -> "Series6D":
        return Series6D(terms, bound)

    def _sort_key(self, e):
        return (e[1], e[0], e[2])

    @classmethod
    def unit(cls, box: tuple[int, int]) -> "Series6D":
        return cls({(0, 0, 0): 1}, box)

    def coefficient(self, l: int, m: int) -> Laurent:
        """The Laurent polynomial in s multiplying T^l q^m."""
        if not (0 <= m <= self.box[0] and 0 <= l <= self.box[1]):
            raise OutsideTruncation(f"(l={l}, m={m}) outside box {self.box}")
        return Laurent({e.w: c for e, c in self._terms.items() if e.m == m and e.l == l})

    def cells(self) -> list[tuple[int, int]]:
        """Nonzero (l, m) cells, sorted."""
        return sorted({(e.l, e.m) for e in self._terms})

    def collapse_s(self) -> "Series6D":
        """Specialize s = 1 (every s-exponent sent to 0)."""
        acc: dict[tuple, int] = {}
        for e, c in self._terms.items():
            k = (e.m, e.l, 0)
            acc[k] = acc.get(k, 0) + c
        return Series6D(acc, self.box)

    def to_json(self) -> dict:
        return {
            "context": "6d",
            "box": list(self.box),
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.items()],
        }


def series_from_json(obj: Mapping) -> Series:
    terms = {tuple(t["exp"]): int(t["coef"]) for t in obj["terms"]}
    if obj["context"] == "4d":
        return Series4D(terms, int(obj["order"]))
    if obj["context"] == "6d":
        return Series6D(terms, tuple(obj["box"]))
    raise ContextMismatch(f"unknown context {obj['context']!r}")


def _binomial(n: int, k: int) -> int:
    """Generalized binomial coefficient C(n, k) for any integer n, k >= 0."""
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


def geom_factor_power(mono: Iterable[int], sign: int, exp: int, bound) -> Series:
    """Expand (1 + sign * mono)^exp within the truncation ``bound``.

    ``bound`` is an int order for a 4d monomial, an (M, L) box for a 6d one.
    """
    if sign not in (1, -1):
        raise SeriesError("sign must be +1 or -1")
    if isinstance(mono, Monomial6D) or (not isinstance(mono, Monomial4D) and isinstance(bound, tuple)):
        mono = Monomial6D(*mono)
        empty: Series = Series6D({}, bound)
    else:
        mono = Monomial4D(*mono)
        empty = Series4D({}, bound)
    empty._check_exp(mono)
    if empty._grade(mono) == 0:
        # in 6d a pure power of s is never cut off by the box
        raise SeriesError(f"trivial monomial {tuple(mono)}")
    terms: dict[tuple, int] = {}
    k = 0
    while True:
        e = tuple(k * x for x in mono)
        if not empty._fits(e):
            break
        c = _binomial(exp, k) * sign ** k
        if exp >= 0 and k > exp:
            break
        terms[e] = c
        k += 1
    return empty._with_bound(terms, bound)



def substitute_4d_to_6d(x: Series4D, box: tuple[int, int]) -> Series6D:
    """Apply q1 = -s q, q2 = -q/s, Lambda = -T q.

    q1^a q2^b Lambda^c maps to (-1)^(a+b+c) s^(a-b) q^(a+b+c) T^c.
    """
    if not isinstance(x, Series4D):
        raise ContextMismatch("substitution needs a 4d series")
    M, L = box
    if x.order < M:
        raise OutsideTruncation(f"source order {x.order} cannot determine q-degree up to {M}")
    acc: dict[tuple, int] = {}
    for (a, b, c), v in x.terms.items():
        m = a + b + c
        if m <= M and c <= L:
            k = (m, c, a - b)
            acc[k] = acc.get(k, 0) + (-v if m % 2 else v)
    return Series6D(acc, box)
