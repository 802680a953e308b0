"""Laurent polynomials in s = t^(1/2) with integer coefficients.

Used for refined invariants (coefficients of T^l q^m) and for weight
polynomials.  Stored sparsely as {s-exponent: coefficient}, zeros pruned.
"""
from __future__ import annotations

from typing import Iterable, Mapping


class Laurent:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c: dict[int, int] = {}
        for w, v in (coeffs or {}).items():
            if v:
                c[int(w)] = int(v)
        self._c = c

    @classmethod
    def monomial(cls, w: int, coef: int = 1) -> "Laurent":
        return cls({w: coef})

    @classmethod
    def dense(cls, s_min: int, coeffs: Iterable[int]) -> "Laurent":
        return cls({s_min + i: c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, w: int) -> int:
        return self._c.get(w, 0)

    def __iter__(self):
        return iter(sorted(self._c.items()))

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Laurent({0: other})
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({dict(sorted(self._c.items()))})"

    def __str__(self) -> str:
        return render_t(self)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Laurent):
            return other
        if isinstance(other, int):
            return Laurent({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for w, v in other._c.items():
            c[w] = c.get(w, 0) + v
        return type(self)(c)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({w: -v for w, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c: dict[int, int] = {}
        for w1, v1 in self._c.items():
            for w2, v2 in other._c.items():
                c[w1 + w2] = c.get(w1 + w2, 0) + v1 * v2
        return type(self)(c)

    __rmul__ = __mul__

    def shift(self, k: int):
        """Multiply by s^k."""
        return type(self)({w + k: v for w, v in self._c.items()})

    def at_one(self) -> int:
        return sum(self._c.values())

    def min_exp(self) -> int | None:
        return min(self._c) if self._c else None

    def max_exp(self) -> int | None:
        return max(self._c) if self._c else None

    def is_palindromic(self) -> bool:
        return all(self._c.get(-w, 0) == v for w, v in self._c.items())

    # serialization

    def to_json(self) -> dict:
        """Dense form: {"s_min": w0, "coeffs": ["c0", "c1", ...]}."""
        if not self._c:
            return {"s_min": 0, "coeffs": []}
        lo, hi = min(self._c), max(self._c)
        return {"s_min": lo, "coeffs": [str(self._c.get(w, 0)) for w in range(lo, hi + 1)]}

    def to_strided(self) -> tuple[int, list[int]]:
        """(s_min, [c(s_min), c(s_min + 2), ...]) for a single-parity polynomial."""
        if not self._c:
            return 0, []
        lo, hi = min(self._c), max(self._c)
        if any((w - lo) % 2 for w in self._c):
            raise ValueError("mixed parity exponents; use the dense form")
        return lo, [self._c.get(w, 0) for w in range(lo, hi + 1, 2)]

    @classmethod
    def from_json(cls, obj: Mapping) -> "Laurent":
        return cls.dense(int(obj["s_min"]), (int(c) for c in obj["coeffs"]))


def _t_power(w: int) -> str:
    if w == 0:
        return ""
    if w % 2:
        return f"t^({w}/2)"
    if w == 2:
        return "t"
    return f"t^{w // 2}" if w > 0 else f"t^({w // 2})"


def render_t(p: Laurent) -> str:
    """Human-readable form in t with explicit half powers, ascending.

    >>> render_t(Laurent({0: 1, 1: -2, 2: 1}))
    '1 - 2*t^(1/2) + t'
    """
    if not p:
        return "0"
    out: list[str] = []
    for w, c in p:
        mono = _t_power(w)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)
