"""The Klein bottle group and its integral group ring.

Group elements have the unique normal form y^m x^n, stored as the integer
pair (m, n).  The group ring is the twisted Laurent ring S: finite sums
sum_m y^m * a_m(x) with a_m in Z[x, x^-1], coefficients kept on the right,
and multiplication twisted by  a * y^p = y^p * sigma^p(a)  where sigma
flips the sign of every x-exponent.  Moving y^-1 ... y around a
coefficient therefore applies sigma, which is exactly the group relation
y^-1 x y = x^-1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .laurent import PolySyntaxError, RPoly, parse_rpoly
from .presentations import FreeCombo
from .words import Word


@dataclass(frozen=True)
class GroupElem:
    """Normal form y^m x^n of a Klein bottle group element."""

    m: int
    n: int

    @classmethod
    def identity(cls) -> "GroupElem":
        return cls(0, 0)

    def is_identity(self) -> bool:
        return self.m == 0 and self.n == 0

    def inverse(self) -> "GroupElem":
        return GroupElem(-self.m, -self.n if self.m % 2 == 0 else self.n)

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        return group_mul(self, other)

    def to_word(self) -> Word:
        return Word((("y", self.m), ("x", self.n)))

    def __str__(self) -> str:
        return str(self.to_word())


def group_mul(a: GroupElem, b: GroupElem) -> GroupElem:
    """(m, n) * (p, q) = (m + p, (-1)^p n + q)."""
    n = a.n if b.m % 2 == 0 else -a.n
    return GroupElem(a.m + b.m, n + b.n)


def eval_word(w: Word) -> GroupElem:
    """Image of a free word on x, y in the Klein bottle group."""
    acc = GroupElem(0, 0)
    for name, exp in w.letters:
        if name == "x":
            step = GroupElem(0, exp)
        elif name == "y":
            step = GroupElem(exp, 0)
        else:
            raise ValueError(f"foreign generator {name!r}; only x and y are defined")
        acc = group_mul(acc, step)
    return acc


def _sigma_pow(a: RPoly, k: int) -> RPoly:
    return a if k % 2 == 0 else a.sigma()


class SPoly:
    """Element of the twisted Laurent ring in normal form sum_m y^m * a_m(x)."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Optional[Dict[int, RPoly]] = None):
        self._rows = {m: a for m, a in (rows or {}).items() if not a.is_zero()}

    @classmethod
    def zero(cls) -> "SPoly":
        return cls()

    @classmethod
    def one(cls) -> "SPoly":
        return cls({0: RPoly.one()})

    @classmethod
    def y(cls, m: int = 1) -> "SPoly":
        return cls({m: RPoly.one()})

    @classmethod
    def from_rpoly(cls, a: RPoly, degree: int = 0) -> "SPoly":
        return cls({degree: a})

    @classmethod
    def from_group(cls, e: GroupElem, coeff: int = 1) -> "SPoly":
        return cls({e.m: RPoly.monomial(e.n, coeff)})

    def rows(self) -> List[Tuple[int, RPoly]]:
        """(y-degree, coefficient) pairs in descending degree order."""
        return sorted(self._rows.items(), reverse=True)

    def row(self, m: int) -> RPoly:
        return self._rows.get(m, RPoly.zero())

    def is_zero(self) -> bool:
        return not self._rows

    def __bool__(self) -> bool:
        return bool(self._rows)

    @property
    def min_degree(self) -> int:
        if not self._rows:
            raise ValueError("the zero element has no y-degree")
        return min(self._rows)

    @property
    def max_degree(self) -> int:
        if not self._rows:
            raise ValueError("the zero element has no y-degree")
        return max(self._rows)

    def span(self) -> int:
        return self.max_degree - self.min_degree

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SPoly) and self._rows == other._rows

    def __add__(self, other: "SPoly") -> "SPoly":
        out = dict(self._rows)
        for m, a in other._rows.items():
            v = out.get(m, RPoly.zero()) + a
            if v.is_zero():
                out.pop(m, None)
            else:
                out[m] = v
        return SPoly(out)

    def __neg__(self) -> "SPoly":
        return SPoly({m: -a for m, a in self._rows.items()})

    def __sub__(self, other: "SPoly") -> "SPoly":
        return self + (-other)

    def __mul__(self, other: "SPoly") -> "SPoly":
        # (y^m a)(y^p b) = y^(m+p) sigma^p(a) b
        out: Dict[int, RPoly] = {}
        for m, a in self._rows.items():
            for p, b in other._rows.items():
                piece = _sigma_pow(a, p) * b
                key = m + p
                v = out.get(key, RPoly.zero()) + piece
                if v.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = v
        return SPoly(out)

    def scale(self, k: int) -> "SPoly":
        return SPoly({m: a.scale(k) for m, a in self._rows.items()})

    def __str__(self) -> str:
        if not self._rows:
            return "0"
        parts = []
        for m, a in self.rows():
            if m == 0:
                parts.append(f"({a})")
            else:
                ym = "y" if m == 1 else f"y^{m}"
                parts.append(f"{ym}*({a})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SPoly({str(self)!r})"


def s_add(f: SPoly, g: SPoly) -> SPoly:
    return f + g


def s_mul(f: SPoly, g: SPoly) -> SPoly:
    return f * g


def eval_combo(c: FreeCombo) -> SPoly:
    """Linear extension of eval_word followed by the group-to-ring embedding."""
    acc = SPoly.zero()
    for w, coeff in c.items():
        acc = acc + SPoly.from_group(eval_word(w), coeff)
    return acc


_TERM = re.compile(r"^y(?:\^(?P<m>-?\d+))?\s*(?:\*\s*(?P<paren>\(.*\))\s*)?$", re.S)


def _split_terms(s: str) -> List[Tuple[int, str]]:
    chunks: List[Tuple[int, str]] = []
    cur: List[str] = []
    sign = 1
    depth = 0
    prev = ""
    i = 0
    if s and s[0] in "+-":
        sign = 1 if s[0] == "+" else -1
        i = 1
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise PolySyntaxError(f"unbalanced ')' at position {i}")
        if ch in "+-" and depth == 0 and prev not in ("", "^", "*", "+", "-"):
            chunks.append((sign, "".join(cur).strip()))
            cur = []
            sign = 1 if ch == "+" else -1
        else:
            cur.append(ch)
        if not ch.isspace():
            prev = ch
        i += 1
    if depth != 0:
        raise PolySyntaxError("unbalanced '(' in input")
    chunks.append((sign, "".join(cur).strip()))
    return chunks


def parse_spoly(text: str) -> SPoly:
    """Parse the printed form, e.g. "y^2*(1) + (-1)" or "y - x^-1".

    Terms are y^m*(coefficient), a bare y^m (coefficient 1), a
    parenthesized coefficient, or a plain Laurent polynomial in x for the
    y-degree-0 row.
    """
    s = text.replace("−", "-").strip()
    if not s:
        raise PolySyntaxError("empty input")
    if "y" not in s and "(" not in s:
        return SPoly.from_rpoly(parse_rpoly(s))
    acc = SPoly.zero()
    for sign, chunk in _split_terms(s):
        if not chunk:
            raise PolySyntaxError(f"empty term in {text!r}")
        if chunk.startswith("y"):
            m = _TERM.match(chunk)
            if m is None:
                raise PolySyntaxError(f"malformed term {chunk!r} in {text!r}")
            degree = int(m.group("m")) if m.group("m") else 1
            if m.group("paren"):
                coeff = parse_rpoly(m.group("paren")[1:-1])
            else:
                coeff = RPoly.one()
        elif chunk.startswith("("):
            if not chunk.endswith(")"):
                raise PolySyntaxError(f"malformed term {chunk!r} in {text!r}")
            degree = 0
            coeff = parse_rpoly(chunk[1:-1])
        else:
            degree = 0
            coeff = parse_rpoly(chunk)
        acc = acc + SPoly.from_rpoly(coeff.scale(sign), degree)
    return acc
