"""Rational-valued Lipschitz functions on Z and their truncations."""

from __future__ import annotations

import bisect
import json
from fractions import Fraction

from .errors import LipschitzViolation


def _nth_root_floor(x: int, n: int) -> int:
    """floor(x ** (1/n)) for x >= 0 by integer Newton iteration."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if x == 0 or n == 1:
        return x
    r = int(round(x ** (1.0 / n)))
    while r > 0 and r ** n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


class LipFn:
    """A function Z -> Q with a declared Lipschitz constant.

    The constant is checked lazily: every queried point is recorded, and each
    new query is compared against its neighbours among the points seen so far
    (consecutive checks imply the bound on all queried pairs).
    """

    def __init__(self, kind: str, evaluate, declared_lip: Fraction,
                 params: dict | None = None):
        self.kind = kind
        self.declared_lip = Fraction(declared_lip)
        self.params = params or {}
        self._evaluate = evaluate
        self._seen_x: list[int] = []
        self._seen_y: dict[int, Fraction] = {}

    def __call__(self, x: int) -> Fraction:
        cached = self._seen_y.get(x)
        if cached is not None:
            return cached
        y = Fraction(self._evaluate(x))
        pos = bisect.bisect_left(self._seen_x, x)
        for nb in (pos - 1, pos):
            if 0 <= nb < len(self._seen_x):
                xn = self._seen_x[nb]
                if abs(y - self._seen_y[xn]) > self.declared_lip * abs(x - xn):
                    raise LipschitzViolation(
                        f"{self.kind}: |f({x})-f({xn})| exceeds "
                        f"lip={self.declared_lip}")
        self._seen_x.insert(pos, x)
        self._seen_y[x] = y
        return y

    def __repr__(self) -> str:
        return f"LipFn({self.kind}, {self.params}, lip={self.declared_lip})"

    def scale(self, factor: Fraction | int) -> "LipFn":
        factor = Fraction(factor)
        return LipFn(f"scaled({factor})*{self.kind}",
                     lambda x: factor * self(x),
                     abs(factor) * self.declared_lip,
                     {"factor": factor, "inner": self.kind})

    def shift(self, const: Fraction | int) -> "LipFn":
        const = Fraction(const)
        return LipFn(f"{self.kind}+{const}", lambda x: self(x) + const,
                     self.declared_lip, {"const": const, "inner": self.kind})

    def __add__(self, other: "LipFn") -> "LipFn":
        return LipFn(f"{self.kind}+{other.kind}",
                     lambda x: self(x) + other(x),
                     self.declared_lip + other.declared_lip)


def linear(slope: Fraction | int) -> LipFn:
    slope = Fraction(slope)
    return LipFn("linear", lambda x: slope * x, abs(slope), {"slope": slope})


def power_floor(num: int, den: int) -> LipFn:
    """x -> sign(x) * floor(|x| ** (num/den)), exact via integer roots."""
    if num <= 0 or den <= 0:
        raise ValueError("exponent must be a positive rational")
    if num > den:
        raise ValueError("superlinear power_floor is not Lipschitz")

    def ev(x: int) -> int:
        sign = -1 if x < 0 else 1
        return sign * _nth_root_floor(abs(x) ** num, den)

    return LipFn("power_floor", ev, Fraction(1), {"num": num, "den": den})


def table(values: dict[int, Fraction]) -> LipFn:
    """Piecewise function backed by a finite table, clamped to the nearest
    key outside its range; the empty table is the zero function."""
    if not values:
        return LipFn("table", lambda x: Fraction(0), Fraction(0), {"size": 0})
    keys = sorted(values)
    vals = {k: Fraction(values[k]) for k in keys}
    lip = Fraction(0)
    for k1, k2 in zip(keys, keys[1:]):
        lip = max(lip, abs(vals[k2] - vals[k1]) / (k2 - k1))

    def ev(x: int) -> Fraction:
        if x <= keys[0]:
            return vals[keys[0]]
        if x >= keys[-1]:
            return vals[keys[-1]]
        pos = bisect.bisect_left(keys, x)
        if keys[pos] == x:
            return vals[x]
        # linear interpolation between the bracketing keys keeps lip exact
        k1, k2 = keys[pos - 1], keys[pos]
        return vals[k1] + (vals[k2] - vals[k1]) * Fraction(x - k1, k2 - k1)

    return LipFn("table", ev, lip, {"size": len(keys)})


def bounded_periodic(values: list[Fraction]) -> LipFn:
    period = len(values)
    if period == 0:
        raise ValueError("period must be positive")
    vals = [Fraction(v) for v in values]
    lip = max((abs(vals[(i + 1) % period] - vals[i]) for i in range(period)),
              default=Fraction(0))
    return LipFn("bounded_periodic", lambda x: vals[x % period], lip,
                 {"period": period})


def constant(value: Fraction | int) -> LipFn:
    value = Fraction(value)
    return LipFn("constant", lambda x: value, Fraction(0), {"value": value})


def truncate(f: LipFn, n: int) -> LipFn:
    """f_n: vanishes on [-n, n], f(x) - f(n) above, f(x) - f(-n) below."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    top, bot = f(n), f(-n)

    def ev(x: int) -> Fraction:
        if x >= n:
            return f(x) - top
        if x <= -n:
            return f(x) - bot
        return Fraction(0)

    return LipFn(f"trunc({f.kind},{n})", ev, f.declared_lip,
                 {"n": n, "inner": f.kind})


def lip_on_window(f: LipFn, lo: int, hi: int) -> Fraction:
    """Exact Lipschitz constant of f restricted to the integer window."""
    if hi <= lo:
        return Fraction(0)
    return max(abs(f(x + 1) - f(x)) for x in range(lo, hi))


def lip_tail(f: LipFn, n: int, probe_span: int = 256) -> Fraction:
    """Worst slope of the truncation f_n measured from the edge of its
    vanishing plateau: max over n < x <= n+probe_span of
    max(|f_n(x)|, |f_n(-x)|) / (x - n)."""
    fn = truncate(f, n)
    best = Fraction(0)
    for x in range(n + 1, n + probe_span + 1):
        best = max(best, abs(fn(x)) / (x - n), abs(fn(-x)) / (x - n))
    return best


def oscillation(f: LipFn, window: int) -> Fraction:
    vals = [f(x) for x in range(-window, window + 1)]
    return max(vals) - min(vals)


def parse_spec(spec: str) -> LipFn:
    """f specs: linear:<slope>, powfloor:<num>/<den>, const:<q>,
    table:<path-or-inline-json>, periodic:<path-or-inline-json>."""
    kind, _, arg = spec.partition(":")
    if kind == "linear":
        return linear(Fraction(arg))
    if kind == "powfloor":
        num, _, den = arg.partition("/")
        return power_floor(int(num), int(den) if den else 1)
    if kind == "const":
        return constant(Fraction(arg) if arg else 0)
    if kind in ("table", "periodic"):
        if arg.lstrip().startswith(("{", "[")):
            data = json.loads(arg)
        else:
            with open(arg) as fh:
                data = json.load(fh)
        if kind == "table":
            return table({int(k): Fraction(v) for k, v in data.items()})
        return bounded_periodic([Fraction(v) for v in data])
    raise ValueError(f"unknown f spec {spec!r}")
