"""Sparse simplicial chains with exact rational coefficients, and their
reduction to coinvariants under the free-group action.

A simplex is stored as a tuple of vertices sorted by the global vertex order;
the sign of the sorting permutation is absorbed into the coefficient, and
simplices with a repeated vertex die on construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .errors import NotInvariant
from .graph import Vertex, vertex_key
from .words import inv, mul

Simplex = tuple[Vertex, ...]

NEG_INF = float("-inf")


def _sort_with_sign(verts: Simplex) -> tuple[Simplex | None, int]:
    order = sorted(range(len(verts)), key=lambda i: vertex_key(verts[i]))
    sorted_verts = tuple(verts[i] for i in order)
    for i in range(len(sorted_verts) - 1):
        if sorted_verts[i] == sorted_verts[i + 1]:
            return None, 0
    sign = 1
    seen = list(order)
    for i in range(len(seen)):  # parity by counting inversions
        for j in range(i + 1, len(seen)):
            if seen[i] > seen[j]:
                sign = -sign
    return sorted_verts, sign


class Chain:
    """Sparse map simplex -> nonzero rational coefficient, fixed dimension."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: dict[Simplex, Fraction] | None = None):
        self.dim = dim
        self.terms: dict[Simplex, Fraction] = terms or {}

    @classmethod
    def build(cls, dim: int,
              items: Iterable[tuple[Simplex, Fraction | int]]) -> "Chain":
        out = cls(dim)
        for verts, coeff in items:
            out.add(verts, coeff)
        return out

    def add(self, verts: Simplex, coeff: Fraction | int) -> None:
        canon, sign = _sort_with_sign(tuple(verts))
        if canon is None or coeff == 0:
            return
        new = self.terms.get(canon, Fraction(0)) + sign * Fraction(coeff)
        if new:
            self.terms[canon] = new
        else:
            self.terms.pop(canon, None)

    def __add__(self, other: "Chain") -> "Chain":
        out = Chain(self.dim, dict(self.terms))
        for s, c in other.terms.items():
            new = out.terms.get(s, Fraction(0)) + c
            if new:
                out.terms[s] = new
            else:
                out.terms.pop(s, None)
        return out

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __neg__(self) -> "Chain":
        return Chain(self.dim, {s: -c for s, c in self.terms.items()})

    def scale(self, factor: Fraction | int) -> "Chain":
        factor = Fraction(factor)
        if factor == 0:
            return Chain(self.dim)
        return Chain(self.dim, {s: c * factor for s, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Chain) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"Chain(dim={self.dim}, terms={len(self.terms)})"

    def boundary(self) -> "Chain":
        out = Chain(self.dim - 1)
        for verts, coeff in self.terms.items():
            for j in range(len(verts)):
                out.add(verts[:j] + verts[j + 1:],
                        coeff if j % 2 == 0 else -coeff)
        return out

    def l1_norm(self) -> Fraction:
        return sum((abs(c) for c in self.terms.values()), Fraction(0))

    def support(self) -> set[Vertex]:
        return {v for s in self.terms for v in s}

    def translate(self, graph, g) -> "Chain":
        out = Chain(self.dim)
        for verts, coeff in self.terms.items():
            out.add(tuple(graph.left_mul(g, v) for v in verts), coeff)
        return out


def depth_range(chain: Chain, horoball_of: Callable) -> tuple[float, float]:
    """(minD, maxD) over the chain.  A simplex contributes its min depth only
    if one horoball contains all its vertices; otherwise it counts as -inf."""
    min_d: float = float("inf")
    max_d: float = NEG_INF
    for verts in chain.terms:
        depths = [v.depth for v in verts]
        max_d = max(max_d, max(depths))
        ids = {horoball_of(v) for v in verts}
        min_d = min(min_d, min(depths) if len(ids) == 1 else NEG_INF)
    return min_d, max_d


# -- coinvariants -----------------------------------------------------------


def orbit_canonical(verts: Simplex) -> tuple[Simplex, int]:
    """Canonical representative of the simplex's orbit under the free-group
    action combined with vertex reordering: over every ordering, translate so
    the first vertex's free-group part is trivial, and keep the lex-least
    tuple.  Returns (tuple, sign of the chosen permutation)."""
    best: tuple | None = None
    best_tuple: Simplex | None = None
    best_sign = 1
    n = len(verts)
    for perm, sign in _permutations_with_sign(n):
        first = verts[perm[0]]
        shift = inv(first.base)
        cand = tuple(
            Vertex(mul(shift, verts[i].base), verts[i].texp, verts[i].depth)
            for i in perm)
        key = tuple(vertex_key(v) for v in cand)
        if best is None or key < best:
            best, best_tuple, best_sign = key, cand, sign
    return best_tuple, best_sign


def _permutations_with_sign(n: int):
    from itertools import permutations
    base = list(range(n))
    for perm in permutations(base):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        yield perm, sign


class CoinvariantChain(Chain):
    """A chain reduced modulo the free-group action and alternation; keys are
    orbit-canonical simplices."""

    def add(self, verts: Simplex, coeff: Fraction | int) -> None:
        plain, presign = _sort_with_sign(tuple(verts))
        if plain is None or coeff == 0:
            return
        canon, sign = orbit_canonical(plain)
        new = self.terms.get(canon, Fraction(0)) + presign * sign * Fraction(coeff)
        if new:
            self.terms[canon] = new
        else:
            self.terms.pop(canon, None)

    def __add__(self, other: Chain) -> "CoinvariantChain":
        out = CoinvariantChain(self.dim, dict(self.terms))
        for s, c in other.terms.items():
            out.add(s, c)
        return out

    def __neg__(self) -> "CoinvariantChain":
        return CoinvariantChain(self.dim, {s: -c for s, c in self.terms.items()})

    def boundary(self) -> "CoinvariantChain":
        out = CoinvariantChain(self.dim - 1)
        for verts, coeff in self.terms.items():
            for j in range(len(verts)):
                out.add(verts[:j] + verts[j + 1:],
                        coeff if j % 2 == 0 else -coeff)
        return out


def coinvariant_reduce(chain: Chain) -> CoinvariantChain:
    out = CoinvariantChain(chain.dim)
    for verts, coeff in chain.terms.items():
        out.add(verts, coeff)
    return out


def pair(functional: Callable[..., Fraction | int], chain: CoinvariantChain,
         graph=None, validate: bool = True,
         sample_words: tuple[str, ...] = ("a", "b", "ab")) -> Fraction:
    """Evaluate an invariant alternating vertex-tuple functional on a
    coinvariant chain.  A small sample of the chain's simplices is checked for
    invariance (under free-group translation) and alternation first."""
    if validate and chain.terms:
        probe = next(iter(chain.terms))
        val = Fraction(functional(*probe))
        swapped = (probe[1], probe[0]) + probe[2:]
        if len(probe) >= 2 and Fraction(functional(*swapped)) != -val:
            raise NotInvariant("functional is not alternating on a sample")
        if graph is not None:
            from .words import GroupElem
            for w in sample_words:
                moved = tuple(graph.left_mul(GroupElem(w, 0), v) for v in probe)
                if Fraction(functional(*moved)) != val:
                    raise NotInvariant(
                        "functional is not invariant on a sample")
    total = Fraction(0)
    for verts, coeff in chain.terms.items():
        total += coeff * Fraction(functional(*verts))
    return total


def chain_to_json(chain: Chain) -> list[dict]:
    return [{"simplex": [str(v) for v in verts], "coeff": str(coeff)}
            for verts, coeff in sorted(
                chain.terms.items(),
                key=lambda kv: tuple(vertex_key(v) for v in kv[0]))]


def chain_from_json(data: list[dict], dim: int | None = None) -> Chain:
    from .graph import parse_vertex
    items = []
    for entry in data:
        verts = tuple(parse_vertex(s) for s in entry["simplex"])
        items.append((verts, Fraction(entry["coeff"])))
    if dim is None:
        dim = len(items[0][0]) - 1 if items else 0
    return Chain.build(dim, items)
