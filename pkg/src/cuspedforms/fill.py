"""Bicombing surrogate and equivariant triangle fillings.

The combing path Q(u, v) is a single Rips edge when d(u, v) <= kappa and
otherwise splits at the canonical geodesic midpoint.  fill_triangle splits its
longest side at the same midpoint, so the boundary of a filling equals the
combing triangle cycle identically, not just up to horoball terms.

Equivariance and alternation are exact by construction: every triple is
reduced to a canonical anchored representative before filling, and the result
is translated back with the permutation sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import lp
from .chains import Chain
from .errors import FillDepthExceeded, Infeasible, WindowTooLarge
from .graph import CuspedGraph, Vertex, vertex_key
from .words import GroupElem, gamma_inv, gamma_mul


@dataclass(frozen=True)
class FillResult:
    chain: Chain
    method: str  # unit-simplex | cone-split | lp | degenerate
    norm: Fraction


# relabelings that move each unordered side to positions (0, 1)
_SIDE_PERMS = {(0, 1): ((0, 1, 2), 1), (0, 2): ((0, 2, 1), -1),
               (1, 2): ((1, 2, 0), 1)}


class FillEngine:
    def __init__(self, graph: CuspedGraph, kappa: int = 8,
                 fill_recursion_cap: int = 64, lp_window_radius: int = 2,
                 lp_simplex_cap: int = 2000, lp_exact_columns: int = 120):
        if kappa < 2:
            raise ValueError("kappa must be at least 2")
        self.graph = graph
        self.kappa = kappa
        self.fill_recursion_cap = fill_recursion_cap
        self.lp_window_radius = lp_window_radius
        self.lp_simplex_cap = lp_simplex_cap
        self.lp_exact_columns = lp_exact_columns
        self._path_cache: dict[tuple[Vertex, Vertex], Chain] = {}
        self._fill_cache: dict[tuple, tuple[Chain, str]] = {}

    # -- combing --------------------------------------------------------

    def combing_path(self, u: Vertex, v: Vertex) -> Chain:
        """Q(u, v): a 1-chain from u to v; antisymmetric and equivariant."""
        if u == v:
            return Chain(1)
        anchored = self.graph.anchor(u, v)
        key = (Vertex("", 0, u.depth), anchored)
        hit = self._path_cache.get(key)
        if hit is None:
            hit = self._path_anchored(key[0], anchored, 0)
            self._path_cache[key] = hit
        return hit.translate(self.graph, u.elem)

    def _path_anchored(self, u: Vertex, v: Vertex, rec: int) -> Chain:
        if rec > self.fill_recursion_cap:
            raise FillDepthExceeded(
                f"combing recursion exceeded {self.fill_recursion_cap}; "
                "kappa is likely too small")
        if self.graph.distance(u, v) <= self.kappa:
            out = Chain(1)
            out.add((u, v), 1)
            return out
        m = self.graph.geodesic_midpoint(u, v)
        return (self._path_anchored(u, m, rec + 1)
                + self._path_anchored(m, v, rec + 1))

    def triangle_cycle(self, x0: Vertex, x1: Vertex, x2: Vertex) -> Chain:
        return (self.combing_path(x0, x1) + self.combing_path(x1, x2)
                + self.combing_path(x2, x0))

    # -- triangle filling -----------------------------------------------

    def fill_triangle(self, x0: Vertex, x1: Vertex, x2: Vertex) -> FillResult:
        chain, sign, shift, method = self.fill_anchored(x0, x1, x2)
        out = chain.translate(self.graph, shift)
        if sign < 0:
            out = -out
        return FillResult(out, method, out.l1_norm())

    def fill_anchored(self, x0: Vertex, x1: Vertex,
                      x2: Vertex) -> tuple[Chain, int, GroupElem, str]:
        """Filling as (canonical chain, sign, shift, method) with the actual
        chain equal to sign * shift . canonical; callers that only need an
        invariant evaluation can skip the translation entirely."""
        if len({x0, x1, x2}) < 3:
            return Chain(2), 1, GroupElem("", 0), "degenerate"
        canon, sign, shift = self._canonical_triple((x0, x1, x2))
        hit = self._fill_cache.get(canon)
        if hit is None:
            hit = self._fill_canonical(canon, 0)
            self._fill_cache[canon] = hit
        return hit[0], sign, shift, hit[1]

    def _canonical_triple(self, verts: tuple[Vertex, Vertex, Vertex]):
        """Lex-least tuple over reorderings and left translation moving the
        first vertex to the identity.  Returns (tuple, sign, translate) with
        original = translate . canonical, up to the permutation.

        Only one inversion touches the input words; the other anchorings are
        derived from the pairwise relative elements, which stay short even
        when the inputs are long.
        """
        psi = self.graph.psi
        inv0 = gamma_inv(verts[0].elem, psi)
        r01 = gamma_mul(inv0, verts[1].elem, psi)
        r02 = gamma_mul(inv0, verts[2].elem, psi)
        r10 = gamma_inv(r01, psi)
        r20 = gamma_inv(r02, psi)
        rel = {(0, 1): r01, (0, 2): r02, (1, 0): r10, (2, 0): r20,
               (1, 2): gamma_mul(r10, r02, psi),
               (2, 1): gamma_mul(r20, r01, psi)}
        best_key = None
        best = None
        for perm in permutations(range(3)):
            sign = 1 if perm in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1
            i = perm[0]
            cand = [Vertex("", 0, verts[i].depth)]
            for j in perm[1:]:
                e = rel[(i, j)]
                cand.append(Vertex(e.base, e.texp, verts[j].depth))
            cand = tuple(cand)
            key = tuple(vertex_key(v) for v in cand)
            if best_key is None or key < best_key:
                best_key, best = key, (cand, sign, verts[i].elem)
        return best

    def _fill_canonical(self, tri: tuple[Vertex, ...], rec: int):
        if rec > self.fill_recursion_cap:
            raise FillDepthExceeded(
                f"fill recursion exceeded {self.fill_recursion_cap}; "
                "kappa is likely too small")
        dists = {side: self.graph.distance(tri[side[0]], tri[side[1]])
                 for side in ((0, 1), (0, 2), (1, 2))}
        longest = max(dists, key=lambda side: (dists[side], side))
        if dists[longest] <= self.kappa:
            out = Chain(2)
            out.add(tri, 1)
            return out, "unit-simplex"
        perm, sign = _SIDE_PERMS[longest]
        y0, y1, y2 = (tri[i] for i in perm)
        m = self.graph.geodesic_midpoint(y0, y1)
        part = (self._fill_sub(y0, m, y2, rec + 1)
                + self._fill_sub(m, y1, y2, rec + 1))
        return (part if sign > 0 else -part), "cone-split"

    def _fill_sub(self, x0: Vertex, x1: Vertex, x2: Vertex, rec: int) -> Chain:
        """Recursive step through the canonical cache, keeping the depth
        counter alive across cache misses."""
        if len({x0, x1, x2}) < 3:
            return Chain(2)
        canon, sign, shift = self._canonical_triple((x0, x1, x2))
        hit = self._fill_cache.get(canon)
        if hit is None:
            hit = self._fill_canonical(canon, rec)
            self._fill_cache[canon] = hit
        out = hit[0].translate(self.graph, shift)
        return -out if sign < 0 else out

    # -- LP fillings -----------------------------------------------------

    def rips_window(self, around: set[Vertex], radius: int) -> list[Vertex]:
        verts: set[Vertex] = set()
        for v in around:
            verts.update(self.graph.ball(v, radius))
        return sorted(verts, key=vertex_key)

    def fill_cycle_lp(self, z: Chain, window_radius: int | None = None,
                      simplex_cap: int | None = None,
                      extra_vertices: set[Vertex] | None = None) -> FillResult:
        """l1-minimal (dim+1)-chain b with boundary exactly z, over Rips
        simplices spanned by a window around supp(z) (plus any explicitly
        seeded vertices, e.g. the support of a known filling)."""
        if not z:
            return FillResult(Chain(z.dim + 1), "lp", Fraction(0))
        radius = self.lp_window_radius if window_radius is None else window_radius
        cap = self.lp_simplex_cap if simplex_cap is None else simplex_cap
        seeds = z.support() | (extra_vertices or set())
        window = self.rips_window(seeds, radius)
        simplices = self._rips_simplices(window, z.dim + 2, cap)
        if not simplices:
            raise Infeasible("window contains no candidate simplices")

        rows: dict[tuple, int] = {}
        for face in z.terms:
            rows.setdefault(face, len(rows))
        columns = []
        for sx in simplices:
            col: dict[int, Fraction] = {}
            bd = Chain(z.dim + 1)
            bd.add(sx, 1)
            for face, coeff in bd.boundary().terms.items():
                idx = rows.setdefault(face, len(rows))
                col[idx] = coeff
            columns.append(col)
        target = {rows[f]: c for f, c in z.terms.items()}

        if len(columns) <= self.lp_exact_columns:
            coeffs = lp.solve_exact(columns, target, len(rows))
        else:
            coeffs = lp.solve_float_then_verify(columns, target, len(rows))
        out = Chain(z.dim + 1)
        for sx, c in zip(simplices, coeffs):
            if c:
                out.add(sx, c)
        if out.boundary() != z:
            raise Infeasible("LP result failed exact boundary verification")
        return FillResult(out, "lp", out.l1_norm())

    def _rips_simplices(self, window: list[Vertex], size: int,
                        cap: int) -> list[tuple[Vertex, ...]]:
        """All size-vertex cliques of the Rips graph (diameter <= kappa) on
        the window, in canonical vertex order."""
        n = len(window)
        adj = [set() for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if self.graph.distance_at_most(window[i], window[j], self.kappa):
                    adj[i].add(j)
        out: list[tuple[Vertex, ...]] = []

        def extend(members: list[int], candidates: set[int]) -> None:
            if len(members) == size:
                out.append(tuple(window[i] for i in members))
                if len(out) > cap:
                    raise WindowTooLarge(
                        f"more than {cap} Rips simplices in the window")
                return
            for j in sorted(candidates):
                extend(members + [j], candidates & adj[j])

        for i in range(n):
            extend([i], set(adj[i]))
        return out

    # -- relative filling diagnostics -------------------------------------

    def relative_fill_check(self, x0: Vertex, x1: Vertex, x2: Vertex,
                            x3: Vertex, window_radius: int | None = None) -> dict:
        """Fill the 2-cycle phi(boundary of [x0..x3]) and report its norm."""
        pts = (x0, x1, x2, x3)
        if len(set(pts)) < 4:
            return {"B": Chain(3), "norm": Fraction(0), "method": "degenerate"}
        z = Chain(2)
        for i in range(4):
            face = pts[:i] + pts[i + 1:]
            part = self.fill_triangle(*face).chain
            z = z + part if i % 2 == 0 else z - part
        if not z:
            return {"B": Chain(3), "norm": Fraction(0), "method": "lp"}
        if all(self.graph.distance(pts[i], pts[j]) <= self.kappa
               for i in range(4) for j in range(i + 1, 4)):
            b = Chain(3)
            b.add(pts, 1)
            if b.boundary() == z:
                return {"B": b, "norm": b.l1_norm(), "method": "unit-simplex"}
        res = self.fill_cycle_lp(z, window_radius=window_radius)
        return {"B": res.chain, "norm": res.norm, "method": "lp"}

    def clear_caches(self) -> None:
        self._path_cache.clear()
        self._fill_cache.clear()
