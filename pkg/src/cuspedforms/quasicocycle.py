"""Volume-form quasi-cocycles alpha_f, the explicit cycles c, d_m, e_m, A_m,
and the defect / certificate machinery built on top of them."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .chains import CoinvariantChain, Simplex, pair
from .fill import FillEngine
from .graph import CuspedGraph, Vertex, random_gamma0_word
from .lipschitz import LipFn, lip_on_window, lip_tail, truncate
from .moebius import OrientationCocycle
from .words import COMM, GroupElem, mul, word_pow


class QuasiCocycle:
    """Evaluation engine for F_f and alpha_f over a fill engine."""

    def __init__(self, engine: FillEngine, eps: OrientationCocycle | None = None):
        self.engine = engine
        self.graph = engine.graph
        self.eps = eps or OrientationCocycle()
        self._eps_cache: dict[tuple[str, str, str], int] = {}
        self._anchor_cache: dict[tuple[Vertex, Vertex, Vertex], tuple] = {}
        self._am_cache: dict[int, CoinvariantChain] = {}
        self.theta_lo: int | None = None  # theta window touched since reset
        self.theta_hi: int | None = None

    def reset_window(self) -> None:
        self.theta_lo = self.theta_hi = None

    def _touch(self, k: int) -> None:
        if self.theta_lo is None or k < self.theta_lo:
            self.theta_lo = k
        if self.theta_hi is None or k > self.theta_hi:
            self.theta_hi = k

    def _eps(self, sx: Simplex) -> int:
        key = tuple(v.base for v in sx)
        hit = self._eps_cache.get(key)
        if hit is None:
            hit = self.eps.on_words(*key)
            self._eps_cache[key] = hit
        return hit

    def F(self, f: LipFn, sx: Simplex, shift: int = 0) -> Fraction:
        """F_f on a simplex given in coordinates translated by t^-shift; the
        orientation cocycle is invariant under the whole group action, so it
        reads the translated bases while f reads the true t-exponents."""
        for v in sx:
            self._touch(v.texp + shift)
        e = self._eps(sx)
        if e == 0:
            return Fraction(0)
        return e * sum((f(v.texp + shift) for v in sx), Fraction(0)) / 3

    def alpha(self, f: LipFn, x0: Vertex, x1: Vertex, x2: Vertex) -> Fraction:
        # evaluate on the anchored filling: equivariance of F makes the
        # answer identical while the words stay short
        key = (x0, x1, x2)
        hit = self._anchor_cache.get(key)
        if hit is None:
            chain, sign, g, _ = self.engine.fill_anchored(x0, x1, x2)
            hit = (chain, sign, g.texp)
            self._anchor_cache[key] = hit
        chain, sign, shift = hit
        return sign * sum(
            (coeff * self.F(f, sx, shift) for sx, coeff in chain.terms.items()),
            Fraction(0))

    def alpha_functional(self, f: LipFn):
        return lambda x0, x1, x2: self.alpha(f, x0, x1, x2)

    def delta_alpha(self, f: LipFn, x0: Vertex, x1: Vertex, x2: Vertex,
                    x3: Vertex) -> Fraction:
        pts = (x0, x1, x2, x3)
        total = Fraction(0)
        for i in range(4):
            face = pts[:i] + pts[i + 1:]
            val = self.alpha(f, *face)
            total += val if i % 2 == 0 else -val
        return total


# -- explicit cycles ---------------------------------------------------------


def _v(base: str, texp: int = 0, depth: int = 0) -> Vertex:
    return Vertex(base, texp, depth)


def boundary_class() -> CoinvariantChain:
    """The 1-class of ((e,0), ([a,b],0)); this is the boundary of c."""
    out = CoinvariantChain(1)
    out.add((_v(""), _v(COMM)), 1)
    return out


def build_c() -> CoinvariantChain:
    out = CoinvariantChain(2)
    out.add((_v(""), _v("b"), _v("ba")), 1)
    out.add((_v(""), _v("ba"), _v("ab")), 1)
    out.add((_v(""), _v("ab"), _v("a")), 1)
    return out


def k_of(m: int) -> int:
    """K_m = floor(log2 m) + 1."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return m.bit_length()


def build_aK(K: int) -> CoinvariantChain:
    out = CoinvariantChain(1)
    out.add((_v("", 0, K), _v(word_pow(COMM, 2 ** K), 0, K)),
            Fraction(1, 2 ** K))
    return out


def build_d(m: int) -> CoinvariantChain:
    out = CoinvariantChain(2)
    for i in range(k_of(m)):
        w_i = word_pow(COMM, 2 ** i)
        w_i1 = word_pow(COMM, 2 ** (i + 1))
        coeff = Fraction(1, 2 ** (i + 1))
        out.add((_v("", 0, i), _v("", 0, i + 1), _v(w_i, 0, i)), coeff)
        out.add((_v(w_i, 0, i), _v("", 0, i + 1), _v(w_i1, 0, i + 1)), coeff)
        out.add((_v(w_i, 0, i), _v(w_i1, 0, i + 1), _v(w_i1, 0, i)), coeff)
    return out


def build_e(m: int) -> CoinvariantChain:
    K = k_of(m)
    w = word_pow(COMM, 2 ** K)
    # t^m [a,b]^{2^K} = [a,b]^{2^K} t^m since psi fixes the commutator
    out = CoinvariantChain(2)
    coeff = Fraction(1, 2 ** K)
    out.add((_v("", 0, K), _v(w, m, K), _v("", m, K)), coeff)
    out.add((_v("", 0, K), _v(w, 0, K), _v(w, m, K)), coeff)
    return out


def translate_chain(chain: CoinvariantChain, graph: CuspedGraph,
                    g: GroupElem) -> CoinvariantChain:
    out = CoinvariantChain(chain.dim)
    for verts, coeff in chain.terms.items():
        out.add(tuple(graph.left_mul(g, v) for v in verts), coeff)
    return out


def build_A(graph: CuspedGraph, m: int) -> CoinvariantChain:
    cd = build_c() + build_d(m)
    t_m = GroupElem("", m)
    return translate_chain(cd, graph, t_m) - cd + build_e(m)


def evaluate_on_Am(qc: QuasiCocycle, f: LipFn, m: int,
                   validate: bool = False) -> Fraction:
    chain = qc._am_cache.get(m)
    if chain is None:
        chain = build_A(qc.graph, m)
        qc._am_cache[m] = chain
    return pair(qc.alpha_functional(f), chain, graph=qc.graph,
                validate=validate)


# -- sampling ----------------------------------------------------------------

STRATA = ("cayley", "mixed", "cross")


def sample_vertex(graph: CuspedGraph, rng: random.Random,
                  stratum: str) -> Vertex:
    base = Vertex(random_gamma0_word(rng, 6), rng.randrange(-3, 4), 0)
    if stratum == "cayley":
        return base
    if stratum == "mixed":
        return base._replace(depth=rng.randrange(0, 3))
    # cross: sit just outside a horoball wall so nearby tuples straddle cosets
    shifted = mul(base.base, rng.choice(("a", "b", "A", "B")))
    return Vertex(shifted, base.texp, rng.randrange(0, 2))


def sample_tuple(graph: CuspedGraph, rng: random.Random, stratum: str,
                 size: int) -> tuple[Vertex, ...]:
    """size vertices within a few steps of a common base, per stratum."""
    base = sample_vertex(graph, rng, stratum)
    out = [base]
    for _ in range(size - 1):
        v = out[rng.randrange(len(out))]
        for _ in range(rng.randrange(1, 3)):
            nbrs = graph.neighbors(v)
            if stratum == "cayley":
                nbrs = [u for u in nbrs if u.depth == 0] or nbrs
            v = nbrs[rng.randrange(len(nbrs))]
        out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class DefectReport:
    seed: int
    count: int
    strata: tuple[str, ...]
    max_abs_delta: Fraction
    lip_window: Fraction
    ratio_to_lip: Fraction
    argmax: tuple[str, ...]
    theta_window: tuple[int, int]

    def to_json(self) -> dict:
        return {"seed": self.seed, "count": self.count,
                "strata": list(self.strata),
                "max_abs_delta": str(self.max_abs_delta),
                "lip_window": str(self.lip_window),
                "ratio_to_lip": str(self.ratio_to_lip),
                "argmax": list(self.argmax),
                "theta_window": list(self.theta_window)}


def defect_scan(qc: QuasiCocycle, f: LipFn, count: int,
                seed: int) -> DefectReport:
    """Max |delta alpha_f| over `count` seeded 4-tuples drawn from the three
    strata in rotation; ratio is against the lip constant on the theta window
    actually touched."""
    rng = random.Random(seed)
    qc.reset_window()
    best = Fraction(0)
    argmax: tuple[Vertex, ...] | None = None
    for idx in range(count):
        pts = sample_tuple(qc.graph, rng, STRATA[idx % len(STRATA)], 4)
        val = abs(qc.delta_alpha(f, *pts))
        if val > best or argmax is None:
            best, argmax = val, pts
    lo = qc.theta_lo if qc.theta_lo is not None else 0
    hi = qc.theta_hi if qc.theta_hi is not None else 0
    lip = lip_on_window(f, lo, hi)
    ratio = best / lip if lip else Fraction(0)
    return DefectReport(seed=seed, count=count, strata=STRATA,
                        max_abs_delta=best, lip_window=lip,
                        ratio_to_lip=ratio,
                        argmax=tuple(str(v) for v in argmax),
                        theta_window=(lo, hi))


def max_alpha_scan(qc: QuasiCocycle, f: LipFn, count: int,
                   seed: int) -> tuple[Fraction, Fraction]:
    """(max |alpha_f|, max fill norm) over seeded sample triples."""
    rng = random.Random(seed)
    best = Fraction(0)
    worst_norm = Fraction(0)
    for idx in range(count):
        pts = sample_tuple(qc.graph, rng, STRATA[idx % len(STRATA)], 3)
        if len(set(pts)) < 3:
            continue
        best = max(best, abs(qc.alpha(f, *pts)))
        worst_norm = max(worst_norm,
                         qc.engine.fill_triangle(*pts).norm)
    return best, worst_norm


# -- certificates ------------------------------------------------------------


def free_ball(radius: int) -> list[str]:
    """Ball of radius `radius` in F(a,b) with the free generators."""
    out = {""}
    frontier = [""]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for s in ("a", "A", "b", "B"):
                u = mul(w, s)
                if u not in out:
                    out.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(out, key=lambda w: (len(w), w))


def vanishing_certificate(qc: QuasiCocycle, f: LipFn, n: int,
                          radius: int) -> dict:
    """Evaluate alpha_{f_n} on every distinct triple over the radius-`radius`
    Cayley ball of the free group at depth 0; exact vanishing check."""
    fn = truncate(f, n)
    ball = [Vertex(w, 0, 0) for w in free_ball(radius)]
    qc.reset_window()
    witness = None
    for tri in combinations(ball, 3):
        val = qc.alpha(fn, *tri)
        if val and witness is None:
            witness = (tuple(str(v) for v in tri), val)
    lo = qc.theta_lo if qc.theta_lo is not None else 0
    hi = qc.theta_hi if qc.theta_hi is not None else 0
    return {"n": n, "radius": radius, "vanishes": witness is None,
            "witness": witness, "theta_span": max(abs(lo), abs(hi))}


def bah_upper_bound_certificate(qc: QuasiCocycle, f: LipFn,
                                radii: list[int], khat: Fraction,
                                n_max: int = 16,
                                probe_span: int = 256) -> list[dict]:
    """For each radius i, the least truncation level n_i that certifies exact
    vanishing on S_i^3 and (when possible) strictly improves the defect bound
    khat * lip_tail(f, n_i); the bound column witnesses the vanishing of the
    seminorm for sublinear f."""
    rows = []
    prev_bound: Fraction | None = None
    for radius in radii:
        fallback = None
        chosen = None
        for n in range(n_max + 1):
            cert = vanishing_certificate(qc, f, n, radius)
            if not cert["vanishes"] or cert["theta_span"] > n:
                continue
            bound = khat * lip_tail(f, n, probe_span)
            if fallback is None:
                fallback = (n, bound)
            if prev_bound is None or bound < prev_bound:
                chosen = (n, bound)
                break
        if chosen is None:
            chosen = fallback
        if chosen is None:
            rows.append({"radius": radius, "n": None, "bound": None,
                         "vanishes": False})
            continue
        n_i, bound = chosen
        prev_bound = bound
        rows.append({"radius": radius, "n": n_i, "bound": bound,
                     "vanishes": True})
    return rows


def nontriviality_certificate(qc: QuasiCocycle, f: LipFn,
                              ms: list[int]) -> list[dict]:
    """Rows (m, |alpha_f(A_m)| / ||A_m||_1): any bounded invariant primitive
    of delta alpha_f has sup norm at least the ratio."""
    rows = []
    for m in ms:
        chain = qc._am_cache.get(m)
        if chain is None:
            chain = build_A(qc.graph, m)
            qc._am_cache[m] = chain
        value = pair(qc.alpha_functional(f), chain, graph=qc.graph,
                     validate=False)
        norm = chain.l1_norm()
        rows.append({"m": m, "value": value, "am_norm": norm,
                     "ratio": abs(value) / norm})
    return rows


def independence_rank(fs: list[LipFn], ms: list[int]) -> int:
    """Rank over Q of the matrix [f_j(m_i) - f_j(0)]."""
    matrix = [[f(m) - f(0) for f in fs] for m in ms]
    rank = 0
    ncols = len(fs)
    row = 0
    for col in range(ncols):
        sel = next((r for r in range(row, len(matrix)) if matrix[r][col]),
                   None)
        if sel is None:
            continue
        matrix[row], matrix[sel] = matrix[sel], matrix[row]
        piv = matrix[row][col]
        matrix[row] = [v / piv for v in matrix[row]]
        for r in range(len(matrix)):
            if r != row and matrix[r][col]:
                fac = matrix[r][col]
                matrix[r] = [v - fac * w
                             for v, w in zip(matrix[r], matrix[row])]
        rank += 1
        row += 1
    return rank
