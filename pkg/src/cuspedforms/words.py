"""Exact arithmetic in the free group F(a,b), its twist automorphism, and the
semidirect product G = F(a,b) x| Z.

Words are plain strings over the alphabet {a, A, b, B} (uppercase = inverse);
the empty string is the identity, printed as "e".  Elements of the semidirect
product are pairs (base, texp) in normal form g0 * t^k, multiplied with the
twisted rule (g0 t^k)(h0 t^l) = (g0 * psi^k(h0)) t^(k+l).
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import PsiPowerCap

GENERATORS = "ab"
LETTERS = "aAbB"

#: the commutator [a,b] = a^-1 b^-1 a b
COMM = "ABab"


def invert_letter(x: str) -> str:
    return x.swapcase()


def reduce_word(letters: Iterable[str]) -> str:
    """Freely reduce a letter sequence (stack-based, single pass)."""
    out: list[str] = []
    for x in letters:
        if out and out[-1] == x.swapcase():
            out.pop()
        else:
            out.append(x)
    return "".join(out)


def mul(u: str, v: str) -> str:
    """Product of two reduced words, reduced."""
    out = list(u)
    for x in v:
        if out and out[-1] == x.swapcase():
            out.pop()
        else:
            out.append(x)
    return "".join(out)


def inv(w: str) -> str:
    return w.swapcase()[::-1]


def word_pow(w: str, n: int) -> str:
    if n < 0:
        w, n = inv(w), -n
    out = ""
    for _ in range(n):
        out = mul(out, w)
    return out


def parse_word(text: str) -> str:
    """Parse the text encoding: letters aAbB, with "e" for the identity."""
    if text == "e" or text == "":
        return ""
    for x in text:
        if x not in LETTERS:
            raise ValueError(f"bad letter {x!r} in word {text!r}")
    return reduce_word(text)


def format_word(w: str) -> str:
    return w if w else "e"


class Automorphism:
    """An automorphism of F(a,b) given by the images of the generators,
    together with its inverse.  Iterated application reduces at every step,
    so intermediate words never outgrow the reduced images.
    """

    def __init__(self, images: dict[str, str], inverse_images: dict[str, str],
                 power_cap: int = 32):
        self.images = {
            "a": reduce_word(images["a"]),
            "b": reduce_word(images["b"]),
        }
        self.images["A"] = inv(self.images["a"])
        self.images["B"] = inv(self.images["b"])
        self.inverse_images = {
            "a": reduce_word(inverse_images["a"]),
            "b": reduce_word(inverse_images["b"]),
        }
        self.inverse_images["A"] = inv(self.inverse_images["a"])
        self.inverse_images["B"] = inv(self.inverse_images["b"])
        self.power_cap = power_cap
        self._apply_cache: dict[tuple[str, int], str] = {}

    def apply_once(self, w: str, forward: bool = True) -> str:
        table = self.images if forward else self.inverse_images
        out: list[str] = []
        for x in w:
            for y in table[x]:
                if out and out[-1] == y.swapcase():
                    out.pop()
                else:
                    out.append(y)
        return "".join(out)

    def apply(self, w: str, power: int) -> str:
        if abs(power) > self.power_cap:
            raise PsiPowerCap(
                f"automorphism power {power} exceeds cap {self.power_cap}")
        # deep powers of long words recur constantly when anchoring
        # translated chains; memoize those only (short words are cheap)
        cache = len(w) >= 256 and abs(power) > 1
        if cache:
            hit = self._apply_cache.get((w, power))
            if hit is not None:
                return hit
        out = w
        forward = power >= 0
        for _ in range(abs(power)):
            out = self.apply_once(out, forward)
        if cache:
            self._apply_cache[(w, power)] = out
        return out

    def check(self) -> None:
        """Startup self-checks: the commutator is fixed, and the given inverse
        really inverts on the generators."""
        if self.apply_once(COMM) != COMM:
            raise ValueError("configured automorphism does not fix [a,b]")
        for g in GENERATORS:
            if self.apply_once(self.apply_once(g), forward=False) != g:
                raise ValueError("configured inverse does not invert psi")
            if self.apply_once(self.apply_once(g, forward=False)) != g:
                raise ValueError("configured inverse does not invert psi")

    def abelianization(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Column-per-generator exponent matrix ((a_a, a_b), (b_a, b_b))."""

        def counts(w: str) -> tuple[int, int]:
            na = w.count("a") - w.count("A")
            nb = w.count("b") - w.count("B")
            return na, nb

        ca = counts(self.images["a"])
        cb = counts(self.images["b"])
        return (ca[0], cb[0]), (ca[1], cb[1])


#: Default twist: psi(a) = ba, psi(b) = bab.  Fixes [a,b] exactly and has
#: Anosov abelianization (1 1; 1 2).
DEFAULT_PSI = Automorphism({"a": "ba", "b": "bab"},
                           {"a": "Baa", "b": "Ab"})


class GroupElem(NamedTuple):
    """Element of G = F(a,b) x| Z in normal form base * t^texp."""

    base: str
    texp: int

    def __str__(self) -> str:
        return f"{format_word(self.base)}@{self.texp}"


IDENTITY = GroupElem("", 0)


def gamma_mul(g: GroupElem, h: GroupElem, psi: Automorphism = DEFAULT_PSI) -> GroupElem:
    return GroupElem(mul(g.base, psi.apply(h.base, g.texp)), g.texp + h.texp)


def gamma_inv(g: GroupElem, psi: Automorphism = DEFAULT_PSI) -> GroupElem:
    # (g0 t^k)^-1 = psi^-k(g0^-1) t^-k
    return GroupElem(psi.apply(inv(g.base), -g.texp), -g.texp)


def theta(g: GroupElem) -> int:
    """The t-exponent homomorphism G -> Z."""
    return g.texp


def proj_p(g: GroupElem) -> str:
    """Projection onto the free-group part of the normal form."""
    return g.base


def parse_elem(text: str) -> GroupElem:
    word, _, k = text.partition("@")
    return GroupElem(parse_word(word), int(k) if k else 0)


def coset_rep(g: GroupElem | str) -> str:
    """Canonical representative of the coset g0<[a,b]> in F(a,b).

    Minimal length among g0*[a,b]^alpha over a finite window of alpha, ties
    broken lexicographically.  The window suffices because appending [a,b]
    powers eventually only lengthens a reduced word.
    """
    w = g.base if isinstance(g, GroupElem) else g
    window = len(w) + 1
    best = None
    for alpha in range(-window, window + 1):
        cand = mul(w, word_pow(COMM, alpha))
        key = (len(cand), cand)
        if best is None or key < best:
            best = key
    return best[1]


class HCoord(NamedTuple):
    """Coordinates on the peripheral Z^2: h = [a,b]^alpha * t^beta."""

    alpha: int
    beta: int


def h_distance(u: HCoord, v: HCoord) -> int:
    """Word metric on Z^2 with the standard generators (the l1 metric)."""
    return abs(u.alpha - v.alpha) + abs(u.beta - v.beta)


def h_coord(g: GroupElem) -> HCoord:
    """Coordinates of a peripheral element; raises if g is not in <[a,b], t>."""
    n, r = divmod(len(g.base), 4)
    if r != 0:
        raise ValueError(f"{g} is not peripheral")
    if g.base == word_pow(COMM, n):
        return HCoord(n, g.texp)
    if g.base == word_pow(COMM, -n):
        return HCoord(-n, g.texp)
    raise ValueError(f"{g} is not peripheral")
