"""Run configuration and engine assembly."""

from __future__ import annotations

from dataclasses import dataclass, field, fields

from .fill import FillEngine
from .graph import CuspedGraph
from .moebius import Hyperbolization, OrientationCocycle
from .quasicocycle import QuasiCocycle
from .words import Automorphism, DEFAULT_PSI


@dataclass
class RunConfig:
    kappa: int = 8
    depth_cap: int = 12
    distance_cap: int = 24
    psi_power_cap: int = 32
    fill_recursion_cap: int = 64
    lp_window_radius: int = 2
    lp_simplex_cap: int = 2000
    filler: str = "cone"  # cone | lp
    rng_seed: int = 0
    psi_images: dict = field(default_factory=dict)       # {"a": word, "b": word}
    psi_inverse_images: dict = field(default_factory=dict)
    rho_a: tuple = (1, 1, 1, 2)
    rho_b: tuple = (1, -1, -1, 2)

    def __post_init__(self):
        for name in ("kappa", "depth_cap", "distance_cap", "psi_power_cap",
                     "fill_recursion_cap", "lp_window_radius",
                     "lp_simplex_cap"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.filler not in ("cone", "lp"):
            raise ValueError("filler must be cone or lp")

    # -- construction ---------------------------------------------------

    def psi(self) -> Automorphism:
        images = self.psi_images or DEFAULT_PSI.images
        inverse = self.psi_inverse_images or DEFAULT_PSI.inverse_images
        return Automorphism(images, inverse, power_cap=self.psi_power_cap)

    def hyperbolization(self) -> Hyperbolization:
        return Hyperbolization(tuple(self.rho_a), tuple(self.rho_b))

    def selfcheck(self) -> dict:
        """Startup invariants; every command runs these first."""
        psi = self.psi()
        psi.check()
        hyp = self.hyperbolization()
        hyp.check()
        return {"psi_fixes_commutator": True, "psi_inverse_ok": True,
                "commutator_trace": -2, "ok": True}

    def build(self) -> QuasiCocycle:
        self.selfcheck()
        graph = CuspedGraph(self.psi(), depth_cap=self.depth_cap,
                            distance_cap=self.distance_cap)
        engine = FillEngine(graph, kappa=self.kappa,
                            fill_recursion_cap=self.fill_recursion_cap,
                            lp_window_radius=self.lp_window_radius,
                            lp_simplex_cap=self.lp_simplex_cap)
        return QuasiCocycle(engine, OrientationCocycle(self.hyperbolization()))

    # -- parsing ---------------------------------------------------------

    @classmethod
    def from_file(cls, path: str, overrides: dict | None = None) -> "RunConfig":
        values: dict = {}
        with open(path) as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                key, _, val = line.partition("=")
                values[key.strip()] = val.strip()
        if overrides:
            values.update(overrides)
        return cls.from_dict(values)

    @classmethod
    def from_dict(cls, values: dict) -> "RunConfig":
        kwargs = {}
        known = {f.name: f.type for f in fields(cls)}
        for key, val in values.items():
            if key not in known:
                raise ValueError(f"unknown config key {key!r}")
            if key in ("filler",):
                kwargs[key] = val
            elif key in ("psi_images", "psi_inverse_images"):
                kwargs[key] = val if isinstance(val, dict) else _parse_words(val)
            elif key in ("rho_a", "rho_b"):
                kwargs[key] = tuple(val) if isinstance(val, (list, tuple)) \
                    else tuple(int(x) for x in val.split(","))
            else:
                kwargs[key] = int(val)
        return cls(**kwargs)


def _parse_words(text: str) -> dict:
    # "a:ba,b:bab"
    out = {}
    for part in text.split(","):
        key, _, word = part.partition(":")
        out[key.strip()] = word.strip()
    return out
