"""Exception types shared across the package."""


class CuspedFormsError(Exception):
    pass


class PsiPowerCap(CuspedFormsError):
    """A twist-automorphism power exceeded the configured cap."""


class NotParabolic(CuspedFormsError):
    """Fixed-point extraction requested for a non-parabolic matrix."""


class DegreeOverflow(CuspedFormsError):
    """Neighbor enumeration requested beyond the configured depth cap."""


class CapExceeded(CuspedFormsError):
    """A capped distance search ran past its cap without terminating."""


class FillDepthExceeded(CuspedFormsError):
    """Triangle filling recursed too deep; kappa is too small for the geometry."""


class NotInvariant(CuspedFormsError):
    """A cochain failed its sampled invariance/alternation validation."""


class Infeasible(CuspedFormsError):
    """The windowed filling LP admits no solution; grow the window."""


class WindowTooLarge(CuspedFormsError):
    """The LP window exceeds the configured simplex-count cap."""


class LipschitzViolation(CuspedFormsError):
    """A Lipschitz function violated its declared constant on queried points."""
