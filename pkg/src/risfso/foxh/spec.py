"""Parameterization and contour-strip validation of Fox H-functions.

An H-function here is a (possibly multivariate) Mellin-Barnes integral

    H(z_1..z_N) = (1/2*pi*j)^N  oint ... oint  J(t) * prod_i B_i(t_i) z_i^(-t_i) dt

where each per-variable block contributes the classical Gamma ratio

    B_i(t) = prod_{j<=m} Gamma(b_j + B_j t) * prod_{j<=n} Gamma(1 - a_j - A_j t)
           / (prod_{j>n} Gamma(a_j + A_j t) * prod_{j>m} Gamma(1 - b_j - B_j t))

and J(t) is a product of joint factors Gamma(1 - c - sum_i C_i t_i)^(+-1)
coupling the contour variables.  Contours are vertical lines through
per-variable anchors that must separate the pole families of the numerator
Gammas; `validate` computes the admissible strip per variable and reports
anchors, or fails naming the colliding families.
"""

from dataclasses import dataclass, field

_MARGIN = 1e-9
_JOINT_POLE_MARGIN = 0.02


class NoStripError(ValueError):
    """No admissible contour strip: numerator pole families overlap."""


@dataclass(frozen=True)
class GammaPair:
    """One (offset, scale) coefficient pair of a Gamma factor."""

    a: float
    A: float

    def __post_init__(self):
        if not (abs(self.a) < 1e12 and abs(self.A) < 1e12):
            raise ValueError(f"non-finite gamma pair ({self.a}, {self.A})")


@dataclass(frozen=True)
class FoxHBlock:
    """Per-variable Gamma-ratio block.

    The first `n` upper pairs are numerator factors Gamma(1 - a - A t); the
    remaining upper pairs are denominators Gamma(a + A t).  The first `m`
    lower pairs are numerator factors Gamma(b + B t); the remaining lower
    pairs are denominators Gamma(1 - b - B t).  Pair order inside each group
    is preserved but has no numerical effect.
    """

    m: int
    n: int
    upper: tuple = ()
    lower: tuple = ()

    def __post_init__(self):
        if not (0 <= self.n <= len(self.upper)):
            raise ValueError("need 0 <= n <= p")
        if not (0 <= self.m <= len(self.lower)):
            raise ValueError("need 0 <= m <= q")
        for pair in self.upper + self.lower:
            if pair.A <= 0:
                raise ValueError("per-variable pair scales must be positive")

    @property
    def orders(self):
        return self.m, self.n, len(self.upper), len(self.lower)

    def left_edge(self):
        """Rightmost pole of the left (lower-numerator) families, -inf if none."""
        poles = [-p.a / p.A for p in self.lower[: self.m]]
        return max(poles) if poles else float("-inf")

    def right_edge(self):
        """Leftmost pole of the right (upper-numerator) families, +inf if none."""
        poles = [(1.0 - p.a) / p.A for p in self.upper[: self.n]]
        return min(poles) if poles else float("inf")

    def decay_rate(self):
        """Exponential decay coefficient of |B(t)| along the vertical contour.

        Stirling gives |Gamma(x+jy)| ~ exp(-pi|y|/2) scaling per unit scale
        coefficient; numerators decay, denominators grow.
        """
        num = sum(p.A for p in self.upper[: self.n]) + sum(
            p.A for p in self.lower[: self.m]
        )
        den = sum(p.A for p in self.upper[self.n :]) + sum(
            p.A for p in self.lower[self.m :]
        )
        return num - den


@dataclass(frozen=True)
class JointGamma:
    """Joint factor Gamma(1 - c - sum_i coeffs_i * t_i), or its reciprocal.

    `window`, when given, is the required open interval for the real part of
    the Gamma argument at the anchors; it encodes which pole gaps an
    analytically-continued factor must sit in.
    """

    c: float
    coeffs: tuple
    numerator: bool = True
    window: tuple = None

    def arg_at(self, anchors):
        return 1.0 - self.c - sum(C * a for C, a in zip(self.coeffs, anchors))


@dataclass(frozen=True)
class FoxHSpec:
    """Full parameterization of a 1-3 variable Fox H-function."""

    blocks: tuple
    joint: tuple = ()

    def __post_init__(self):
        if not 1 <= len(self.blocks) <= 3:
            raise ValueError("supported variable counts are 1-3")
        for j in self.joint:
            if len(j.coeffs) != len(self.blocks):
                raise ValueError("joint coefficient count must match variables")

    @property
    def nvars(self):
        return len(self.blocks)


@dataclass(frozen=True)
class StripReport:
    """Outcome of pole-separation validation."""

    anchors: tuple
    strips: tuple
    messages: tuple = field(default=())


def _pick_anchor(lo, hi):
    if lo > float("-inf") and hi < float("inf"):
        return 0.5 * (lo + hi)
    if lo > float("-inf"):
        return lo + max(0.75, 0.25 * abs(lo))
    if hi < float("inf"):
        return hi - max(0.75, 0.25 * abs(hi))
    return 0.5


def _dist_to_nonpositive_int(x):
    if x > 0:
        return x
    return abs(x - round(x))


def validate(spec, anchors=None):
    """Check pole separation and return admissible anchors per variable.

    When `anchors` is given they are verified against the strips instead of
    being chosen; joint factors are always checked at the resulting point.
    Raises NoStripError when a variable has no strip, an anchor is outside
    its strip, or a joint Gamma argument lands on (or in the forbidden
    neighborhood of) a pole.
    """
    strips = []
    chosen = []
    notes = []
    for i, blk in enumerate(spec.blocks):
        lo, hi = blk.left_edge(), blk.right_edge()
        if lo >= hi - _MARGIN:
            raise NoStripError(
                f"variable {i}: left pole family ends at {lo:.6g}, right "
                f"family starts at {hi:.6g}; no admissible contour"
            )
        strips.append((lo, hi))
        if anchors is not None:
            a = anchors[i]
            if not (lo + _MARGIN < a < hi - _MARGIN):
                raise NoStripError(
                    f"variable {i}: anchor {a:.6g} outside strip ({lo:.6g}, {hi:.6g})"
                )
        else:
            a = _pick_anchor(lo, hi)
        chosen.append(a)

    for j in spec.joint:
        u = j.arg_at(chosen)
        if j.window is not None:
            lo, hi = j.window
            if not (lo < u < hi):
                raise NoStripError(
                    f"joint factor argument {u:.6g} outside required window "
                    f"({lo:.6g}, {hi:.6g})"
                )
        if j.numerator and _dist_to_nonpositive_int(u) < _JOINT_POLE_MARGIN:
            raise NoStripError(
                f"joint Gamma argument {u:.6g} too close to a pole at the anchors"
            )
        notes.append(f"joint arg {u:.6g}")

    return StripReport(anchors=tuple(chosen), strips=tuple(strips), messages=tuple(notes))
