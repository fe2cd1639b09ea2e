"""Complex log-gamma via a 9-term Lanczos approximation (g = 7).

This mirrors the algorithm compiled into the Cython kernel so the two
backends can be cross-checked; the pure-numpy evaluation path uses
scipy.special.loggamma instead.  Results may differ from the principal
log-gamma branch by multiples of 2*pi*j, which is harmless here because
every use exponentiates sums of these logs.
"""

import numpy as np

_G = 7.0
_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.9189385332046727
_LOG_PI = 1.1447298858494002


def _log_sin_pi(z):
    # Stable log(sin(pi z)) for large |Im z|: factor out the growing exponential.
    z = np.asarray(z, dtype=complex)
    iz = 1j * np.pi * z
    out = np.where(
        z.imag >= 0,
        -iz + np.log1p(-np.exp(2 * iz)) - np.log(2j),
        iz + np.log1p(-np.exp(-2 * iz)) - np.log(-2j),
    )
    return out


def loggamma(z):
    """Lanczos log-gamma on complex input, reflection for Re z < 0.5."""
    z = np.asarray(z, dtype=complex)
    refl = z.real < 0.5
    zz = np.where(refl, 1.0 - z, z)

    w = zz - 1.0
    acc = np.full(zz.shape, _COEFFS[0], dtype=complex)
    for k, c in enumerate(_COEFFS[1:], start=1):
        acc = acc + c / (w + k)
    t = w + _G + 0.5
    main = _LOG_SQRT_2PI + (w + 0.5) * np.log(t) - t + np.log(acc)

    if np.any(refl):
        reflected = _LOG_PI - _log_sin_pi(z) - main
        main = np.where(refl, reflected, main)
    if main.ndim == 0:
        return complex(main)
    return main
