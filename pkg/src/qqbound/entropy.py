"""Binary entropy and the concurrence-to-EOF map."""
import math

from .exceptions import OutOfRange

SLACK = 1e-9


def binary_entropy(x):
    """``-x log2 x - (1-x) log2 (1-x)``, with ``h(0) = h(1) = 0``."""
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def eof_from_concurrence(c):
    """Entanglement of formation ``h((1 + sqrt(1 - c^2)) / 2)``.

    ``c`` must lie in ``[0, 1]``; values within ``1e-9`` outside are clamped.
    """
    c = float(c)
    if not (-SLACK <= c <= 1.0 + SLACK):
        raise OutOfRange(f"concurrence {c!r} outside [0, 1]")
    c = min(max(c, 0.0), 1.0)
    return binary_entropy(0.5 * (1.0 + math.sqrt(1.0 - c * c)))
