from fractions import Fraction

from hypothesis import strategies as st


def brute_fuel(values, x, model="triangular"):
    """Plain per-agent summation, independent of the package."""
    total = Fraction(0)
    for v in values:
        d = abs(Fraction(x) - Fraction(v))
        total += d if model == "linear" else d * (d + 1) / 2
    return total


def brute_integer_argmin(values, model="triangular"):
    lo = min(Fraction(v) for v in values).__floor__()
    hi = max(Fraction(v) for v in values).__ceil__()
    best = min(range(lo, hi + 1), key=lambda k: (brute_fuel(values, k, model), k))
    return best, brute_fuel(values, best, model)


def one_sided_slopes(cost, x, h1, h2):
    """Recover left and right derivatives of a piecewise quadratic exactly.

    On one piece the difference quotient is ``slope + a*h``, so two step sizes
    determine the ``h -> 0`` limit.
    """
    def extrapolate(q1, q2):
        return (h2 * q1 - h1 * q2) / (h2 - h1)

    right = extrapolate((cost(x + h1) - cost(x)) / h1, (cost(x + h2) - cost(x)) / h2)
    left = extrapolate((cost(x) - cost(x - h1)) / h1, (cost(x) - cost(x - h2)) / h2)
    return left, right


half_integers = st.integers(-200, 200).map(lambda k: Fraction(k, 2))
small_rationals = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 7))

position_lists = st.lists(
    st.one_of(st.integers(-100, 100).map(Fraction), half_integers, small_rationals),
    min_size=1,
    max_size=30,
)
