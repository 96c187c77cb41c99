"""Rational number backend.

gmpy2.mpq is noticeably faster than fractions.Fraction on the long
elimination loops, but the package must work without it, so the choice is
made once at import.  Both types normalize to lowest terms, hash equal for
equal values, and print as "p/q" or "n", which is all the rest of the code
relies on.
"""

try:
    from gmpy2 import mpq as RAT

    RAT_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only on gmpy2-less installs
    from fractions import Fraction as RAT

    RAT_BACKEND = "fractions"

R_ZERO = RAT(0)
R_ONE = RAT(1)


def rat_from_string(s):
    """Parse "p/q" or "p" into a rational. Whitespace is tolerated."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return RAT(int(num), int(den))
    return RAT(int(s))


def rat_to_string(r):
    """Canonical textual form: "p/q" with q > 1 omitted when q == 1."""
    num, den = r.numerator, r.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"
