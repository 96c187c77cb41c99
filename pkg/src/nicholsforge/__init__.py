"""Exact computation with Nichols algebras of diagonal type.

Everything runs over cyclotomic fields with rational coefficients; there is
no floating point in any code path that decides a rank, a dimension, or an
axiom.  The heavy linear algebra sits behind a small kernel interface with a
compiled (Cython) implementation and a pure Python twin, selected at import
time; set NICHOLS_FORGE_KERNEL=py|c|auto to override.
"""

from ._kernel import KERNEL_NAME

__version__ = "0.1.0"

__all__ = ["KERNEL_NAME", "__version__"]
