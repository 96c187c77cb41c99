"""Build script.

The compiled kernel is optional: if Cython (or a C compiler) is missing the
install proceeds and the package falls back to the pure-Python kernel at
import time.  Force a choice with NICHOLS_FORGE_KERNEL=c|py.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "nicholsforge._kernel.cy_impl",
                ["src/nicholsforge/_kernel/cy_impl.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    print("Cython not available; installing with the pure-Python kernel only.")

setup(ext_modules=ext_modules)
