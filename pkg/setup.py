"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so a missing compiler or Cython only costs speed.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "lambda_brooks._kernels._speedups",
                ["src/lambda_brooks/_kernels/_speedups.pyx"],
            )
        ],
        language_level="3",
    )
except ImportError:
    print("Cython not available; building without the compiled kernel", file=sys.stderr)

setup(ext_modules=ext_modules)
