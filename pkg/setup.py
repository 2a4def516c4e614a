"""Build script.  Compiles the optional Cython accumulation kernel.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a missing compiler or missing
Cython only costs speed, not correctness.
"""

import sys

from setuptools import Extension, setup


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("rieszbounds: Cython not available, building without the "
              "compiled kernel", file=sys.stderr)
        return []
    ext = Extension(
        "rieszbounds._kernels._ckernels",
        ["src/rieszbounds/_kernels/_ckernels.pyx"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())
