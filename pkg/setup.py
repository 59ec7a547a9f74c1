"""Build script for the optional compiled kernels.

The package is pure Python except for nilsplit._speedups, a small Cython
module mirroring nilsplit._kernels_py. Installation succeeds without it;
set NILSPLIT_PURE_PYTHON=1 to skip compilation entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("NILSPLIT_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("nilsplit._speedups", ["src/nilsplit/_speedups.pyx"])],
            language_level="3",
        )
    except Exception as exc:  # no Cython or no compiler: fall back silently
        print(f"nilsplit: skipping compiled kernels ({exc})")
        ext_modules = []

setup(ext_modules=ext_modules)
