"""Build script: compiles the optional search kernel extension.

Set INTERSECTLAB_PURE=1 to skip the extension and install pure Python only;
the package falls back to the pure kernels at import time either way.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("INTERSECTLAB_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/intersectlab/_core.pyx"],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
