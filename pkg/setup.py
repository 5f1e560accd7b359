"""Build script: compiles the optional Cython speedup kernel.

The package works without the extension (a pure-Python twin of the kernel
is selected at import time), so any failure here degrades to a pure build.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/alexmod/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
