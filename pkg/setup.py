"""Build hook for the optional compiled Smith normal form kernel.

If Cython or a C compiler is unavailable the package still installs;
``momentangle.snf`` falls back to the pure-Python kernel at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/momentangle/_snfcore.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
