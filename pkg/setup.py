"""Build hook for the optional compiled kernel.

The package is pure Python; ``motzkinperm._kernels._speedups`` is a drop-in
accelerator for the brute-force census inner loop.  If Cython or a C compiler
is unavailable the build still succeeds and the package falls back to the
pure-Python kernel at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "motzkinperm._kernels._speedups",
                ["src/motzkinperm/_kernels/_speedups.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
