"""Build the optional compiled enumeration kernel.

The package works without it; ``polyring.oracle`` falls back to the
pure-Python kernel when the extension is missing.  Set
``POLYRING_NO_EXT=1`` to skip compilation entirely.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.getenv("POLYRING_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "polyring._ckernel",
                    ["src/polyring/_ckernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
