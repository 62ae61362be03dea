"""Build script for the optional compiled kernels.

The package works without them: ``flagfaces.kernels`` falls back to the
pure-Python implementations when ``_ckernels`` cannot be imported.
"""
import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("FLAGFACES_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        extensions = cythonize(
            [
                Extension(
                    "flagfaces._ckernels",
                    ["src/flagfaces/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=extensions)
