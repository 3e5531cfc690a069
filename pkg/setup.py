import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None and not os.environ.get("NULLFOREST_PURE"):
    extensions = cythonize(
        [
            Extension(
                "nullforest._speedups",
                ["src/nullforest/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=extensions)
