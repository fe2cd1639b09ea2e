import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "risfso.foxh._kernels._core",
                ["src/risfso/foxh/_kernels/_core.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython available: install pure-Python only, the package selects
    # the numpy backend at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
