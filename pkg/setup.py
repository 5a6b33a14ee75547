"""Build script for the optional compiled transform kernel.

The package works without the extension: qgabor._kernels falls back to a
numpy implementation when qgabor._brute is missing (e.g. no C compiler).
"""

from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext = Extension(
        "qgabor._brute",
        ["src/qgabor/_brute.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    ext.optional = True  # a failed compile must not fail the install
    ext_modules = cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )

setup(ext_modules=ext_modules)
