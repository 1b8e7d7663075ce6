"""Build script for the compiled sweep kernel.

The extension must be compiled without value-changing floating-point
transformations: no -ffast-math, no FMA contraction.  The whole point of
the package is a fixed, reproducible evaluation order, so the kernel is
built with -ffp-contract=off and plain -O2.
"""

import numpy
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "symfv._kernels",
        ["src/symfv/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O2", "-ffp-contract=off", "-fno-fast-math", "-fopenmp"],
        extra_link_args=["-fopenmp"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False, "cdivision": True},
    )
)
