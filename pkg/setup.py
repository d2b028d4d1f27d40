"""Build script: compiles the Jacobi eigensolver extension when Cython and
numpy are available; otherwise installs pure-Python only (the package falls
back to the numpy kernel at import time)."""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "qboundary._jacobi",
                ["src/qboundary/_jacobi.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
