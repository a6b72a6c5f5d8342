from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("qcube._kernels", ["src/qcube/_kernels.pyx"])],
        language_level=3,
    )
except ImportError:
    # No Cython: ship pure Python, qcube.kernels falls back at import.
    ext_modules = []

setup(ext_modules=ext_modules)
