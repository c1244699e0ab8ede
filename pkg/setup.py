"""Build script: compiles the optional Cython kernel extension when a
toolchain is available, otherwise installs the pure-Python package unchanged.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("jacdec._kernels_c", ["src/jacdec/_kernels_c.pyx"])],
        language_level=3,
    )
except Exception:
    # No Cython or no compiler: jacdec.kernels falls back to _kernels_py.
    ext_modules = []

setup(ext_modules=ext_modules)
