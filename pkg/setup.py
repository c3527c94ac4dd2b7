"""Builds the optional Cython kernels; the package falls back to pure Python without them."""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("VACUUM_BASIS_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(["src/vacuum_basis/_kernels.pyx"], language_level=3, quiet=True)

setup(ext_modules=ext_modules)
