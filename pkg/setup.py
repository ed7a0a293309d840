from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/wreathmac/_kernels.pyx"],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    # the package falls back to the pure-Python kernels at import time
    ext_modules = []

setup(ext_modules=ext_modules)
