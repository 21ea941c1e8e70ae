from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure
# Python implementations in mixedprod._kernels_py when the extension is
# missing (see mixedprod.kernels).
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("mixedprod._kernels", ["src/mixedprod/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
