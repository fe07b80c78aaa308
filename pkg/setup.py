from Cython.Build import cythonize
from setuptools import Extension, setup

ext_modules = cythonize(
    [Extension("curve_census._ckernels", ["src/curve_census/_ckernels.pyx"],
               extra_compile_args=["-O3"])],
    compiler_directives={"language_level": "3"},
)

setup(ext_modules=ext_modules)
