import os

from setuptools import Extension, setup

# The compiled core is optional: without Cython (or with ABHARMONIC_PURE=1)
# the package installs anyway and the numpy fallback is selected at import.
ext_modules = []
if os.environ.get("ABHARMONIC_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("abharmonic._accel", ["src/abharmonic/_accel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
