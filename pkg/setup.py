"""Build script for the compiled distance-transform kernel.

The extension is optional: if Cython (or a C compiler) is unavailable the
package still installs and falls back to the pure-Python kernels in
``segshape._edt_py`` at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "segshape._edt",
                ["src/segshape/_edt.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
