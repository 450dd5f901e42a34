"""Build the optional compiled simplex kernel.

The package works without it; ``lrcbounds.ratlp`` falls back to the numpy
kernel when the extension is missing.
"""

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "lrcbounds.ratlp._kernel_ext",
                ["src/lrcbounds/ratlp/_kernel_ext.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
