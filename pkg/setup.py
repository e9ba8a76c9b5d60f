"""Build the optional compiled search kernel.

Without Cython or a C compiler the package still installs and runs on the
pure-Python kernel.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SGE_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("sgeodetic._csearch", ["src/sgeodetic/_csearch.pyx"],
                       extra_compile_args=["-O3"], optional=True)],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
