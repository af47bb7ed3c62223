"""Build hook: compile the optional polynomial kernel if Cython is around.

The package is pure Python; `qdops._polykernel` is a drop-in accelerated
twin of `qdops._polykernel_py`. If Cython or a C compiler is missing the
extension is skipped and the import-time selector falls back silently.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("qdops._polykernel", ["src/qdops/_polykernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
