"""Build shim: compiles the optional C extension with the hot kernels.

The package works without the extension (a pure-Python twin of every kernel
lives in treecast._pykernels), so any failure here is deliberately soft.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "treecast._kernels",
                ["src/treecast/_kernels.pyx"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # no Cython, no C compiler: fall back to pure Python
    import sys

    print(f"treecast: building without compiled kernels ({exc})", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
