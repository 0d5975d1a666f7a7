import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("RESOLVEKIT_PURE"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        # No Cython: install pure-Python only, the fallback backend is used.
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "resolvekit._kernels._speedups",
                    ["src/resolvekit/_kernels/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "initializedcheck": False,
                "cdivision": True,
            },
        )

setup(ext_modules=ext_modules)
