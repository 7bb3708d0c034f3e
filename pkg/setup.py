import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("CYCGAP_PURE_PYTHON"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [
            Extension(
                "cycgap._kernels._speedups",
                ["src/cycgap/_kernels/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )


setup(ext_modules=extensions())
