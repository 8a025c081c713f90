import os

from setuptools import Extension, setup


def build_ext_modules():
    if os.environ.get("LIEINDEX_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "lieindex._kernels",
        [os.path.join("src", "lieindex", "_kernels.pyx")],
        extra_compile_args=["-O3"],
        optional=True,
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=build_ext_modules())
