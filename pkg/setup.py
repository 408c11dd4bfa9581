"""Build the optional compiled kernels; installation proceeds without them."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "galois_param._speedups",
                ["src/galois_param/_speedups.pyx"],
                language="c++",
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # Cython missing or broken toolchain
    print(f"galois_param: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
