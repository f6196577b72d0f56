from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "kcbg._ckernels",
        ["src/kcbg/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"})
    if cythonize is not None
    else [],
)
