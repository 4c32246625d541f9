from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the pure-Python
# implementations in setpart._kernels._pure when the extension is unavailable.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "setpart._kernels._speed",
                ["src/setpart/_kernels/_speed.pyx"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
