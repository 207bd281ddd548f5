"""Builds the `ihall` extension by driving the project's CMake tree.

The preferred scikit-build-core backend is not available in every
environment, so this thin wrapper configures CMake with only the python
module enabled and copies the built extension into the wheel.
"""

import pathlib
import shutil
import subprocess
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source = pathlib.Path(__file__).parent.resolve()
        build = pathlib.Path(self.build_temp).resolve()
        build.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S", str(source),
                "-B", str(build),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DIHALL_BUILD_TESTS=OFF",
                "-DIHALL_BUILD_CLI=OFF",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(["cmake", "--build", str(build), "--target", "ihall_py", "-j"], check=True)
        produced = next((build / "python").glob("ihall.*.so"))
        target = pathlib.Path(self.get_ext_fullpath(ext.name))
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(produced, target)


setup(
    ext_modules=[CMakeExtension("ihall")],
    cmdclass={"build_ext": CMakeBuild},
)
