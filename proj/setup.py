"""Builds the _qmatch extension by driving the CMake project."""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.check_call(
            [
                "cmake",
                str(source_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DQMATCH_BUILD_PYTHON=ON",
                "-DQMATCH_BUILD_TESTS=OFF",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
        )
        subprocess.check_call(
            ["cmake", "--build", str(build_dir), "--target", "_qmatch", "-j"]
        )

        built = sorted(build_dir.glob("_qmatch*.so")) or sorted(
            build_dir.glob("**/_qmatch*.so")
        )
        if not built:
            raise RuntimeError("cmake did not produce the _qmatch module")
        dest = Path(self.get_ext_fullpath(ext.name))
        dest.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[0], dest)


setup(
    ext_modules=[CMakeExtension("qmatch._qmatch")],
    cmdclass={"build_ext": CMakeBuild},
)
