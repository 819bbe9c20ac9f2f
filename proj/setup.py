"""CMake-driven build of the _tensorforge extension module.

The extension is produced by the project's CMake tree (which also builds
the static core library); this shim configures a scratch build directory
and copies the resulting module next to the pure-python package.
"""

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
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_tensorforge", "-j"],
            check=True,
        )
        staged = list((build_dir / "pypkg" / "tensorforge").glob("_tensorforge*"))
        if not staged:
            raise RuntimeError("CMake did not produce the _tensorforge module")
        target = Path(self.get_ext_fullpath(ext.name))
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(staged[0], target)


setup(
    ext_modules=[CMakeExtension("tensorforge._tensorforge")],
    cmdclass={"build_ext": CMakeBuild},
)
