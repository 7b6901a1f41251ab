"""Build shim: compile the ringlab._core extension through the project's
CMake configuration (the RINGLAB_PYTHON block of CMakeLists.txt), so the
Python module and the standalone library are always the same build."""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        configure = [
            "cmake",
            "-S", str(source_dir),
            "-B", str(build_dir),
            "-DRINGLAB_PYTHON=ON",
            "-DRINGLAB_BUILD_TESTS=OFF",
            "-DRINGLAB_BUILD_CLI=OFF",
            "-DCMAKE_BUILD_TYPE=Release",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        try:
            import pybind11

            configure.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass  # let find_package locate a system pybind11
        subprocess.run(configure, check=True)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core",
             "--parallel"],
            check=True,
        )

        built = sorted(build_dir.glob("_core.*.so")) or sorted(
            build_dir.glob("_core.*.pyd")) or sorted(
            build_dir.glob("_core.so"))
        if not built:
            raise RuntimeError(f"extension not produced under {build_dir}")
        target = Path(self.get_ext_fullpath(ext.name)).resolve()
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[-1], target)


setup(
    ext_modules=[CMakeExtension("ringlab._core")],
    cmdclass={"build_ext": CMakeBuild},
)
