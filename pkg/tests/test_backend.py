import os
import subprocess
import sys


def run(env_extra, *args):
    env = {**os.environ, **env_extra}
    return subprocess.run([sys.executable, "-m", "relmatroid", *args], capture_output=True, env=env)


def test_fallback_selected_by_environment():
    code = "import relmatroid.kernels as k; print(k.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={**os.environ, "RELMATROID_PURE_PYTHON": "1"})
    assert out.stdout.strip() == "python"


def test_backends_produce_identical_reports():
    native = run({}, "verify", "--n", "3")
    pure = run({"RELMATROID_PURE_PYTHON": "1"}, "verify", "--n", "3")
    assert native.returncode == pure.returncode == 0
    assert native.stdout == pure.stdout
