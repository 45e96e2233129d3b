"""Smoke test for the `inert` extension module.

Uses an installed `inert` if one imports; otherwise builds the cdylib with
cargo and loads it from a temporary directory.
"""

import json
import os
import shutil
import subprocess
import sys
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def load():
    try:
        import inert
        return inert
    except ImportError:
        pass
    subprocess.run(
        ["cargo", "build", "--release", "-p", "inert-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = os.path.join(ROOT, "target", "release", "libinert.so")
    tmp = tempfile.mkdtemp()
    shutil.copy(lib, os.path.join(tmp, "inert.so"))
    sys.path.insert(0, tmp)
    import inert
    return inert


def main():
    inert = load()
    print("inert", inert.__version__)

    code, out = inert.run('{"r": 2, "word": "[a,b]"}', "aspherical")
    rep = json.loads(out)
    assert code == 0 and rep["aspherical"] is True, rep

    doc = {
        "spheres": [2, 2],
        "scenario": {"n": 3, "class": {"type": "lie-word", "word": "[x1,x2]"}},
    }
    code, out = inert.run(json.dumps(doc), "inert")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "inert-up-to-caps", rep["status"]

    try:
        inert.normalize('{"spheres": [0]}')
    except ValueError as e:
        assert str(e).startswith("[20]"), e
    else:
        raise AssertionError("sphere of dimension zero accepted")

    print("ok")


if __name__ == "__main__":
    main()
