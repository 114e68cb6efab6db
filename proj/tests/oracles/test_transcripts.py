import pathlib
import subprocess
import sys

import pytest

HERE = pathlib.Path(__file__).resolve().parent
ORACLES = sorted(HERE.glob("*_oracle.py"))


@pytest.mark.parametrize("script", ORACLES, ids=[p.stem for p in ORACLES])
def test_transcript_is_reproduced(script):
    expected = script.with_suffix(".out").read_text()
    out = subprocess.run([sys.executable, str(script)], capture_output=True, text=True, timeout=600, cwd=HERE)
    assert out.returncode == 0, out.stderr
    assert out.stdout == expected
