#!/usr/bin/env python3
"""Regenerate the CLI golden files in tests/golden (review the diff before committing)."""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from cli_corpus import CASES, normalise, run  # noqa: E402


def main() -> int:
    out = ROOT / "tests" / "golden"
    out.mkdir(exist_ok=True)
    for name, cmd in CASES.items():
        rc, text, err = run(cmd)
        (out / f"{name}.json").write_text(normalise(text))
        print(f"{name}: exit {rc}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
