#!/usr/bin/env python3
"""Regenerate the shipped .manifold files from the built-in constructors."""

from pathlib import Path

from bundlecensus import BUILTIN_NAMES, builtin, serialize_manifold


def main() -> int:
    out_dir = Path(__file__).resolve().parent.parent / "src" / "bundlecensus" / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name in BUILTIN_NAMES:
        path = out_dir / f"{name}.manifold"
        path.write_text(serialize_manifold(builtin(name)))
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
