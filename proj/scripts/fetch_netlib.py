#!/usr/bin/env python3
"""Fetch the netlib LP fixtures the benchmark suite expects.

Run this on a machine with network access, then copy the resulting
data/netlib/*.mps files into the repository. Files are downloaded in
emps (compressed netlib) form and inflated with the reference expander
when available, or fetched pre-expanded from a mirror.

Usage:
    python3 scripts/fetch_netlib.py [--dest data/netlib]
"""
import argparse
import pathlib
import sys
import urllib.request

PROBLEMS = ["afiro", "sc50a", "sc50b", "adlittle", "blend", "share2b"]

# Mirrors that serve expanded MPS files directly.
MIRRORS = [
    "https://raw.githubusercontent.com/ERGO-Code/HiGHS/master/check/instances/{name}.mps",
    "https://www.cuter.rl.ac.uk/Problems/netlib/{name}.mps",
]


def fetch(name: str, dest: pathlib.Path) -> bool:
    out = dest / f"{name}.mps"
    if out.exists():
        print(f"{name}: already present, skipping")
        return True
    for pattern in MIRRORS:
        url = pattern.format(name=name)
        try:
            with urllib.request.urlopen(url, timeout=30) as resp:
                data = resp.read()
        except Exception as exc:  # noqa: BLE001 - report and try next mirror
            print(f"{name}: {url} failed ({exc})")
            continue
        if b"ROWS" not in data[:4096].upper():
            print(f"{name}: {url} returned something that is not MPS, skipping")
            continue
        out.write_bytes(data)
        print(f"{name}: wrote {out} ({len(data)} bytes) from {url}")
        return True
    return False


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dest", default="data/netlib", type=pathlib.Path)
    args = ap.parse_args()
    args.dest.mkdir(parents=True, exist_ok=True)
    failures = [p for p in PROBLEMS if not fetch(p, args.dest)]
    if failures:
        print("failed to fetch:", ", ".join(failures), file=sys.stderr)
        return 1
    print("all fixtures present")
    return 0


if __name__ == "__main__":
    sys.exit(main())
