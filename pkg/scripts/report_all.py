#!/usr/bin/env python3
"""Regenerate the full set of homology reports into an output directory.

Writes one JSON report per wallpaper group plus a combined aligned text
table, i.e. everything the CLI can print, as files:

    python scripts/report_all.py --out reports/
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from bredon import homology, wallpaper
from bredon.cli import _report_rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--out", type=Path, default=Path("reports"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    reports = [homology.compute_homology(wallpaper.get_group(name)[0]) for name in wallpaper.list_groups()]
    for rep in reports:
        path = args.out / f"{rep.group_name}.json"
        path.write_text(json.dumps(homology.report_to_json_dict(rep), indent=2) + "\n", encoding="utf-8")
    table = args.out / "homology_table.txt"
    table.write_text(_report_rows(reports) + "\n", encoding="utf-8")
    print(f"wrote {len(reports)} reports and {table}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
