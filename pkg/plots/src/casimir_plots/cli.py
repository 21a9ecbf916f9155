"""plots <recipe-id|all> --data-dir <dir> --out-dir <dir>"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .recipes import ALL_IDS, RECIPES
from .render import SchemaError, render


def main(argv=None) -> int:
    p = argparse.ArgumentParser(
        prog="plots",
        description="Render figures from casimir-plates sweep CSV files",
    )
    p.add_argument("recipe", help=f"recipe id ({', '.join(ALL_IDS)}) or 'all'")
    p.add_argument("--data-dir", required=True, help="directory holding the CSV inputs")
    p.add_argument("--out-dir", required=True, help="directory for the rendered images")
    args = p.parse_args(argv)

    if args.recipe == "all":
        ids = list(ALL_IDS)
    elif args.recipe in RECIPES:
        ids = [args.recipe]
    else:
        print(f"unknown recipe {args.recipe!r}; expected one of {ALL_IDS} or 'all'",
              file=sys.stderr)
        return 2

    try:
        for fid in ids:
            written = render(RECIPES[fid], Path(args.data_dir), Path(args.out_dir))
            for path in written:
                print(path)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
