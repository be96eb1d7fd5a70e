#!/usr/bin/env python3
"""Dump the HTTP API description to docs/openapi.json.

The app is built over a throwaway one-person index; the schema does not
depend on the data.
"""

import json
import sys
from datetime import date
from pathlib import Path

from newscorr.service import create_app
from newscorr.timeseries import PersonSeries, SeriesIndex


def main() -> int:
    d0 = date(2017, 1, 1)
    index = SeriesIndex(d0, d0, {"x": PersonSeries("x", d0, (1,))})
    spec = create_app(index).openapi()
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "docs/openapi.json")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(spec, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
