"""Write the full report and all line exports into one directory.

    python scripts/make_certificates.py out/
"""

import json
import sys
from pathlib import Path

from maschke.certify import Pipeline, run_claims
from maschke.cli import EXPORTS, export_lines, render_text


def main(outdir: str) -> int:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    pipe = Pipeline()
    report = run_claims(pipe)
    (out / "report.json").write_text(json.dumps(report.to_json(), indent=2) + "\n")
    for which in EXPORTS:
        (out / f"{which}.json").write_text(json.dumps(export_lines(pipe, which), indent=1) + "\n")
    sys.stdout.write(render_text(report))
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1] if len(sys.argv) > 1 else "certificates"))
