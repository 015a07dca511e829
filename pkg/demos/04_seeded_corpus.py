"""A seeded corpus run, tallied by closure-gap verdict, with JSON and CSV exports."""
import collections
import sys
import tempfile
from pathlib import Path

from monofilt import AnalysisOptions, CorpusConfig, corpus_run
from monofilt.report import reports_to_csv, reports_to_json, validate_report

family = sys.argv[1] if len(sys.argv) > 1 else "equigenerated"
cfg = CorpusConfig(seed=42, count=12, dim=2, max_exp=4, family=family)
reports = corpus_run(cfg, AnalysisOptions(theorems=False), workers=2)

tally = collections.Counter()
for r in reports:
    validate_report(r)
    gap = next((g for g in r.gaps if g["upper"] == "integral_closure"), None)
    tag = gap["verdict"]["tag"] if gap else "n/a"
    tally[tag] += 1
    print(f"{r.instance:>3}  {r.input['ideal']:40s} {tag:18s} {r.digest()[:12]}")

print("\nverdicts:", dict(tally))

out = Path(tempfile.mkdtemp(prefix="monofilt-"))
(out / "corpus.json").write_text(reports_to_json(reports))
(out / "corpus.csv").write_text(reports_to_csv(reports))
print("wrote", out / "corpus.json", "and", out / "corpus.csv")
