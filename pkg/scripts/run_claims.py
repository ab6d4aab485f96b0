"""Run the default claim suite and print one line per claim with its timing.

    python scripts/run_claims.py [--seed 0] [--only B,F] [--json out.json]
"""

import argparse
import time

from gradedfrob.claims import default_suite, verify_claim
from gradedfrob.serialization import dumps


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--only", default=None, help="comma separated claim ids")
    ap.add_argument("--json", default=None)
    args = ap.parse_args()

    wanted = set(args.only.split(",")) if args.only else None
    suite = [(c, i) for c, i in default_suite() if wanted is None or c.split(":")[0] in wanted]
    reports = []
    start = time.perf_counter()
    for cid, inp in suite:
        rep = verify_claim(cid, inp, seed=args.seed)
        reports.append(rep)
        shown = ", ".join(f"{k}={v}" for k, v in rep.inputs.items())
        print(f"{rep.verdict:>10} {rep.elapsed:7.3f}s  {cid}  ({shown})")
        for chk in rep.payload["checks"]:
            if chk["ok"] is not True:
                print(f"{'':21}- {chk['check']}: ok={chk['ok']}")
    counts = {v: sum(r.verdict == v for r in reports) for v in ("verified", "violated", "undecided")}
    print(f"{len(reports)} claims in {time.perf_counter() - start:.1f}s: {counts}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(dumps([r.to_dict(with_time=True) for r in reports]))


if __name__ == "__main__":
    main()
