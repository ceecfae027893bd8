"""Case counts over a bounded sweep, with any inconsistencies listed."""

import sys
from collections import Counter

from pretzelbraid import LinkType, enumerate_params, verify_consistency

bound = int(sys.argv[1]) if len(sys.argv) > 1 else 3
for lt in (LinkType.TYPE1, LinkType.TYPE2):
    reports = [verify_consistency(p) for p in enumerate_params(lt, 4, bound, bound)]
    bad = [r for r in reports if not r.consistent]
    cases = Counter(r.case_id for r in reports)
    print(f"{lt.value}: {len(reports)} links, {len(bad)} inconsistent")
    for case, n in sorted(cases.items()):
        print(f"  {case:14s} {n}")
    for r in bad:
        print("  !", r.to_json())
