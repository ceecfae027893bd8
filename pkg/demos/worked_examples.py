"""Braid index reports and reduction schedules for a few pretzel links."""

from pretzelbraid import parse_notation, verify_consistency
from pretzelbraid.seifert import construction_upper_bound

LINKS = ["P1(5,3;-5,-1)", "P1(5,5,3,1;0)", "P2(4,4,2;-4)", "P2(4,4,4,2;0)", "P1(5,7,7;-3)"]

for text in LINKS:
    p = parse_notation(text)
    r = verify_consistency(p)
    print(f"{text:20s} case={r.case_id:6s} index={r.braid_index} "
          f"lower={r.mfw_lower} upper={r.upper} consistent={r.consistent}")
    print(construction_upper_bound(p, r.case_id).dump())
    print()
