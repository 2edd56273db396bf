"""Dump KnotInfo/LinkInfo records used as frozen oracle data.

Run with an interpreter that has ``database_knotinfo`` installed:

    python tools/dump_knotinfo.py > tests/fixtures/knotinfo.json

Only links with at most ``MAXC`` crossings (plus a few named extras) and
knots with at most 10 crossings are written.
"""
import json
import re
import sys

from database_knotinfo import link_list

MAXC = 9
EXTRA_LINKS = {"L11a372"}
FIELDS = ("multivariable_alexander", "linking_matrix", "signature", "splitting_number", "components", "braid_notation")


def base_name(name):
    return re.sub(r"\{.*\}$", "", name)


def main():
    out = {"links": [], "knots": []}
    for r in link_list(proper_links=True):
        name = r["name"]
        if not r["crossing_number"].isdigit():
            continue
        cn = int(r["crossing_number"])
        if cn > MAXC and base_name(name) not in EXTRA_LINKS:
            continue
        rec = {"name": name, "pd": json.loads(r["pd_notation_vector"].replace("{", "[").replace("}", "]"))}
        rec.update({k: r[k] for k in FIELDS})
        out["links"].append(rec)
    for r in link_list():
        name = r["name"]
        if not name[:1].isdigit() or "_" not in name or name.startswith("0"):
            continue
        if not r["crossing_number"].isdigit() or int(r["crossing_number"]) > 10:
            continue
        pd = r.get("pd_notation")
        if not pd:
            continue
        out["knots"].append({"name": name, "pd": json.loads(pd.replace(";", ",")), "signature": r.get("signature"), "alexander": r.get("alexander_polynomial")})
    json.dump(out, sys.stdout, indent=0)


if __name__ == "__main__":
    main()
