"""
Search for minimal corrections of a printed resolution.

Starting from the transcription in data/<name>_resolution.json, repeatedly
takes the lowest-degree generator g with d(d(g)) != 0 and tries single-term
edits of d(g) (sign, power of q, target generator, swapping the two tensor
factors), then pairs of edits.  An edit is kept when it kills the residual
of g without creating new failures.  Edits on family templates apply at
every p.  The result is printed in the errata file format.

usage: python3 scripts/find_errata.py aslq2 [cap]
"""

import argparse
import itertools
import json
import sys

from hopfcyclic.resolutions import (build_resolution, d_squared_residuals,
                                    printed_tables, read_resolution_data)


def split(term):
    return [p.strip() for p in term.split("|")]


def variants(term, targets):
    c, a, b, t = split(term)
    out = []
    neg = c[1:] if c.startswith("-") else "-" + c
    out.append(("sign", "|".join([neg, a, b, t])))
    for k in (-4, -3, -2, -1, 1, 2, 3, 4):
        for cc in (c, neg):
            out.append(("q^%d" % k, "|".join(["(%s)*q^%d" % (cc, k),
                                              a, b, t])))
    for t2 in targets:
        if t2 != t:
            out.append(("target", "|".join([c, a, b, t2])))
    if a != b:
        out.append(("swap", "|".join([c, b, a, t])))
    return out


def origin_of(data, N, n, g):
    _, _, origin = printed_tables(data, N)
    return origin[n][g]


def terms_of(data, o):
    if o[0] == "explicit":
        return data["differentials"][str(o[1])][o[2]]
    fam = [f for f in data["families"] if f["label"] == o[1]][0]
    return fam["images"][o[2]]


def family_targets(data, o):
    if o[0] == "explicit":
        tab = data["differentials"][str(o[1])]
    else:
        tab = [f for f in data["families"] if f["label"] == o[1]][0]["images"]
    return sorted({split(t)[3] for ts in tab.values() for t in ts})


def erratum(o, data, i, printed, corrected, kind, num):
    e = {"id": "%s-%d" % (data["name"], num), "resolution": data["name"],
         "term": i, "printed": printed, "corrected": corrected,
         "kind": kind}
    if o[0] == "explicit":
        e.update(where="explicit", degree=o[1], generator=o[2])
    else:
        fam = [f for f in data["families"] if f["label"] == o[1]][0]
        e.update(where="family", label=o[1], generator=o[2],
                 degree_pattern=fam["degree"])
    return e


def score(data, N, errata):
    try:
        r = build_resolution(data, N, None, errata)
    except Exception:
        return None
    return set(d_squared_residuals(r))


def main():
    ap = argparse.ArgumentParser(
        description="search single-term edits that restore d^2 = 0")
    ap.add_argument("name", help="shipped resolution name, e.g. aslq2")
    ap.add_argument("cap", nargs="?", type=int, default=8)
    args = ap.parse_args()
    N = args.cap
    data = read_resolution_data(args.name)
    errata = []
    fails = score(data, N, errata)
    while fails:
        n, g = min(fails, key=lambda k: (k[0], k[1]))
        o = origin_of(data, N, n, g)
        terms = terms_of(data, o)
        targets = family_targets(data, o)
        best = None
        for size in (1, 2):
            for idx in itertools.combinations(range(len(terms)), size):
                pools = [variants(terms[i], targets) for i in idx]
                for combo in itertools.product(*pools):
                    trial = list(errata)
                    for i, (kind, new) in zip(idx, combo):
                        trial.append(erratum(o, data, i, terms[i], new,
                                             kind, len(trial) + 1))
                    f = score(data, N, trial)
                    if f is None or (n, g) in f:
                        continue
                    if not f <= fails:
                        continue
                    if best is None or len(f) < len(best[0]):
                        best = (f, trial)
            if best:
                break
        if best is None:
            print("no correction found for", n, g, file=sys.stderr)
            break
        fails, errata = best
        print("fixed", n, g, "->", len(fails), "failing", file=sys.stderr)
    print(json.dumps(errata, indent=2))


if __name__ == "__main__":
    main()
