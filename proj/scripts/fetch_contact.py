#!/usr/bin/env python3
"""Fetch the Contact (primary school) hypergraph and convert it to the
one-edge-per-line dataset format the kgcore CLI reads.

The source distribution stores simplices as two parallel files: a list of
simplex sizes (nverts) and a flat list of member ids. Duplicate simplices are
kept; the multiplicity is what makes g > 1 cores interesting.
"""

import argparse
import io
import sys
import urllib.request
import zipfile
from pathlib import Path

NAME = "contact-primary-school"
CANDIDATE_URLS = [
    f"https://www.cs.cornell.edu/~arb/data/{NAME}.zip",
    f"https://www.cs.cornell.edu/~arb/data/{NAME}/{NAME}.zip",
]


def download(urls):
    last = None
    for url in urls:
        print(f"trying {url} ...", file=sys.stderr)
        try:
            with urllib.request.urlopen(url, timeout=120) as resp:
                return resp.read()
        except Exception as exc:  # noqa: BLE001 - report and move on
            last = exc
            print(f"  failed: {exc}", file=sys.stderr)
    raise SystemExit(f"could not download the dataset: {last}")


def member(zf, suffix):
    for name in zf.namelist():
        if name.endswith(suffix):
            return zf.read(name).split()
    raise SystemExit(f"archive has no member ending in {suffix}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--url", help="override the download location")
    default_out = Path(__file__).resolve().parent.parent / "data" / "contact.hg"
    ap.add_argument("--output", default=str(default_out))
    args = ap.parse_args()

    blob = download([args.url] if args.url else CANDIDATE_URLS)
    zf = zipfile.ZipFile(io.BytesIO(blob))
    nverts = [int(x) for x in member(zf, f"{NAME}-nverts.txt")]
    flat = [x.decode() for x in member(zf, f"{NAME}-simplices.txt")]

    edges = []
    pos = 0
    for n in nverts:
        edges.append(flat[pos:pos + n])
        pos += n
    if pos != len(flat):
        raise SystemExit("member list length disagrees with the size list")

    out = Path(args.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w") as fh:
        for edge in edges:
            fh.write(" ".join(edge) + "\n")

    labels = {v for e in edges for v in e}
    print(f"wrote {out}: {len(labels)} nodes, {len(edges)} edges", file=sys.stderr)


if __name__ == "__main__":
    main()
