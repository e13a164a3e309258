#!/usr/bin/env python3
"""Export the benchmark datasets as CSV files under data/.

Tries the UCI repository first (needs network); where a download is not
possible, falls back to locally bundled copies from scikit-learn. Every file
is written as plain CSV, one sample per row, features first, label string in
the last column, no header. Provenance of each file is recorded in
data/MANIFEST.json.

Usage: python3 scripts/fetch_datasets.py [--out data] [--offline]
"""

import argparse
import json
import os
import sys
import urllib.request

UCI = "http://archive.ics.uci.edu/ml/machine-learning-databases"

# name -> (url, id_columns_to_drop, label_column_of_raw_file)
UCI_SOURCES = {
    "breast": (f"{UCI}/breast-cancer-wisconsin/breast-cancer-wisconsin.data", [0], -1),
    "iris": (f"{UCI}/iris/iris.data", [], -1),
    "glass": (f"{UCI}/glass/glass.data", [0], -1),
    "wine": (f"{UCI}/wine/wine.data", [], 0),
    "wpbc": (f"{UCI}/breast-cancer-wisconsin/wpbc.data", [0], 1),
    "diabetes": (f"{UCI}/pima-indians-diabetes/pima-indians-diabetes.data", [], -1),
    "heart": (f"{UCI}/statlog/heart/heart.dat", [], -1),
}


def fetch_uci(name, out_path):
    url, drop_cols, label_col = UCI_SOURCES[name]
    raw = urllib.request.urlopen(url, timeout=15).read().decode("utf-8")
    sep = None if name == "heart" else ","  # heart.dat is space separated
    lines = []
    for line in raw.splitlines():
        line = line.strip()
        if not line:
            continue
        fields = line.split(sep) if sep is None else line.split(sep)
        fields = [f for i, f in enumerate(fields) if i not in drop_cols]
        label = fields.pop(label_col if label_col >= 0 else len(fields) + label_col)
        lines.append(",".join(fields + [label]))
    with open(out_path, "w") as f:
        f.write("\n".join(lines) + "\n")
    return {"source": url, "note": "verbatim UCI file, id columns dropped, label moved last"}


def write_rows(out_path, X, labels):
    with open(out_path, "w") as f:
        for row, lab in zip(X, labels):
            f.write(",".join(repr(float(v)) for v in row) + "," + str(lab) + "\n")


def fallback_sklearn(name, out_path):
    import numpy as np
    import sklearn.datasets as skd

    if name == "iris":
        d = skd.load_iris()
        labels = [d.target_names[t] for t in d.target]
        write_rows(out_path, d.data, labels)
        return {"source": "scikit-learn load_iris (bundled copy of the UCI file)",
                "shape": list(d.data.shape)}
    if name == "wine":
        d = skd.load_wine()
        labels = [d.target_names[t] for t in d.target]
        write_rows(out_path, d.data, labels)
        return {"source": "scikit-learn load_wine (bundled copy of the UCI file)",
                "shape": list(d.data.shape)}
    if name == "breast":
        d = skd.load_breast_cancer()
        labels = [d.target_names[t] for t in d.target]
        write_rows(out_path, d.data, labels)
        return {"source": "scikit-learn load_breast_cancer (diagnostic WDBC variant, "
                          "569x30; substitute for the original 699x9 file)",
                "shape": list(d.data.shape)}
    if name == "diabetes":
        d = skd.load_diabetes(scaled=False)
        med = float(np.median(d.target))
        labels = ["high" if t > med else "low" for t in d.target]
        write_rows(out_path, d.data, labels)
        return {"source": "scikit-learn load_diabetes, progression target binarized at "
                          "the median (substitute for the 768x8 Pima file)",
                "shape": list(d.data.shape)}
    if name == "ocr":
        d = skd.load_digits()
        write_rows(out_path, d.data, d.target)
        return {"source": "scikit-learn load_digits (UCI optical digits layout, 8x8, "
                          "64 features, 10 classes; stand-in for the handwritten-digit corpus)",
                "shape": list(d.data.shape)}
    return None


def write_toy(out_path):
    # two well separated 2-D blobs, deterministic
    import random
    rng = random.Random(12345)
    with open(out_path, "w") as f:
        for _ in range(20):
            f.write(f"{rng.uniform(0.0, 0.35):.6f},{rng.uniform(0.0, 0.35):.6f},a\n")
        for _ in range(20):
            f.write(f"{rng.uniform(0.65, 1.0):.6f},{rng.uniform(0.65, 1.0):.6f},b\n")
    return {"source": "generated, two separated uniform blobs, seed 12345"}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data")
    ap.add_argument("--offline", action="store_true",
                    help="skip UCI downloads, use bundled fallbacks only")
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    manifest = {}
    wanted = ["iris", "wine", "breast", "diabetes", "glass", "wpbc", "heart", "ocr"]
    for name in wanted:
        out_path = os.path.join(args.out, f"{name}.csv")
        info = None
        if not args.offline and name in UCI_SOURCES:
            try:
                info = fetch_uci(name, out_path)
            except Exception as e:
                print(f"{name}: UCI download failed ({e}), trying bundled fallback",
                      file=sys.stderr)
        if info is None:
            try:
                info = fallback_sklearn(name, out_path)
            except Exception as e:
                print(f"{name}: fallback failed ({e})", file=sys.stderr)
        if info is None:
            print(f"{name}: no source available, skipped", file=sys.stderr)
            continue
        manifest[name] = {"file": f"{name}.csv", **info}
        print(f"{name}: wrote {out_path}")

    manifest["toy"] = {"file": "toy.csv", **write_toy(os.path.join(args.out, "toy.csv"))}
    print("toy: wrote", os.path.join(args.out, "toy.csv"))

    with open(os.path.join(args.out, "MANIFEST.json"), "w") as f:
        json.dump(manifest, f, indent=2)
        f.write("\n")


if __name__ == "__main__":
    main()
