#!/usr/bin/env python3
"""Regenerate the bundled fixture snapshot under data/fixtures/.

Each code is written as a generator matrix (header `n k`, one row of
'0'/'1' per line) plus one `n,k,d` record in snapshot.csv. The C++ test
suites re-derive every d by exhaustive codeword enumeration, so the values
declared here are never trusted on their own.
"""
import itertools
import pathlib
import sys


def cyclic(n, gpoly):
    """Generator rows of the cyclic code with generator polynomial bits gpoly."""
    deg = gpoly.bit_length() - 1
    k = n - deg
    g = [(gpoly >> i) & 1 for i in range(deg + 1)]
    return [[0] * s + g + [0] * (n - deg - 1 - s) for s in range(k)]


def repetition(n):
    return [[1] * n]


def single_parity(n):
    return [[1 if j == i or j == n - 1 else 0 for j in range(n)] for i in range(n - 1)]


def simplex(m):
    cols = [[(v >> b) & 1 for b in range(m)] for v in range(1, 1 << m)]
    return [[c[r] for c in cols] for r in range(m)]


def hamming(m):
    # x^3+x+1, x^4+x+1, x^5+x^2+1
    polys = {3: 0b1011, 4: 0b10011, 5: 0b100101}
    return cyclic((1 << m) - 1, polys[m])


def extend(rows):
    return [r + [sum(r) % 2] for r in rows]


def reed_muller1(m):
    pts = list(range(1 << m))
    rows = [[1] * len(pts)]
    rows += [[(p >> b) & 1 for p in pts] for b in range(m)]
    return rows


def min_weight(rows):
    best = None
    for coeffs in itertools.product((0, 1), repeat=len(rows)):
        if not any(coeffs):
            continue
        w = sum(sum(c * r[j] for c, r in zip(coeffs, rows)) % 2 for j in range(len(rows[0])))
        best = w if best is None else min(best, w)
    return best


# (family, rows, declared d). Every k stays within the 24-row enumeration budget.
CODES = (
    [("repetition", repetition(n), n) for n in (4, 7, 8, 15, 16, 31)]
    + [("single parity check", single_parity(n), 2) for n in (4, 8, 16, 24)]
    + [("Hamming", hamming(m), 3) for m in (3, 4)]
    + [("extended Hamming", extend(hamming(m)), 4) for m in (3, 4)]
    + [("simplex", simplex(m), 1 << (m - 1)) for m in (3, 4, 5)]
    + [("first-order Reed-Muller", reed_muller1(4), 8)]
    + [("Golay", cyclic(23, 0b110001110101), 7)]
    + [("extended Golay", extend(cyclic(23, 0b110001110101)), 8)]
    + [("BCH", cyclic(15, 0b111010001), 5), ("BCH", cyclic(15, 0b10100110111), 7)]
)


def main(root):
    gen_dir = root / "generators"
    gen_dir.mkdir(parents=True, exist_ok=True)
    lines = ["# Exact optimal binary linear codes, n,k,d. Generator matrices in generators/<n>_<k>.gen"]
    for family, rows, d in CODES:
        n, k = len(rows[0]), len(rows)
        if k <= 12 and min_weight(rows) != d:
            raise SystemExit(f"{family} [{n},{k}]: declared d={d} disagrees with enumeration")
        (gen_dir / f"{n}_{k}.gen").write_text(
            f"{n} {k}\n" + "".join("".join(map(str, r)) + "\n" for r in rows))
        lines.append(f"# {family} [{n},{k},{d}]")
        lines.append(f"{n},{k},{d}")
    (root / "snapshot.csv").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/fixtures"))
