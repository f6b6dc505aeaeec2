"""
Canonical text/JSON/CSV serialization: GF(2) matrices as '0'/'1' row
strings, dense unitaries as {"n", "re", "im"}, characteristic
distributions as label,probability CSV.
"""

from __future__ import annotations

import io
import csv
import json

import numpy as np

from . import densesim, gf2


def matrix_to_text(M) -> str:
    M = gf2.as_bitmatrix(M)
    return "\n".join("".join(str(int(b)) for b in row) for row in M)


def matrix_from_text(text: str) -> np.ndarray:
    rows = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty matrix text")
    width = len(rows[0])
    out = np.zeros((len(rows), width), dtype=np.uint8)
    for i, row in enumerate(rows):
        if len(row) != width or set(row) - {"0", "1"}:
            raise ValueError(f"bad matrix row {row!r}")
        out[i] = [int(c) for c in row]
    return out


def matrix_to_json(M) -> list[str]:
    return matrix_to_text(M).split("\n")


def matrix_from_json(rows: list[str]) -> np.ndarray:
    return matrix_from_text("\n".join(rows))


def unitary_to_json(U) -> dict:
    U = np.asarray(U, dtype=complex)
    n = densesim.check_unitary(U)
    return {"n": n, "re": U.real.tolist(), "im": U.imag.tolist()}


def unitary_from_json(obj: dict) -> np.ndarray:
    U = np.array(obj["re"], dtype=float) + 1j * np.array(obj["im"], dtype=float)
    n = densesim.check_unitary(U)
    if n != obj["n"]:
        raise ValueError(f"declared n = {obj['n']} but matrix is {U.shape[0]} x {U.shape[0]}")
    return U


def load_unitary(path: str) -> np.ndarray:
    with open(path) as fh:
        return unitary_from_json(json.load(fh))


def _weyl_label_bits(index: int, n: int) -> str:
    bits = format(index, f"0{2 * n}b")
    return f"{bits[:n]}|{bits[n:]}"


def char_dist_to_csv(dist: densesim.CharDist) -> str:
    """CSV rows `label,probability`; labels are bitstrings a|b.

    State tables emit 2^2n rows; unitary tables emit 2^4n rows with the
    row label first and the column label appended after a colon.
    """
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["label", "probability"])
    table = dist.table
    n = dist.n
    if table.ndim == 1:
        for i, p in enumerate(table):
            writer.writerow([_weyl_label_bits(i, n), repr(float(p))])
    else:
        for i in range(table.shape[0]):
            for j in range(table.shape[1]):
                label = f"{_weyl_label_bits(i, n)}:{_weyl_label_bits(j, n)}"
                writer.writerow([label, repr(float(table[i, j]))])
    return buf.getvalue()
