"""Linear algebra over GF(2) with vectors stored as int bitmasks."""

from __future__ import annotations


def low_bit(x: int) -> int:
    """Index of the lowest set bit; x must be nonzero."""
    return (x & -x).bit_length() - 1


def rref(rows: list[int]) -> list[int]:
    """Reduced row echelon form, pivots on lowest set bits, sorted by pivot."""
    echelon: list[int] = []  # kept fully reduced against each other
    for r in rows:
        for b in echelon:
            if (r >> low_bit(b)) & 1:
                r ^= b
        if r == 0:
            continue
        p = low_bit(r)
        echelon = [b ^ r if (b >> p) & 1 else b for b in echelon]
        echelon.append(r)
    echelon.sort(key=low_bit)
    return echelon


def rank(rows: list[int]) -> int:
    return len(rref(rows))


def reduce_mod(echelon: list[int], v: int) -> int:
    """Reduce v against rows already in reduced echelon form."""
    for b in echelon:
        if (v >> low_bit(b)) & 1:
            v ^= b
    return v


def in_span(echelon: list[int], v: int) -> bool:
    return reduce_mod(echelon, v) == 0


def kernel_and_image(columns: list[int]) -> tuple[list[int], list[int]]:
    """Kernel basis and image echelon of the map sending source basis j to columns[j].

    Kernel vectors are bitmasks over source indices, produced deterministically
    in source order; the image comes back in reduced echelon form.
    """
    pivots: list[tuple[int, int, int]] = []  # (pivot bit, image, tracker)
    kernel: list[int] = []
    for j, col in enumerate(columns):
        img, trk = col, 1 << j
        for p, pi, pt in pivots:
            if (img >> p) & 1:
                img ^= pi
                trk ^= pt
        if img == 0:
            kernel.append(trk)
        else:
            pivots.append((low_bit(img), img, trk))
    return kernel, rref([pi for _, pi, _ in pivots])


def quotient_representatives(vectors: list[int], modulo: list[int]) -> list[int]:
    """Canonical representatives of span(vectors) / span(modulo).

    Reduces every vector against the subspace, then takes reduced echelon form,
    so the output is independent of the order and presentation of the inputs.
    """
    sub = rref(modulo)
    return rref([reduce_mod(sub, v) for v in vectors])


def solve(basis: list[int], v: int) -> int | None:
    """Coordinates of v in the given independent basis rows, or None if outside."""
    pivots: list[tuple[int, int, int]] = []
    for j, row in enumerate(basis):
        img, trk = row, 1 << j
        for p, pi, pt in pivots:
            if (img >> p) & 1:
                img ^= pi
                trk ^= pt
        if img == 0:
            raise ValueError("basis rows are linearly dependent")
        pivots.append((low_bit(img), img, trk))
    coords = 0
    for p, pi, pt in pivots:
        if (v >> p) & 1:
            v ^= pi
            coords ^= pt
    return coords if v == 0 else None
