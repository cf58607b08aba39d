"""Independent checking of diagonal-reduction certificates.

Deliberately shares no matrix algebra with the producer: the product is
recomputed with a plain triple loop and determinants come from a memoized
Laplace expansion, which stays exact over every supported ring (including
finite ones with zero divisors).
"""

from __future__ import annotations

from .matrices import Matrix, ReductionCertificate
from .rings import IntegerRing, PolynomialRing, Ring


class CertificateShapeError(ValueError):
    """Certificate block shapes do not fit the matrix being verified."""


def _multiply(ring: Ring, left: list[list], right: list[list]) -> list[list]:
    rows, inner = len(left), len(right)
    cols = len(right[0]) if right else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = ring._zero()
            for k in range(inner):
                acc = ring._add(acc, ring._mul(left[i][k], right[k][j]))
            row.append(acc)
        out.append(row)
    return out


def _determinant(ring: Ring, grid: list[list]):
    """Laplace expansion along rows, memoized on the surviving column set."""
    n = len(grid)
    if n == 0:
        return ring._one()
    zero = ring._zero()
    memo: dict = {}

    def expand(cols: tuple):
        if len(cols) == 1:
            return grid[n - 1][cols[0]]
        got = memo.get(cols)
        if got is not None:
            return got
        row = n - len(cols)
        acc = zero
        for idx, c in enumerate(cols):
            v = grid[row][c]
            if v == zero:
                continue
            term = ring._mul(v, expand(cols[:idx] + cols[idx + 1 :]))
            if idx % 2:
                term = ring._neg(term)
            acc = ring._add(acc, term)
        memo[cols] = acc
        return acc

    return expand(tuple(range(n)))


def _normalized(ring: Ring, d) -> bool:
    if isinstance(ring, IntegerRing):
        return d >= 0
    if isinstance(ring, PolynomialRing):
        return not d or d[-1] == 1
    return True


def check_certificate(ring: Ring, source: Matrix, cert: ReductionCertificate) -> str | None:
    """None when the certificate is valid, else the first failed clause:
    "product", "unit-determinant", "chain", or "normalization"."""
    p, d, q = cert.P, cert.D, cert.Q
    if source.ring != ring or any(m.ring != ring for m in (p, d, q)):
        raise CertificateShapeError("certificate ring does not match")
    if (
        p.shape != (source.rows, source.rows)
        or d.shape != source.shape
        or q.shape != (source.cols, source.cols)
    ):
        raise CertificateShapeError(
            f"blocks {p.shape}/{d.shape}/{q.shape} do not fit a {source.shape} matrix"
        )
    product = _multiply(
        ring, _multiply(ring, p.payload_grid(), source.payload_grid()), q.payload_grid()
    )
    if product != d.payload_grid():
        return "product"
    for block in (p, q):
        if not ring._is_unit(_determinant(ring, block.payload_grid())):
            return "unit-determinant"
    zero = ring._zero()
    grid = d.payload_grid()
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j and grid[i][j] != zero:
                return "chain"
    diag = [grid[i][i] for i in range(min(d.rows, d.cols))]
    for prev, nxt in zip(diag, diag[1:]):
        if ring._divides(prev, nxt) is None:
            return "chain"
    if not all(_normalized(ring, v) for v in diag):
        return "normalization"
    return None


def verify_certificate(ring: Ring, source: Matrix, cert: ReductionCertificate) -> bool:
    """Entry-exact validity of P*A*Q = D with unit determinants, a diagonal
    D obeying the divisibility chain, and canonical normalization."""
    return check_certificate(ring, source, cert) is None
