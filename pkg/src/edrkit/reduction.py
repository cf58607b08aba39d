"""Certificate-producing diagonal reduction over Z and GF(p)[x].

The 2x2 comaximal core follows a fixed five-step sequence: replace the
lower-left entry by a diadem with unipotent shears, send the bottom row to
(0, g) with a column Hermite step, use the divisor-of-a-diadem completion
to make the first column comaximal, bring a 1 into the corner with a row
Hermite step, and clear.  The general pivot loop layered on top is plain
gcd elimination; divisibility chains are repaired by delegating diagonal
pairs back to the comaximal core.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .finite_lab import check_gelfand, find_diadem, is_comaximal
from .matrices import Matrix, ReductionCertificate, from_payload_grid
from .rings import (
    IntegerRing,
    PolynomialRing,
    Ring,
    RingElement,
    UnsupportedRingError,
    bezout_gcd,
    quotient_ring,
)


@dataclass(frozen=True)
class SR2Witness:
    """p, q with (a + c*p)R + (b + c*q)R = R for a comaximal triple (a, b, c)."""

    a: RingElement
    b: RingElement
    c: RingElement
    p: RingElement
    q: RingElement


def _require_bezout_domain(ring: Ring) -> None:
    if not isinstance(ring, (IntegerRing, PolynomialRing)):
        raise UnsupportedRingError(
            f"producer requires a Bezout domain (Z or GF(p)[x]), not {ring.spec()}"
        )


# ---------------------------------------------------------------------------
# Hermite steps for 1x2 rows and 2x1 columns
# ---------------------------------------------------------------------------


def _hermite_col_blocks(ring: Ring, x, y):
    """(T, g) with (x y) * T = (g, 0); T is a payload 2x2 with unit determinant."""
    if x == ring._zero() and y == ring._zero():
        one, zero = ring._one(), ring._zero()
        return ((one, zero), (zero, one)), zero
    cert = bezout_gcd(ring, RingElement(ring, x), RingElement(ring, y))
    u, v = cert.u.payload, cert.v.payload
    a1, b1 = cert.a1.payload, cert.b1.payload
    return ((u, ring._neg(b1)), (v, a1)), cert.g.payload


def _hermite_row_blocks(ring: Ring, x, y):
    """(T, g) with T * (x y)^T = (g, 0)^T; T is a payload 2x2 with unit determinant."""
    if x == ring._zero() and y == ring._zero():
        one, zero = ring._one(), ring._zero()
        return ((one, zero), (zero, one)), zero
    cert = bezout_gcd(ring, RingElement(ring, x), RingElement(ring, y))
    u, v = cert.u.payload, cert.v.payload
    a1, b1 = cert.a1.payload, cert.b1.payload
    return ((u, v), (ring._neg(b1), a1)), cert.g.payload


def hermite_reduce_1x2(
    ring: Ring, a: RingElement, b: RingElement
) -> tuple[Matrix, RingElement]:
    """Q and g with (a b) * Q = (g, 0); det(Q) = 1 unless a = b = 0 (Q = I).

    g is the gcd of a and b, nonnegative over Z and monic over GF(p)[x].
    """
    _require_bezout_domain(ring)
    ring._check(a)
    ring._check(b)
    blocks, g = _hermite_col_blocks(ring, a.payload, b.payload)
    q = from_payload_grid(ring, [list(blocks[0]), list(blocks[1])])
    return q, RingElement(ring, g)


def hermite_reduce_2x1(
    ring: Ring, a: RingElement, b: RingElement
) -> tuple[Matrix, RingElement]:
    """P and g with P * (a b)^T = (g, 0)^T; the transpose-side Hermite step."""
    _require_bezout_domain(ring)
    ring._check(a)
    ring._check(b)
    blocks, g = _hermite_row_blocks(ring, a.payload, b.payload)
    p = from_payload_grid(ring, [list(blocks[0]), list(blocks[1])])
    return p, RingElement(ring, g)


# ---------------------------------------------------------------------------
# Tracked elementary transforms on payload grids
# ---------------------------------------------------------------------------


class _Tracked:
    """Mutable grids a, p, q with p * A0 * q = a maintained throughout."""

    def __init__(self, ring: Ring, source: Matrix):
        self.ring = ring
        self.a = source.payload_grid()
        self.m = source.rows
        self.n = source.cols
        one, zero = ring._one(), ring._zero()
        self.p = [
            [one if i == j else zero for j in range(self.m)] for i in range(self.m)
        ]
        self.q = [
            [one if i == j else zero for j in range(self.n)] for i in range(self.n)
        ]

    def row_block(self, i: int, j: int, t) -> None:
        """Rows i, j of a (and p) become t applied to the old pair."""
        ring = self.ring
        (t00, t01), (t10, t11) = t
        for grid, width in ((self.a, self.n), (self.p, self.m)):
            ri, rj = grid[i], grid[j]
            for k in range(width):
                x, y = ri[k], rj[k]
                ri[k] = ring._add(ring._mul(t00, x), ring._mul(t01, y))
                rj[k] = ring._add(ring._mul(t10, x), ring._mul(t11, y))

    def col_block(self, i: int, j: int, t) -> None:
        """Columns i, j of a (and q) become the old pair times t."""
        ring = self.ring
        (t00, t01), (t10, t11) = t
        for grid, height in ((self.a, self.m), (self.q, self.n)):
            for r in range(height):
                row = grid[r]
                x, y = row[i], row[j]
                row[i] = ring._add(ring._mul(x, t00), ring._mul(y, t10))
                row[j] = ring._add(ring._mul(x, t01), ring._mul(y, t11))

    def swap_rows(self, i: int, j: int) -> None:
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            self.p[i], self.p[j] = self.p[j], self.p[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i != j:
            for grid in (self.a, self.q):
                for row in grid:
                    row[i], row[j] = row[j], row[i]

    def add_row(self, i: int, j: int, f) -> None:
        """row_i += f * row_j."""
        ring = self.ring
        for grid in (self.a, self.p):
            ri, rj = grid[i], grid[j]
            for k in range(len(ri)):
                ri[k] = ring._add(ri[k], ring._mul(f, rj[k]))

    def scale_row(self, i: int, u) -> None:
        """row_i *= u for a unit u."""
        ring = self.ring
        for grid in (self.a, self.p):
            ri = grid[i]
            for k in range(len(ri)):
                ri[k] = ring._mul(u, ri[k])

    def certificate(self) -> ReductionCertificate:
        ring = self.ring
        return ReductionCertificate(
            from_payload_grid(ring, self.p),
            from_payload_grid(ring, self.a),
            from_payload_grid(ring, self.q),
        )


def _unit_inverse(ring: Ring, u):
    """Inverse of a unit payload in Z or GF(p)[x]."""
    if isinstance(ring, IntegerRing):
        return u
    inv = pow(u[0], ring.p - 2, ring.p) if ring.p > 2 else u[0]
    return (inv,)


def _normalizer(ring: Ring, d):
    """Unit payload that scales d to canonical form (>= 0, or monic), or None."""
    if isinstance(ring, IntegerRing):
        return -1 if d < 0 else None
    if d and d[-1] != 1:
        return _unit_inverse(ring, (d[-1],))
    return None


# ---------------------------------------------------------------------------
# Diadem step and the 2x2 comaximal core
# ---------------------------------------------------------------------------


def diadem_step(
    ring: Ring, a: RingElement, b: RingElement, c: RingElement
) -> tuple[RingElement, RingElement, RingElement]:
    """(x, y, w) with w = b + a*x + c*y a diadem, for a comaximal triple.

    w is found as a diadem of the pair (b, gcd(a, c)); x and y are the
    gcd cofactors scaled by the diadem multiplier.  The quotient by w has
    stable range 1 (checkable with is_diadem_via_quotient).
    """
    _require_bezout_domain(ring)
    if not is_comaximal(ring, (a, b, c)):
        raise ValueError("triple is not comaximal")
    cert = bezout_gcd(ring, a, c)
    witness = find_diadem(ring, b, cert.g)
    t = witness.multiplier
    return cert.u * t, cert.v * t, witness.diadem


def _comaximal_completion(ring: Ring, w, c1, d1):
    """First m (in canonical order) with gcd(w, c1 + d1*m) a unit.

    Exists because the finite quotient by w has stable range 1 and the
    images of (c1, d1) stay comaximal there.
    """
    for m in ring._enumerate_payloads():
        cand = ring._add(c1, ring._mul(d1, m))
        if ring._ideal_has_one((w, cand)):
            return m
    raise AssertionError("comaximal completion search cannot fail")


def reduce_2x2_comaximal(ring: Ring, source: Matrix) -> ReductionCertificate:
    """Diagonal reduction of [[a, 0], [b, c]] with (a, b, c) comaximal.

    Returns a certificate with D = diag(1, e) and e associated to a*c.
    """
    _require_bezout_domain(ring)
    if source.ring != ring:
        raise ValueError("matrix ring mismatch")
    if source.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got {source.shape}")
    zero, one = ring._zero(), ring._one()
    grid = source.payload_grid()
    if grid[0][1] != zero:
        raise ValueError("matrix must have shape [[a, 0], [b, c]]")
    a, b, c = grid[0][0], grid[1][0], grid[1][1]
    if not ring._ideal_has_one((a, b, c)):
        raise ValueError("entries are not comaximal")
    work = _Tracked(ring, source)
    if ring._is_unit(a):
        # Degenerate input: scale the corner to 1 and shear b away.
        if a != one:
            work.scale_row(0, _unit_inverse(ring, a))
        if b != zero:
            work.add_row(1, 0, ring._neg(work.a[1][0]))
    elif a == zero:
        # Row (b, c) is itself comaximal: one Hermite step leaves the unit
        # corner directly.
        t, g = _hermite_col_blocks(ring, b, c)
        work.col_block(0, 1, t)
        work.swap_rows(0, 1)
    else:
        x, y, w = diadem_step(
            ring, RingElement(ring, a), RingElement(ring, b), RingElement(ring, c)
        )
        work.row_block(0, 1, ((one, zero), (x.payload, one)))
        work.col_block(0, 1, ((one, zero), (y.payload, one)))
        # bottom row (w, c) -> (0, alpha): column-swapped Hermite block with
        # the first column negated to keep the determinant at 1
        t, alpha = _hermite_col_blocks(ring, w.payload, c)
        ((t00, t01), (t10, t11)) = t
        work.col_block(0, 1, ((ring._neg(t01), t00), (ring._neg(t11), t10)))
        a_top, c_top = work.a[0][0], work.a[0][1]
        # divisor-of-a-diadem completion: alpha divides w, so a multiplier m
        # с gcd(w, c1 + d1*m) unit also makes (c_top + a_top*m, alpha) comaximal
        k_cert = bezout_gcd(
            ring, RingElement(ring, c_top), RingElement(ring, a_top)
        )
        m = _comaximal_completion(
            ring, w.payload, k_cert.a1.payload, k_cert.b1.payload
        )
        work.col_block(0, 1, ((m, one), (one, zero)))
        t, g = _hermite_row_blocks(ring, work.a[0][0], work.a[1][0])
        work.row_block(0, 1, t)
    # corner is now the unit g (exactly 1 after normalization); clear the rest
    corner = work.a[0][0]
    if corner != one:
        work.scale_row(0, _unit_inverse(ring, corner))
    beta = work.a[0][1]
    if beta != zero:
        work.col_block(0, 1, ((one, ring._neg(beta)), (zero, one)))
    norm = _normalizer(ring, work.a[1][1])
    if norm is not None:
        work.scale_row(1, norm)
    return work.certificate()


# ---------------------------------------------------------------------------
# Full Smith normal form
# ---------------------------------------------------------------------------


def _move_pivot(work: _Tracked, k: int) -> bool:
    """Swap the canonically smallest nonzero trailing entry into (k, k)."""
    ring = work.ring
    zero = ring._zero()
    best = None
    best_key = None
    for i in range(k, work.m):
        for j in range(k, work.n):
            v = work.a[i][j]
            if v == zero:
                continue
            key = ring._sort_key(v)
            if best_key is None or key < best_key:
                best, best_key = (i, j), key
    if best is None:
        return False
    work.swap_rows(k, best[0])
    work.swap_cols(k, best[1])
    return True


def _clear_cross(work: _Tracked, k: int) -> None:
    """Zero the pivot cross with Hermite steps.

    Divisible entries are cleared by pure shears, which leave the pivot row
    and column alone; a non-divisible entry shrinks the pivot strictly, so
    the refill loop terminates.
    """
    ring = work.ring
    zero = ring._zero()
    while True:
        for i in range(k + 1, work.m):
            target = work.a[i][k]
            if target == zero:
                continue
            q = ring._divides(work.a[k][k], target)
            if q is not None:
                work.add_row(i, k, ring._neg(q))
            else:
                t, _ = _hermite_row_blocks(ring, work.a[k][k], work.a[i][k])
                work.row_block(k, i, t)
        for j in range(k + 1, work.n):
            target = work.a[k][j]
            if target == zero:
                continue
            q = ring._divides(work.a[k][k], target)
            if q is not None:
                nq = ring._neg(q)
                work.col_block(k, j, ((ring._one(), nq), (zero, ring._one())))
            else:
                t, _ = _hermite_col_blocks(ring, work.a[k][k], work.a[k][j])
                work.col_block(k, j, t)
        if all(work.a[i][k] == zero for i in range(k + 1, work.m)) and all(
            work.a[k][j] == zero for j in range(k + 1, work.n)
        ):
            return


def _merge_diagonal_pair(work: _Tracked, i: int, j: int) -> None:
    """Replace diag entries (d_i, d_j) by (gcd, lcm-associate) via the core."""
    ring = work.ring
    di, dj = work.a[i][i], work.a[j][j]
    if ring._divides(di, dj) is not None:
        return
    cert = bezout_gcd(ring, RingElement(ring, di), RingElement(ring, dj))
    work.add_row(j, i, ring._one())
    # the (i, j) block is now g * [[di1, 0], [di1, dj1]] with (di1, dj1) coprime
    sub = from_payload_grid(
        ring,
        [[cert.a1.payload, ring._zero()], [cert.a1.payload, cert.b1.payload]],
    )
    sub_cert = reduce_2x2_comaximal(ring, sub)
    pg = sub_cert.P.payload_grid()
    qg = sub_cert.Q.payload_grid()
    work.row_block(i, j, ((pg[0][0], pg[0][1]), (pg[1][0], pg[1][1])))
    work.col_block(i, j, ((qg[0][0], qg[0][1]), (qg[1][0], qg[1][1])))


def smith_normal_form(ring: Ring, source: Matrix) -> ReductionCertificate:
    """Full diagonal reduction with the divisibility chain d_1 | d_2 | ...

    Pivot loop: bring the smallest trailing entry to the corner and clear
    its row and column with Hermite steps (clearing may refill the cross,
    but each refill strictly shrinks the pivot, so it terminates).  Chain
    repair: any diagonal pair breaking divisibility is rewritten as a
    comaximal 2x2 problem (factor out the gcd, add one row) and delegated
    to reduce_2x2_comaximal.  Zero diagonal entries end up as a suffix;
    entries are normalized nonnegative (Z) or monic (GF(p)[x]).
    """
    _require_bezout_domain(ring)
    if source.ring != ring:
        raise ValueError("matrix ring mismatch")
    work = _Tracked(ring, source)
    limit = min(work.m, work.n)
    rank = 0
    for k in range(limit):
        if not _move_pivot(work, k):
            break
        _clear_cross(work, k)
        rank += 1
    for i in range(rank):
        for j in range(i + 1, rank):
            _merge_diagonal_pair(work, i, j)
    for i in range(rank):
        norm = _normalizer(ring, work.a[i][i])
        if norm is not None:
            work.scale_row(i, norm)
    return work.certificate()


# ---------------------------------------------------------------------------
# Constructive stable-range-2 and Gelfand witnesses
# ---------------------------------------------------------------------------


def stable_range_2_witness(
    ring: Ring, a: RingElement, b: RingElement, c: RingElement
) -> SR2Witness:
    """Shorten a comaximal triple: p, q with gcd(a + c*p, b + c*q) a unit.

    Construction: write bR + cR = dR, take a diadem nu = a + d*t of the
    pair (a, d) (so nu = a + b*x + c*y with x, y the scaled cofactors),
    complete to gcd(nu, b + c*m) = 1, split 1 = nu*s + (b + c*m)*w, and
    resolve u*s + h*(x*s + w) = y*s + m*w; then (p, q) = (u, h).  The
    witness equation is checked before returning.
    """
    _require_bezout_domain(ring)
    if not is_comaximal(ring, (a, b, c)):
        raise ValueError("triple is not comaximal")
    zero = ring.zero
    d_cert = bezout_gcd(ring, b, c)
    if d_cert.g == zero:
        witness = SR2Witness(a, b, c, zero, zero)
    else:
        diadem = find_diadem(ring, a, d_cert.g)
        t = diadem.multiplier
        nu = diadem.diadem
        x, y = d_cert.u * t, d_cert.v * t
        m = RingElement(
            ring, _comaximal_completion(ring, nu.payload, b.payload, c.payload)
        )
        s_cert = bezout_gcd(ring, nu, b + c * m)
        s, w = s_cert.u, s_cert.v
        rhs = y * s + m * w
        modulus = x * s + w
        if modulus == zero:
            # gcd(s, x*s + w) = gcd(s, w) = 1 forces s to be a unit here
            u = rhs * RingElement(ring, _unit_inverse(ring, s.payload))
            h = zero
        else:
            inv_cert = bezout_gcd(ring, s, modulus)
            u = _reduce_mod(ring, rhs * inv_cert.u, modulus)
            h = ring.divides(modulus, rhs - u * s)
            assert h is not None
        witness = SR2Witness(a, b, c, u, h)
    shortened = (a + c * witness.p, b + c * witness.q)
    if not is_comaximal(ring, shortened):
        raise AssertionError("constructed witness failed its comaximality check")
    return witness


def _reduce_mod(ring: Ring, value: RingElement, modulus: RingElement) -> RingElement:
    """Canonical residue of value modulo a nonzero modulus (keeps entries small)."""
    if isinstance(ring, IntegerRing):
        return ring.element(value.payload % abs(modulus.payload))
    from .rings import _poly_divmod  # local import: payload helper

    return ring.element(_poly_divmod(value.payload, modulus.payload, ring.p)[1])


def gelfand_range_1_witness(a: int, b: int) -> int:
    """Multiplier t with a + b*t nonzero and Z/(a + b*t) a Gelfand ring.

    Same search order as find_diadem over Z; every nonzero quotient of Z
    is finite and the exhaustive Gelfand check decides it.
    """
    if math.gcd(a, b) != 1:
        raise ValueError("gcd(a, b) must be 1")
    integers = IntegerRing()
    for t in integers._enumerate_payloads():
        w = a + b * t
        if w == 0:
            continue
        quotient = quotient_ring(integers, integers.element(w))
        if check_gelfand(quotient, bound=None).holds:
            return t
    raise AssertionError("gelfand witness search cannot fail")
