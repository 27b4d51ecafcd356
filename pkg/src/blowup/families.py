"""Named graph families, parameter-level spectra, and spectral descriptors.

A SpectralDescriptor carries a name, an order, a spectrum, and a provenance
saying where the spectrum came from: an explicit graph (cross-checked
against the numeric eigensolver at construction), strongly regular or
intersection-array parameters (derived by exact formula), or a bare
assertion with a note.

The module also owns the textual name grammar shared with the CLI:

    complete:n  cycle:n  johnson:m,r  paley:q  petersen  icosahedron
    gosset  srg:v,k,l,m  drg:b0,..,b_{d-1};c1,..,cd  g6:<string>
    union:<a>+<b>  complement:<a>  blowup:<a>,t
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import (
    GraphParseError,
    InfeasibleIntersectionArray,
    InfeasibleSrgParameters,
)
from .exact import Quadratic, squarefree_split
from .graphs import (
    Graph,
    cartesian_product,
    closed_blowup_graph,
    complement,
    complete,
    cycle,
    disjoint_union,
    g6_decode,
    g6_encode,
)
from .spectra import (
    NUMERIC_SPECTRUM_TOL,
    Spectrum,
    blowup_transform,
    eigen_spectrum,
)

_MAX_DENSE_ORDER = 5000  # ceiling for graphs we will build explicitly


# -- provenance and descriptors ----------------------------------------------


@dataclass(frozen=True)
class Explicit:
    graph: Graph


@dataclass(frozen=True)
class FromSrg:
    params: "SrgParams"


@dataclass(frozen=True)
class FromIntersectionArray:
    array: "IntersectionArray"


@dataclass(frozen=True)
class Asserted:
    note: str


@dataclass(frozen=True)
class SpectralDescriptor:
    """A named spectrum with its order and provenance, validated on build."""

    name: str
    n: int
    spectrum: Spectrum
    provenance: Explicit | FromSrg | FromIntersectionArray | Asserted

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("descriptor order must be >= 1")
        if self.spectrum.n != self.n:
            raise ValueError(
                f"{self.name}: multiplicities sum to {self.spectrum.n}, expected {self.n}"
            )
        if not self.spectrum.trace_is_zero():
            raise ValueError(f"{self.name}: spectrum trace is not zero")
        if isinstance(self.provenance, Explicit):
            g = self.provenance.graph
            if g.n != self.n:
                raise ValueError(f"{self.name}: graph order {g.n} != descriptor order {self.n}")
            numeric = eigen_spectrum(g)
            if not self.spectrum.allclose(numeric, NUMERIC_SPECTRUM_TOL):
                raise ValueError(
                    f"{self.name}: stated spectrum disagrees with the eigensolver "
                    f"beyond {NUMERIC_SPECTRUM_TOL}"
                )

    def provenance_json(self) -> dict:
        p = self.provenance
        if isinstance(p, Explicit):
            return {"kind": "explicit", "graph6": g6_encode(p.graph)}
        if isinstance(p, FromSrg):
            q = p.params
            return {"kind": "srg", "v": q.v, "k": q.k, "lambda": q.lam, "mu": q.mu}
        if isinstance(p, FromIntersectionArray):
            return {"kind": "intersection-array", "b": list(p.array.b), "c": list(p.array.c)}
        return {"kind": "asserted", "note": p.note}

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "spectrum": self.spectrum.to_json_obj(),
            "provenance": self.provenance_json(),
        }


def explicit_descriptor(g: Graph, name: str, exact_pairs=None) -> SpectralDescriptor:
    """Descriptor for a concrete graph; exact_pairs overrides the numeric spectrum."""
    spectrum = Spectrum(exact_pairs) if exact_pairs is not None else eigen_spectrum(g)
    return SpectralDescriptor(name, g.n, spectrum, Explicit(g))


def asserted_descriptor(name: str, n: int, pairs, note: str) -> SpectralDescriptor:
    """Descriptor taken on trust; only the trace and multiplicity sums are checked."""
    return SpectralDescriptor(name, n, Spectrum(pairs), Asserted(note))


# -- simple families ----------------------------------------------------------


def complete_descriptor(n: int) -> SpectralDescriptor:
    pairs = [(Quadratic(n - 1), 1)]
    if n > 1:
        pairs.append((Quadratic(-1), n - 1))
    return explicit_descriptor(complete(n), f"complete:{n}", pairs)


_SMALL_CYCLE_SPECTRA = {
    3: [(2, 1), (-1, 2)],
    4: [(2, 1), (0, 2), (-2, 1)],
    5: [
        (2, 1),
        (Quadratic(Fraction(-1, 2), Fraction(1, 2), 5), 2),
        (Quadratic(Fraction(-1, 2), Fraction(-1, 2), 5), 2),
    ],
    6: [(2, 1), (1, 2), (-1, 2), (-2, 1)],
}


def cycle_descriptor(n: int) -> SpectralDescriptor:
    """Cycle spectrum; exact through n = 6, numeric beyond (roots stop being quadratic)."""
    g = cycle(n)
    return explicit_descriptor(g, f"cycle:{n}", _SMALL_CYCLE_SPECTRA.get(n))


def johnson(m: int, r: int = 2) -> Graph:
    """Johnson graph on r-subsets of an m-set, adjacent when they share r-1 elements."""
    if r < 1 or m < 2 * r:
        raise ValueError("johnson graph needs 1 <= r and m >= 2r")
    n = math.comb(m, r)
    if n > _MAX_DENSE_ORDER:
        raise ValueError(f"johnson({m},{r}) has order {n}, beyond the dense-size ceiling")
    verts = [frozenset(c) for c in combinations(range(m), r)]
    a = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if len(verts[i] & verts[j]) == r - 1:
                a[i, j] = a[j, i] = True
    return Graph(a)


def johnson_descriptor(m: int, r: int = 2) -> SpectralDescriptor:
    """Johnson graph with its exact spectrum.

    Eigenvalues are (r-j)(m-r-j) - j with multiplicity C(m,j) - C(m,j-1)
    for j = 0..r; for r = 2 this is 2(m-2), m-4, and -2.
    """
    g = johnson(m, r)
    pairs = []
    for j in range(r + 1):
        mult = math.comb(m, j) - (math.comb(m, j - 1) if j >= 1 else 0)
        if mult > 0:
            pairs.append((Quadratic((r - j) * (m - r - j) - j), mult))
    return explicit_descriptor(g, f"johnson:{m},{r}", pairs)


# Pentagonal antiprism plus two apex vertices: 0 above the ring 1..5,
# 11 below the ring 6..10.
_ICOSAHEDRON_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
    (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
    (11, 6), (11, 7), (11, 8), (11, 9), (11, 10),
    (1, 6), (1, 7), (2, 7), (2, 8), (3, 8),
    (3, 9), (4, 9), (4, 10), (5, 10), (5, 6),
)


def icosahedron() -> Graph:
    """The icosahedral graph: 12 vertices, 5-regular, 30 edges."""
    return Graph.from_edges(12, _ICOSAHEDRON_EDGES)


def icosahedron_descriptor() -> SpectralDescriptor:
    r5 = Quadratic.sqrt(5)
    pairs = [(Quadratic(5), 1), (r5, 3), (Quadratic(-1), 5), (-r5, 3)]
    return explicit_descriptor(icosahedron(), "icosahedron", pairs)


def petersen() -> Graph:
    """Petersen graph, built as the complement of johnson(5, 2)."""
    return complement(johnson(5, 2))


def petersen_descriptor() -> SpectralDescriptor:
    pairs = [(Quadratic(3), 1), (Quadratic(1), 5), (Quadratic(-2), 4)]
    return explicit_descriptor(petersen(), "petersen", pairs)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    p = 3
    while p * p <= q:
        if q % p == 0:
            return False
        p += 2
    return True


def paley(q: int) -> Graph:
    """Paley graph on q vertices for prime q = 1 mod 4; q = 9 is K3 x K3."""
    if q == 9:
        k3 = complete(3)
        return cartesian_product(k3, k3)
    if not _is_prime(q) or q % 4 != 1:
        raise ValueError(f"paley({q}): q must be 9 or a prime congruent to 1 mod 4")
    squares = {(x * x) % q for x in range(1, q)}
    return Graph.from_edges(q, [(i, j) for i in range(q) for j in range(i + 1, q) if (i - j) % q in squares])


def paley_descriptor(q: int) -> SpectralDescriptor:
    g = paley(q)
    params = SrgParams(q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4)
    pairs = srg_spectrum(params).spectrum.entries
    return explicit_descriptor(g, f"paley:{q}", pairs)


# -- strongly regular parameters ----------------------------------------------


@dataclass(frozen=True)
class SrgParams:
    """Parameters (v, k, lambda, mu) of a strongly regular graph."""

    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if not (0 < self.k < self.v):
            raise InfeasibleSrgParameters(f"need 0 < k < v, got k={self.k}, v={self.v}")
        if self.lam < 0 or self.mu < 0:
            raise InfeasibleSrgParameters("lambda and mu must be nonnegative")
        lhs = self.k * (self.k - self.lam - 1)
        rhs = (self.v - self.k - 1) * self.mu
        if lhs != rhs:
            raise InfeasibleSrgParameters(
                f"counting identity fails: k(k-lambda-1)={lhs} != (v-k-1)mu={rhs}"
            )


def srg_spectrum(p: SrgParams) -> SpectralDescriptor:
    """Exact spectrum from strongly regular parameters.

    The non-principal eigenvalues are ((lam-mu) +- sqrt(D))/2 with
    D = (lam-mu)^2 + 4(k-mu). Square D gives integer eigenvalues with
    multiplicities from the standard counting formula; non-square D is the
    conference case and requires 2k + (v-1)(lam-mu) = 0.
    """
    v, k, lam, mu = p.v, p.k, p.lam, p.mu
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    if disc <= 0:
        raise InfeasibleSrgParameters(f"degenerate discriminant {disc}")
    s, f = squarefree_split(disc)
    diff_term = 2 * k + (v - 1) * (lam - mu)
    pairs: list[tuple[Quadratic, int]] = [(Quadratic(k), 1)]
    if f == 1:
        theta = Quadratic(Fraction(lam - mu + s, 2))
        tau = Quadratic(Fraction(lam - mu - s, 2))
        half = Fraction(v - 1, 2)
        corr = Fraction(diff_term, 2 * s)
        for val, mult in ((theta, half - corr), (tau, half + corr)):
            if mult.denominator != 1 or mult < 0:
                raise InfeasibleSrgParameters(
                    f"multiplicity {mult} for eigenvalue {val} is not a nonnegative integer"
                )
            if mult:
                pairs.append((val, int(mult)))
    else:
        if diff_term != 0:
            raise InfeasibleSrgParameters(
                "irrational eigenvalues need the conference condition 2k+(v-1)(lambda-mu)=0"
            )
        if (v - 1) % 2:
            raise InfeasibleSrgParameters("conference parameters need odd v")
        half_m = (v - 1) // 2
        theta = Quadratic(Fraction(lam - mu, 2), Fraction(1, 2), disc)
        tau = Quadratic(Fraction(lam - mu, 2), Fraction(-1, 2), disc)
        pairs += [(theta, half_m), (tau, half_m)]
    name = f"srg:{v},{k},{lam},{mu}"
    return SpectralDescriptor(name, v, Spectrum(pairs), FromSrg(p))


# -- intersection arrays -------------------------------------------------------


@dataclass(frozen=True)
class IntersectionArray:
    """Intersection array {b0,..,b_{d-1}; c1,..,cd} of a distance regular graph."""

    b: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        b, c = tuple(self.b), tuple(self.c)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        d = len(b)
        if d < 1 or len(c) != d:
            raise InfeasibleIntersectionArray("b and c sequences must have equal positive length")
        if any(x < 1 for x in b) or any(x < 1 for x in c):
            raise InfeasibleIntersectionArray("intersection numbers must be positive")
        if c[0] != 1:
            raise InfeasibleIntersectionArray("c1 must equal 1")
        if any(b[i + 1] > b[i] for i in range(d - 1)):
            raise InfeasibleIntersectionArray("b sequence must be nonincreasing")
        if any(c[i + 1] < c[i] for i in range(d - 1)):
            raise InfeasibleIntersectionArray("c sequence must be nondecreasing")
        for i in range(1, d + 1):
            if self.a(i) < 0:
                raise InfeasibleIntersectionArray(f"a_{i} = {self.a(i)} is negative")
        kj = Fraction(1)
        for j in range(1, d + 1):
            kj = kj * b[j - 1] / c[j - 1]
            if kj.denominator != 1 or kj <= 0:
                raise InfeasibleIntersectionArray(f"valency k_{j} = {kj} is not a positive integer")

    @property
    def diameter(self) -> int:
        return len(self.b)

    def a(self, i: int) -> int:
        """Diagonal entry a_i = b0 - b_i - c_i (with b_d = 0, c_0 = 0)."""
        if i == 0:
            return 0
        bi = self.b[i] if i < self.diameter else 0
        return self.b[0] - bi - self.c[i - 1]

    def valencies(self) -> tuple[int, ...]:
        out = [1]
        for j in range(1, self.diameter + 1):
            out.append(out[-1] * self.b[j - 1] // self.c[j - 1])
        return tuple(out)

    @property
    def n(self) -> int:
        return sum(self.valencies())

    def name(self) -> str:
        return "drg:" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c))


def _poly_eval(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for co in p:
        acc = acc * x + co
    return acc


def _poly_deflate(p: list[Fraction], r: Fraction) -> list[Fraction]:
    q = [p[0]]
    for co in p[1:-1]:
        q.append(co + r * q[-1])
    return q


def _intersection_charpoly(arr: IntersectionArray) -> list[Fraction]:
    """Characteristic polynomial (descending, monic) of the tridiagonal intersection matrix."""
    d = arr.diameter
    prev = [Fraction(1)]
    cur = [Fraction(1), Fraction(0)]  # x - a0 with a0 = 0
    for i in range(1, d + 1):
        ai = Fraction(arr.a(i))
        bc = Fraction(arr.b[i - 1] * arr.c[i - 1])
        shifted = cur + [Fraction(0)]
        nxt = list(shifted)
        off = len(nxt) - len(cur)
        for idx, co in enumerate(cur):
            nxt[idx + off] -= ai * co
        off = len(nxt) - len(prev)
        for idx, co in enumerate(prev):
            nxt[idx + off] -= bc * co
        prev, cur = cur, nxt
    return cur


def _multiplicity(theta, arr: IntersectionArray, n: int):
    """m(theta) = n / sum_j k_j u_j(theta)^2 via the standard u recurrence."""
    d = arr.diameter
    kj = arr.valencies()
    u_prev = Quadratic(1) if isinstance(theta, Quadratic) else 1.0
    u_cur = theta / arr.b[0]
    total = kj[0] * (u_prev * u_prev) + kj[1] * (u_cur * u_cur)
    for j in range(1, d):
        u_next = ((theta - arr.a(j)) * u_cur - arr.c[j - 1] * u_prev) / arr.b[j]
        total = total + kj[j + 1] * (u_next * u_next)
        u_prev, u_cur = u_cur, u_next
    return n / total


def drg_spectrum(arr: IntersectionArray) -> SpectralDescriptor:
    """Exact spectrum from an intersection array.

    Eigenvalues are the roots of the (d+1) x (d+1) tridiagonal intersection
    matrix: integer roots are found by exact scan, a residual quadratic
    factor yields a conjugate surd pair, and higher degree residuals fall
    back to numeric roots. Multiplicities must come out as positive
    integers (exactly for exact eigenvalues, within 1e-6 after rounding for
    numeric ones) or the array is rejected.
    """
    n = arr.n
    b0 = arr.b[0]
    poly = _intersection_charpoly(arr)
    roots: list[object] = []
    for r in range(b0, -b0 - 1, -1):
        if _poly_eval(poly, Fraction(r)) == 0:
            roots.append(Quadratic(r))
            poly = _poly_deflate(poly, Fraction(r))
    deg = len(poly) - 1
    if deg == 1:
        roots.append(Quadratic(-poly[1]))
    elif deg == 2:
        bq, cq = poly[1], poly[2]
        disc = bq * bq - 4 * cq
        if disc.denominator != 1 or disc <= 0:
            raise InfeasibleIntersectionArray(f"quadratic factor with discriminant {disc}")
        roots.append(Quadratic(-bq / 2, Fraction(1, 2), int(disc)))
        roots.append(Quadratic(-bq / 2, Fraction(-1, 2), int(disc)))
    elif deg >= 3:
        coeffs = [float(co) for co in poly]
        roots.extend(float(x) for x in np.roots(coeffs).real)

    pairs = []
    total_mult = 0
    for theta in roots:
        m = _multiplicity(theta, arr, n)
        if isinstance(m, Quadratic):
            if not m.is_rational or m.as_fraction().denominator != 1 or m <= 0:
                raise InfeasibleIntersectionArray(
                    f"multiplicity {m} of eigenvalue {theta} is not a positive integer"
                )
            mult = int(m.as_fraction())
        else:
            mult = round(m)
            if mult < 1 or abs(m - mult) > 1e-6:
                raise InfeasibleIntersectionArray(
                    f"multiplicity {m} of eigenvalue {theta} is not close to a positive integer"
                )
        pairs.append((theta, mult))
        total_mult += mult
    if total_mult != n:
        raise InfeasibleIntersectionArray(
            f"multiplicities sum to {total_mult}, expected order {n}"
        )
    return SpectralDescriptor(arr.name(), n, Spectrum(pairs), FromIntersectionArray(arr))


def gosset_descriptor() -> SpectralDescriptor:
    """Gosset graph preset: intersection array {27,10,1;1,10,27} on 56 vertices."""
    d = drg_spectrum(IntersectionArray((27, 10, 1), (1, 10, 27)))
    return replace(d, name="gosset")


def taylor_co3_descriptor() -> SpectralDescriptor:
    """Asserted 552-vertex descriptor whose 24th eigenvalue is 55.

    Shipped on trust: the spectrum matches an antipodal double cover of
    K_276, but no explicit graph or intersection array is carried here, so
    certificates built on it stay at 'asserted' strength.
    """
    return asserted_descriptor(
        "taylor-co3",
        552,
        [(Quadratic(275), 1), (Quadratic(55), 23), (Quadratic(-1), 275), (Quadratic(-5), 253)],
        "antipodal double cover structure on 552 vertices; only lambda_24 = 55 is load-bearing",
    )


# -- descriptor combinators ----------------------------------------------------


def union_descriptor(a: SpectralDescriptor, b: SpectralDescriptor) -> SpectralDescriptor:
    """Disjoint union: spectra merge as multisets, orders add."""
    name = f"union:{a.name}+{b.name}"
    pairs = list(a.spectrum.entries) + list(b.spectrum.entries)
    if isinstance(a.provenance, Explicit) and isinstance(b.provenance, Explicit):
        g = disjoint_union(a.provenance.graph, b.provenance.graph)
        return SpectralDescriptor(name, g.n, Spectrum(pairs), Explicit(g))
    prov = Asserted(f"disjoint union of {a.name} and {b.name} at spectrum level")
    return SpectralDescriptor(name, a.n + b.n, Spectrum(pairs), prov)


def complement_descriptor(a: SpectralDescriptor) -> SpectralDescriptor:
    if not isinstance(a.provenance, Explicit):
        raise ValueError(f"complement needs an explicit graph, got {a.name}")
    g = complement(a.provenance.graph)
    return explicit_descriptor(g, f"complement:{a.name}")


def blowup_descriptor(a: SpectralDescriptor, t: int) -> SpectralDescriptor:
    """Closed t-blowup at descriptor level; explicit bases stay explicit."""
    spectrum = blowup_transform(a.spectrum, t)
    name = f"blowup:{a.name},{t}"
    if isinstance(a.provenance, Explicit):
        g = closed_blowup_graph(a.provenance.graph, t)
        return SpectralDescriptor(name, g.n, spectrum, Explicit(g))
    prov = Asserted(f"closed {t}-blowup of {a.name} at spectrum level")
    return SpectralDescriptor(name, a.n * t, spectrum, prov)


# -- name grammar ----------------------------------------------------------------


def _parse_int(tok: str, off: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphParseError(f"expected an integer, got '{tok}'", off) from None


def _parse_int_list(tok: str, off: int) -> list[int]:
    if not tok:
        raise GraphParseError("expected a comma-separated integer list", off)
    out = []
    pos = off
    for piece in tok.split(","):
        out.append(_parse_int(piece, pos))
        pos += len(piece) + 1
    return out


def parse_expression(text: str) -> SpectralDescriptor:
    """Evaluate a graph/descriptor expression in the shared name grammar."""
    return _parse_expr(text.strip(), 0)


def _parse_expr(s: str, off: int) -> SpectralDescriptor:
    if not s:
        raise GraphParseError("empty graph expression", off)
    if s == "petersen":
        return petersen_descriptor()
    if s == "icosahedron":
        return icosahedron_descriptor()
    if s == "gosset":
        return gosset_descriptor()
    head, sep, rest = s.partition(":")
    if not sep:
        raise GraphParseError(f"unknown graph name '{s}'", off)
    roff = off + len(head) + 1

    if head == "complete":
        return complete_descriptor(_parse_int(rest, roff))
    if head == "cycle":
        return cycle_descriptor(_parse_int(rest, roff))
    if head == "johnson":
        vals = _parse_int_list(rest, roff)
        if len(vals) != 2:
            raise GraphParseError("johnson takes exactly two integers m,r", roff)
        return johnson_descriptor(*vals)
    if head == "paley":
        return paley_descriptor(_parse_int(rest, roff))
    if head == "srg":
        vals = _parse_int_list(rest, roff)
        if len(vals) != 4:
            raise GraphParseError("srg takes exactly four integers v,k,l,m", roff)
        return srg_spectrum(SrgParams(*vals))
    if head == "drg":
        bpart, sep2, cpart = rest.partition(";")
        if not sep2:
            raise GraphParseError("drg needs ';' between the b and c sequences", roff)
        b = _parse_int_list(bpart, roff)
        c = _parse_int_list(cpart, roff + len(bpart) + 1)
        return drg_spectrum(IntersectionArray(tuple(b), tuple(c)))
    if head == "g6":
        try:
            g = g6_decode(rest)
        except GraphParseError as e:
            shift = roff + (e.offset or 0)
            raise GraphParseError(f"bad graph6 literal: {e.args[0]}", shift) from None
        return explicit_descriptor(g, f"g6:{rest}")
    if head == "union":
        cut = rest.rfind("+")
        if cut < 0:
            raise GraphParseError("union needs '+' between two operands", roff)
        a = _parse_expr(rest[:cut], roff)
        b = _parse_expr(rest[cut + 1 :], roff + cut + 1)
        return union_descriptor(a, b)
    if head == "complement":
        return complement_descriptor(_parse_expr(rest, roff))
    if head == "blowup":
        cut = rest.rfind(",")
        if cut < 0:
            raise GraphParseError("blowup needs ',t' after the operand", roff)
        t = _parse_int(rest[cut + 1 :], roff + cut + 1)
        base = _parse_expr(rest[:cut], roff)
        return blowup_descriptor(base, t)
    raise GraphParseError(f"unknown constructor '{head}'", off)
