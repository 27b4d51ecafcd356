"""Lower-bound certificates for c_k, the extremal ratio of the k-th eigenvalue.

c_k is the supremum of lambda_k(G)/n over graphs with at least k vertices.
Closed t-blowups push the finite ratio lambda_k(G^[t])/(nt) up to the limit
(lambda_k + 1)/n as t grows, provided lambda_k >= -1, so any base spectrum
yields a certified lower bound. Every certificate is checked against the
proven ceiling 1/(2*sqrt(k-1)); a violation is a solver bug and raises.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalConsistencyError, TableMismatchError
from .exact import Quadratic
from .families import (
    Asserted,
    Explicit,
    FromIntersectionArray,
    FromSrg,
    SpectralDescriptor,
    SrgParams,
    gosset_descriptor,
    icosahedron_descriptor,
    johnson_descriptor,
    paley_descriptor,
    petersen_descriptor,
    srg_spectrum,
    taylor_co3_descriptor,
)
from .spectra import (
    NUMERIC_SPECTRUM_TOL,
    Spectrum,
    blowup_transform,
    eigen_spectrum,
    kth_largest,
)

#: slack allowed when comparing a certified ratio against the proven ceiling
DOMINANCE_TOL = 1e-12

VERIFIED = "verified"
EXACT_FORMULA = "exact-formula"
ASSERTED = "asserted"


# -- blowup spectra ------------------------------------------------------------


@dataclass(frozen=True)
class BlowupSpectrum:
    """Spectrum of the closed t-blowup of a described base graph."""

    base: SpectralDescriptor
    t: int
    spectrum: Spectrum

    @property
    def n(self) -> int:
        return self.base.n * self.t


def blowup_spectrum(base: SpectralDescriptor, t: int) -> BlowupSpectrum:
    """Apply the closed-blowup spectrum transform to a descriptor."""
    return BlowupSpectrum(base, t, blowup_transform(base.spectrum, t))


def kth_largest_of_blowup(base: SpectralDescriptor, t: int, k: int):
    """k-th largest eigenvalue of the closed t-blowup, from the merged multiset."""
    return kth_largest(blowup_spectrum(base, t).spectrum, k)


def finite_ratio(base: SpectralDescriptor, t: int, k: int):
    """lambda_k(G^[t]) / (n t), exact when the base spectrum is exact."""
    lam = kth_largest_of_blowup(base, t, k)
    if isinstance(lam, Quadratic):
        return lam / (base.n * t)
    return float(lam) / (base.n * t)


# -- limit ratios ----------------------------------------------------------------


@dataclass(frozen=True)
class LimitRatio:
    """Supremum over t of the blowup ratio; attained == False means the
    supremum is 0 approached from below (lambda_k <= -1)."""

    value: Quadratic | float
    attained: bool


def limit_ratio(s: Spectrum, k: int) -> LimitRatio:
    """sup_t lambda_k(blowup_t)/(n t) for a base spectrum on n = s.n vertices.

    Equals (lambda_k + 1)/n when lambda_k >= -1; otherwise the blowup
    ratios are negative for every t and the supremum is 0, not attained.
    """
    n = s.n
    lam = kth_largest(s, k)
    if isinstance(lam, Quadratic):
        if lam > Quadratic(-1):
            return LimitRatio((lam + 1) / n, True)
        return LimitRatio(Quadratic(0), False)
    if lam > -1.0:
        return LimitRatio((lam + 1.0) / n, True)
    return LimitRatio(0.0, False)


# -- reference bounds --------------------------------------------------------------


def nikiforov_upper(k: int) -> float:
    """Proven ceiling c_k <= 1/(2*sqrt(k-1)) for k >= 2."""
    if k < 2:
        raise ValueError("the ceiling 1/(2*sqrt(k-1)) needs k >= 2")
    return 1.0 / (2.0 * math.sqrt(k - 1))


def reference_lower(k: int) -> float:
    """Prior-art floor c_k >= 1/(k - 1/2) for k >= 5."""
    if k < 5:
        raise ValueError("the floor 1/(k-1/2) is stated for k >= 5")
    return 1.0 / (k - 0.5)


def asymptotic_lower(k: int) -> float:
    """Display-only asymptotic floor 1/(2*sqrt(k-1) + k^(1/3)) for k >= 2."""
    if k < 2:
        raise ValueError("needs k >= 2")
    return 1.0 / (2.0 * math.sqrt(k - 1) + k ** (1.0 / 3.0))


# -- certificates -------------------------------------------------------------------


@dataclass(frozen=True)
class BoundCertificate:
    """A certified lower bound c_k >= ratio obtained from one base descriptor."""

    k: int
    base: SpectralDescriptor
    ratio: Quadratic | float
    attained: bool
    verification: str

    def ratio_float(self) -> float:
        return float(self.ratio)

    def ratio_exact_str(self) -> str | None:
        if isinstance(self.ratio, Quadratic):
            return str(self.ratio)
        return None

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "descriptor": self.base.to_json_obj(),
            "ratio": {"exact": self.ratio_exact_str(), "float": self.ratio_float()},
            "attained": self.attained,
            "verification": self.verification,
        }


def _verification_of(base: SpectralDescriptor) -> str:
    p = base.provenance
    if isinstance(p, Explicit):
        return VERIFIED
    if isinstance(p, (FromSrg, FromIntersectionArray)):
        return EXACT_FORMULA
    assert isinstance(p, Asserted)
    return ASSERTED


def certify(base: SpectralDescriptor, k: int) -> BoundCertificate:
    """Build a lower-bound certificate for c_k from a base descriptor.

    Explicit bases are re-solved numerically and must agree with the stated
    spectrum within 1e-8. Any ratio above the proven ceiling (k >= 2) is a
    contradiction and raises InternalConsistencyError.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > base.n:
        raise ValueError(f"k={k} exceeds the order {base.n} of {base.name}")
    lr = limit_ratio(base.spectrum, k)
    if k >= 2 and float(lr.value) > nikiforov_upper(k) + DOMINANCE_TOL:
        raise InternalConsistencyError(
            f"{base.name}: ratio {float(lr.value)} for k={k} exceeds the proven "
            f"ceiling {nikiforov_upper(k)}"
        )
    verification = _verification_of(base)
    if verification == VERIFIED:
        g = base.provenance.graph
        if not base.spectrum.allclose(eigen_spectrum(g), NUMERIC_SPECTRUM_TOL):
            raise InternalConsistencyError(
                f"{base.name}: stated spectrum no longer matches the eigensolver"
            )
    return BoundCertificate(k, base, lr.value, lr.attained, verification)


# -- the reference table of best-known lower bounds ----------------------------------
#
# Rows k = 4..24. Each row: printed decimal of record, exact expected ratio,
# and the descriptor builders that realize it. Row 24 rests on an asserted
# descriptor and keeps that status.

_SRG_57 = SrgParams(57, 24, 11, 9)
_SRG_125 = SrgParams(125, 72, 45, 36)
_SRG_243 = SrgParams(243, 132, 81, 60)


_TABLE_ENTRIES: dict[int, tuple[str, Quadratic, tuple]] = {
    4: (
        "0.26967",
        Quadratic(Fraction(1, 12), Fraction(1, 12), 5),
        (icosahedron_descriptor,),
    ),
    5: ("0.2222", Quadratic(Fraction(2, 9)), (lambda: paley_descriptor(9),)),
    6: (
        "0.2",
        Quadratic(Fraction(1, 5)),
        (petersen_descriptor, lambda: johnson_descriptor(6, 2)),
    ),
    7: ("0.190476", Quadratic(Fraction(4, 21)), (lambda: johnson_descriptor(7, 2),)),
    8: (
        "0.178571",
        Quadratic(Fraction(5, 28)),
        (lambda: johnson_descriptor(8, 2), gosset_descriptor),
    ),
    9: ("0.1666", Quadratic(Fraction(1, 6)), (lambda: johnson_descriptor(9, 2),)),
    10: ("0.1555", Quadratic(Fraction(7, 45)), (lambda: johnson_descriptor(10, 2),)),
    11: ("0.14545", Quadratic(Fraction(8, 55)), (lambda: johnson_descriptor(11, 2),)),
    12: ("0.13636", Quadratic(Fraction(3, 22)), (lambda: johnson_descriptor(12, 2),)),
    13: ("0.128205", Quadratic(Fraction(5, 39)), (lambda: johnson_descriptor(13, 2),)),
    14: ("0.1208791", Quadratic(Fraction(11, 91)), (lambda: johnson_descriptor(14, 2),)),
    15: ("0.1142857", Quadratic(Fraction(4, 35)), (lambda: johnson_descriptor(15, 2),)),
    16: ("0.108333", Quadratic(Fraction(13, 120)), (lambda: johnson_descriptor(16, 2),)),
    17: ("0.10526", Quadratic(Fraction(2, 19)), (lambda: srg_spectrum(_SRG_57),)),
    18: ("0.10526", Quadratic(Fraction(2, 19)), (lambda: srg_spectrum(_SRG_57),)),
    19: ("0.10526", Quadratic(Fraction(2, 19)), (lambda: srg_spectrum(_SRG_57),)),
    20: ("0.104", Quadratic(Fraction(13, 125)), (lambda: srg_spectrum(_SRG_125),)),
    21: ("0.104", Quadratic(Fraction(13, 125)), (lambda: srg_spectrum(_SRG_125),)),
    22: ("0.10288", Quadratic(Fraction(25, 243)), (lambda: srg_spectrum(_SRG_243),)),
    23: ("0.10288", Quadratic(Fraction(25, 243)), (lambda: srg_spectrum(_SRG_243),)),
    24: ("0.101449", Quadratic(Fraction(56, 552)), (taylor_co3_descriptor,)),
}

TABLE_K_MIN = 4
TABLE_K_MAX = 24


@dataclass(frozen=True)
class TableRow:
    k: int
    expected: Quadratic
    printed: str
    certificates: tuple[BoundCertificate, ...]
    match: bool

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "expected": str(self.expected),
            "printed": self.printed,
            "match": self.match,
            "certificates": [c.to_json_obj() for c in self.certificates],
        }


def best_known_ratio(k: int) -> Quadratic | None:
    """Exact record ratio for table rows, None outside 4..24."""
    row = _TABLE_ENTRIES.get(k)
    return row[1] if row else None


def _printed_tolerance(printed: str) -> float:
    places = len(printed.partition(".")[2])
    return 10.0 ** (-places)


def _build_row(k: int) -> TableRow:
    printed, expected, builders = _TABLE_ENTRIES[k]
    certs = tuple(certify(b(), k) for b in builders)
    ok = all(isinstance(c.ratio, Quadratic) and c.ratio == expected for c in certs)
    ok = ok and abs(float(expected) - float(printed)) <= _printed_tolerance(printed)
    return TableRow(k, expected, printed, certs, ok)


def reproduce_table(k_lo: int = TABLE_K_MIN, k_hi: int = TABLE_K_MAX) -> list[TableRow]:
    """Rebuild the reference rows k_lo..k_hi and compare each exactly.

    Raises TableMismatchError naming the offending rows if any certificate
    disagrees with the recorded exact ratio or its printed decimal.
    """
    if not (TABLE_K_MIN <= k_lo <= k_hi <= TABLE_K_MAX):
        raise ValueError(f"table rows run k = {TABLE_K_MIN}..{TABLE_K_MAX}")
    rows = [_build_row(k) for k in range(k_lo, k_hi + 1)]
    bad = [r.k for r in rows if not r.match]
    if bad:
        raise TableMismatchError(f"table rows {bad} disagree with the reference values", rows)
    return rows
