"""Named families, parameter-determined spectra, and the expression grammar."""

import math
from fractions import Fraction

import numpy as np
import pytest

from blowup.errors import (
    GraphParseError,
    InfeasibleIntersectionArray,
    InfeasibleSrgParameters,
)
from blowup.exact import Quadratic
from blowup.families import (
    Asserted,
    Explicit,
    IntersectionArray,
    SrgParams,
    blowup_descriptor,
    complement_descriptor,
    complete_descriptor,
    cycle_descriptor,
    drg_spectrum,
    explicit_descriptor,
    gosset_descriptor,
    icosahedron,
    icosahedron_descriptor,
    johnson,
    johnson_descriptor,
    paley,
    paley_descriptor,
    parse_expression,
    petersen,
    petersen_descriptor,
    srg_spectrum,
    taylor_co3_descriptor,
    union_descriptor,
)
from blowup.graphs import complement, complete, disjoint_union, g6_encode
from blowup.spectra import eigen_spectrum


def exact_entries(desc):
    return tuple((v, m) for v, m in desc.spectrum.entries)


# -- johnson ---------------------------------------------------------------


def test_johnson_4_2_is_octahedron():
    # J(4,2) = complement of a perfect matching on 6 vertices
    d = johnson_descriptor(4, 2)
    assert exact_entries(d) == ((Quadratic(4), 1), (Quadratic(0), 3), (Quadratic(-2), 2))
    matching = disjoint_union(disjoint_union(complete(2), complete(2)), complete(2))
    oracle = eigen_spectrum(complement(matching))
    assert d.spectrum.allclose(oracle)


def test_johnson_7_2_entries():
    d = johnson_descriptor(7, 2)
    assert d.n == 21
    assert exact_entries(d) == ((Quadratic(10), 1), (Quadratic(3), 6), (Quadratic(-2), 14))
    assert d.spectrum.kth(7) == Quadratic(3)


def test_johnson_triple_subsets():
    # r = 3: three eigenvalue formula levels plus the valency
    d = johnson_descriptor(7, 3)
    assert d.n == math.comb(7, 3)
    numeric = eigen_spectrum(johnson(7, 3))
    assert d.spectrum.allclose(numeric)


def test_johnson_general_against_eigensolver():
    for m in range(4, 10):
        d = johnson_descriptor(m, 2)
        assert d.spectrum.allclose(eigen_spectrum(johnson(m, 2)))
        assert d.n == m * (m - 1) // 2


def test_johnson_rejects():
    with pytest.raises(ValueError):
        johnson(3, 2)
    with pytest.raises(ValueError):
        johnson(4, 0)


# -- fixed graphs ------------------------------------------------------------


def test_icosahedron():
    g = icosahedron()
    assert g.n == 12 and g.edge_count == 30
    assert g.is_regular() and g.degrees()[0] == 5
    d = icosahedron_descriptor()
    assert exact_entries(d) == (
        (Quadratic(5), 1),
        (Quadratic.sqrt(5), 3),
        (Quadratic(-1), 5),
        (-Quadratic.sqrt(5), 3),
    )


def test_corrupted_exact_spectrum_rejected():
    g = icosahedron()
    bad = [(Quadratic(5), 1), (Quadratic.sqrt(5), 3), (Quadratic(-1), 8)]
    with pytest.raises(ValueError):
        explicit_descriptor(g, "broken", bad)


def test_petersen():
    g = petersen()
    assert g.n == 10 and g.edge_count == 15 and g.triangle_count() == 0
    d = petersen_descriptor()
    assert exact_entries(d) == ((Quadratic(3), 1), (Quadratic(1), 5), (Quadratic(-2), 4))


# -- paley ---------------------------------------------------------------------


def test_paley_prime():
    for q in (5, 13, 17):
        g = paley(q)
        assert g.n == q
        assert g.is_regular() and g.degrees()[0] == (q - 1) // 2
        d = paley_descriptor(q)
        assert d.spectrum.allclose(eigen_spectrum(g))


def test_paley_9():
    d = paley_descriptor(9)
    assert d.n == 9
    assert exact_entries(d) == ((Quadratic(4), 1), (Quadratic(1), 4), (Quadratic(-2), 4))
    assert isinstance(d.provenance, Explicit)


def test_paley_13_conference_values():
    d = paley_descriptor(13)
    theta = Quadratic(Fraction(-1, 2), Fraction(1, 2), 13)
    tau = Quadratic(Fraction(-1, 2), Fraction(-1, 2), 13)
    assert exact_entries(d) == ((Quadratic(6), 1), (theta, 6), (tau, 6))


def test_paley_5_is_pentagon():
    # residues mod 5 are {1, 4}, the cycle steps
    from blowup.graphs import cycle

    assert paley(5) == cycle(5)


def test_paley_rejects():
    with pytest.raises(ValueError, match="prime"):
        paley(7)  # 7 = 3 mod 4
    with pytest.raises(ValueError, match="prime"):
        paley(15)  # not a prime power we support


# -- srg ----------------------------------------------------------------------


def test_srg_counting_identity_enforced():
    with pytest.raises(InfeasibleSrgParameters):
        SrgParams(10, 3, 1, 1)


def test_srg_integer_spectra():
    cases = {
        (9, 4, 1, 2): ((4, 1), (1, 4), (-2, 4)),
        (10, 3, 0, 1): ((3, 1), (1, 5), (-2, 4)),
        (57, 24, 11, 9): ((24, 1), (5, 18), (-3, 38)),
        (125, 72, 45, 36): ((72, 1), (12, 20), (-3, 104)),
        (243, 132, 81, 60): ((132, 1), (24, 22), (-3, 220)),
    }
    for params, expect in cases.items():
        d = srg_spectrum(SrgParams(*params))
        assert exact_entries(d) == tuple((Quadratic(v), m) for v, m in expect)
        assert d.n == params[0]


def test_srg_moment_identities():
    for params in [(9, 4, 1, 2), (10, 3, 0, 1), (57, 24, 11, 9),
                   (125, 72, 45, 36), (243, 132, 81, 60), (13, 6, 2, 3)]:
        v, k = params[0], params[1]
        d = srg_spectrum(SrgParams(*params))
        total = Quadratic(0)
        first = Quadratic(0)
        second = Quadratic(0)
        for val, m in d.spectrum.entries:
            total = total + m
            first = first + val * m
            second = second + val * val * m
        assert total == Quadratic(v)
        assert first == Quadratic(0)
        assert second == Quadratic(v * k)


def test_srg_conference_rejections():
    # counting identity holds but the conference condition fails
    with pytest.raises(InfeasibleSrgParameters):
        srg_spectrum(SrgParams(13, 4, 1, 1))
    # square discriminant but fractional multiplicities
    with pytest.raises(InfeasibleSrgParameters):
        srg_spectrum(SrgParams(22, 7, 0, 3))


# -- drg -----------------------------------------------------------------------


def test_intersection_array_validation():
    with pytest.raises(InfeasibleIntersectionArray):
        IntersectionArray((3, 2), (2, 1))  # c1 != 1
    with pytest.raises(InfeasibleIntersectionArray):
        IntersectionArray((2, 3), (1, 1))  # b increasing
    with pytest.raises(InfeasibleIntersectionArray):
        IntersectionArray((3, 2), (1, 0))  # c must stay positive
    arr = IntersectionArray((3, 2), (1, 1))
    assert arr.n == 10
    assert arr.valencies() == (1, 3, 6)
    assert arr.name() == "drg:3,2;1,1"


def test_drg_petersen_matches_srg():
    # diameter 2: {k, k-lambda-1; 1, mu} must agree with the srg route
    from_arr = drg_spectrum(IntersectionArray((3, 2), (1, 1)))
    from_srg = srg_spectrum(SrgParams(10, 3, 0, 1))
    assert exact_entries(from_arr) == exact_entries(from_srg)


def test_drg_gosset():
    d = gosset_descriptor()
    assert d.name == "gosset"
    assert d.n == 56
    assert exact_entries(d) == (
        (Quadratic(27), 1),
        (Quadratic(9), 7),
        (Quadratic(-1), 27),
        (Quadratic(-3), 21),
    )


def test_drg_quadratic_branch_c5():
    # pentagon {2,1;1,1}: eigenvalues 2 and (-1 +- sqrt5)/2
    d = drg_spectrum(IntersectionArray((2, 1), (1, 1)))
    assert d.n == 5
    theta = Quadratic(Fraction(-1, 2), Fraction(1, 2), 5)
    tau = Quadratic(Fraction(-1, 2), Fraction(-1, 2), 5)
    assert exact_entries(d) == ((Quadratic(2), 1), (theta, 2), (tau, 2))


def test_drg_float_branch_c7():
    # heptagon {2,1,1;1,1,1}: minimal polynomial of degree 3, floats expected
    d = drg_spectrum(IntersectionArray((2, 1, 1), (1, 1, 1)))
    assert d.n == 7
    assert not d.spectrum.is_exact
    expect = sorted((2 * math.cos(2 * math.pi * j / 7) for j in range(7)), reverse=True)
    assert np.allclose(d.spectrum.float_values(), expect, atol=1e-8)


def test_drg_complete_graph_array():
    d = drg_spectrum(IntersectionArray((4,), (1,)))
    assert exact_entries(d) == ((Quadratic(4), 1), (Quadratic(-1), 4))


def test_drg_johnson_7_2_array():
    # J(7,2) as a distance regular graph: {10, 4; 1, 4}
    d = drg_spectrum(IntersectionArray((10, 4), (1, 4)))
    assert exact_entries(d) == exact_entries(johnson_descriptor(7, 2))


# -- asserted row -----------------------------------------------------------------


def test_taylor_co3():
    d = taylor_co3_descriptor()
    assert d.n == 552
    assert isinstance(d.provenance, Asserted)
    assert d.spectrum.kth(24) == Quadratic(55)
    assert d.spectrum.trace_is_zero()
    # regular of degree 275: second moment equals n * k
    second = sum(float(v) ** 2 * m for v, m in d.spectrum.entries)
    assert second == 552 * 275


# -- composition ------------------------------------------------------------------


def test_union_descriptor_explicit():
    d = union_descriptor(petersen_descriptor(), complete_descriptor(3))
    assert d.n == 13
    assert isinstance(d.provenance, Explicit)
    assert d.spectrum.kth(1) == Quadratic(3)
    assert d.spectrum.kth(2) == Quadratic(2)


def test_union_descriptor_asserted_operand():
    srg = srg_spectrum(SrgParams(57, 24, 11, 9))
    d = union_descriptor(srg, complete_descriptor(2))
    assert d.n == 59
    assert isinstance(d.provenance, Asserted)
    assert d.spectrum.kth(1) == Quadratic(24)


def test_complement_descriptor():
    # complement spectra come from the eigensolver, so values are floats
    d = complement_descriptor(complete_descriptor(4))
    assert float(d.spectrum.kth(1)) == pytest.approx(0.0, abs=1e-10)
    assert isinstance(d.provenance, Explicit)
    with pytest.raises(ValueError):
        complement_descriptor(srg_spectrum(SrgParams(57, 24, 11, 9)))


def test_blowup_descriptor():
    d = blowup_descriptor(cycle_descriptor(5), 2)
    assert d.n == 10
    assert isinstance(d.provenance, Explicit)
    assert d.spectrum.kth(1) == Quadratic(5)


# -- grammar -----------------------------------------------------------------------


def test_parse_named_families():
    assert parse_expression("complete:5").n == 5
    assert parse_expression("cycle:6").n == 6
    assert parse_expression("johnson:6,2").n == 15
    assert parse_expression("paley:9").n == 9
    assert parse_expression("petersen").n == 10
    assert parse_expression("icosahedron").n == 12
    assert parse_expression("gosset").n == 56
    assert parse_expression("srg:57,24,11,9").n == 57
    assert parse_expression("drg:27,10,1;1,10,27").n == 56


def test_parse_g6():
    s = g6_encode(petersen())
    d = parse_expression(f"g6:{s}")
    assert d.n == 10
    assert d.spectrum.allclose(petersen_descriptor().spectrum)


def test_parse_operators():
    d = parse_expression("union:complete:3+complete:3")
    assert d.n == 6
    assert d.spectrum.kth(2) == Quadratic(2)
    d = parse_expression("complement:complete:4")
    assert float(d.spectrum.kth(1)) == pytest.approx(0.0, abs=1e-10)
    d = parse_expression("blowup:petersen,2")
    assert d.n == 20
    d = parse_expression("union:blowup:complete:2,2+petersen")
    assert d.n == 14


def test_parse_errors_have_positions():
    for text, frag in [
        ("", "empty"),
        ("nosuch:5", "unknown"),
        ("johnson:x,2", "integer"),
        ("complete:", "integer"),
        ("srg:9,4,1", "srg"),
        ("blowup:petersen", "blowup"),
        ("union:petersen", "union"),
        ("g6:B", "graph6"),
    ]:
        with pytest.raises(GraphParseError) as ei:
            parse_expression(text)
        assert frag.lower() in str(ei.value).lower(), (text, str(ei.value))
    # syntactically fine but out of a constructor's domain: plain ValueError
    # naming the constraint
    with pytest.raises(ValueError, match="n >= 3"):
        parse_expression("cycle:2")


def test_parse_offset_points_into_text():
    with pytest.raises(GraphParseError) as ei:
        parse_expression("union:complete:3+johnson:z,2")
    msg = str(ei.value)
    assert "offset" in msg
    # 'z' sits at index 25 of the whole expression
    assert "(at offset 25)" in msg
