import json
from fractions import Fraction

import pytest

from snarkflow.families import (complete_bipartite, complete_graph, flower_snark,
                                goldberg, petersen, reduced_goldberg)
from snarkflow.flows import (BridgeError, FlowCertificate, FlowError,
                             edge_pair_parity, extended_block_parity,
                             find_integer_flow, flow_candidate_ladder,
                             integer_to_circular, phi_via_flows,
                             three_edge_color, verify_circular_flow)
from snarkflow.graphs import Graph

from util import prism, wagner


def test_verify_rejects_zero_values():
    g = complete_graph(4)
    cert = FlowCertificate(Fraction(4), tuple(g.edges), tuple(Fraction(0) for _ in g.edges))
    bad = verify_circular_flow(g, cert)
    assert bad is not None and bad.kind == "range"


def test_verify_orientation_representation():
    g = complete_graph(4)
    f = find_integer_flow(g, 4, 1)
    cert = integer_to_circular(f)
    assert verify_circular_flow(g, cert) is None
    # flip + negate + renormalize is the identity on certificates, so the
    # renormalized form still verifies; a bare flip breaks conservation
    flipped = FlowCertificate(
        cert.r,
        ((cert.orientation[0][1], cert.orientation[0][0]),) + cert.orientation[1:],
        cert.values)
    bad = verify_circular_flow(g, flipped)
    assert bad is not None and bad.kind == "conservation"


def test_find_flow_k4():
    f = find_integer_flow(complete_graph(4), 4, 1)
    assert f is not None
    assert all(1 <= v <= 3 for v in f.values)
    assert verify_circular_flow(complete_graph(4), integer_to_circular(f)) is None


def test_bipartite_cubic_has_3_flow():
    g = complete_bipartite(3, 3)
    f = find_integer_flow(g, 3, 1)
    assert f is not None
    assert all(v in (1, 2) for v in f.values)


def test_petersen_none_below_5():
    g = petersen().graph
    assert find_integer_flow(g, 9, 2) is None
    assert find_integer_flow(g, 5, 1) is not None


def test_bridge_raises_distinct_error():
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)])
    with pytest.raises(BridgeError):
        find_integer_flow(g, 5, 1)


def test_bad_parameters_rejected():
    g = complete_graph(4)
    with pytest.raises(FlowError):
        find_integer_flow(g, 4, 2)  # gcd 2
    with pytest.raises(FlowError):
        find_integer_flow(g, 4, 3)  # p <= 2q


def test_monotone_in_r():
    # if a flow exists at p/q it exists at every larger candidate
    for g in (complete_graph(4), prism(), wagner()):
        results = []
        for r in (Fraction(7, 2), Fraction(4), Fraction(9, 2), Fraction(5)):
            results.append(find_integer_flow(g, r.numerator, r.denominator) is not None)
        assert results == sorted(results)


def test_integer_to_circular_scaling():
    f = find_integer_flow(petersen().graph, 5, 1)
    cert = integer_to_circular(f)
    assert cert.values == tuple(Fraction(v) for v in f.values)
    f2 = find_integer_flow(complete_graph(4), 9, 2)
    cert2 = integer_to_circular(f2)
    assert cert2.r == Fraction(9, 2)
    assert all(1 <= v <= cert2.r - 1 for v in cert2.values)
    assert min(cert2.values) >= 1 and max(cert2.values) <= Fraction(7, 2)


def test_flow_candidate_ladder():
    ladder = flow_candidate_ladder(3)
    assert ladder[0] == Fraction(7, 3)
    assert ladder[-1] == Fraction(6)
    assert Fraction(5, 2) in ladder and Fraction(4) in ladder
    assert all(ladder[i] < ladder[i + 1] for i in range(len(ladder) - 1))


def test_phi_via_flows_small():
    assert phi_via_flows(complete_bipartite(3, 3))[0] == 3
    assert phi_via_flows(complete_graph(4))[0] == 4
    assert phi_via_flows(prism())[0] == 4  # non-bipartite but 3-edge-colourable


def test_three_edge_color():
    col = three_edge_color(complete_graph(4))
    assert col is not None
    for v in range(4):
        incident = [col[k] for k, e in enumerate(complete_graph(4).edges) if v in e]
        assert sorted(incident) == [1, 2, 3]
    assert three_edge_color(petersen().graph) is None
    assert three_edge_color(goldberg(1).graph) is None
    with pytest.raises(FlowError):
        three_edge_color(Graph(2, [(0, 1)]))


def test_goldberg2_not_3_edge_colorable():
    assert three_edge_color(goldberg(2).graph) is None


def test_certificate_json_roundtrip():
    f = find_integer_flow(petersen().graph, 5, 1)
    cert = integer_to_circular(f)
    text = cert.to_json()
    doc = json.loads(text)
    assert set(doc) == {"r", "orientation", "values"}
    assert doc["r"] == "5/1"
    back = FlowCertificate.from_json(text)
    assert back == cert


def test_extended_block_parity_holds():
    lg = reduced_goldberg(1)
    assert extended_block_parity(lg, 0)
    lg5 = reduced_goldberg(2)
    assert extended_block_parity(lg5, 2)


def test_parity_control_gadget_fails():
    # square gadget between the interface edges: colours propagate straight
    # through, so "left equal iff right unequal" cannot hold
    g = Graph(8, [(0, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5), (4, 6), (5, 7)])
    assert not edge_pair_parity(
        g, list(range(8)),
        ((0, 2), (1, 3)),
        ((4, 6), (5, 7)),
    )


def test_phi_flows_goldberg_point_checks():
    g = goldberg(1).graph
    f = find_integer_flow(g, 9, 2)
    assert f is not None
    cert = integer_to_circular(f)
    assert verify_circular_flow(g, cert) is None
    assert cert.r == Fraction(9, 2)
