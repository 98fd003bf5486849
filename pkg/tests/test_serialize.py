import json

import numpy as np
import pytest

import fincohom as fc
from fincohom import serialize as ser
from fincohom.haar import random_function


def roundtrip(obj_json):
    text = ser.dumps(obj_json)
    assert ser.dumps(json.loads(text)) == text
    return json.loads(text)


@pytest.mark.parametrize("G", [fc.cyclic(4), fc.symmetric(3), fc.dicyclic(2), fc.trivial_group()])
def test_group_roundtrip(G):
    d = roundtrip(ser.group_to_json(G))
    H = ser.group_from_json(d)
    assert np.array_equal(H.table, G.table)
    assert ser.dumps(ser.group_to_json(H)) == ser.dumps(d)


def test_module_and_cochain_roundtrip():
    G = fc.symmetric(3)
    M = fc.build_module((4,), G, {g: [[-1]] if G.element_order(g) == 2 else [[1]] for g in G.generators})
    d = roundtrip(ser.module_to_json(M))
    M2 = ser.module_from_json(d, G)
    assert np.array_equal(M2.matrices, M.matrices)
    f = fc.random_cochain(M, 2, np.random.default_rng(0))
    f2 = ser.cochain_from_json(roundtrip(ser.cochain_to_json(f)), M2)
    assert np.array_equal(f2.values, f.values)


def test_degree_zero_key():
    M = fc.trivial_module(fc.cyclic(2), 3)
    d = ser.cochain_to_json(fc.cochain(M, 0, [2]))
    assert d == {"degree": 0, "values": {"()": [2]}}
    assert ser.cochain_from_json(d, M)() == (2,)


def test_incomplete_cochain_rejected():
    M = fc.trivial_module(fc.cyclic(2), 2)
    with pytest.raises(fc.ValidationError, match="all 4"):
        ser.cochain_from_json({"degree": 2, "values": {"(0,0)": [1]}}, M)
    with pytest.raises(fc.ValidationError, match="malformed"):
        ser.cochain_from_json({"degree": 1, "values": {"0": [1], "(1)": [0]}}, M)


def test_extension_roundtrip():
    M = fc.trivial_module(fc.cyclic(2), 2)
    F = fc.cohomology(M, 2).representatives[0]
    d = roundtrip(ser.extension_input_to_json(F))
    F2 = ser.extension_input_from_json(d)
    assert np.array_equal(F2.values, F.values)
    out = ser.extension_to_json(fc.build_extension(F2), F2)
    assert len(out["E"]["elements"]) == 4


def test_ses_roundtrip():
    G = fc.cyclic(2)
    S = fc.make_ses(fc.trivial_module(G, 2), fc.trivial_module(G, 4), fc.trivial_module(G, 2), [[2]], [[1]])
    d = roundtrip(ser.ses_to_json(S))
    S2 = ser.ses_from_json(d, G)
    assert S2.section == S.section
    assert ser.dumps(ser.ses_to_json(S2)) == ser.dumps(d)


def test_group_function_roundtrip():
    G = fc.symmetric(3)
    f = random_function(G, np.random.default_rng(1))
    g = ser.group_function_from_json(roundtrip(ser.group_function_to_json(f)), G)
    assert g == f
    with pytest.raises(fc.ValidationError):
        ser.group_function_from_json({"values": {"nope": "1"}}, G)
    with pytest.raises(fc.ValidationError):
        ser.group_function_from_json({"values": {str(G.elements[0]): "1/0"}}, G)


def test_lie_roundtrip():
    for L in (fc.sl2(), fc.heisenberg(), fc.abelian_lie(2)):
        d = roundtrip(ser.lie_to_json(L))
        L2 = ser.lie_from_json(d)
        assert L2.constants == L.constants
        V = fc.adjoint_module(L)
        V2 = ser.lie_module_from_json(roundtrip(ser.lie_module_to_json(V)), L2)
        assert V2.rep == V.rep


def test_missing_keys():
    with pytest.raises(fc.ValidationError, match="missing key 'table'"):
        ser.group_from_json({"elements": ["0"]})
    with pytest.raises(fc.ValidationError, match="must be a JSON object"):
        ser.lie_from_json([1, 2])
