import json
import math
import os

import pytest

import tensorforge as tf

DATA = os.environ.get("TF_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def load(name):
    with open(os.path.join(DATA, name)) as f:
        return json.load(f)


def test_matmul_tensor_shape():
    t = tf.matmul_tensor(2)
    assert t["shape"] == [4, 4, 4]
    assert len(t["entries"]) == 8
    assert tf.multilinear_rank(t) == [4, 4, 4]


def test_strassen_verifies():
    t = tf.matmul_tensor(2, transposed_third=True)
    d = load("strassen7.json")
    assert tf.verify_decomposition(t, d)
    bad = dict(d, terms=d["terms"][:-1])
    assert not tf.verify_decomposition(t, bad)


def test_omega_bound():
    assert abs(tf.omega_bound(2, 7) - math.log2(7)) < 1e-12


def test_kronecker_law():
    m2 = tf.matmul_tensor(2)
    assert tf.kronecker(m2, m2) == tf.matmul_tensor(4)


def test_classify_222_wstate():
    w = {
        "shape": [2, 2, 2],
        "entries": [["1", [0, 0, 1]], ["1", [0, 1, 0]], ["1", [1, 0, 0]]],
    }
    cls = tf.classify_222(w)
    assert cls["class"] == "Wclass"
    assert cls["complex_rank"] == 3
    assert cls["det"] == "0"


def test_castling():
    rep = tf.classify_castling([2, 4, 4])
    assert rep["prehomogeneous"] == "no"
    rep = tf.classify_castling([2, 3, 3])
    assert rep["prehomogeneous"] == "yes"
    assert rep["finite_orbits"] == "yes"


def test_waring():
    assert tf.hilbert_function({"vars": 3, "degree": 3, "terms": [{"exp": [1, 1, 1]}]}) == [1, 3, 3, 1]
    assert tf.waring_rank_monomial([1, 1, 1]) == 4
    xy2 = {"vars": 2, "degree": 3, "terms": [{"exp": [1, 2], "coeff": "1"}]}
    assert tf.waring_rank_binary(xy2) == 3


def test_degeneration_wstate():
    w = {
        "shape": [2, 2, 2],
        "entries": [["1", [0, 0, 1]], ["1", [0, 1, 0]], ["1", [1, 0, 0]]],
    }
    wit = {
        "q": 1,
        "shape": [2, 2, 2],
        "terms": [
            {"vectors": [[["1"], ["0", "1"]], [["1"], ["0", "1"]], [["1"], ["0", "1"]]]},
            {"vectors": [[["-1"], ["0"]], [["1"], ["0"]], [["1"], ["0"]]]},
        ],
    }
    assert tf.verify_degeneration(wit, w)
    d = tf.degeneration_to_rank(wit, w)
    assert len(d["terms"]) <= 8
    assert tf.verify_decomposition(w, d)


def test_tightness_and_fekete():
    m2 = tf.matmul_tensor(2)
    labels = tf.find_tight(m2)
    assert labels is not None
    assert tf.verify_tight(m2, labels)
    assert tf.fekete_bound([(1, 7), (2, 49)]) == pytest.approx(7.0)


def test_domain_error_maps_to_python():
    with pytest.raises(ArithmeticError):
        tf.hilbert_function({"vars": 2, "degree": 2, "terms": []})
