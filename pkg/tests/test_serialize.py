import numpy as np
import pytest

from clifftest import densesim, serialize


def test_matrix_text_roundtrip():
    rng = np.random.default_rng(1)
    for _ in range(20):
        M = rng.integers(0, 2, (rng.integers(1, 6), rng.integers(1, 6)))
        M = M.astype(np.uint8)
        assert np.array_equal(serialize.matrix_from_text(serialize.matrix_to_text(M)), M)


def test_matrix_text_format():
    M = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint8)
    assert serialize.matrix_to_text(M) == "101\n011"
    assert serialize.matrix_to_json(M) == ["101", "011"]


def test_matrix_text_rejects_bad_rows():
    with pytest.raises(ValueError):
        serialize.matrix_from_text("10\n1")
    with pytest.raises(ValueError):
        serialize.matrix_from_text("102")
    with pytest.raises(ValueError):
        serialize.matrix_from_text("")


def test_unitary_json_roundtrip():
    rng = np.random.default_rng(3)
    for n in (1, 2):
        U = densesim.haar_unitary(n, rng)
        obj = serialize.unitary_to_json(U)
        assert obj["n"] == n
        V = serialize.unitary_from_json(obj)
        assert np.allclose(U, V, atol=1e-12)


def test_unitary_json_checks_declared_n():
    obj = serialize.unitary_to_json(np.eye(2, dtype=complex))
    obj["n"] = 2
    with pytest.raises(ValueError):
        serialize.unitary_from_json(obj)


def test_chardist_csv_state_rows():
    psi = np.array([1.0, 1.0]) / np.sqrt(2)
    csv_text = serialize.char_dist_to_csv(densesim.char_dist_state(psi))
    lines = csv_text.strip().splitlines()
    assert lines[0] == "label,probability"
    assert len(lines) - 1 == 4  # 2^{2n} rows for a state table
    labels = [ln.split(",")[0] for ln in lines[1:]]
    assert labels == ["0|0", "0|1", "1|0", "1|1"]


def test_chardist_csv_probabilities_sum():
    rng = np.random.default_rng(5)
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    psi /= np.linalg.norm(psi)
    csv_text = serialize.char_dist_to_csv(densesim.char_dist_state(psi))
    total = sum(float(ln.split(",")[1]) for ln in csv_text.strip().splitlines()[1:])
    assert abs(total - 1.0) < 1e-9


def test_chardist_csv_unitary_rows():
    d = densesim.char_dist_unitary(np.eye(2, dtype=complex))
    lines = serialize.char_dist_to_csv(d).strip().splitlines()
    assert len(lines) - 1 == 16
    assert lines[1].startswith("0|0:0|0,")
