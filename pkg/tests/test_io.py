import json

from hypothesis import given, settings

from dnlattice import io
from dnlattice.catalog import lattice_by_name
from dnlattice.checks import witness_for_export
from dnlattice.linalg import IntMatrix
from strategies import int_matrices


@settings(max_examples=200)
@given(int_matrices(bound=10 ** 30))
def test_matrix_round_trip(m):
    d = json.loads(json.dumps(io.matrix_to_dict(m)))
    assert all(isinstance(x, str) for x in d["entries"])
    assert io.matrix_from_dict(d) == m


def test_lattice_round_trip(tmp_path):
    for name, n in (("mtilde_plus", 3), ("Rab", 2), ("dual:IG", 4)):
        lat = lattice_by_name(name, n)
        path = tmp_path / "lat.json"
        io.save_lattice(lat, path)
        back = io.load_lattice(path)
        assert back == lat and back.basis == lat.basis


def test_large_entries_survive():
    m = IntMatrix.from_rows([[2 ** 80, -(3 ** 60)]])
    assert io.matrix_from_dict(json.loads(io.dumps(io.matrix_to_dict(m)))) == m


def test_witness_export_fields():
    d = io.witness_to_dict(witness_for_export("3.4", 3))
    assert set(d) == {"source", "target", "matrix", "provenance"}
    assert d["provenance"].startswith("Theorem 3.4")
    assert d["matrix"]["rows"] == 5
