import pytest

from krfermion.fermionic import Decomposition
from krfermion.lie import InputError, LieType, Weight, build_root_system
from krfermion.rep_oracle import (
    decomposition_tensor,
    tensor_decompose,
    weight_multiplicities,
    weyl_dim,
)


def rs_of(name):
    return build_root_system(LieType.parse(name))


def test_weyl_dim_examples():
    a1 = rs_of("A1")
    for m in range(6):
        assert weyl_dim(a1, Weight((m,))) == m + 1
    assert weyl_dim(rs_of("G2"), Weight((0, 0))) == 1
    assert weyl_dim(rs_of("G2"), Weight((1, 0))) == 7
    assert weyl_dim(rs_of("G2"), Weight((0, 1))) == 14
    assert weyl_dim(rs_of("D4"), Weight((0, 1, 0, 0))) == 28
    assert weyl_dim(rs_of("B3"), Weight((0, 0, 1))) == 8
    assert weyl_dim(rs_of("E8"), Weight((0, 0, 0, 0, 0, 0, 0, 1))) == 248
    with pytest.raises(InputError):
        weyl_dim(a1, Weight((-2,)))


def test_weight_multiplicities_small():
    a1 = rs_of("A1")
    wm = weight_multiplicities(a1, Weight((2,)))
    assert wm.as_dict() == {Weight((2,)): 1, Weight((0,)): 1, Weight((-2,)): 1}
    a2 = rs_of("A2")
    adj = weight_multiplicities(a2, Weight((1, 1)))
    assert adj.multiplicity(Weight((0, 0))) == 2
    assert adj.total() == 8
    assert sum(1 for _, m in adj.entries if m == 1) == 6
    zero = weight_multiplicities(a2, Weight((0, 0)))
    assert zero.as_dict() == {Weight((0, 0)): 1}


@pytest.mark.parametrize("name,coords", [
    ("A2", (2, 1)), ("B2", (1, 1)), ("C3", (0, 1, 0)), ("G2", (1, 0)),
    ("G2", (0, 1)), ("D4", (0, 1, 0, 0)), ("F4", (0, 0, 0, 1)),
])
def test_freudenthal_mass(name, coords):
    rs = rs_of(name)
    lam = Weight(coords)
    assert weight_multiplicities(rs, lam).total() == weyl_dim(rs, lam)


@pytest.mark.parametrize("name,coords", [("B2", (1, 1)), ("G2", (1, 0)), ("A3", (1, 0, 1))])
def test_weight_map_reflection_stable(name, coords):
    rs = rs_of(name)
    wm = weight_multiplicities(rs, Weight(coords)).as_dict()
    for i in range(rs.rank):
        for w, m in wm.items():
            c = w.coords[i]
            img = Weight(tuple(w.coords[k] - c * rs.cartan[k][i]
                               for k in range(rs.rank)))
            assert wm.get(img) == m


def test_tensor_examples():
    a1 = rs_of("A1")
    assert tensor_decompose(a1, Weight((1,)), Weight((1,))).as_dict() == {
        Weight((2,)): 1, Weight((0,)): 1}
    a2 = rs_of("A2")
    assert tensor_decompose(a2, Weight((1, 0)), Weight((0, 1))).as_dict() == {
        Weight((1, 1)): 1, Weight((0, 0)): 1}
    # anything tensor trivial
    lam = Weight((2, 1))
    assert tensor_decompose(a2, lam, Weight((0, 0))).as_dict() == {lam: 1}
    with pytest.raises(InputError):
        tensor_decompose(a2, Weight((-1, 0)), Weight((0, 0)))


@pytest.mark.parametrize("name,a,b", [
    ("A2", (1, 0), (1, 1)), ("B2", (0, 1), (0, 1)), ("G2", (1, 0), (1, 0)),
    ("C3", (1, 0, 0), (0, 1, 0)), ("D4", (1, 0, 0, 0), (0, 0, 0, 1)),
])
def test_tensor_commutes_and_conserves_dimension(name, a, b):
    rs = rs_of(name)
    x, y = Weight(a), Weight(b)
    d1 = tensor_decompose(rs, x, y)
    d2 = tensor_decompose(rs, y, x)
    assert d1 == d2
    total = sum(m * weyl_dim(rs, w) for w, m in d1.entries)
    assert total == weyl_dim(rs, x) * weyl_dim(rs, y)
    assert all(m > 0 for _, m in d1.entries)


def test_g2_seven_squared():
    rs = rs_of("G2")
    seven = Weight((1, 0))
    dec = tensor_decompose(rs, seven, seven).as_dict()
    assert dec == {Weight((2, 0)): 1, Weight((0, 1)): 1, Weight((1, 0)): 1,
                   Weight((0, 0)): 1}


def test_decomposition_tensor():
    a1 = rs_of("A1")
    a = Decomposition(((Weight((1,)), 1),))
    assert decomposition_tensor(a1, a, a).as_dict() == {
        Weight((2,)): 1, Weight((0,)): 1}
    triv = Decomposition(((Weight((1, 1)), 2), (Weight((0, 0)), 1)))
    a2 = rs_of("A2")
    unit = Decomposition(((Weight((0, 0)), 1),))
    assert decomposition_tensor(a2, triv, unit) == triv

    b3 = rs_of("B3")
    lam2 = Weight((0, 1, 0))
    module = Decomposition(((lam2, 1), (Weight((0, 0, 0)), 1)))
    sq = decomposition_tensor(b3, module, module)
    assert sq.multiplicity(Weight((0, 2, 0))) == 1
    assert sq.multiplicity(lam2) >= 2


def test_decomposition_tensor_associative_sample():
    a2 = rs_of("A2")
    x = Decomposition(((Weight((1, 0)), 1),))
    y = Decomposition(((Weight((0, 1)), 1),))
    z = Decomposition(((Weight((1, 1)), 1),))
    left = decomposition_tensor(a2, decomposition_tensor(a2, x, y), z)
    right = decomposition_tensor(a2, x, decomposition_tensor(a2, y, z))
    assert left == right
