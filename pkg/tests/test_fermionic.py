import itertools

import pytest

from krfermion.fermionic import (
    Decomposition,
    FactorList,
    KRFactor,
    config_weight_term,
    fermionic_decomposition,
    fermionic_multiplicity,
    fermionic_multiplicity_by_enumeration,
    scan_bound,
    vacancy,
)
from krfermion.lie import InputError, LieType, Weight, build_root_system, dominant_weights_below
from krfermion.partitions import EMPTY_PARTITION, NuConfig, PartitionMult, enumerate_configs


def rs_of(name):
    return build_root_system(LieType.parse(name))


def dec_of(name, pairs):
    rs = rs_of(name)
    return fermionic_decomposition(rs, FactorList.of(rs, pairs))


def coords_map(dec):
    return {w.coords: m for w, m in dec.entries}


def test_factor_list_validation():
    rs = rs_of("A2")
    with pytest.raises(InputError):
        FactorList.of(rs, [(3, 1)])
    with pytest.raises(InputError):
        FactorList.of(rs, [(1, -1)])
    with pytest.raises(InputError):
        FactorList.parse(rs, "1;2")
    fl = FactorList.parse(rs, "1:1,2:3")
    assert fl.factors == (KRFactor(1, 1), KRFactor(2, 3))
    assert fl.top_weight() == Weight((1, 3))


def one_part(n):
    return PartitionMult(((n, 1),))


def test_vacancy_examples():
    a1 = rs_of("A1")
    fl = FactorList.of(a1, [(1, 2)])
    cfg = NuConfig((one_part(1),))
    assert vacancy(a1, fl, cfg, 1, 1) == -1

    b3 = rs_of("B3")
    fl = FactorList.of(b3, [(2, 3)])
    empty = NuConfig((EMPTY_PARTITION,) * 3)
    for n in (1, 2, 3):
        assert vacancy(b3, fl, empty, 2, n) == n

    a2 = rs_of("A2")
    fl = FactorList.of(a2, [(1, 1), (2, 1)])
    cfg = NuConfig((one_part(1), one_part(1)))
    assert vacancy(a2, fl, cfg, 1, 1) == 0
    assert vacancy(a2, fl, cfg, 2, 1) == 0


def test_vacancy_stabilizes():
    for name, pairs in [("B3", [(3, 2)]), ("C3", [(2, 2)]), ("G2", [(1, 3)])]:
        rs = rs_of(name)
        fl = FactorList.of(rs, pairs)
        top = fl.top_weight()
        for mu in dominant_weights_below(rs, top)[:4]:
            eta = top - mu
            from krfermion.lie import weight_minus_in_roots

            nv = weight_minus_in_roots(rs, top, mu)
            for cfg in itertools.islice(enumerate_configs(nv.coords), 5):
                bound = scan_bound(fl, cfg)
                for k in range(1, rs.rank + 1):
                    assert (vacancy(rs, fl, cfg, k, bound)
                            == vacancy(rs, fl, cfg, k, bound + 5))


def test_config_weight_term_examples():
    a2 = rs_of("A2")
    fl = FactorList.of(a2, [(1, 1), (2, 1)])
    empty = NuConfig((EMPTY_PARTITION, EMPTY_PARTITION))
    assert config_weight_term(a2, fl, empty, Weight((1, 1))) == 1
    cfg = NuConfig((one_part(1), one_part(1)))
    assert config_weight_term(a2, fl, cfg, Weight((0, 0))) == 1

    a1 = rs_of("A1")
    fl1 = FactorList.of(a1, [(1, 2)])
    assert config_weight_term(a1, fl1, NuConfig((one_part(1),)), Weight((0,))) == 0

    with pytest.raises(InputError):
        config_weight_term(a1, fl1, NuConfig((one_part(2),)), Weight((2,)))


def test_multiplicity_basics():
    a1 = rs_of("A1")
    fl = FactorList.of(a1, [(1, 2)])
    assert fermionic_multiplicity(a1, fl, Weight((2,))) == 1
    assert fermionic_multiplicity(a1, fl, Weight((0,))) == 0
    assert fermionic_multiplicity(a1, fl, Weight((4,))) == 0
    with pytest.raises(InputError):
        fermionic_multiplicity(a1, fl, Weight((-1,)))

    a2 = rs_of("A2")
    fl2 = FactorList.of(a2, [(1, 1), (2, 1)])
    assert fermionic_multiplicity(a2, fl2, Weight((0, 0))) == 1


def test_decomposition_examples():
    assert coords_map(dec_of("B3", [(2, 0)])) == {(0, 0, 0): 1}
    assert coords_map(dec_of("B3", [(2, 1)])) == {(0, 1, 0): 1, (0, 0, 0): 1}
    assert coords_map(dec_of("C3", [(2, 2)])) == {(0, 2, 0): 1, (2, 0, 0): 1, (0, 0, 0): 1}
    # spin chain of odd bottom: no trivial summand
    assert coords_map(dec_of("B3", [(3, 2)])) == {(0, 0, 2): 1, (1, 0, 0): 1}
    assert coords_map(dec_of("A2", [(1, 1), (2, 1)])) == {(1, 1): 1, (0, 0): 1}


def test_type_a_single_factor_irreducible():
    for name in ("A1", "A2", "A3"):
        rs = rs_of(name)
        for i in range(1, rs.rank + 1):
            for m in range(0, 4):
                dec = fermionic_decomposition(rs, FactorList.of(rs, [(i, m)]))
                assert dec == Decomposition(
                    ((rs.fundamental_weight(i).scale(m), 1),))


def test_single_factor_multiplicity_free_classical():
    for name in ("B2", "B3", "C3", "D4"):
        rs = rs_of(name)
        for i in range(1, rs.rank + 1):
            for m in (1, 2):
                dec = fermionic_decomposition(rs, FactorList.of(rs, [(i, m)]))
                assert all(mult == 1 for _, mult in dec.entries)


def test_factor_permutation_invariance():
    rs = rs_of("B2")
    a = fermionic_decomposition(rs, FactorList.of(rs, [(1, 1), (2, 2)]))
    b = fermionic_decomposition(rs, FactorList.of(rs, [(2, 2), (1, 1)]))
    assert a == b


def test_sum_order_independence():
    rs = rs_of("C2")
    fl = FactorList.of(rs, [(1, 2), (2, 1)])
    top = fl.top_weight()
    from krfermion.lie import weight_minus_in_roots

    for mu in dominant_weights_below(rs, top):
        nv = weight_minus_in_roots(rs, top, mu)
        terms = [config_weight_term(rs, fl, cfg, mu)
                 for cfg in enumerate_configs(nv.coords)]
        assert sum(terms) == sum(reversed(terms)) == fermionic_multiplicity(rs, fl, mu)


@pytest.mark.parametrize("name,pairs", [
    ("B2", [(2, 3)]), ("B3", [(3, 3)]), ("C3", [(2, 2)]), ("D4", [(2, 2)]),
    ("G2", [(1, 3)]), ("G2", [(2, 2)]), ("F4", [(4, 2)]),
    ("B2", [(1, 1), (2, 2)]), ("A3", [(2, 2), (2, 1)]),
])
def test_fast_path_matches_enumeration(name, pairs):
    rs = rs_of(name)
    fl = FactorList.of(rs, pairs)
    for mu in dominant_weights_below(rs, fl.top_weight()):
        assert (fermionic_multiplicity(rs, fl, mu)
                == fermionic_multiplicity_by_enumeration(rs, fl, mu))


def test_level_zero_factors():
    assert coords_map(dec_of("D4", [(2, 0)])) == {(0, 0, 0, 0): 1}
    assert coords_map(dec_of("B2", [(1, 0), (2, 1)])) == {(0, 1): 1}


def test_decomposition_container():
    w0, w1 = Weight((0, 0)), Weight((1, 0))
    d = Decomposition(((w0, 1), (w1, 2), (w0, 3)))
    assert d.as_dict() == {w0: 4, w1: 2}
    assert d.multiplicity(Weight((9, 9))) == 0
    assert Decomposition(((w0, 0),)) == Decomposition(())
