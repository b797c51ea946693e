import pytest

from skewlagrange.linalg import LinearSystem, nullspace, rank, rref, solve_affine
from skewlagrange.onesided import OneSidedProblem
from skewlagrange.oracle import (
    RandomInstances, build_system, left_vandermonde_rank, oracle_interpolate, oracle_minimal_degree,
    poly_to_vector, seed_from_env, shift_rows, solution_polys, stream, vector_to_poly,
)
from skewlagrange.scalars import I, J, K
from skewlagrange.twosided import TwoSidedProblem

from conftest import q


def test_rref_and_nullspace():
    m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    rows, pivots = rref(m, 3)
    assert pivots == [0, 1] and rank(m, 3) == 2
    for v in nullspace(m, 3):
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in m)


def test_affine_solve_and_inconsistency():
    sol = solve_affine([[1, 1], [1, -1]], [2, 0], 2)
    assert sol.particular == (1, 1) and sol.dimension == 0
    assert solve_affine([[1, 1], [1, 1]], [1, 2], 2).is_empty
    system = LinearSystem(2)
    system.add_row([1, 1], 3)
    res = system.solve()
    assert res.dimension == 1 and res.contains([0, 3]) and not res.contains([0, 0])


def test_vector_round_trip(gen):
    f = gen.poly(3)
    assert vector_to_poly(poly_to_vector(f, 4)) == f


def test_shift_rows_match_shift(gen):
    for _ in range(5):
        f, a, b = gen.poly(3), gen.quaternion(), gen.quaternion()
        rows = shift_rows(a, b, 4)
        v = poly_to_vector(f, 4)
        got = [sum(x * y for x, y in zip(r, v)) for r in rows]
        assert tuple(got) == f.shift_left(a).eval_right(b).coords()


def test_oracle_golden_dimension():
    p = TwoSidedProblem.from_lists([I], [1], [q("1+j")], [0])
    particular, basis = solution_polys(oracle_interpolate(p, 2))
    assert str(particular) == "(4/5+3/5*i+2/5*j-1/5*k) + (-3/5-1/5*i+1/5*j+2/5*k) z"
    assert basis == []


def test_oracle_one_sided_and_shift_conditions():
    p = OneSidedProblem.from_lists("left", [I, J], [1, 0])
    assert oracle_interpolate(p, 2).dimension == 0
    assert oracle_interpolate(p, 3).dimension == 4
    system = build_system([(I, 1)], [(q("1+j"), 0)], 2, [(I, q("1+j"), q("-3/5-1/5*i+1/5*j+2/5*k"))])
    assert system.solve().dimension == 0
    with pytest.raises(ValueError):
        build_system(degree_bound=-1)


def test_minimal_degree_and_rank():
    assert oracle_minimal_degree([I, J, K]) == 2
    assert left_vandermonde_rank([I, J, K]) == 8
    assert oracle_minimal_degree([]) == 0


def test_random_instances_are_seeded():
    a, b = RandomInstances(7), RandomInstances(7)
    assert [a.quaternion() for _ in range(5)] == [b.quaternion() for _ in range(5)]
    assert list(stream(3, count=4)) == list(stream(3, count=4))
    nodes = RandomInstances(1).independent_set(4, "left")
    assert len(set(nodes)) == 4


def test_seed_from_env(monkeypatch):
    monkeypatch.delenv("SKEWLAGRANGE_SEED", raising=False)
    assert seed_from_env(5) == 5
    monkeypatch.setenv("SKEWLAGRANGE_SEED", "42")
    assert seed_from_env() == 42 and RandomInstances().seed == 42
    monkeypatch.setenv("SKEWLAGRANGE_SEED", "x")
    with pytest.raises(ValueError):
        seed_from_env()
