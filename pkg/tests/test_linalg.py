import random

from gmpy2 import mpq

from smallq import linalg
from smallq.cyclotomic import cyclo_field


def test_rank_and_kernel_rational():
    rows = [
        {0: mpq(1), 1: mpq(2), 2: mpq(3)},
        {0: mpq(2), 1: mpq(4), 2: mpq(6)},
        {1: mpq(1), 2: mpq(1)},
    ]
    assert linalg.span_rank(rows) == 2
    kernel = linalg.kernel_basis(rows, [0, 1, 2])
    assert len(kernel) == 1
    v = kernel[0]
    for row in rows:
        total = sum((row.get(k, mpq(0)) * v.get(k, mpq(0)) for k in (0, 1, 2)), mpq(0))
        assert total == 0


def test_span_operations():
    a = [{0: mpq(1), 1: mpq(1)}, {1: mpq(1)}]
    b = [{0: mpq(1)}, {2: mpq(1)}]
    assert linalg.in_span(a, {0: mpq(2), 1: mpq(5)})
    assert not linalg.in_span(a, {2: mpq(1)})
    inter = linalg.span_intersection(a, b)
    assert len(inter) == 1 and linalg.in_span([{0: mpq(1)}], inter[0])
    total = linalg.span_sum_basis(a, b)
    assert len(total) == 3
    assert linalg.span_equal(a, [{0: mpq(1)}, {1: mpq(3)}])
    assert not linalg.span_equal(a, b)


def test_solve_in_span():
    basis = [{0: mpq(1), 1: mpq(1)}, {1: mpq(1), 2: mpq(1)}]
    target = {0: mpq(2), 1: mpq(5), 2: mpq(3)}
    coeffs = linalg.solve_in_span(basis, target)
    assert coeffs == [mpq(2), mpq(3)]
    assert linalg.solve_in_span(basis, {0: mpq(1)}) is None


def test_kernel_over_cyclotomic_field():
    F = cyclo_field(5)
    q = F.q
    rows = [{0: q, 1: F.one}, {0: q * q, 1: q}]  # rank 1
    kernel = linalg.kernel_basis(rows, [0, 1])
    assert len(kernel) == 1
    v = kernel[0]
    assert q * v.get(0, F.zero) + v.get(1, F.zero) == F.zero


def test_random_consistency_rational():
    rng = random.Random(7)
    for _ in range(20):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        rows = [
            {j: mpq(rng.randint(-3, 3)) for j in range(m) if rng.random() < 0.7}
            for _ in range(n)
        ]
        rows = [{k: v for k, v in r.items() if v} for r in rows]
        rank = linalg.span_rank(rows)
        kernel = linalg.kernel_basis(rows, list(range(m)))
        assert rank + len(kernel) == m
        for v in kernel:
            for row in rows:
                s = sum((row.get(k, mpq(0)) * v.get(k, mpq(0)) for k in range(m)), mpq(0))
                assert s == 0
