"""Exact sparse linear algebra over an arbitrary field.

Scalars only need +, -, *, / and truthiness (zero test); both
gmpy2.mpq and :class:`smallq.cyclotomic.CycloNum` qualify.  Vectors are
dicts mapping arbitrary hashable column keys to nonzero scalars, which
lets callers index coordinates directly by PBW monomials or weight
tuples instead of flattening.

The central object is :class:`SparseRREF`, an incremental fully reduced
row echelon form.  Everything else (rank, kernels, span comparisons,
coordinate solves) is built on it.  Coefficient blow-up is the caller's
problem; gmpy2 keeps it affordable at desk scale.
"""

from __future__ import annotations

__all__ = [
    "SparseRREF",
    "span_rank",
    "in_span",
    "span_equal",
    "span_sum_basis",
    "span_intersection",
    "kernel_basis",
    "solve_in_span",
]


class SparseRREF:
    """Incremental reduced row echelon form with dict rows.

    Rows are inserted one at a time; each insertion reduces against the
    current pivots and, if a new pivot appears, back-eliminates it from
    the stored rows, so the basis is always fully reduced.
    """

    def __init__(self):
        self.pivot_rows: dict = {}  # pivot column key -> row dict

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row: dict) -> dict:
        """Return row reduced against the current pivot rows."""
        row = {k: v for k, v in row.items() if v}
        for col in list(row.keys()):
            coeff = row.get(col)
            if not coeff:
                continue
            pivot = self.pivot_rows.get(col)
            if pivot is None:
                continue
            for k, v in pivot.items():
                cur = row.get(k)
                new = (cur - coeff * v) if cur is not None else -coeff * v
                if new:
                    row[k] = new
                else:
                    row.pop(k, None)
        return row

    def insert(self, row: dict):
        """Insert a row; return its pivot column, or None if dependent."""
        row = self.reduce(row)
        if not row:
            return None
        pivot_col = min(row.keys(), key=_key_order)
        inv = row[pivot_col]
        normalized = {k: v / inv for k, v in row.items()}
        # back-eliminate the new pivot column from the existing rows
        for col, prow in self.pivot_rows.items():
            c = prow.get(pivot_col)
            if c:
                for k, v in normalized.items():
                    cur = prow.get(k)
                    new = (cur - c * v) if cur is not None else -c * v
                    if new:
                        prow[k] = new
                    else:
                        prow.pop(k, None)
        self.pivot_rows[pivot_col] = normalized
        return pivot_col


def _key_order(key):
    # deterministic pivot choice for mixed key types
    return (repr(type(key)), repr(key))


def span_rank(vectors) -> int:
    rref = SparseRREF()
    for v in vectors:
        rref.insert(v)
    return rref.rank


def in_span(vectors, candidate) -> bool:
    rref = SparseRREF()
    for v in vectors:
        rref.insert(v)
    return not rref.reduce(candidate)


def span_equal(vec_a, vec_b) -> bool:
    vec_a, vec_b = list(vec_a), list(vec_b)
    rref = SparseRREF()
    for v in vec_a:
        rref.insert(v)
    rank_a = rref.rank
    if any(rref.reduce(v) for v in vec_b):
        return False
    return rank_a == span_rank(vec_b)


def span_sum_basis(vec_a, vec_b) -> list:
    """Basis (as reduced rows) of span(A) + span(B)."""
    rref = SparseRREF()
    for v in list(vec_a) + list(vec_b):
        rref.insert(v)
    return list(rref.pivot_rows.values())


def kernel_basis(rows, columns) -> list[dict]:
    """Kernel of the linear map whose constraint rows are given.

    `columns` fixes the full (ordered) list of unknown keys; the kernel
    vectors returned are dicts over those keys.
    """
    rref = SparseRREF()
    for row in rows:
        rref.insert(row)
    pivots = rref.pivot_rows
    free_cols = [c for c in columns if c not in pivots]
    basis = []
    for f in free_cols:
        vec = {f: _one_like(pivots, f)}
        for pcol, prow in pivots.items():
            c = prow.get(f)
            if c:
                vec[pcol] = -c
        basis.append(vec)
    return basis


def _one_like(pivots, _col):
    # scalar 1 deduced from any stored coefficient; falls back to int 1
    for prow in pivots.values():
        for v in prow.values():
            return v / v
    return 1


def span_intersection(vec_a, vec_b) -> list[dict]:
    """Basis of span(A) meet span(B).

    Solves sum a_i A_i = sum b_j B_j: the kernel of the stacked system
    in the (a, b) coefficients, mapped back through A.
    """
    vec_a, vec_b = list(vec_a), list(vec_b)
    ambient = set()
    for v in vec_a + vec_b:
        ambient.update(v.keys())
    rows = []
    for key in ambient:
        row = {}
        for i, v in enumerate(vec_a):
            c = v.get(key)
            if c:
                row[("a", i)] = c
        for j, v in enumerate(vec_b):
            c = v.get(key)
            if c:
                row[("b", j)] = -c
        if row:
            rows.append(row)
    columns = [("a", i) for i in range(len(vec_a))] + [
        ("b", j) for j in range(len(vec_b))
    ]
    result = []
    rref = SparseRREF()
    for coeffs in kernel_basis(rows, columns):
        vec: dict = {}
        for i, v in enumerate(vec_a):
            c = coeffs.get(("a", i))
            if c:
                for k, val in v.items():
                    cur = vec.get(k)
                    new = (cur + c * val) if cur is not None else c * val
                    if new:
                        vec[k] = new
                    else:
                        vec.pop(k, None)
        if vec and rref.insert(vec) is not None:
            result.append(vec)
    return result


def solve_in_span(basis, target):
    """Coefficients c with sum c_i basis_i = target, or None.

    The basis need not be independent; one solution is returned if the
    target lies in the span.
    """
    basis = list(basis)
    ambient = set(target.keys())
    for v in basis:
        ambient.update(v.keys())
    rref = SparseRREF()
    rows = []
    for key in ambient:
        row = {i: v[key] for i, v in enumerate(basis) if v.get(key)}
        t = target.get(key)
        if t:
            row["rhs"] = t
        if row:
            rows.append(row)
    for row in rows:
        rref.insert(row)
    # inconsistent iff some pivot sits on the rhs column
    if "rhs" in rref.pivot_rows:
        return None
    coeffs = {}
    for pcol, prow in rref.pivot_rows.items():
        rhs = prow.get("rhs")
        if rhs:
            coeffs[pcol] = rhs
    # pivot rows may still involve free basis columns; set those to zero
    solution = [coeffs.get(i, 0) for i in range(len(basis))]
    # verify exactly (free-column zeroing must be consistent)
    residual = dict(target)
    for i, v in enumerate(basis):
        c = solution[i]
        if not c:
            continue
        for k, val in v.items():
            cur = residual.get(k)
            new = (cur - c * val) if cur is not None else -c * val
            if new:
                residual[k] = new
            else:
                residual.pop(k, None)
    if residual:
        return None
    return solution
