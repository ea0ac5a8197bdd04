"""Block dimension bookkeeping for the central subalgebras.

Everything here is pure orbit combinatorics: for each bullet-orbit with
representative mu and stabilizer W_mu, the corresponding block
contributes

    dim Ztilde_mu = dim Zprime_mu = [W : W_mu]  (the orbit size),
    dim (Ztilde meet Zprime)_mu  = 1,
    dim (Ztilde + Zprime)_mu     = 2 [W : W_mu] - 1,

summing to l^r, l^r, |Xbar| and 2 l^r - |Xbar|.  The Hopf-algebraic
meaning of those numbers is verified independently (for sl2) in
:mod:`smallq.uqsl2`; for rank >= 2 the totals describe the subalgebra
Ztilde + Zprime only, never the full center, whose dimension is unknown
beyond rank 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .affine_orbits import OrbitTable, orbit_table
from .rootdata import RootDatum, check_l

__all__ = ["BlockRow", "BlockReport", "block_report", "closed_form_crosscheck"]


@dataclass(frozen=True)
class BlockRow:
    representative: tuple
    index_w_wmu: int
    dim_ztilde_block: int
    dim_zprime_block: int
    dim_intersection_block: int
    dim_sum_block: int
    regular: bool


@dataclass
class BlockReport:
    datum_name: str
    l: int
    rows: list
    dim_ztilde: int
    dim_zprime: int
    dim_intersection: int
    dim_sum: int

    @property
    def num_blocks(self) -> int:
        return len(self.rows)


def block_report(table: OrbitTable) -> BlockReport:
    """Per-block and total dimensions from a bullet-action orbit table."""
    if table.action != "bullet":
        raise ValueError("block_report needs an orbit table for the bullet action")
    rows = []
    for orb in table.orbits:
        idx = orb.size  # [W : W_mu] = orbit size
        rows.append(
            BlockRow(
                representative=orb.representative,
                index_w_wmu=idx,
                dim_ztilde_block=idx,
                dim_zprime_block=idx,
                dim_intersection_block=1,
                dim_sum_block=2 * idx - 1,
                regular=orb.regular,
            )
        )
    lr = table.num_points
    total_ztilde = sum(r.dim_ztilde_block for r in rows)
    total_sum = sum(r.dim_sum_block for r in rows)
    if total_ztilde != lr:
        raise RuntimeError("sum of [W:W_mu] over blocks must equal l^r")
    if total_sum != 2 * lr - len(rows):
        raise RuntimeError("dim(Ztilde+Zprime) must equal 2 l^r - |Xbar|")
    return BlockReport(
        datum_name=table.datum.name,
        l=table.l,
        rows=rows,
        dim_ztilde=total_ztilde,
        dim_zprime=total_ztilde,
        dim_intersection=len(rows),
        dim_sum=total_sum,
    )


def _closed_forms(type_name: str, l: int) -> dict:
    if type_name == "A1":
        xbar = (l + 1) // 2
        return {
            "num_blocks": xbar,
            "dim_ztilde": l,
            "dim_sum": 2 * l - xbar,
            "size_profile": {1: 1, 2: (l - 1) // 2},
        }
    if type_name == "A2":
        regular = (l - 1) * (l - 2) // 6
        xbar = 1 + (l - 1) + regular
        return {
            "num_blocks": xbar,
            "dim_ztilde": l * l,
            "dim_sum": 1 + 5 * (l - 1) + 11 * regular,
            "size_profile": {1: 1, 3: l - 1, 6: regular},
        }
    raise ValueError("closed forms are available for A1 and A2 only")


def closed_form_crosscheck(datum: RootDatum, l: int) -> bool:
    """Compare enumerated block totals against the A1/A2 closed forms.

    Raises on inadmissible l; returns True when every quantity matches
    (a mismatch raises AssertionError naming the offending quantity).
    """
    verdict = check_l(datum, l)
    if not verdict.ok:
        raise ValueError(str(verdict))
    forms = _closed_forms(datum.name, l)
    table = orbit_table(datum, l, action="bullet")
    report = block_report(table)
    assert report.num_blocks == forms["num_blocks"], "block count mismatch"
    assert report.dim_ztilde == forms["dim_ztilde"], "dim Ztilde mismatch"
    assert report.dim_sum == forms["dim_sum"], "dim (Ztilde+Zprime) mismatch"
    assert report.dim_sum == 2 * table.num_points - report.num_blocks
    assert table.size_profile == forms["size_profile"], "orbit profile mismatch"
    return True
