import json

from smallq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_l_ok(capsys):
    code, out, _ = run(capsys, "check-l", "--type", "A", "--rank", "2", "--l", "7")
    assert code == 0
    assert "ok" in out


def test_check_l_inadmissible_exit_2(capsys):
    code, out, _ = run(capsys, "check-l", "--type", "A", "--rank", "2", "--l", "9")
    assert code == 2
    assert "gcd(l, det a_ij)=3" in out


def test_orbits_json_golden(capsys):
    code, out, _ = run(
        capsys, "orbits", "--type", "A", "--rank", "1", "--l", "5", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["orbits"] == [
        {"rep": [0], "size": 2, "stab_order": 1, "regular": True},
        {"rep": [1], "size": 2, "stab_order": 1, "regular": True},
        {"rep": [4], "size": 1, "stab_order": 2, "regular": False},
    ]


def test_orbits_json_byte_stable(capsys):
    code1, out1, _ = run(
        capsys, "orbits", "--type", "A", "--rank", "2", "--l", "5", "--json"
    )
    code2, out2, _ = run(
        capsys, "orbits", "--type", "A", "--rank", "2", "--l", "5", "--json"
    )
    assert code1 == code2 == 0 and out1 == out2


def test_orbits_inadmissible(capsys):
    code, _, err = run(capsys, "orbits", "--type", "A", "--rank", "2", "--l", "9")
    assert code == 2 and "inadmissible" in err


def test_orbits_budget(capsys):
    code, _, err = run(
        capsys, "orbits", "--type", "A", "--rank", "2", "--l", "7", "--budget", "10"
    )
    assert code == 2 and "budget" in err


def test_blocks_json_totals(capsys):
    code, out, _ = run(
        capsys, "blocks", "--type", "A", "--rank", "2", "--l", "7", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["totals"] == {
        "ztilde": 49,
        "zprime": 49,
        "intersection": 12,
        "sum": 86,
        "xbar": 12,
    }


def test_blocks_csv(capsys):
    code, out, _ = run(capsys, "blocks", "--type", "A", "--rank", "1", "--l", "5", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("rep;index_w_wmu")
    assert len(lines) == 4  # header + 3 blocks


def test_charring_product(capsys):
    code, out, _ = run(capsys, "charring", "--l", "5", "product", "4", "1")
    assert code == 0
    assert "2*xi(0) + 2*xi(3)" in out


def test_charring_product_json(capsys):
    code, out, _ = run(capsys, "charring", "--l", "5", "product", "4", "1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["xi_coefficients"] == ["2", "0", "0", "2", "0"]


def test_charring_socle_json(capsys):
    code, out, _ = run(capsys, "charring", "--l", "5", "socle", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 3


def test_charring_bad_usage(capsys):
    code, _, err = run(capsys, "charring", "--l", "5", "product", "4")
    assert code == 2
    code, _, err = run(capsys, "charring", "--l", "4", "socle")
    assert code == 2


def test_sl2_verify_all_l3(capsys):
    code, out, _ = run(capsys, "sl2", "--l", "3", "verify-all", "--samples", "5")
    assert code == 0
    assert "all checks pass" in out
    assert "FAIL" not in out


def test_sl2_verify_all_json(capsys):
    code, out, _ = run(
        capsys, "sl2", "--l", "3", "verify-all", "--samples", "5", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert all(c["ok"] for c in data["checks"])
    # cyclotomic scalars as exact strings, never floats
    assert isinstance(data["fourier_unit_scalar"], list)
    assert all(isinstance(s, str) for s in data["fourier_unit_scalar"])


def test_sl2_center(capsys):
    code, out, _ = run(capsys, "sl2", "--l", "3", "center")
    assert code == 0
    assert "dim Z(u_q(sl2)) at l=3: 4" in out


def test_sl2_tensor_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("SMALLQ_TENSOR_BUDGET", "10")
    code, out, _ = run(capsys, "sl2", "--l", "3", "verify-all", "--samples", "3")
    assert code == 0
    assert "SKIP" in out and "hexagon" in out


def test_sl2_inadmissible(capsys):
    code, _, err = run(capsys, "sl2", "--l", "4", "verify-all")
    assert code == 2
