import pytest

import server


def test_intersection_number():
    assert server.intersection_number(1, tau="0:2", kappa="1:2") == {
        "genus": 1, "m": "0:2", "p": "1:2", "value": "1/8",
    }


@pytest.mark.parametrize("kwargs", [
    {"genus": 0, "tau": "0:3", "route": "sideways"},
    {"genus": 0, "tau": "0:2"},
    {"genus": 2, "tau": "1:1"},
    {"genus": 0, "tau": "0:x"},
])
def test_intersection_number_errors_are_returned(kwargs):
    result = server.intersection_number(**kwargs)
    assert set(result) == {"error"}


def test_intersection_table():
    rows = server.intersection_table(0, n_max=4, dim_max=1)["rows"]
    assert [row["value"] for row in rows] == ["1", "1", "1"]


def test_run_verification():
    result = server.run_verification("charge", t_max=2, s_max=2, degree=5)
    assert result["summary"]["passed"] is True
    assert "error" in server.run_verification("bogus")


def test_weil_petersson_table():
    rows = server.weil_petersson_table(1, n_max=2)["rows"]
    assert [row["w"] for row in rows] == ["1/24", "1/8"]
    assert "error" in server.weil_petersson_table(0, n_max=2)


def test_cohft_potential():
    result = server.cohft_potential(s="1=1", u="2", order=8)
    assert result["getzler_ok"] is True
    assert "error" in server.cohft_potential(s="1:1")
