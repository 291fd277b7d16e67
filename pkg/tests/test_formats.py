import json

import pytest

from conftest import DIAMOND, P, Z2
import semidim.campaign as campaign_mod
from semidim.campaign import (
    CSV_COLUMNS,
    HYPOTHESIS_VIOLATION,
    OK,
    SKIPPED,
    default_campaign,
    verify_campaign,
)
from semidim.errors import SemiringFormatError
from semidim.formats import (
    dumps_semiring,
    load_campaign,
    load_product,
    load_semiring,
    load_target,
    product_from_dict,
    product_to_dict,
    semiring_from_dict,
)
from semidim.product import ProductSemiring
from semidim.semiring import catalog


def write(path, obj):
    path.write_text(json.dumps(obj))
    return path


class TestSemiringFormat:
    @pytest.mark.parametrize("name", ["BOOL", "CHAIN_3", "T3", "BXMODX2", "TRUNC_4"])
    def test_round_trip(self, tmp_path, name):
        t = catalog(name)
        f = tmp_path / "s.json"
        f.write_text(dumps_semiring(t))
        back = load_semiring(f)
        assert back == t and back.labels == t.labels

    def test_short_row_is_reported_with_position(self):
        obj = {"order": 2, "add": [[0, 1], [1]], "mul": [[0, 0], [0, 1]]}
        with pytest.raises(SemiringFormatError, match=r"add\[1\]"):
            semiring_from_dict(obj)

    @pytest.mark.parametrize(
        "obj, msg",
        [
            ([], "expected an object"),
            ({"order": 2, "add": [[0, 1], [1, 1]]}, "missing field 'mul'"),
            ({"order": 1, "add": [[0]], "mul": [[0]]}, "order"),
            ({"order": 2, "add": [[0, 1]], "mul": [[0, 0], [0, 1]]}, "add: has 1 rows"),
            ({"order": 2, "add": [[0, 1], [1, 1]], "mul": [[0, 0], [0, 1]], "x": 1}, "unknown"),
            ({"order": 2, "labels": ["0"], "add": [[0, 1], [1, 1]], "mul": [[0, 0], [0, 1]]}, "labels"),
            ({"order": 2, "add": [[0, 1], [1, "x"]], "mul": [[0, 0], [0, 1]]}, r"add\[1\]\[1\]"),
        ],
    )
    def test_malformed(self, obj, msg):
        with pytest.raises(SemiringFormatError, match=msg):
            semiring_from_dict(obj)

    def test_bad_json_has_line_and_column(self, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text('{"order": 2,\n "add": [[0, 1], [1, 1]\n')
        with pytest.raises(SemiringFormatError, match=r"line \d+ column \d+"):
            load_semiring(f)

    def test_missing_file(self, tmp_path):
        with pytest.raises(SemiringFormatError, match="cannot read"):
            load_semiring(tmp_path / "nope.json")

    def test_identities_are_moved_to_front(self):
        # BOOL stored with the identities swapped
        obj = {"order": 2, "labels": ["1", "0"], "add": [[0, 0], [0, 1]], "mul": [[0, 1], [1, 1]]}
        t = semiring_from_dict(obj)
        assert t == catalog("BOOL") and t.labels == ("0", "1")


class TestProductFormat:
    def test_mixed_references(self, tmp_path):
        (tmp_path / "sub").mkdir()
        (tmp_path / "sub" / "t3.json").write_text(dumps_semiring(catalog("T3")))
        f = write(
            tmp_path / "p.json",
            {"factors": ["catalog:BOOL", "file:sub/t3.json", catalog("CHAIN_3").to_dict()]},
        )
        p = load_product(f)
        assert [x for x in p.factors] == [catalog("BOOL"), catalog("T3"), catalog("CHAIN_3")]

    def test_round_trip(self):
        p = P("BOOL", "T3")
        q = product_from_dict(product_to_dict(p))
        assert q.factors == p.factors
        assert product_to_dict(ProductSemiring([Z2()]))["factors"][0]["order"] == 2

    @pytest.mark.parametrize(
        "obj, msg",
        [
            ({"factors": []}, "non-empty"),
            ({"factors": ["catalog:NOPE"]}, r"factors\[0\]"),
            ({"factors": [3]}, "factor reference"),
            ({"nothing": 1}, "factors"),
        ],
    )
    def test_errors(self, tmp_path, obj, msg):
        with pytest.raises(SemiringFormatError, match=msg):
            load_product(write(tmp_path / "p.json", obj))

    def test_load_target(self, tmp_path):
        assert load_target("catalog:T3") == catalog("T3")
        p = load_target("catalog:BOOL,CHAIN_3")
        assert isinstance(p, ProductSemiring) and len(p) == 2
        f = write(tmp_path / "p.json", {"factors": ["catalog:BOOL"]})
        assert isinstance(load_target(str(f)), ProductSemiring)
        g = tmp_path / "s.json"
        g.write_text(dumps_semiring(catalog("T3")))
        assert load_target(str(g)) == catalog("T3")


class TestCampaign:
    def test_load_both_shapes(self, tmp_path):
        a = write(tmp_path / "a.json", [{"factors": ["catalog:BOOL", "catalog:BOOL"]}, ["catalog:T3"]])
        b = write(tmp_path / "b.json", {"products": [{"factors": ["catalog:BOOL"]}]})
        assert [p.name for p in load_campaign(a)] == ["BOOL x BOOL", "T3"]
        assert len(load_campaign(b)) == 1

    def test_bad_entry_is_located(self, tmp_path):
        f = write(tmp_path / "c.json", [["catalog:BOOL"], {"factors": 1}])
        with pytest.raises(SemiringFormatError, match=r"products\[1\]"):
            load_campaign(f)
        with pytest.raises(SemiringFormatError, match="must be a list"):
            load_campaign(write(tmp_path / "d.json", {"x": 1}))

    def test_default_campaign_shape(self):
        products = default_campaign()
        assert len(products) == 23
        names = [p.name for p in products]
        assert len(set(names)) == len(names)
        assert "CHAIN_3 x T3" in names and "BOOL x BOOL x T3" in names

    def test_empty(self):
        r = verify_campaign([])
        assert r.rows == [] and r.mismatches == 0 and r.exit_code == 0
        assert r.to_csv().strip() == ",".join(CSV_COLUMNS)

    def test_statuses(self, monkeypatch):
        monkeypatch.setattr(campaign_mod, "SOLVER_CAP", 6)
        r = verify_campaign([P("BOOL", "BOOL"), P("BXMODX2", "BXMODX2"), ProductSemiring([DIAMOND()])])
        assert [x.status for x in r.rows] == [OK, SKIPPED, HYPOTHESIS_VIOLATION]
        assert r.exit_code == 1
        text = r.to_text()
        assert "!! HYPOTHESIS_VIOLATION" in text and "FLAG twin classes" in text

    def test_csv_columns(self):
        r = verify_campaign([P("BOOL", "T3")])
        lines = r.to_csv().splitlines()
        assert lines[0].split(",") == list(CSV_COLUMNS)
        assert lines[1].split(",")[:8] == ["BOOL x T3", "HAUPT1", "1", "1", "5", "3", "3", "3"]

    def test_parallel_order_matches_sequential(self):
        products = default_campaign()[:10]
        seq = verify_campaign(products, jobs=1)
        par = verify_campaign(products, jobs=3)
        strip = lambda r: [(x.product, x.status, x.exact, x.witness) for x in r.rows]
        assert strip(seq) == strip(par)
