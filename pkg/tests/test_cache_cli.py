from __future__ import annotations

import json
import re

import pytest

from sccore import cache
from sccore.cli import main
from sccore.errors import CacheCorrupt
from sccore.series import sc_t_coeffs


class TestCacheFile:
    def test_round_trip(self, tmp_path):
        coeffs = sc_t_coeffs(6, 100).coeffs
        cache.write_cache(tmp_path, "sc_t", 6, 100, coeffs)
        loaded, source = cache.load_or_compute(tmp_path, "sc_t", 6, 100)
        assert loaded == coeffs and source == "cache"

    def test_bigint_payload(self, tmp_path):
        coeffs = tuple(3 ** k for k in range(0, 200, 4))
        n = len(coeffs) - 1
        cache.write_cache(tmp_path, "p", None, n, coeffs)
        loaded, source = cache.load_or_compute(tmp_path, "p", None, n)
        assert loaded == coeffs

    def test_corruption_recomputes_with_warning(self, tmp_path):
        coeffs = sc_t_coeffs(4, 50).coeffs
        path = cache.write_cache(tmp_path, "sc_t", 4, 50, coeffs)
        blob = bytearray(path.read_bytes())
        blob[25] ^= 0xFF
        path.write_bytes(bytes(blob))
        loaded, source = cache.load_or_compute(tmp_path, "sc_t", 4, 50)
        assert loaded == coeffs and source == "recomputed"
        # the rewritten file is valid again
        assert cache.load_or_compute(tmp_path, "sc_t", 4, 50)[1] == "cache"

    def test_parameter_mismatch_rejected(self, tmp_path):
        coeffs = sc_t_coeffs(4, 50).coeffs
        path = cache.write_cache(tmp_path, "sc_t", 4, 50, coeffs)
        with pytest.raises(CacheCorrupt):
            cache._decode(path.read_bytes(), "sc_t", 5, 50)

    def test_verify_and_purge(self, tmp_path):
        cache.write_cache(tmp_path, "sc_t", 6, 80, sc_t_coeffs(6, 80).coeffs)
        res = cache.verify_file(cache.cache_path(tmp_path, "sc_t", 6, 80))
        assert res["ok"]
        assert cache.purge(tmp_path) == 1
        assert cache.purge(tmp_path) == 0


class TestCountCommand:
    def test_single_value(self, capsys):
        assert main(["count", "sc_t", "--t", "6", "--n", "13"]) == 0
        assert capsys.readouterr().out == "6 13 0\n"

    def test_range_matches_prefix(self, capsys):
        assert main(["count", "sc", "--n", "0..27", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "t,n,value"
        values = [int(line.split(",")[2]) for line in lines[1:]]
        assert values == [1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3,
                          3, 4, 5, 5, 5, 6, 7, 8, 8, 9, 11, 12, 12, 14]

    def test_method_all_agrees(self, capsys):
        assert main(["count", "sc_t", "--t", "4", "--n", "10", "--method", "all"]) == 0
        assert capsys.readouterr().out == "4 10 2\n"

    def test_method_disagreement_exits_2(self, capsys, monkeypatch):
        from sccore import cli as cli_mod

        real = cli_mod._count_by_method

        def broken(family, t, n, n_cap, method, args):
            v = real(family, t, n, n_cap, method, args)
            return v + 1 if method == "oracle" else v

        monkeypatch.setattr(cli_mod, "_count_by_method", broken)
        assert main(["count", "sc_t", "--t", "4", "--n", "10", "--method", "all"]) == 2

    def test_missing_t_is_usage_error(self):
        assert main(["count", "sc_t", "--n", "10"]) == 1

    def test_bad_flag_exits_1(self):
        with pytest.raises(SystemExit) as exc:
            main(["count", "sc_t", "--t", "oops", "--n", "1"])
        assert exc.value.code == 1

    def test_cache_dir_used_and_values_unchanged(self, tmp_path, capsys):
        args = ["count", "sc_t", "--t", "6", "--n", "73", "--cache-dir", str(tmp_path)]
        assert main(args) == 0
        cold = capsys.readouterr().out
        assert (tmp_path / "sc_t_t6_n73.bin").exists()
        assert main(args) == 0
        assert capsys.readouterr().out == cold == "6 73 0\n"


class TestTableCommand:
    def test_csv_matches_series(self, capsys):
        assert main(["table", "sc", "--nmax", "12", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "t,n,value"
        for line in lines[1:]:
            t, n, v = line.split(",")
            assert sc_t_coeffs(int(t), 12)[int(n)] == int(v)

    def test_single_cell(self, capsys):
        assert main(["table", "sc", "--nmax", "0"]) == 0
        body = capsys.readouterr().out.strip().splitlines()
        assert body == ["t,n,value", "2,0,1"]

    def test_byte_determinism(self, capsys):
        main(["table", "sc", "--nmax", "20", "--format", "tsv"])
        first = capsys.readouterr().out
        main(["table", "sc", "--nmax", "20", "--format", "tsv"])
        assert capsys.readouterr().out == first

    def test_diff_tables_regenerated_from_counts(self, capsys):
        assert main(["table", "sc-diff-odd", "--nmax", "20", "--tmax", "9", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()[1:]
        for line in lines:
            label, n, v = line.split(",")
            a, b = (int(x) for x in label.split("-"))
            assert sc_t_coeffs(a, 20)[int(n)] - sc_t_coeffs(b, 20)[int(n)] == int(v)

    def test_unwritable_path_exits_1(self):
        assert main(["table", "sc", "--nmax", "4", "--out", "/nonexistent/dir/x.csv"]) == 1


class TestScanCommand:
    def test_holds_exit_0(self, capsys, tmp_path):
        out = tmp_path / "rep.json"
        code = main(["scan", "positivity", "--t", "6", "--nmax", "200", "--json", str(out)])
        assert code == 0
        rep = json.loads(out.read_text())
        assert rep["verdict"] == "holds"
        assert rep["data"]["zero_set"] == [2, 12, 13, 73]

    def test_violations_exit_3(self, tmp_path):
        out = tmp_path / "rep.json"
        code = main(["scan", "monotonicity", "--family", "sc-odd", "--nmax", "100",
                     "--window", "theorem", "--json", str(out)])
        assert code == 3
        rep = json.loads(out.read_text())
        assert rep["verdict"] == "fails"
        # includes the published (21, 47) equality among the small-n anomalies
        assert [21, 47] in rep["data"]["small_n_equalities"]

    def test_bad_scan_name_exit_1(self):
        assert main(["scan", "nonsense", "--nmax", "10"]) == 1

    def test_json_round_trip(self, tmp_path):
        out = tmp_path / "rep.json"
        main(["scan", "characterization", "--t", "7", "--nmax", "300", "--json", str(out)])
        rep = json.loads(out.read_text())
        assert set(rep) == {"scan", "params", "verdict", "witnesses", "data", "elapsed_ms"}
        assert json.loads(json.dumps(rep)) == rep

    def test_determinism_modulo_elapsed(self, tmp_path):
        paths = []
        for k in (0, 1):
            p = tmp_path / f"rep{k}.json"
            main(["scan", "identity", "--preset", "--nmax", "150", "--json", str(p)])
            paths.append(p.read_text())
        strip = lambda s: re.sub(r'"elapsed_ms": \d+', '"elapsed_ms": X', s)
        assert strip(paths[0]) == strip(paths[1])

    def test_simultaneous(self, tmp_path, capsys):
        code = main(["scan", "simultaneous", "--s", "3", "--t", "4"])
        assert code == 0
        rep = json.loads(capsys.readouterr().out)
        assert rep["data"]["count"] == 5

    def test_growth_range(self, tmp_path):
        out = tmp_path / "rep.json"
        code = main(["scan", "growth", "--range", "19..30", "--json", str(out), "--workers", "1"])
        assert code == 0  # no fiber-bound failures this early
        rep = json.loads(out.read_text())
        assert rep["data"]["g_undefined_at"] == [27]

    def test_distribution(self, capsys):
        code = main(["scan", "distribution", "--range", "3..30"])
        assert code == 0

    def test_distribution_single_n_emits_rows(self, capsys):
        assert main(["scan", "distribution", "--nmax", "20"]) == 0
        rep = json.loads(capsys.readouterr().out)
        assert rep["data"]["pi"]["4"] == [8, 627]  # (c_5(20) - c_4(20))/p(20)

    def test_unimodality(self, capsys):
        code = main(["scan", "unimodality", "--family", "pi", "--nlo", "63",
                     "--nmax", "100", "--ncap", "100"])
        assert code == 0

    def test_cross_validate(self, capsys):
        code = main(["scan", "cross-validate", "--tmax", "8", "--nmax", "30"])
        assert code == 0
        rep = json.loads(capsys.readouterr().out)
        assert rep["verdict"] == "holds"

    def test_explicit_identity(self, capsys):
        code = main(["scan", "identity", "--t", "5", "--a", "2", "--b", "1",
                     "--a2", "1", "--b2", "0", "--nmax", "200"])
        assert code == 0

    def test_explicit_inequality(self, capsys):
        code = main(["scan", "inequality", "--family", "c", "--t", "7", "--a", "2",
                     "--b", "2", "--alpha", "2", "--nlo", "0", "--non-strict",
                     "--nmax", "300"])
        assert code == 0

    def test_inequality_preset_reports_violations(self, tmp_path):
        out = tmp_path / "rep.json"
        code = main(["scan", "inequality", "--preset", "conjectured",
                     "--nmax", "100", "--json", str(out)])
        assert code == 3  # the stated 1.9/2.6 lower bounds fail at n = 1 and 20

    def test_count_oracle_methods(self, capsys):
        assert main(["count", "c_t", "--t", "4", "--n", "12", "--method", "oracle"]) == 0
        assert capsys.readouterr().out == "4 12 7\n"
        assert main(["count", "p", "--n", "10", "--method", "oracle"]) == 0
        assert capsys.readouterr().out == "10 42\n"

    def test_oracle_cap_flag(self):
        assert main(["count", "sc", "--n", "50", "--method", "oracle",
                     "--oracle-cap", "10"]) == 1

    def test_count_json_format(self, capsys):
        assert main(["count", "sc_t", "--t", "6", "--n", "12..13",
                     "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out) == [[6, 12, 0], [6, 13, 0]]


class TestCacheCommand:
    def test_build_verify_purge_cycle(self, tmp_path, capsys):
        base = ["--cache-dir", str(tmp_path)]
        assert main(["cache", "build", "--family", "sc_t", "--t", "4..6", "--nmax", "60", *base]) == 0
        capsys.readouterr()
        assert main(["cache", "verify", *base]) == 0
        out = capsys.readouterr().out
        assert out.count("ok") == 3
        assert main(["cache", "purge", *base]) == 0
        assert capsys.readouterr().out.startswith("removed 3")

    def test_env_var_fallback(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("SCCORE_CACHE_DIR", str(tmp_path))
        assert main(["count", "sc_t", "--t", "5", "--n", "40"]) == 0
        assert (tmp_path / "sc_t_t5_n40.bin").exists()

    def test_flag_beats_env(self, tmp_path, monkeypatch):
        env_dir = tmp_path / "env"
        flag_dir = tmp_path / "flag"
        env_dir.mkdir()
        flag_dir.mkdir()
        monkeypatch.setenv("SCCORE_CACHE_DIR", str(env_dir))
        main(["count", "sc_t", "--t", "5", "--n", "41", "--cache-dir", str(flag_dir)])
        assert list(env_dir.iterdir()) == []
        assert (flag_dir / "sc_t_t5_n41.bin").exists()
