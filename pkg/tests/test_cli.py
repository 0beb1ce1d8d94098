import json

from numfac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBasics:
    def test_delta_set_json_payload(self, capsys):
        code, out, _ = run(capsys, "delta-set", "--gens", "6,9,20", "--bound", "144",
                           "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["payload"] == {"delta_set": [1, 2, 3, 4]}
        assert doc["monoid"] == {"generators": [6, 9, 20], "frobenius": 43}
        assert doc["command"] == "delta-set"
        assert doc["timing_ms"] >= 0

    def test_omega_plain(self, capsys):
        code, out, _ = run(capsys, "omega", "--gens", "6,9,20", "--n", "1000")
        assert code == 0
        assert out.strip() == "170"

    def test_empty_factorizations_exit_zero(self, capsys):
        code, out, _ = run(capsys, "factorizations", "--gens", "6,9,20", "--n", "43",
                           "--format", "json")
        assert code == 0
        assert json.loads(out)["payload"] == {"n": 43, "count": 0, "factorizations": []}

    def test_factorizations_descending_lex(self, capsys):
        code, out, _ = run(capsys, "factorizations", "--gens", "6,9,20", "--n", "60")
        assert code == 0
        assert out.splitlines() == ["10,0,0", "7,2,0", "4,4,0", "1,6,0", "0,0,3"]

    def test_info_reports_reduction(self, capsys):
        code, out, _ = run(capsys, "info", "--gens", "6,9,15,20", "--format", "json")
        assert code == 0
        payload = json.loads(out)["payload"]
        assert payload["generators"] == [6, 9, 20]
        assert payload["removed_generators"] == [15]
        assert payload["frobenius"] == 43
        assert payload["period_hint"] == 60


class TestExitCodes:
    def test_usage_error_is_1(self, capsys):
        assert run(capsys, "no-such-command")[0] == 1
        assert run(capsys, "omega", "--gens", "6,9,20")[0] == 1  # missing --n
        assert run(capsys, "omega", "--gens", "a,b", "--n", "1")[0] == 1

    def test_invalid_monoid_is_2(self, capsys):
        assert run(capsys, "info", "--gens", "4,6")[0] == 2
        assert run(capsys, "info", "--gens", "")[0] == 2
        assert run(capsys, "info", "--gens", "0,3")[0] == 2

    def test_overflow_is_3(self, capsys):
        code, _, err = run(capsys, "omega", "--gens", "6,9,20", "--n",
                           "99999999999999999999")
        assert code == 3

    def test_not_in_monoid_is_4(self, capsys):
        assert run(capsys, "apery", "--gens", "6,9,20", "--n", "7")[0] == 4


class TestFormats:
    def test_json_round_trips_canonically(self, capsys):
        _, out, _ = run(capsys, "lengths", "--gens", "6,9,20", "--n", "60",
                        "--format", "json")
        raw = out.strip()
        assert json.dumps(json.loads(raw), sort_keys=True, separators=(",", ":")) == raw

    def test_same_numbers_in_all_formats(self, capsys):
        _, plain, _ = run(capsys, "lengths", "--gens", "6,9,20", "--n", "60")
        _, as_csv, _ = run(capsys, "lengths", "--gens", "6,9,20", "--n", "60",
                           "--format", "csv")
        _, as_json, _ = run(capsys, "lengths", "--gens", "6,9,20", "--n", "60",
                            "--format", "json")
        expected = [3, 7, 8, 9, 10]
        assert [int(v) for v in plain.split()] == expected
        assert [int(r) for r in as_csv.splitlines()[1:]] == expected
        assert json.loads(as_json)["payload"]["lengths"] == expected

    def test_csv_has_header(self, capsys):
        _, out, _ = run(capsys, "contains", "--gens", "6,9,20", "--n", "43",
                        "--format", "csv")
        assert out.splitlines() == ["n,member", "43,0"]

    def test_quasilinear_offsets_are_fractions(self, capsys):
        _, out, _ = run(capsys, "quasilinear", "--gens", "6,9,20", "--format", "json")
        payload = json.loads(out)["payload"]
        assert payload["threshold"] == 104
        assert payload["dissonance"] == 12
        assert all("/" in o for o in payload["offsets"])
        assert len(payload["offsets"]) == 6


class TestStreaming:
    def test_factorizations_stream_is_json_lines(self, capsys):
        code, out, _ = run(capsys, "factorizations-up-to", "--gens", "6,9,20",
                           "--n", "20", "--stream")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert [d["m"] for d in lines] == [0, 6, 9, 12, 15, 18, 20]
        assert lines[-1]["factorizations"] == [[0, 0, 1]]

    def test_omega_stream(self, capsys):
        code, out, _ = run(capsys, "omega-up-to", "--gens", "6,9,20", "--n", "0",
                           "--domain", "quotient", "--stream")
        first = json.loads(out.splitlines()[0])
        assert first == {"m": -43, "omega": 1}


class TestPlotData:
    def test_delta_rows_include_worked_example(self, capsys):
        _, out, _ = run(capsys, "plotdata", "delta", "--gens", "6,9,20",
                        "--horizon", "62", "--format", "csv")
        rows = {tuple(map(int, line.split(","))) for line in out.splitlines()[1:]}
        assert (60, 1) in rows and (60, 4) in rows

    def test_omega_rows_include_zero_tail(self, capsys):
        _, out, _ = run(capsys, "plotdata", "omega", "--gens", "6,9,20",
                        "--horizon", "5", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "n,omega,in_monoid"
        rows = {tuple(map(int, line.split(","))) for line in lines[1:]}
        assert (-44, 0, 0) in rows
        assert (-43, 1, 0) in rows
        assert (0, 0, 1) in rows

    def test_empty_range_header_only(self, capsys):
        _, out, _ = run(capsys, "plotdata", "delta", "--gens", "6,9,20",
                        "--horizon", "0", "--format", "csv")
        assert out.splitlines() == ["n,d"]


class TestVerifyAndBench:
    def test_verify_passes_on_small_monoid(self, capsys):
        code, out, _ = run(capsys, "verify", "--gens", "2,3", "--n", "100")
        assert code == 0
        assert "FAIL" not in out
        assert "PASS" in out

    def test_verify_passes_on_mcnugget(self, capsys):
        code, out, _ = run(capsys, "verify", "--gens", "6,9,20", "--n", "200")
        assert code == 0
        assert "FAIL" not in out

    def test_naturals_monoid_works(self, capsys):
        code, out, _ = run(capsys, "delta-set", "--gens", "1", "--format", "json")
        assert code == 0
        assert json.loads(out)["payload"] == {"delta_set": []}

    def test_verify_rejects_bad_monoid(self, capsys):
        assert run(capsys, "verify", "--gens", "4,6")[0] == 2

    def test_bench_reports_dynamic_faster(self, capsys):
        code, out, _ = run(capsys, "bench", "--gens", "6,9,20", "--n", "250",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)["payload"]
        assert {r["name"] for r in payload["results"]} == {
            "factorizations dynamic", "factorizations naive",
            "omega dynamic", "omega naive",
        }
        assert payload["dynamic_faster"] is True
