import csv
import io
import json

from combinatoria.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), out


class TestPartitionsCommand:
    def test_count_100(self, capsys):
        code, payload, _ = run_json(capsys, "partitions", "count", "--n", "100")
        assert code == 0
        assert payload["result"]["count"] == "190569292"

    def test_counts_are_decimal_strings(self, capsys):
        _, payload, _ = run_json(capsys, "partitions", "count", "--n", "60")
        assert isinstance(payload["result"]["count"], str)
        assert payload["result"]["count"].isdigit()

    def test_list_six(self, capsys):
        code, payload, _ = run_json(capsys, "partitions", "list", "--n", "6")
        assert payload["result"]["partitions"][:3] == ["6", "5,1", "4,2"]
        assert payload["result"]["count"] == "11"

    def test_two_part(self, capsys):
        _, payload, _ = run_json(capsys, "partitions", "two-part", "--n", "7")
        assert payload["result"]["two_part_count"] == "3"


class TestClassesCommand:
    def test_human_table_has_11_rows_summing_to_720(self, capsys):
        code, out, _ = run(capsys, "classes", "--n", "6", "--format", "human")
        lines = out.strip().splitlines()
        data = lines[2:]  # header + rule
        assert len(data) == 11
        orders = [int(line.split()[-1]) for line in data]
        assert sum(orders) == 720

    def test_csv_quotes_cycle_notation(self, capsys):
        code, out, _ = run(capsys, "classes", "--n", "4", "--format", "csv")
        lines = out.strip().splitlines()
        assert lines[0] == '"cycle_type","partition","order"'
        assert any(line.endswith(",6") for line in lines)  # orders unquoted
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) == 1 + 5  # header + p(4) classes

    def test_formats_report_identical_counts(self, capsys):
        _, human, _ = run(capsys, "classes", "--n", "5", "--format", "human")
        _, payload, _ = run_json(capsys, "classes", "--n", "5")
        _, out_csv, _ = run(capsys, "classes", "--n", "5", "--format", "csv")
        human_orders = sorted(int(l.split()[-1]) for l in human.strip().splitlines()[2:])
        json_orders = sorted(int(c["order"]) for c in payload["result"]["classes"])
        csv_orders = sorted(
            int(row[2]) for row in list(csv.reader(io.StringIO(out_csv)))[1:]
        )
        assert human_orders == json_orders == csv_orders


class TestCaputCommand:
    def test_count_the_six_rows(self, capsys):
        code, payload, _ = run_json(
            capsys, "caput", "count", "--n", "4", "--head", "1=a", "--mode", "loose"
        )
        assert code == 0
        assert payload["result"]["count"] == "6"

    def test_spec_is_echoed(self, capsys):
        _, payload, _ = run_json(
            capsys, "caput", "count", "--n", "4", "--head", "1=a,3=c", "--mode", "exact"
        )
        spec = payload["result"]["spec"]
        assert spec == {"degree": 4, "head": {"1": "a", "3": "c"}, "mode": "exact"}

    def test_enumerate_lists_lexicographically(self, capsys):
        _, payload, _ = run_json(
            capsys, "caput", "enumerate", "--n", "4", "--head", "1=a"
        )
        perms = payload["result"]["permutations"]
        assert perms[0] == "[1,2,3,4]"
        assert perms == sorted(perms)
        assert len(perms) == 6

    def test_displaced_head_is_a_usage_error(self, capsys):
        code, out, err = run(capsys, "caput", "count", "--n", "4", "--head", "1=b")
        assert code == 2
        assert "occupant" in err


class TestPermCommand:
    def test_compose_right_to_left(self, capsys):
        _, payload, _ = run_json(capsys, "perm", "compose", "(12)(3)", "(13)(2)")
        assert payload["result"]["result"]["one_line"] == "[3,1,2]"
        assert payload["result"]["result"]["cycles"] == "(132)"

    def test_inverse(self, capsys):
        _, payload, _ = run_json(capsys, "perm", "inverse", "(123)")
        assert payload["result"]["result"]["cycles"] == "(132)"

    def test_cycles_of_the_worked_example(self, capsys):
        _, payload, _ = run_json(capsys, "perm", "cycles", "[1,4,3,6,5,2]")
        assert payload["result"]["result"]["cycles"] == "(1)(3)(5)(246)"
        assert payload["result"]["result"]["cycle_type"] == "α₁=3 α₃=1"
        assert payload["result"]["fixed_points"] == [1, 3, 5]

    def test_degree_mismatch_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "perm", "compose", "[1,2]", "[1,2,3]")
        assert code == 2


class TestProblemsCommand:
    def test_solve_problem_5(self, capsys):
        _, payload, _ = run_json(capsys, "problems", "solve", "--id", "5", "--n", "4")
        assert payload["result"]["count"] == "6"
        assert payload["result"]["status"] == "ok"

    def test_reduce_problem_5(self, capsys):
        _, payload, _ = run_json(capsys, "problems", "reduce", "--id", "5", "--n", "4")
        result = payload["result"]
        assert result["direct_count"] == result["caput_count"] == "6"
        assert result["agrees"] is True

    def test_reduce_simpliciter_not_reducible(self, capsys):
        _, payload, _ = run_json(
            capsys, "problems", "reduce", "--id", "simpliciter", "--n", "4"
        )
        assert payload["result"]["status"] == "not-reducible"
        assert payload["result"]["caput_count"] is None

    def test_reserved_problem(self, capsys):
        _, payload, _ = run_json(capsys, "problems", "solve", "--id", "9", "--n", "4")
        assert payload["result"]["status"] == "not-specified-in-source"
        assert payload["result"]["count"] is None

    def test_bad_id_is_usage_error(self, capsys):
        code, _, err = run(capsys, "problems", "solve", "--id", "nope", "--n", "4")
        assert code == 2


class TestGenealogyCommand:
    def test_personae(self, capsys):
        _, payload, _ = run_json(capsys, "genealogy", "personae", "--gradus", "3")
        assert payload["result"] == {"gradus": 3, "cognationes": 4, "count": "32"}

    def test_coords_layout_tag_and_pairs(self, capsys):
        _, payload, _ = run_json(capsys, "genealogy", "coords", "--gradus", "2")
        result = payload["result"]
        assert result["layout"] == "reconstructed-v1"
        assert result["count"] == "12"
        assert result["coordinates"][:4] == [[0, 0], [0, 1], [0, 2], [1, 0]]

    def test_discerptiones(self, capsys):
        _, payload, _ = run_json(capsys, "genealogy", "discerptiones", "--n", "6")
        assert payload["result"]["two_part_count"] == "3"


class TestVerifyCommand:
    def test_exit_zero_when_all_pass(self, capsys):
        code, payload, _ = run_json(capsys, "verify", "--max-n", "4")
        assert code == 0
        assert payload["result"]["all_passed"] is True
        verdicts = {r["verdict"] for r in payload["result"]["reports"]}
        assert verdicts == {"pass"}

    def test_human_lines(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-n", "3", "--format", "human")
        assert code == 0
        assert out.count("pass") >= 9


class TestEnvelope:
    def test_command_is_echoed(self, capsys):
        _, payload, _ = run_json(capsys, "partitions", "count", "--n", "6")
        assert payload["command"].startswith("combinatoria partitions count")
        assert payload["format_version"] == "1"

    def test_json_round_trips_byte_identically(self, capsys):
        for argv in (
            ["partitions", "list", "--n", "6"],
            ["classes", "--n", "6"],
            ["caput", "count", "--n", "4", "--head", "1=a"],
            ["genealogy", "coords", "--gradus", "2"],
        ):
            _, payload, raw = run_json(capsys, *argv)
            rendered = json.dumps(payload, indent=2, ensure_ascii=False)
            assert rendered == raw.rstrip("\n")


class TestUsageErrors:
    def test_unknown_subcommand_exits_2(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_missing_required_flag_exits_2(self, capsys):
        assert run(capsys, "partitions", "count")[0] == 2

    def test_no_arguments_exits_2(self, capsys):
        assert run(capsys)[0] == 2

    def test_over_ceiling_is_reported_not_raised(self, capsys):
        code, _, err = run(capsys, "partitions", "list", "--n", "500")
        assert code == 2
        assert "120" in err


class TestEnvironmentDefault:
    def test_env_var_selects_json(self, capsys, monkeypatch):
        monkeypatch.setenv("COMBINATORIA_FORMAT", "json")
        code = main(["partitions", "count", "--n", "6"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["result"]["count"] == "11"

    def test_bogus_env_value_falls_back_to_human(self, capsys, monkeypatch):
        monkeypatch.setenv("COMBINATORIA_FORMAT", "xml")
        code, out, _ = run(capsys, "partitions", "count", "--n", "6")
        assert code == 0
        assert out.splitlines()[0].startswith("n")
