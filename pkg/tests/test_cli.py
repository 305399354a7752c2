import io

import pytest

from jpevalb import SentenceScore, Status
from jpevalb.cli import RunConfig, build_arg_parser, format_row, main, run
from conftest import FIXTURES


def run_to_string(**kwargs):
    out = io.StringIO()
    code = run(RunConfig(output=out, **kwargs))
    return code, out.getvalue()


def row_values(line):
    return line.split()


class TestFormatRow:
    def test_published_row_values(self):
        score = SentenceScore(
            id=2, length=40, status=Status.OK, recall=70.97, precision=73.33,
            matched=22, gold_brackets=31, test_brackets=30, crossing=7,
            words=40, correct_tags=40, tag_accuracy=100.0,
        )
        assert row_values(format_row(score)) == [
            "2", "40", "0", "70.97", "73.33", "22", "31", "30", "7", "40", "40", "100.00",
        ]

    def test_bug_case_row_values(self):
        score = SentenceScore(
            id=4, length=26, status=Status.OK, recall=100 * 6 / 18,
            precision=100 * 6 / 17, matched=6, gold_brackets=18,
            test_brackets=17, crossing=8, words=27, correct_tags=19,
            tag_accuracy=100 * 19 / 27,
        )
        assert row_values(format_row(score)) == [
            "4", "26", "0", "33.33", "35.29", "6", "18", "17", "8", "27", "19", "70.37",
        ]

    def test_all_zero_row(self):
        score = SentenceScore(
            id=1, length=0, status=Status.OK, recall=0.0, precision=0.0,
            matched=0, gold_brackets=0, test_brackets=0, crossing=0,
            words=0, correct_tags=0, tag_accuracy=0.0,
        )
        assert row_values(format_row(score)) == [
            "1", "0", "0", "0.00", "0.00", "0", "0", "0", "0", "0", "0", "0.00",
        ]

    def test_rounding_is_half_up(self):
        score = SentenceScore(
            id=1, length=1, status=Status.OK, recall=71.425, precision=62.505,
            matched=0, gold_brackets=0, test_brackets=0, crossing=0,
            words=0, correct_tags=0, tag_accuracy=0.0,
        )
        values = row_values(format_row(score))
        assert values[3] == "71.43"
        assert values[4] == "62.51"


class TestArgParser:
    def test_plain_invocation(self):
        args = build_arg_parser().parse_args(["g.txt", "s.txt"])
        assert args.gold_file == "g.txt"
        assert args.evalb is None

    @pytest.mark.parametrize("flag", ["--evalb", "-evalb"])
    def test_evalb_flag_spellings(self, flag):
        args = build_arg_parser().parse_args(["g", "s", flag])
        assert args.evalb is not None

    @pytest.mark.parametrize("flag", ["--evalb", "-evalb"])
    def test_evalb_with_prm(self, flag):
        args = build_arg_parser().parse_args(["g", "s", flag, "my.prm"])
        assert args.evalb == "my.prm"

    def test_exceptions_flag(self):
        args = build_arg_parser().parse_args(["g", "s", "--exceptions", "x.tsv"])
        assert args.exceptions == "x.tsv"


class TestRun:
    def test_native_golden(self):
        code, text = run_to_string(
            gold_path=FIXTURES / "black_monday.gold",
            system_path=FIXTURES / "black_monday.sys",
        )
        assert code == 0
        assert text == (FIXTURES / "golden_native_black_monday.txt").read_text()

    def test_legacy_golden(self):
        code, text = run_to_string(
            gold_path=FIXTURES / "black_monday.gold",
            system_path=FIXTURES / "black_monday.sys",
            legacy=True,
        )
        assert code == 0
        assert text == (FIXTURES / "golden_legacy_black_monday.txt").read_text()

    def test_legacy_explicit_prm_matches_defaults(self):
        _, with_defaults = run_to_string(
            gold_path=FIXTURES / "black_monday.gold",
            system_path=FIXTURES / "black_monday.sys",
            legacy=True,
        )
        _, with_prm = run_to_string(
            gold_path=FIXTURES / "black_monday.gold",
            system_path=FIXTURES / "black_monday.sys",
            legacy=True,
            prm_path=FIXTURES / "collins.prm",
        )
        assert with_prm == with_defaults

    def test_native_figures_golden(self):
        code, text = run_to_string(
            gold_path=FIXTURES / "figures.gold",
            system_path=FIXTURES / "figures.sys",
        )
        assert code == 0
        assert text == (FIXTURES / "golden_native_figures.txt").read_text()

    def test_output_is_deterministic(self):
        results = [
            run_to_string(
                gold_path=FIXTURES / "figures.gold",
                system_path=FIXTURES / "figures.sys",
            )
            for _ in range(2)
        ]
        assert results[0] == results[1]

    def test_native_row_count_is_unit_count(self):
        _, text = run_to_string(
            gold_path=FIXTURES / "sentence_split.gold",
            system_path=FIXTURES / "sentence_split.sys",
        )
        rows = [l for l in text.splitlines() if l[:5].strip().isdigit()]
        assert len(rows) == 1  # one gold sentence aligned to two system trees

    def test_legacy_row_count_is_gold_sentence_count(self):
        _, text = run_to_string(
            gold_path=FIXTURES / "black_monday.gold",
            system_path=FIXTURES / "black_monday.sys",
            legacy=True,
        )
        rows = [l for l in text.splitlines() if l[:5].strip().isdigit()]
        assert len(rows) == 1

    def test_missing_gold_file(self, capsys):
        code, text = run_to_string(
            gold_path=FIXTURES / "does_not_exist.gold",
            system_path=FIXTURES / "black_monday.sys",
        )
        assert code == 1
        assert text == ""  # no partial table
        assert "does_not_exist" in capsys.readouterr().err

    def test_malformed_tree_reports_position(self, tmp_path, capsys):
        bad = tmp_path / "bad.gold"
        bad.write_text("(S (NP (DT This))", encoding="utf-8")
        code, text = run_to_string(
            gold_path=bad, system_path=FIXTURES / "black_monday.sys"
        )
        assert code == 1 and text == ""
        assert "offset" in capsys.readouterr().err

    def test_legacy_count_mismatch_fails(self, capsys):
        code, _ = run_to_string(
            gold_path=FIXTURES / "figures.gold",
            system_path=FIXTURES / "figures.sys",
            legacy=True,
        )
        assert code == 1
        assert "position" in capsys.readouterr().err

    def test_legacy_abort_keeps_prior_rows(self, tmp_path, capsys):
        gold = tmp_path / "g"
        sys_ = tmp_path / "s"
        gold.write_text("(S (NN a) (VB b)) (S (NN c) (VB d))", encoding="utf-8")
        sys_.write_text("(S (NN x) (VB b)) (S (NN y) (VB d))", encoding="utf-8")
        prm = tmp_path / "p.prm"
        prm.write_text("MAX_ERROR 1\n", encoding="utf-8")
        code, text = run_to_string(
            gold_path=gold, system_path=sys_, legacy=True, prm_path=prm
        )
        assert code == 1
        rows = [l for l in text.splitlines() if l[:5].strip().isdigit()]
        assert len(rows) == 2  # both error rows were printed before the abort
        assert "Summary" not in text
        assert "MAX_ERROR" in capsys.readouterr().err

    def test_exception_list_wired_through(self, tmp_path):
        gold = tmp_path / "g"
        sys_ = tmp_path / "s"
        gold.write_text("(S (NP (NN bread)) (CC &) (NP (NN butter)))", encoding="utf-8")
        sys_.write_text("(S (NP (NN bread)) (CC and) (NP (NN butter)))", encoding="utf-8")
        pairs = tmp_path / "x.tsv"
        pairs.write_text("&\tand\n", encoding="utf-8")
        _, without = run_to_string(gold_path=gold, system_path=sys_)
        code, with_pairs = run_to_string(
            gold_path=gold, system_path=sys_, exception_list_path=pairs
        )
        assert code == 0
        # the exception pair makes the CC tokens align 1-to-1 with equal tags
        first_row = [l for l in with_pairs.splitlines() if l[:5].strip().isdigit()][0]
        assert row_values(first_row)[10] == "3"  # correct tags


class TestEndToEndRobustness:
    def test_mixed_resegmentation_and_retokenization(self, tmp_path):
        # both sides carve the same character stream into different tokens,
        # sentences, and trees; the pipeline must always produce a report
        import random

        from jpevalb import SyntaxTree, render_bracketed
        from conftest import random_tree

        def build_side(rng, text):
            tokens = []
            i = 0
            while i < len(text):
                j = min(len(text), i + rng.randint(1, 5))
                tokens.append(text[i:j])
                i = j
            sentences = []
            k = 0
            while k < len(tokens):
                step = min(len(tokens), k + rng.randint(1, 6))
                sentences.append(tokens[k:step])
                k = step
            return [render_bracketed(random_tree(rng, sent)) for sent in sentences]

        rng = random.Random(99)
        for _ in range(40):
            text = "".join(rng.choice("abcdef") for _ in range(rng.randint(5, 60)))
            gold = tmp_path / "g.mrg"
            sys_ = tmp_path / "s.mrg"
            gold.write_text("\n".join(build_side(rng, text)), encoding="utf-8")
            sys_.write_text("\n".join(build_side(rng, text)), encoding="utf-8")
            code, report = run_to_string(gold_path=gold, system_path=sys_)
            assert code == 0
            assert "=== Summary ===" in report


class TestMain:
    def test_exit_codes(self):
        assert main([
            str(FIXTURES / "black_monday.gold"),
            str(FIXTURES / "black_monday.sys"),
        ]) == 0
        assert main(["missing.gold", "missing.sys"]) == 1

    def test_legacy_via_flag(self, capsys):
        code = main([
            str(FIXTURES / "black_monday.gold"),
            str(FIXTURES / "black_monday.sys"),
            "--evalb",
            str(FIXTURES / "collins.prm"),
        ])
        assert code == 0
        out = capsys.readouterr().out
        assert "6     5   83.33" in out
