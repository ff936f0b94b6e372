import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repscope.corpus import (
    Corpus,
    SummaryRecord,
    TokenizerConfig,
    TokenSequence,
    load_corpus,
    save_corpus,
    tokenize,
)
from repscope.errors import CorpusLoadError, InputError

from conftest import write_jsonl


class TestTokenize:
    def test_empty_text(self):
        assert tokenize("").tokens == ()

    def test_case_fold_and_punctuation_split(self):
        seq = tokenize("However, there is", TokenizerConfig(case_fold=True, punctuation_mode="split"))
        assert list(seq.tokens) == ["however", ",", "there", "is"]

    def test_whitespace_collapse(self):
        assert list(tokenize("a b  c").tokens) == ["a", "b", "c"]

    def test_no_case_fold(self):
        seq = tokenize("However, There", TokenizerConfig(case_fold=False))
        assert list(seq.tokens) == ["However", ",", "There"]

    def test_attached_mode(self):
        seq = tokenize("However, there", TokenizerConfig(punctuation_mode="attached"))
        assert list(seq.tokens) == ["however,", "there"]

    def test_leading_and_trailing_punctuation(self):
        assert list(tokenize('("hello"),').tokens) == ["(", '"', "hello", '"', ")", ","]

    def test_interior_punctuation_stays(self):
        assert list(tokenize("don't stop-go u.s.").tokens) == ["don't", "stop-go", "u.s", "."]

    def test_all_punctuation_token(self):
        assert list(tokenize("...").tokens) == [".", ".", "."]

    def test_source_char_count(self):
        raw = "Some raw text, kept verbatim."
        assert tokenize(raw).source_char_count == len(raw)

    def test_bad_punctuation_mode(self):
        with pytest.raises(ValueError):
            TokenizerConfig(punctuation_mode="sideways")

    @settings(max_examples=200)
    @given(st.text(max_size=80))
    def test_deterministic_and_no_empty_tokens(self, raw):
        config = TokenizerConfig()
        first = tokenize(raw, config)
        second = tokenize(raw, config)
        assert first == second
        assert all(tok for tok in first.tokens)

    @settings(max_examples=100)
    @given(st.text(max_size=80))
    def test_retokenizing_joined_tokens_is_stable(self, raw):
        config = TokenizerConfig()
        once = tokenize(raw, config).tokens
        again = tokenize(" ".join(once), config).tokens
        assert once == again


class TestRecordInvariants:
    def test_length_tokens_matches_summary(self):
        rec = SummaryRecord(
            id="r1",
            summary=tokenize("one two three"),
            architecture="BART",
            test_dataset="d",
        )
        assert rec.length_tokens == 3

    def test_human_cannot_have_train_dataset(self):
        with pytest.raises(ValueError, match="Human"):
            SummaryRecord(
                id="r1",
                summary=tokenize("text"),
                architecture="Human",
                test_dataset="d",
                train_dataset="d",
            )

    def test_empty_id_rejected(self):
        with pytest.raises(ValueError):
            SummaryRecord(id="", summary=tokenize("x"), architecture="A", test_dataset="d")

    def test_duplicate_ids_rejected_by_corpus(self):
        rec = SummaryRecord(id="dup", summary=tokenize("x"), architecture="A", test_dataset="d")
        with pytest.raises(InputError, match="dup"):
            Corpus(records=(rec, rec), name="c")


class TestLoadCorpus:
    def _lines(self):
        return [
            {"id": "s1", "summary": "alpha beta gamma", "architecture": "BART",
             "train_dataset": "x", "test_dataset": "y"},
            {"id": "s2", "summary": "delta epsilon", "architecture": "T5",
             "train_dataset": "x", "test_dataset": "y"},
            {"id": "s3", "summary": "zeta", "architecture": "Human", "test_dataset": "y"},
        ]

    def test_loads_records_in_file_order(self, tmp_path):
        path = write_jsonl(tmp_path / "c.jsonl", self._lines())
        corpus = load_corpus(path)
        assert [r.id for r in corpus.records] == ["s1", "s2", "s3"]
        assert corpus.name == "c"
        assert corpus.records[0].length_tokens == 3

    def test_duplicate_id_error_names_id_and_lines(self, tmp_path):
        lines = self._lines()
        lines.append(dict(lines[0]))
        path = write_jsonl(tmp_path / "c.jsonl", lines)
        with pytest.raises(CorpusLoadError, match=r"c\.jsonl:4: duplicate id 's1'"):
            load_corpus(path)

    def test_missing_required_field_reports_line(self, tmp_path):
        lines = self._lines()
        del lines[1]["summary"]
        path = write_jsonl(tmp_path / "c.jsonl", lines)
        with pytest.raises(CorpusLoadError, match=r"c\.jsonl:2: missing required field 'summary'"):
            load_corpus(path)

    def test_null_or_non_string_fields_rejected(self, tmp_path):
        lines = self._lines()
        lines[0]["summary"] = None
        path = write_jsonl(tmp_path / "c.jsonl", lines)
        with pytest.raises(CorpusLoadError, match=r"c\.jsonl:1: field 'summary' must be a string"):
            load_corpus(path)
        lines = self._lines()
        lines[1]["id"] = 42
        path = write_jsonl(tmp_path / "d.jsonl", lines)
        with pytest.raises(CorpusLoadError, match=r"d\.jsonl:2: field 'id' must be a string"):
            load_corpus(path)
        lines = self._lines()
        lines[2]["input"] = ["not", "a", "string"]
        path = write_jsonl(tmp_path / "e.jsonl", lines)
        with pytest.raises(CorpusLoadError, match=r"e\.jsonl:3: field 'input'"):
            load_corpus(path)

    def test_invalid_json_reports_line(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text('{"id": "s1", "summary": "ok", "architecture": "A", "test_dataset": "d"}\n{oops\n')
        with pytest.raises(CorpusLoadError, match=r"c\.jsonl:2: invalid JSON"):
            load_corpus(path)

    def test_non_object_line_rejected(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text("[1, 2]\n")
        with pytest.raises(CorpusLoadError, match="expected a JSON object"):
            load_corpus(path)

    def test_blank_lines_skipped(self, tmp_path):
        path = tmp_path / "c.jsonl"
        body = "\n".join(json.dumps(obj) for obj in self._lines())
        path.write_text(body + "\n\n")
        assert len(load_corpus(path)) == 3

    def test_missing_file(self, tmp_path):
        with pytest.raises(CorpusLoadError):
            load_corpus(tmp_path / "absent.jsonl")

    def test_human_with_train_dataset_rejected_with_line(self, tmp_path):
        lines = self._lines()
        lines[2]["train_dataset"] = "x"
        path = write_jsonl(tmp_path / "c.jsonl", lines)
        with pytest.raises(CorpusLoadError, match=r"c\.jsonl:3"):
            load_corpus(path)

    def test_architecture_whitelist(self, tmp_path):
        path = write_jsonl(tmp_path / "c.jsonl", self._lines())
        with pytest.raises(CorpusLoadError, match="unknown architecture label 'T5'"):
            load_corpus(path, allowed_architectures={"BART", "Human"})

    def test_dataset_whitelist(self, tmp_path):
        path = write_jsonl(tmp_path / "c.jsonl", self._lines())
        with pytest.raises(CorpusLoadError, match="unknown dataset label"):
            load_corpus(path, allowed_datasets={"y"})
        corpus = load_corpus(path, allowed_datasets={"x", "y"})
        assert len(corpus) == 3

    def test_round_trip(self, tmp_path):
        lines = self._lines()
        lines[0]["input"] = "Original document text, with Punctuation!"
        path = write_jsonl(tmp_path / "c.jsonl", lines)
        config = TokenizerConfig()
        corpus = load_corpus(path, config)
        out = tmp_path / "copy.jsonl"
        save_corpus(corpus, out)
        reloaded = load_corpus(out, config, name=corpus.name)
        assert reloaded == corpus

    def test_token_count_aggregates(self, tmp_path):
        path = write_jsonl(tmp_path / "c.jsonl", self._lines())
        corpus = load_corpus(path)
        total = sum(r.length_tokens for r in corpus.records)
        assert total == sum(len(r.summary.tokens) for r in corpus.records)

    def test_empty_summary_allowed(self, tmp_path):
        lines = [{"id": "s1", "summary": "", "architecture": "A", "test_dataset": "d"}]
        path = write_jsonl(tmp_path / "c.jsonl", lines)
        corpus = load_corpus(path)
        assert corpus.records[0].length_tokens == 0
