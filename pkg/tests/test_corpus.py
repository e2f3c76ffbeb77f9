"""Testes da execução do corpus."""
import pytest

from config.settings import settings
from src.verification.corpus import CorpusRunner, load_corpus, power_exponents, run_corpus
from tests.conftest import CORPUS_DIR, spec_path, spec_text


@pytest.fixture(autouse=True)
def quiet_progress(monkeypatch):
    monkeypatch.setattr(settings, "SHOW_PROGRESS", False)


class TestHelpers:
    def test_power_exponents(self):
        assert power_exponents(1) == [1]
        assert power_exponents(12) == [5, 7, 11]

    def test_load_corpus(self):
        paths = load_corpus(CORPUS_DIR)
        assert len(paths) == 7
        assert paths == sorted(paths)

    def test_load_missing_directory(self, tmp_path):
        with pytest.raises(ValueError):
            load_corpus(tmp_path / "nada")


class TestRunCorpus:
    @pytest.mark.asyncio
    async def test_no_specs_single_parameter(self):
        reports = await run_corpus([], 1)
        assert len(reports) == 1
        assert (reports[0].check_name, reports[0].subject, reports[0].passed) == ("rlinv", "n=1", True)

    @pytest.mark.asyncio
    async def test_rejects_bad_n_max(self):
        with pytest.raises(ValueError):
            await run_corpus([], 0)

    @pytest.mark.asyncio
    async def test_bundled_corpus_passes(self):
        reports = await run_corpus(load_corpus(CORPUS_DIR), 6)
        failed = [(r.check_name, r.subject) for r in reports if not r.passed]
        assert not failed
        names = {r.check_name for r in reports}
        assert names == {"App", "MT", "Omega", "PL", "TL", "prime_power_kernel", "rlinv", "tensor"}
        assert sum(1 for r in reports if r.check_name == "rlinv") == 6
        assert sum(1 for r in reports if r.check_name == "prime_power_kernel") == 4
        assert [r.subject for r in reports if r.check_name == "tensor"] == ["m=2, M=3"]
        assert sum(1 for r in reports if r.check_name == "MT") == 7

    @pytest.mark.asyncio
    async def test_reports_are_sorted(self):
        reports = await run_corpus([spec_path("s4_a4.txt"), spec_path("a4_v4.txt")], 4)
        keys = [(r.check_name, r.subject) for r in reports]
        assert keys == sorted(keys)

    @pytest.mark.asyncio
    async def test_broken_spec_is_isolated(self):
        broken = "name: quebrado\ndegree: 4\ngenerators:\n(1 2 9)\nsubgroup:\n"
        reports = await run_corpus([spec_text("s4_a4.txt"), broken], 1)
        parse = [r for r in reports if r.check_name == "parse"]
        assert len(parse) == 1
        assert parse[0].subject == "quebrado"
        assert not parse[0].passed
        assert "error" in parse[0].witnesses
        assert all(r.passed for r in reports if r.check_name != "parse")

    @pytest.mark.asyncio
    async def test_non_ascii_digit_is_a_parse_failure(self):
        broken = "name: sobrescrito\ndegree: 4\ngenerators:\n(1 ²)\nsubgroup:\n"
        reports = await run_corpus([spec_text("s4_a4.txt"), broken], 1)
        parse = [r for r in reports if r.check_name == "parse"]
        assert [r.subject for r in parse] == ["sobrescrito"]
        assert sum(1 for r in reports if r.check_name == "MT") == 1

    @pytest.mark.asyncio
    async def test_file_not_utf8_is_a_parse_failure(self, tmp_path):
        (tmp_path / "a_s4.txt").write_text(spec_text("s4_a4.txt"), encoding="utf-8")
        (tmp_path / "b_latin1.txt").write_bytes("# grupo simétrico\ndegree: 3\n".encode("latin-1"))
        reports = await run_corpus(load_corpus(tmp_path), 1)
        parse = [r for r in reports if r.check_name == "parse"]
        assert [r.subject for r in parse] == ["b_latin1"]
        assert "UTF-8" in parse[0].witnesses["error"]
        assert all(r.passed for r in reports if r.check_name != "parse")

    @pytest.mark.asyncio
    async def test_hypothesis_violation_is_reported(self):
        reports = await run_corpus([spec_path("c3xs4_v4.txt")], 1)
        hypothesis = [r for r in reports if r.check_name == "hypothesis"]
        assert len(hypothesis) == 1
        assert hypothesis[0].subject == "C3 x S4 / V4"

    @pytest.mark.asyncio
    async def test_unnamed_text_gets_position(self):
        text = "degree: 3\ngenerators:\n(1 2 3)\nsubgroup:\n"
        reports = await CorpusRunner(concurrency=1).run([text], 1)
        assert {r.subject for r in reports if r.check_name == "MT"} == {"spec-1"}

    @pytest.mark.asyncio
    async def test_deterministic(self):
        first = await run_corpus([spec_path("q8_i.txt")], 3)
        second = await run_corpus([spec_path("q8_i.txt")], 3)
        assert [r.model_dump_json() for r in first] == [r.model_dump_json() for r in second]
