import pytest

from welldom.fixtures import Fixture, builtin_fixtures, check_fixture, run_builtin_checks
from welldom.named_graphs import path_graph


class TestFixtureValidation:
    def test_source_tags_must_cover_expected_keys(self):
        with pytest.raises(ValueError, match="untagged or orphan"):
            Fixture("bad", path_graph(2), expected={"edge_count": 1}, sources={})

    def test_source_tags_must_be_known(self):
        with pytest.raises(ValueError, match="unknown source tags"):
            Fixture(
                "bad",
                path_graph(2),
                expected={"edge_count": 1},
                sources={"edge_count": "guessed"},
            )

    def test_unknown_expectation_key_is_a_failure(self):
        fixture = Fixture(
            "odd", path_graph(2), expected={"girth": 0}, sources={"girth": "hand"}
        )
        result = check_fixture(fixture)
        assert not result.ok
        assert "unknown expectation key 'girth'" in result.failures[0]

    def test_wrong_frozen_value_is_caught(self):
        fixture = Fixture(
            "off_by_one",
            path_graph(3),
            expected={"edge_count": 3},
            sources={"edge_count": "definition"},
        )
        result = check_fixture(fixture)
        assert result.failures == ("edge_count: expected 3, got 2",)

    def test_bogus_witness_is_caught(self):
        fixture = Fixture(
            "bad_witness",
            path_graph(4),
            expected={"minimal_dominating_witness": [0, 1, 2, 3]},
            sources={"minimal_dominating_witness": "hand"},
        )
        result = check_fixture(fixture)
        assert not result.ok and "not a minimal dominating set" in result.failures[0]


class TestBuiltinCorpus:
    def test_names_are_unique(self):
        names = [f.name for f in builtin_fixtures()]
        assert len(names) == len(set(names)) == 15

    def test_every_builtin_fixture_checks_out(self):
        results = run_builtin_checks()
        bad = [r for r in results if not r.ok]
        assert bad == [], [(r.name, r.failures) for r in bad]

    def test_corpus_covers_both_outcomes(self):
        by_name = {f.name: f for f in builtin_fixtures()}
        covered = [f.expected.get("well_covered") for f in by_name.values()]
        assert True in covered and False in covered
        # at least one fixture exercises the anchored/unanchored split
        assert "fringe_gap" in by_name
        assert by_name["fringe_gap"].expected["anchored_fringe"] == []
