"""Tests for the small König-Egerváry classification lists."""
import pytest

from annihilator.services.canonical_service import canonical_form
from annihilator.services.classification_service import (
    ALPHA_LE_2_NAMES,
    DISCONNECTED_ALPHA3_BELOW,
    DISCONNECTED_ALPHA3_EQUAL_NAMES,
    _named_graphs,
    verify_alpha_le_2_classification,
    verify_disconnected_alpha3,
)
from annihilator.services.graph_service import is_connected
from annihilator.services.independence_service import independence_number
from annihilator.services.kegraph_service import is_koenig_egervary


class TestNamedGraphs:
    """Test the named graphs the lists refer to."""

    def test_names_are_distinct_graphs(self):
        """Test no two names share an isomorphism class."""
        graphs = _named_graphs()
        forms = {canonical_form(g) for g in graphs.values()}
        assert len(forms) == len(graphs)

    @pytest.mark.parametrize("name", ALPHA_LE_2_NAMES)
    def test_alpha_le_2_members(self, name):
        """Test every listed graph is KE with alpha <= 2."""
        g = _named_graphs()[name]
        assert is_koenig_egervary(g)
        assert independence_number(g) <= 2

    @pytest.mark.parametrize("name", DISCONNECTED_ALPHA3_EQUAL_NAMES + list(DISCONNECTED_ALPHA3_BELOW))
    def test_disconnected_members(self, name):
        """Test every listed graph is disconnected KE with alpha = 3."""
        g = _named_graphs()[name]
        assert not is_connected(g)
        assert is_koenig_egervary(g)
        assert independence_number(g) == 3


class TestAlphaAtMostTwo:
    """Test the alpha <= 2 classification."""

    def test_reproduced(self):
        """Test exactly the ten listed graphs appear, each with alpha = h."""
        outcome = verify_alpha_le_2_classification()
        assert outcome.passed
        assert sorted(w.name for w in outcome.witnesses) == sorted(ALPHA_LE_2_NAMES)
        assert outcome.missing == []
        assert outcome.unexpected == []
        assert all(w.report.alpha == w.report.h for w in outcome.witnesses)


class TestDisconnectedAlphaThree:
    """Test the disconnected alpha = 3 lists."""

    @pytest.fixture(scope="class")
    def outcome(self):
        return verify_disconnected_alpha3()

    def test_passed(self, outcome):
        """Test both lists are reproduced without failures."""
        assert outcome.passed
        assert outcome.missing == []
        assert outcome.failures == []

    def test_equal_list(self, outcome):
        """Test the alpha = h list and its maximal sets."""
        assert sorted(w.name for w in outcome.witnesses) == sorted(DISCONNECTED_ALPHA3_EQUAL_NAMES)
        for witness in outcome.witnesses:
            assert witness.maximal_mis_count == len(witness.report.mis_annotations)

    def test_below_list(self, outcome):
        """Test the three graphs with alpha < h."""
        below = {w.name: w for w in outcome.below_witnesses}
        assert set(below) == set(DISCONNECTED_ALPHA3_BELOW)
        assert below["K2+(K3+e)"].maximal_mis_count == 0
        assert 0 < below["K2+P4"].maximal_mis_count < len(below["K2+P4"].report.mis_annotations)
        assert all(w.report.alpha < w.report.h for w in below.values())
