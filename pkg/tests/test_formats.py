import random
from fractions import Fraction as F

import pytest
from conftest import STAR_R, star_net
from hypothesis import given, settings
from hypothesis import strategies as st

from circnet import (
    NotSymmetric,
    ParseError,
    ValidationError,
    effective_resistance_matrix,
    parse_matrix,
    parse_network,
    serialize_matrix,
    serialize_network,
)
from circnet.formats import parse_rational
from circnet.generate import random_planar_network

STAR_TEXT = """\
# unit star
n 3
v 1 boundary
v 2 boundary
v 3 boundary
v 4 inner
e 1 1 4 1
e 2 2 4 1
e 3 3 4 1
rot 4 1 2 3   # clockwise
"""


class TestNetworkFormat:
    def test_parse_star(self):
        net = parse_network(STAR_TEXT)
        assert net.n == 3 and net.inner == (4,)
        assert effective_resistance_matrix(net) == STAR_R
        assert net.rotation[4] == (1, 2, 3) and net.rotation[1] == (1,)

    def test_canonical_round_trip(self):
        text = serialize_network(star_net())
        assert serialize_network(parse_network(text)) == text

    def test_no_edges(self):
        net = parse_network("n 2\nv 1 boundary\nv 2 boundary\n")
        assert net.edges == () and not net.connected

    def test_unknown_vertex_reports_line(self):
        with pytest.raises(ValidationError) as info:
            parse_network("n 2\nv 1 boundary\nv 2 boundary\ne 1 1 9 1\n")
        assert info.value.line == 4 and "line 4" in str(info.value)

    def test_bad_token_reports_column(self):
        with pytest.raises(ParseError) as info:
            parse_network("n 2\nv 1 boundary\nv 2 boundary\ne 1 1 2 abc\n")
        assert (info.value.line, info.value.column) == (4, 9)

    def test_boundary_ids_must_be_prefix(self):
        with pytest.raises(ValidationError):
            parse_network("n 2\nv 1 boundary\nv 3 boundary\n")

    def test_negative_conductance(self):
        with pytest.raises(ValidationError):
            parse_network("n 2\nv 1 boundary\nv 2 boundary\ne 1 1 2 -1\n")

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_network("v 1 boundary\n")

    @given(st.integers(0, 10**6))
    @settings(max_examples=40, deadline=None)
    def test_random_round_trip(self, seed):
        rng = random.Random(seed)
        net = random_planar_network(rng.randint(2, 6), rng.randint(0, 5), rng)
        text = serialize_network(net)
        back = parse_network(text)
        assert back == net and serialize_network(back) == text


class TestRationals:
    def test_decimals_are_exact(self):
        assert parse_rational("0.1") == F(1, 10)
        assert parse_rational("-3/7") == F(-3, 7)

    @pytest.mark.parametrize("tok", ["1e3", "inf", "nan", "1/0", "x"])
    def test_rejects(self, tok):
        with pytest.raises(ParseError):
            parse_rational(tok)


class TestMatrixFormat:
    def test_round_trip(self):
        text = serialize_matrix(STAR_R)
        assert text == "3\n0 2 2\n2 0 2\n2 2 0\n"
        assert parse_matrix(text, "metric") == STAR_R

    def test_rectangular_header(self):
        M = [[F(1, 2), F(-3)]]
        assert serialize_matrix(M) == "1 2\n1/2 -3\n"
        assert parse_matrix(serialize_matrix(M)) == M

    def test_asymmetric_metric(self):
        with pytest.raises(NotSymmetric):
            parse_matrix("2\n0 1\n2 0\n", "metric")
        assert parse_matrix("2\n0 1\n2 0\n") == [[0, 1], [2, 0]]

    def test_row_length(self):
        with pytest.raises(ParseError) as info:
            parse_matrix("2\n0 1\n1\n")
        assert info.value.line == 3

    def test_row_count(self):
        with pytest.raises(ParseError):
            parse_matrix("3\n0 1 1\n1 0 1\n")

    @given(st.lists(st.lists(st.fractions(max_denominator=50), min_size=3, max_size=3),
                    min_size=1, max_size=4))
    def test_hypothesis_round_trip(self, M):
        assert parse_matrix(serialize_matrix(M)) == M
