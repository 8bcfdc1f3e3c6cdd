import pytest
from hypothesis import given, strategies as st

from cobweb.errors import DomainError, RangeError, SpecParseError
from cobweb.sequence import Kind, SequenceSpec, evaluate, parse_spec, render, values


def test_parse_const():
    assert parse_spec("const:3") == SequenceSpec(Kind.CONSTANT, k=3)


def test_parse_nat():
    spec = parse_spec("nat")
    assert spec.kind is Kind.NATURALS
    assert evaluate(spec, 2) == 3


@pytest.mark.parametrize("text", ["list:1,0,5", "const:0", "list:0", "list:2,3", "list:0,2"])
def test_domain_errors(text):
    with pytest.raises(DomainError):
        parse_spec(text)


@pytest.mark.parametrize("text,token", [("fibo", "fibo"), ("const:x", "x"), ("list:1,,2", ""), ("poly:3", "poly")])
def test_parse_errors_name_token(text, token):
    with pytest.raises(SpecParseError) as exc:
        parse_spec(text)
    assert exc.value.token == token
    assert repr(token) in str(exc.value)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("fib", [1, 1, 2, 3, 5, 8, 13]),
        ("nat", [1, 2, 3, 4, 5, 6, 7]),
        ("odd", [1, 3, 5, 7, 9, 11, 13]),
        ("even", [1, 2, 4, 6, 8, 10, 12]),
        ("const:4", [1, 4, 4, 4, 4, 4, 4]),
    ],
)
def test_values(text, expected):
    spec = parse_spec(text)
    assert values(spec, 6) == expected
    assert [evaluate(spec, i) for i in range(7)] == expected


def test_odd_and_even_spot_values():
    assert evaluate(parse_spec("odd"), 3) == 7
    assert evaluate(parse_spec("even"), 4) == 8


def test_explicit_leading_zero_is_dropped():
    spec = parse_spec("list:0,1,1,2,3")
    assert spec.terms == (1, 1, 2, 3)
    assert render(spec) == "list:1,1,2,3"


def test_explicit_out_of_range():
    spec = parse_spec("list:1,2,3")
    assert evaluate(spec, 2) == 3
    with pytest.raises(RangeError):
        evaluate(spec, 3)
    with pytest.raises(RangeError):
        evaluate(parse_spec("fib"), -1)


def test_name_is_rendered_form():
    assert parse_spec(" const:7 ").name == "const:7"


specs = st.one_of(
    st.sampled_from([SequenceSpec(k) for k in (Kind.FIBONACCI, Kind.NATURALS, Kind.ODD, Kind.EVEN)]),
    st.integers(1, 10**6).map(SequenceSpec.constant),
    st.lists(st.integers(1, 50), max_size=20).map(lambda xs: SequenceSpec.explicit([1] + xs)),
)


@given(specs)
def test_render_parse_round_trip(spec):
    assert parse_spec(render(spec)) == spec


@given(specs)
def test_levels_non_empty(spec):
    top = 64 if spec.terms is None else len(spec.terms) - 1
    vals = values(spec, top)
    assert vals[0] == 1
    assert all(v >= 1 for v in vals)
