import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcalc.links import alexander_polynomial, components
from braidcalc.templates import (
    BlockSkeleton,
    BlockSlot,
    BraidingAssignment,
    Crossing,
    Destabilize,
    Exchange,
    Flype,
    InconsistentCorrespondence,
    MissingAssignment,
    Template,
    TemplateError,
    WeightConstraintViolation,
    WidthMismatch,
    builtin_template,
    component_correspondence,
    format_template_description,
    instantiate,
    parse_template_description,
    per_component_beta_delta,
)
from braidcalc.words import BraidWord, format_word, parse_word

FLYPE_NEG = builtin_template(Flype(-1))

LINK_ASSIGNMENT = BraidingAssignment.from_mapping(
    {"P": parse_word("s1^3"), "R": parse_word("s1^4"), "Q": parse_word("s1^-5")}
)
FAMILY_ASSIGNMENT = BraidingAssignment.from_mapping(
    {"P": parse_word("s1^5"), "R": parse_word("s1^6"), "Q": parse_word("s1^8")}
)


def assignment_for(template, words):
    return BraidingAssignment.from_mapping(
        {bid: words[bid] for bid in template.block_widths()}
    )


def test_flype_instantiation_frozen():
    assert format_word(instantiate(FLYPE_NEG.plus, FAMILY_ASSIGNMENT)) == "s1^5 s2^6 s1^8 s2^-1"
    assert format_word(instantiate(FLYPE_NEG.minus, FAMILY_ASSIGNMENT)) == "s1^5 s2^-1 s1^8 s2^6"
    assert format_word(instantiate(FLYPE_NEG.plus, LINK_ASSIGNMENT)) == "s1^3 s2^4 s1^-5 s2^-1"
    assert format_word(instantiate(FLYPE_NEG.minus, LINK_ASSIGNMENT)) == "s1^3 s2^-1 s1^-5 s2^4"


def test_empty_assignment_keeps_fixed_crossings_only():
    empty = BraidingAssignment.from_mapping(
        {bid: BraidWord(2, ()) for bid in ("P", "Q", "R")}
    )
    assert instantiate(FLYPE_NEG.plus, empty) == BraidWord(3, ((2, -1),))
    assert instantiate(FLYPE_NEG.minus, empty) == BraidWord(3, ((2, -1),))


def test_instantiate_errors():
    with pytest.raises(MissingAssignment):
        instantiate(FLYPE_NEG.plus, BraidingAssignment.from_mapping({"P": parse_word("s1")}))
    wrong_width = BraidingAssignment.from_mapping(
        {"P": parse_word("n=3 s1 s2"), "Q": parse_word("s1"), "R": parse_word("s1")}
    )
    with pytest.raises(WidthMismatch):
        instantiate(FLYPE_NEG.plus, wrong_width)


def test_destabilize_template_shapes():
    t = builtin_template(Destabilize(1))
    a = BraidingAssignment.from_mapping({"P": parse_word("s1^3")})
    assert instantiate(t.plus, a) == parse_word("n=3 s1^3 s2")
    assert instantiate(t.minus, a) == parse_word("s1^3")

    # weight 2: the cable block spans three strands, the loop a fourth
    t2 = builtin_template(Destabilize(-1, weight=2))
    a2 = BraidingAssignment.from_mapping({"P": parse_word("n=3 s1 s2^2")})
    assert instantiate(t2.plus, a2) == parse_word("n=4 s1 s2^2 s3^-1")
    assert instantiate(t2.minus, a2) == parse_word("n=3 s1 s2^2")


def test_exchange_template_weight_one_matches_word_form():
    t = builtin_template(Exchange(1))
    a = BraidingAssignment.from_mapping({"P": parse_word("s1^2"), "Q": parse_word("s1^-3")})
    assert instantiate(t.plus, a) == parse_word("n=3 s1^2 s2 s1^-3 s2^-1")
    assert instantiate(t.minus, a) == parse_word("n=3 s1^2 s2^-1 s1^-3 s2")


def test_exchange_template_weight_two_bands():
    t = builtin_template(Exchange(2))
    a = BraidingAssignment.from_mapping(
        {"P": parse_word("n=3 s1 s2"), "Q": parse_word("s1^2")}
    )
    assert instantiate(t.plus, a) == parse_word("n=4 s1 s2 s3 s2 s1^2 s2^-1 s3^-1")
    assert instantiate(t.minus, a) == parse_word("n=4 s1 s2 s3^-1 s2^-1 s1^2 s2 s3")


def test_weight_constraint_checked_before_cabling_support():
    with pytest.raises(WeightConstraintViolation):
        builtin_template(Flype(-1, w=2, k_prime=1))
    # admissible weights beyond 1 are validated first, then rejected as unsupported
    with pytest.raises(NotImplementedError):
        builtin_template(Flype(-1, w=1, w_prime=2, k=1, k_prime=2))
    with pytest.raises(WeightConstraintViolation):
        builtin_template(Exchange(0))
    with pytest.raises(TemplateError):
        builtin_template(Destabilize(2))


def test_skeleton_validation():
    with pytest.raises(TemplateError):
        BlockSkeleton(3, (Crossing(3, 1),))
    with pytest.raises(TemplateError):
        BlockSkeleton(3, (BlockSlot("P", 3, 2),))
    with pytest.raises(TemplateError):
        BlockSkeleton(4, (BlockSlot("P", 1, 2), BlockSlot("P", 3, 2)))
    with pytest.raises(TemplateError):
        BlockSlot("P", 1, 1)
    with pytest.raises(TemplateError):
        Template(
            BlockSkeleton(3, (BlockSlot("P", 1, 2),)),
            BlockSkeleton(3, (BlockSlot("Q", 1, 2),)),
            (("P", "fixed"),),
        )


def test_obstruction_table_frozen():
    # the two-component link where the flype swaps the component invariants
    assert per_component_beta_delta(FLYPE_NEG, LINK_ASSIGNMENT) == [
        (1, -1, -3),
        (2, -3, -1),
    ]


def test_family_knot_single_component_table():
    assert per_component_beta_delta(FLYPE_NEG, FAMILY_ASSIGNMENT) == [(1, 15, 15)]


def test_exchange_identity_assignment_zero_deltas():
    t = builtin_template(Exchange(1))
    a = BraidingAssignment.from_mapping({"P": BraidWord(2, ()), "Q": BraidWord(2, ())})
    assert per_component_beta_delta(t, a) == [(1, -1, -1), (2, -1, -1), (3, -1, -1)]


def test_correspondence_is_a_bijection():
    corr = component_correspondence(FLYPE_NEG, LINK_ASSIGNMENT)
    assert corr == {1: 1, 2: 2} or set(corr.values()) == {1, 2}
    assert len(set(corr.values())) == len(corr)


def test_identity_port_map_on_middle_block_is_inconsistent():
    broken = Template(FLYPE_NEG.plus, FLYPE_NEG.minus,
                      (("P", "fixed"), ("Q", "fixed"), ("R", "fixed")))
    with pytest.raises(InconsistentCorrespondence):
        component_correspondence(broken, LINK_ASSIGNMENT)


def test_description_roundtrip():
    text = format_template_description(Flype(-1), LINK_ASSIGNMENT)
    kind, template, assignment = parse_template_description(text)
    assert kind == Flype(-1)
    assert template == FLYPE_NEG
    assert assignment == LINK_ASSIGNMENT
    with pytest.raises(TemplateError):
        parse_template_description('{"kind": "mystery", "assignment": {}}')


def words_on(strands: int):
    letter = st.tuples(
        st.integers(min_value=1, max_value=max(strands - 1, 1)),
        st.sampled_from((1, -1)),
    )
    return st.builds(
        lambda ls: BraidWord(strands, tuple(ls)),
        st.lists(letter, max_size=7),
    )


@st.composite
def template_cases(draw):
    kind = draw(
        st.one_of(
            st.builds(Flype, st.sampled_from((1, -1))),
            st.builds(Exchange, st.integers(min_value=1, max_value=3)),
            st.builds(
                Destabilize,
                st.sampled_from((1, -1)),
                st.integers(min_value=1, max_value=3),
            ),
        )
    )
    template = builtin_template(kind)
    assignment = BraidingAssignment.from_mapping(
        {bid: draw(words_on(w)) for bid, w in template.block_widths().items()}
    )
    return kind, template, assignment


@settings(max_examples=120, deadline=None)
@given(template_cases())
def test_instantiations_present_the_same_link(case):
    kind, template, assignment = case
    plus = instantiate(template.plus, assignment)
    minus = instantiate(template.minus, assignment)
    assert alexander_polynomial(plus) == alexander_polynomial(minus)
    if isinstance(kind, (Flype, Exchange)):
        assert plus.exponent_sum() == minus.exponent_sum()
    else:
        assert plus.exponent_sum() - minus.exponent_sum() == kind.sign


@settings(max_examples=120, deadline=None)
@given(template_cases())
def test_correspondence_glues_for_every_assignment(case):
    kind, template, assignment = case
    table = per_component_beta_delta(template, assignment)
    corr = component_correspondence(template, assignment)
    assert len(set(corr.values())) == len(corr)
    assert len(corr) == len(components(instantiate(template.plus, assignment)))
    if isinstance(kind, (Flype, Exchange)):
        assert sum(r[1] for r in table) == sum(r[2] for r in table)
    elif kind.sign == 1:
        assert all(bp == bm for _, bp, bm in table)
    else:
        # removing a negatively crossed loop raises that component's
        # self-linking by two and touches nothing else
        diffs = [(bp, bm) for _, bp, bm in table if bp != bm]
        assert len(diffs) == 1 and diffs[0][1] == diffs[0][0] + 2
