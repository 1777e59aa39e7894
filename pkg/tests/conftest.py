from __future__ import annotations

from hypothesis import strategies as st

from braidcalc.words import BraidWord


def braid_words(
    min_strands: int = 1,
    max_strands: int = 5,
    max_length: int = 12,
) -> st.SearchStrategy[BraidWord]:
    def build(n: int) -> st.SearchStrategy[BraidWord]:
        if n == 1:
            return st.just(BraidWord(1, ()))
        letter = st.tuples(
            st.integers(min_value=1, max_value=n - 1), st.sampled_from((1, -1))
        )
        return st.builds(
            BraidWord,
            st.just(n),
            st.lists(letter, max_size=max_length).map(tuple),
        )

    return st.integers(min_value=min_strands, max_value=max_strands).flatmap(build)


def braid_words_3(max_length: int = 12) -> st.SearchStrategy[BraidWord]:
    return braid_words(min_strands=3, max_strands=3, max_length=max_length)
