"""Shared hypothesis strategies."""

from hypothesis import strategies as st


@st.composite
def rgs_words(draw, max_len=8):
    """A restricted-growth word as a tuple of ints, possibly empty."""
    n = draw(st.integers(min_value=0, max_value=max_len))
    word = []
    top = 0
    for _ in range(n):
        v = draw(st.integers(min_value=1, max_value=top + 1))
        word.append(v)
        if v > top:
            top = v
    return tuple(word)


@st.composite
def arbitrary_words(draw, max_len=6, alphabet=4):
    """Any word over {1..alphabet}, not necessarily restricted-growth."""
    n = draw(st.integers(min_value=0, max_value=max_len))
    return tuple(
        draw(st.integers(min_value=1, max_value=alphabet)) for _ in range(n)
    )
