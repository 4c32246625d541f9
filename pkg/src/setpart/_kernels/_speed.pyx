# cython: language_level=3
"""Compiled enumeration kernels.

Same interface and iteration order as ``_pure``; exhaustive loops run on C
arrays so that full sweeps at the documented ceilings stay cheap.
"""

from libc.stdlib cimport calloc, free

NAME = "c"


def iter_rgs(int n):
    """Yield every restricted growth string of length n, lexicographically."""
    cdef int i, k
    cdef int *w
    cdef int *m
    if n < 0:
        raise ValueError("word length must be nonnegative")
    if n == 0:
        yield ()
        return
    w = <int *> calloc(n, sizeof(int))
    m = <int *> calloc(n, sizeof(int))
    if w == NULL or m == NULL:
        free(w)
        free(m)
        raise MemoryError()
    try:
        for i in range(n):
            w[i] = 1
            m[i] = 1
        while True:
            yield tuple([w[i] for i in range(n)])
            i = n - 1
            while i > 0 and w[i] > m[i - 1]:
                i -= 1
            if i == 0:
                return
            w[i] += 1
            if w[i] > m[i]:
                m[i] = w[i]
            for k in range(i + 1, n):
                w[k] = 1
                m[k] = m[k - 1]
    finally:
        free(w)
        free(m)


def count_rgs(int n):
    """Count restricted growth strings of length n by walking all of them."""
    cdef int i, k
    cdef unsigned long long count = 0
    cdef int *w
    cdef int *m
    if n < 0:
        raise ValueError("word length must be nonnegative")
    if n == 0:
        return 1
    w = <int *> calloc(n, sizeof(int))
    m = <int *> calloc(n, sizeof(int))
    if w == NULL or m == NULL:
        free(w)
        free(m)
        raise MemoryError()
    try:
        for i in range(n):
            w[i] = 1
            m[i] = 1
        while True:
            count += 1
            i = n - 1
            while i > 0 and w[i] > m[i - 1]:
                i -= 1
            if i == 0:
                return count
            w[i] += 1
            if w[i] > m[i]:
                m[i] = w[i]
            for k in range(i + 1, n):
                w[k] = 1
                m[k] = m[k - 1]
    finally:
        free(w)
        free(m)


cdef struct _NCState:
    int n
    int adj_prefix
    bint cyclic
    int *w
    int *first   # value -> 1 + first position, 0 if unseen
    int *last
    bint *bad    # bad[v]: some a < v occurs both before and after a v
    int *undo    # scratch for values flagged bad at the current depth
    unsigned long long count


cdef unsigned long long _nc_count(_NCState *st, int i, int mx) noexcept:
    cdef int c, b, nundo, u
    cdef bint seen_before
    cdef int saved_last
    cdef unsigned long long total = 0
    if i == st.n:
        if st.cyclic and st.w[st.n - 1] == st.w[0]:
            return 0
        return 1
    for c in range(1, mx + 2):
        if st.bad[c]:
            continue
        if 1 <= i <= st.adj_prefix and st.w[i - 1] == c:
            continue
        st.w[i] = c
        seen_before = st.first[c] != 0
        saved_last = st.last[c]
        st.last[c] = i + 1
        nundo = 0
        if seen_before:
            for b in range(c + 1, mx + 1):
                if not st.bad[b] and st.last[b] > st.first[c]:
                    st.bad[b] = True
                    st.undo[st.n * i + nundo] = b
                    nundo += 1
        else:
            st.first[c] = i + 1
        total += _nc_count(st, i + 1, mx if c <= mx else c)
        for u in range(nundo):
            st.bad[st.undo[st.n * i + u]] = False
        st.last[c] = saved_last
        if not seen_before:
            st.first[c] = 0
    return total


def _count_noncrossing_filtered(int n, int adj_prefix, bint cyclic):
    cdef _NCState st
    cdef unsigned long long out
    if n == 0:
        return 1
    st.n = n
    st.adj_prefix = adj_prefix
    st.cyclic = cyclic
    st.w = <int *> calloc(n, sizeof(int))
    st.first = <int *> calloc(n + 2, sizeof(int))
    st.last = <int *> calloc(n + 2, sizeof(int))
    st.bad = <bint *> calloc(n + 2, sizeof(bint))
    st.undo = <int *> calloc(n * (n + 2), sizeof(int))
    if (st.w == NULL or st.first == NULL or st.last == NULL
            or st.bad == NULL or st.undo == NULL):
        free(st.w); free(st.first); free(st.last); free(st.bad); free(st.undo)
        raise MemoryError()
    try:
        out = _nc_count(&st, 0, 0)
        return out
    finally:
        free(st.w); free(st.first); free(st.last); free(st.bad); free(st.undo)


def count_noncrossing(int n):
    if n < 0:
        raise ValueError("word length must be nonnegative")
    return _count_noncrossing_filtered(n, 0, False)


def count_noncrossing_cyclic_smirnov(int n):
    """Count 1212-avoiding words with no equal cyclically-adjacent letters.

    A length-1 word is its own cyclic neighbour, so the count at n=1 is 0.
    """
    if n < 0:
        raise ValueError("word length must be nonnegative")
    return _count_noncrossing_filtered(n, n - 1 if n > 1 else 0, n >= 1)


def count_noncrossing_prefix_smirnov(int n, int j):
    """Count 1212-avoiding words with w[i] != w[i+1] for the first j positions."""
    if n < 0:
        raise ValueError("word length must be nonnegative")
    return _count_noncrossing_filtered(n, j, False)


def iter_noncrossing(int n):
    """Yield all 1212-avoiding restricted growth strings of length n."""
    cdef list w
    cdef list first
    cdef list last
    cdef list bad
    if n < 0:
        raise ValueError("word length must be nonnegative")
    if n == 0:
        yield ()
        return
    w = [0] * n
    first = [0] * (n + 2)
    last = [0] * (n + 2)
    bad = [False] * (n + 2)
    # Python-object state: generator frames cannot hold C arrays safely
    # across yields, and iteration cost is dominated by tuple creation.
    yield from _iter_nc(n, w, first, last, bad, 0, 0)


def _iter_nc(int n, list w, list first, list last, list bad, int i, int mx):
    cdef int c, b
    cdef bint seen_before
    cdef int saved_last
    if i == n:
        yield tuple(w)
        return
    for c in range(1, mx + 2):
        if bad[c]:
            continue
        w[i] = c
        seen_before = first[c] != 0
        saved_last = last[c]
        last[c] = i + 1
        newly_bad = []
        if seen_before:
            for b in range(c + 1, mx + 1):
                if not bad[b] and last[b] > first[c]:
                    bad[b] = True
                    newly_bad.append(b)
        else:
            first[c] = i + 1
        yield from _iter_nc(n, w, first, last, bad, i + 1, mx if c <= mx else c)
        for b in newly_bad:
            bad[b] = False
        last[c] = saved_last
        if not seen_before:
            first[c] = 0
