"""Pure-Python reference implementation of the enumeration kernels.

The compiled twin (qcube._kernels, built from _kernels.pyx) has identical
signatures and semantics; qcube.kernels picks whichever is available.
Rows are int bitsets, assumed linearly independent, so the Gray-code walk
visits every span element exactly once.
"""


def span_weight_histogram(rows, nbits):
    """Hamming-weight histogram over the XOR span of `rows`.

    Returns a list of nbits+1 counts; entry w is the number of span
    elements of weight w. 2^len(rows) words are visited.
    """
    k = len(rows)
    if k > 30:
        raise ValueError("span enumeration limited to 30 generators")
    hist = [0] * (nbits + 1)
    cur = 0
    hist[0] = 1
    for i in range(1, 1 << k):
        cur ^= rows[(i & -i).bit_length() - 1]
        hist[cur.bit_count()] += 1
    return hist


def span_mp_histogram(rows, mask, nbits):
    """Joint (m, p) histogram over the XOR span of `rows`.

    For each span element w: p = |w AND mask|, m = |w| - p. Returns a
    nested list H with H[m][p] counts, shape (nbits+1) x (|mask|+1).
    """
    k = len(rows)
    if k > 30:
        raise ValueError("span enumeration limited to 30 generators")
    pmax = mask.bit_count()
    hist = [[0] * (pmax + 1) for _ in range(nbits + 1)]
    hist[0][0] = 1
    cur = 0
    for i in range(1, 1 << k):
        cur ^= rows[(i & -i).bit_length() - 1]
        p = (cur & mask).bit_count()
        hist[cur.bit_count() - p][p] += 1
    return hist


def coset_minima(words, coset):
    """For each word w, the minimum of w ^ c over all c in `coset`."""
    if not coset:
        raise ValueError("coset must contain at least the zero word")
    return [min(w ^ c for c in coset) for w in words]
