# cython: language_level=3
"""Optional compiled fast paths for whitespace-slot digit embedding/extraction.

unimark.stego falls back to equivalent pure-Python implementations when this
module is unavailable; behavior must match bit for bit (equivalence is
enforced by the test suite).
"""

cdef extern from "Python.h":
    ctypedef unsigned int Py_UCS4
    int PyUnicode_KIND(object o)
    void *PyUnicode_DATA(object o)
    Py_UCS4 PyUnicode_READ(int kind, void *data, Py_ssize_t index)
    void PyUnicode_WRITE(int kind, void *data, Py_ssize_t index, Py_UCS4 value)
    Py_ssize_t PyUnicode_GET_LENGTH(object o)
    object PyUnicode_New(Py_ssize_t size, Py_UCS4 maxchar)


def place_digits(unicode text, digits, unicode marks, Py_UCS4 base):
    """Replace the first len(digits) occurrences of ``base`` with
    ``marks[d]`` per digit, left to right; scalars after the last replaced
    slot are untouched.

    Returns ``(new_text, placed)``; ``new_text`` is None when the text has
    fewer than len(digits) base slots (``placed`` then counts the available
    slots)."""
    cdef Py_ssize_t n = PyUnicode_GET_LENGTH(text)
    cdef int tkind = PyUnicode_KIND(text)
    cdef void *tdata = PyUnicode_DATA(text)
    cdef Py_ssize_t mlen = PyUnicode_GET_LENGTH(marks)
    cdef int mkind = PyUnicode_KIND(marks)
    cdef void *mdata = PyUnicode_DATA(marks)
    cdef Py_ssize_t k = len(digits)
    cdef Py_ssize_t i, d, j = 0
    cdef Py_UCS4 c, maxc = 0

    # First pass: find the true output maxchar (required for a canonical
    # string) and count available slots.
    for i in range(n):
        c = PyUnicode_READ(tkind, tdata, i)
        if j < k and c == base:
            d = digits[j]
            if d < 0 or d >= mlen:
                raise ValueError("digit out of alphabet range")
            c = PyUnicode_READ(mkind, mdata, d)
            j += 1
        if c > maxc:
            maxc = c
    if j < k:
        return None, j

    out = PyUnicode_New(n, maxc)
    if out is None:
        raise MemoryError
    cdef int okind = PyUnicode_KIND(out)
    cdef void *odata = PyUnicode_DATA(out)
    j = 0
    for i in range(n):
        c = PyUnicode_READ(tkind, tdata, i)
        if j < k and c == base:
            c = PyUnicode_READ(mkind, mdata, digits[j])
            j += 1
        PyUnicode_WRITE(okind, odata, i, c)
    return out, j


def scan_digits(unicode text, signed char[:] table, Py_ssize_t p):
    """Collect base-``p`` digits for every scalar mapped by ``table``
    (codepoint -> digit value, -1 for non-members) in text order.

    Returns ``(value, digits)`` with ``value`` the left-to-right base-p
    accumulation of the digits."""
    cdef Py_ssize_t n = PyUnicode_GET_LENGTH(text)
    cdef int kind = PyUnicode_KIND(text)
    cdef void *data = PyUnicode_DATA(text)
    cdef Py_ssize_t tlen = table.shape[0]
    cdef Py_ssize_t i
    cdef Py_UCS4 c
    cdef signed char d
    cdef unsigned long long acc = 0
    # conservative pre-multiply guard; past it, redo in Python bignums
    cdef unsigned long long lim = ((<unsigned long long> -1) >> 6)
    cdef bint overflow = False
    digits = []
    ap = digits.append
    for i in range(n):
        c = PyUnicode_READ(kind, data, i)
        if <Py_ssize_t> c < tlen:
            d = table[<Py_ssize_t> c]
            if d >= 0:
                ap(d)
                if not overflow:
                    if acc > lim:
                        overflow = True
                    else:
                        acc = acc * <unsigned long long> p + <unsigned long long> d
    if overflow:
        value = 0
        for dd in digits:
            value = value * p + dd
        return value, digits
    return acc, digits
