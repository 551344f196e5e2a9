# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for braid word reduction.

Mirrors the reference implementations in braidforge.words; see that module
for the algorithm notes.  Words travel as Python tuples of ints and are
unpacked into C arrays here.
"""

from libc.stdlib cimport malloc, realloc, free


cdef inline Py_ssize_t _free_reduce_buf(int* buf, Py_ssize_t m) nogil:
    # In-place stack pass over buf[0:m]; returns the reduced length.
    cdef Py_ssize_t top = 0, k
    for k in range(m):
        if top > 0 and buf[top - 1] == -buf[k]:
            top -= 1
        else:
            buf[top] = buf[k]
            top += 1
    return top


def free_reduce(word):
    cdef Py_ssize_t m = len(word)
    if m == 0:
        return ()
    cdef int* buf = <int*> malloc(m * sizeof(int))
    if buf == NULL:
        raise MemoryError
    cdef Py_ssize_t k
    for k in range(m):
        buf[k] = word[k]
    cdef Py_ssize_t top = _free_reduce_buf(buf, m)
    out = tuple(buf[k] for k in range(top))
    free(buf)
    return out


def handle_reduce(word, Py_ssize_t max_letters):
    cdef Py_ssize_t cap = len(word) * 4 + 64
    cdef int* w = <int*> malloc(cap * sizeof(int))
    cdef int* scratch = NULL
    cdef Py_ssize_t scap = 0
    if w == NULL:
        raise MemoryError
    cdef Py_ssize_t m = len(word)
    cdef Py_ssize_t k
    for k in range(m):
        w[k] = word[k]
    m = _free_reduce_buf(w, m)

    # last_pos/last_sign per generator index; last_pos[i] < 0 means invalid.
    cdef int maxgen = 0
    for k in range(m):
        if w[k] > maxgen:
            maxgen = w[k]
        elif -w[k] > maxgen:
            maxgen = -w[k]
    cdef Py_ssize_t lsize = maxgen + 2
    cdef Py_ssize_t* last_pos = <Py_ssize_t*> malloc(lsize * sizeof(Py_ssize_t))
    cdef int* last_sign = <int*> malloc(lsize * sizeof(int))
    if last_pos == NULL or last_sign == NULL:
        free(w)
        if last_pos != NULL:
            free(last_pos)
        if last_sign != NULL:
            free(last_sign)
        raise MemoryError

    cdef Py_ssize_t p, q, need, t, j
    cdef int i, s, e, x, step
    cdef bint found
    try:
        while True:
            for k in range(lsize):
                last_pos[k] = -1
            found = False
            p = 0
            q = 0
            i = 0
            e = 0
            for k in range(m):
                x = w[k]
                i = x if x > 0 else -x
                s = 1 if x > 0 else -1
                if last_pos[i] >= 0 and last_sign[i] == -s:
                    p = last_pos[i]
                    q = k
                    e = -s
                    found = True
                    break
                last_pos[i] = k
                last_sign[i] = s
                for j in range(i + 1, lsize):
                    last_pos[j] = -1
            if not found:
                out = tuple(w[k] for k in range(m))
                return out

            # Rewrite w[p..q] dropping the brackets; sigma_{i+1} letters expand
            # threefold, so allocate the worst case.
            step = i + 1
            need = m + 2 * (q - p)
            if need > scap:
                scap = need * 2
                if scratch != NULL:
                    free(scratch)
                scratch = <int*> malloc(scap * sizeof(int))
                if scratch == NULL:
                    raise MemoryError
            t = 0
            for k in range(p):
                scratch[t] = w[k]; t += 1
            for k in range(p + 1, q):
                x = w[k]
                if x == step or x == -step:
                    scratch[t] = -e * step; t += 1
                    scratch[t] = i if x > 0 else -i; t += 1
                    scratch[t] = e * step; t += 1
                else:
                    scratch[t] = x; t += 1
            for k in range(q + 1, m):
                scratch[t] = w[k]; t += 1
            m = _free_reduce_buf(scratch, t)
            if m > max_letters:
                raise RuntimeError("handle reduction exceeded the letter budget")
            if m > cap:
                cap = m * 2
                free(w)
                w = <int*> malloc(cap * sizeof(int))
                if w == NULL:
                    raise MemoryError
            for k in range(m):
                w[k] = scratch[k]
    finally:
        free(w)
        free(last_pos)
        free(last_sign)
        if scratch != NULL:
            free(scratch)
