# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel; same contract as ``_kernel_py``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

IMPLEMENTATION = "cython"

ctypedef cnp.int64_t i64


cdef struct Ctx:
    int L
    int n
    int last
    i64 nodes[16]
    i64 *codes
    i64 *code_to_idx
    i64 *add
    i64 *neg
    int C
    unsigned char *compat  # [k, n, n]
    i64 *pos
    int chosen[16]
    i64 cls[16]


cdef inline bint fits(Ctx *c, int p, int b) nogil:
    cdef int q
    cdef int n = c.n
    for q in range(p):
        if not c.compat[((c.pos[p] - c.pos[q]) * n + c.chosen[q]) * n + b]:
            return False
    return True


cdef void descend(Ctx *c, int p, list rows):
    cdef int b, f
    cdef i64 prev = c.cls[p - 1]
    for b in range(c.n):
        if not fits(c, p, b):
            continue
        c.chosen[p] = b
        c.cls[p] = c.add[prev * c.C + c.codes[b]]
        c.nodes[p] += 1
        if p + 1 == c.last:
            f = <int>c.code_to_idx[c.neg[c.cls[p]]]
            if fits(c, c.last, f):
                c.chosen[c.last] = f
                rows.append([c.chosen[q] for q in range(c.L)])
        else:
            descend(c, p + 1, rows)


def enumerate_block(t, first):
    cdef Ctx c
    cdef int f
    cdef cnp.ndarray[i64, ndim=1] codes = np.ascontiguousarray(t.codes, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] code_to_idx = np.ascontiguousarray(t.code_to_idx, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=2] add = np.ascontiguousarray(t.add, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] neg = np.ascontiguousarray(t.neg, dtype=np.int64)
    cdef cnp.ndarray[unsigned char, ndim=3] compat = np.ascontiguousarray(t.compat, dtype=np.uint8)
    cdef cnp.ndarray[i64, ndim=1] pos = np.ascontiguousarray(t.positions, dtype=np.int64)
    c.L = t.k - 1
    c.n = t.n_values
    c.last = c.L - 1
    for f in range(16):
        c.nodes[f] = 0
    c.C = t.n_codes
    c.codes = &codes[0]
    c.code_to_idx = &code_to_idx[0]
    c.add = &add[0, 0]
    c.neg = &neg[0]
    c.compat = &compat[0, 0, 0]
    c.pos = &pos[0]
    rows = []
    for a in first:
        c.chosen[0] = a
        c.cls[0] = c.codes[a]
        c.nodes[0] += 1
        if c.last == 1:
            f = <int>c.code_to_idx[c.neg[c.cls[0]]]
            if fits(&c, 1, f):
                c.chosen[1] = f
                rows.append([c.chosen[0], c.chosen[1]])
        else:
            descend(&c, 1, rows)
    depth = np.array([c.nodes[f] for f in range(c.last)], dtype=np.int64)
    return np.array(rows, dtype=np.int64).reshape(-1, c.L), depth


def rank_zero_scan(t, rows):
    cdef cnp.ndarray[i64, ndim=2] r = np.ascontiguousarray(rows, dtype=np.int64).reshape(-1, t.k - 1)
    cdef cnp.ndarray[i64, ndim=1] codes = np.ascontiguousarray(t.codes, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=2] add = np.ascontiguousarray(t.add, dtype=np.int64)
    cdef cnp.ndarray[unsigned char, ndim=1] in_list = np.ascontiguousarray(t.in_list, dtype=np.uint8)
    cdef cnp.ndarray[i64, ndim=2] triples = np.ascontiguousarray(t.triples, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] tcodes = np.ascontiguousarray(t.triple_codes, dtype=np.int64)
    cdef Py_ssize_t nrows = r.shape[0], ntri = triples.shape[0], row, q
    cdef int C = t.n_codes
    cdef i64 d
    cdef cnp.ndarray[i64, ndim=1] out = np.full(nrows, -1, dtype=np.int64)
    with nogil:
        for row in range(nrows):
            for q in range(ntri):
                d = add[codes[r[row, triples[q, 0]]], codes[r[row, triples[q, 1]]]]
                d = add[d, codes[r[row, triples[q, 2]]]]
                d = add[d, tcodes[q]]
                if in_list[d]:
                    out[row] = q
                    break
    return out
