# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the entailment hot loops; see _speedups_py for the
reference semantics. Masks and tables fit 64 bits because the proposition
set is capped at 16 codes."""


def entails(int n, const int[::1] imp, const int[::1] meet,
            unsigned long long filt, const int[::1] a, const int[::1] b):
    cdef unsigned long long img = 0
    cdef Py_ssize_t x
    for x in range(a.shape[0]):
        img |= (<unsigned long long> 1) << imp[a[x] * n + b[x]]
    return ((filt >> meet[img]) & 1) == 1


def entail_matrix(int n, const int[::1] imp, const int[::1] meet,
                  unsigned long long filt, const int[::1] codes,
                  Py_ssize_t ncodes, Py_ssize_t k):
    out = bytearray(ncodes * ncodes)
    cdef unsigned char[::1] o = out
    cdef Py_ssize_t i, j, x, ik, jk
    cdef unsigned long long img
    for i in range(ncodes):
        ik = i * k
        for j in range(ncodes):
            jk = j * k
            img = 0
            for x in range(k):
                img |= (<unsigned long long> 1) << imp[codes[ik + x] * n + codes[jk + x]]
            o[i * ncodes + j] = <unsigned char> ((filt >> meet[img]) & 1)
    return bytes(out)


def entails_masks(int n, const int[::1] ftab, const int[::1] meet,
                  unsigned long long filt, const int[::1] a, const int[::1] b):
    cdef unsigned long long img = 0
    cdef Py_ssize_t x
    for x in range(a.shape[0]):
        img |= <unsigned long long> ftab[a[x] * n + b[x]]
    return ((filt >> meet[img]) & 1) == 1


def entail_matrix_masks(int n, const int[::1] ftab, const int[::1] meet,
                        unsigned long long filt, const int[::1] codes,
                        Py_ssize_t ncodes, Py_ssize_t k):
    out = bytearray(ncodes * ncodes)
    cdef unsigned char[::1] o = out
    cdef Py_ssize_t i, j, x, ik, jk
    cdef unsigned long long img
    for i in range(ncodes):
        ik = i * k
        for j in range(ncodes):
            jk = j * k
            img = 0
            for x in range(k):
                img |= <unsigned long long> ftab[codes[ik + x] * n + codes[jk + x]]
            o[i * ncodes + j] = <unsigned char> ((filt >> meet[img]) & 1)
    return bytes(out)
