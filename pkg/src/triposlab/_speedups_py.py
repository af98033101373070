"""Pure-Python kernels for the entailment hot loops.

Same signatures as the compiled module `_speedups`; `_kernel` picks one at
import time. Tables arrive flattened:

  imp   -- row-major sigma x sigma implication table (entries are codes)
  meet  -- table indexed by subset bitmask (bit i set <-> code i in the subset)
  filt  -- filter bitmask over codes

The "masks" variants fold precomputed subset masks (entries of ftab are
bitmasks, not codes); they drive the entailment of subset-carried algebras.
"""


def entails(n, imp, meet, filt, a, b):
    img = 0
    for x, y in zip(a, b):
        img |= 1 << imp[x * n + y]
    return (filt >> meet[img]) & 1 == 1


def entail_matrix(n, imp, meet, filt, codes, ncodes, k):
    out = bytearray(ncodes * ncodes)
    for i in range(ncodes):
        ik = i * k
        row = i * ncodes
        for j in range(ncodes):
            jk = j * k
            img = 0
            for x in range(k):
                img |= 1 << imp[codes[ik + x] * n + codes[jk + x]]
            out[row + j] = (filt >> meet[img]) & 1
    return bytes(out)


def entails_masks(n, ftab, meet, filt, a, b):
    img = 0
    for x, y in zip(a, b):
        img |= ftab[x * n + y]
    return (filt >> meet[img]) & 1 == 1


def entail_matrix_masks(n, ftab, meet, filt, codes, ncodes, k):
    out = bytearray(ncodes * ncodes)
    for i in range(ncodes):
        ik = i * k
        row = i * ncodes
        for j in range(ncodes):
            jk = j * k
            img = 0
            for x in range(k):
                img |= ftab[codes[ik + x] * n + codes[jk + x]]
            out[row + j] = (filt >> meet[img]) & 1
    return bytes(out)
