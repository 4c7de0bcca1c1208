# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; same contract as ``_kernel_py``.

Masks are stored as ``W`` little-endian 64-bit words per element.
"""
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset

NAME = "cython"

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef uint64_t WORD_MASK = 0xFFFFFFFFFFFFFFFF


cdef struct Ctx:
    int n
    int W
    uint64_t* compat      # n * W
    uint64_t* down        # n * W
    uint64_t* pbuf        # (n + 2) * W, possible mask per depth
    uint64_t* cbuf        # (n + 2) * W, chosen mask per depth
    int64_t* counts       # n + 1
    uint64_t* out         # rows of W words, or NULL when only counting
    int64_t out_len


cdef inline int _lowest(const uint64_t* p, int W) noexcept nogil:
    cdef int w
    for w in range(W):
        if p[w]:
            return w * 64 + __builtin_ctzll(p[w])
    return -1


cdef void _walk(Ctx* ctx, int depth, int size) noexcept nogil:
    cdef int W = ctx.W
    cdef uint64_t* p = ctx.pbuf + depth * W
    cdef uint64_t* c = ctx.cbuf + depth * W
    cdef uint64_t* np_ = ctx.pbuf + (depth + 1) * W
    cdef uint64_t* nc = ctx.cbuf + (depth + 1) * W
    cdef int j, w, jw
    cdef uint64_t jbit
    cdef const uint64_t* cj
    cdef const uint64_t* dj
    cdef uint64_t* row
    while True:
        j = _lowest(p, W)
        if j < 0:
            ctx.counts[size] += 1
            if ctx.out != NULL:
                row = ctx.out + ctx.out_len * W
                for w in range(W):
                    row[w] = c[w]
                ctx.out_len += 1
            return
        jw = j >> 6
        jbit = (<uint64_t>1) << (j & 63)
        cj = ctx.compat + j * W
        dj = ctx.down + j * W
        # include j
        for w in range(W):
            np_[w] = p[w] & cj[w]
            nc[w] = c[w]
        np_[jw] &= ~jbit
        nc[jw] |= jbit
        _walk(ctx, depth + 1, size + 1)
        # exclude j: continue in place at this depth
        for w in range(W):
            p[w] &= ~dj[w]


cdef void _load(uint64_t* dst, object mask, int W):
    cdef int w
    for w in range(W):
        dst[w] = <uint64_t>((mask >> (64 * w)) & WORD_MASK)


cdef object _store(const uint64_t* src, int W):
    cdef int w
    value = 0
    for w in range(W - 1, -1, -1):
        word = src[w]
        value = (value << 64) | word
    return value


cdef int _setup(Ctx* ctx, list compat, list down, int n, object possible, object chosen) except -1:
    cdef int W = (n + 63) // 64 if n > 0 else 1
    cdef int i
    ctx.n = n
    ctx.W = W
    ctx.compat = <uint64_t*>malloc(max(n, 1) * W * sizeof(uint64_t))
    ctx.down = <uint64_t*>malloc(max(n, 1) * W * sizeof(uint64_t))
    ctx.pbuf = <uint64_t*>malloc((n + 2) * W * sizeof(uint64_t))
    ctx.cbuf = <uint64_t*>malloc((n + 2) * W * sizeof(uint64_t))
    ctx.counts = <int64_t*>malloc((n + 1) * sizeof(int64_t))
    ctx.out = NULL
    ctx.out_len = 0
    if not (ctx.compat and ctx.down and ctx.pbuf and ctx.cbuf and ctx.counts):
        _teardown(ctx)
        raise MemoryError()
    memset(ctx.counts, 0, (n + 1) * sizeof(int64_t))
    for i in range(n):
        _load(ctx.compat + i * W, compat[i], W)
        _load(ctx.down + i * W, down[i], W)
    _load(ctx.pbuf, possible, W)
    _load(ctx.cbuf, chosen, W)
    return 0


cdef void _teardown(Ctx* ctx):
    free(ctx.compat)
    free(ctx.down)
    free(ctx.pbuf)
    free(ctx.cbuf)
    free(ctx.counts)
    if ctx.out != NULL:
        free(ctx.out)
    ctx.compat = ctx.down = ctx.pbuf = ctx.cbuf = ctx.out = NULL
    ctx.counts = NULL


def size_counts(list compat, list down, int n, possible, int size=0):
    cdef Ctx ctx
    _setup(&ctx, compat, down, n, possible, 0)
    try:
        with nogil:
            _walk(&ctx, 0, size)
        return [ctx.counts[i] for i in range(n + 1)]
    finally:
        _teardown(&ctx)


def ideal_masks(list compat, list down, int n, possible, chosen=0):
    cdef Ctx ctx
    cdef int64_t total, i
    _setup(&ctx, compat, down, n, possible, chosen)
    try:
        with nogil:
            _walk(&ctx, 0, 0)
        total = 0
        for i in range(n + 1):
            total += ctx.counts[i]
            ctx.counts[i] = 0
        ctx.out = <uint64_t*>malloc(max(total, 1) * ctx.W * sizeof(uint64_t))
        if ctx.out == NULL:
            raise MemoryError()
        _load(ctx.pbuf, possible, ctx.W)
        _load(ctx.cbuf, chosen, ctx.W)
        with nogil:
            _walk(&ctx, 0, 0)
        return [_store(ctx.out + i * ctx.W, ctx.W) for i in range(ctx.out_len)]
    finally:
        _teardown(&ctx)
