# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled versions of the hot kernels; see ``_pykernels`` for semantics."""
import numpy as np

BACKEND = "cython"


cdef void _code_into(const int[:] sigma, const int[:] color, int root,
                     int* lab, int* order, int* code) noexcept nogil:
    cdef int n = sigma.shape[0]
    cdef int i, s, nxt = 2
    for i in range(n):
        lab[i] = -1
    lab[root] = 0
    lab[root ^ 1] = 1
    order[0] = root
    order[1] = root ^ 1
    code[0] = color[root]
    for i in range(n):
        s = sigma[order[i]]
        if lab[s] < 0:
            lab[s] = nxt
            lab[s ^ 1] = nxt + 1
            order[nxt] = s
            order[nxt + 1] = s ^ 1
            nxt += 2
        code[i + 1] = lab[s]


cdef int _compare_code(const int[:] sigma, const int[:] color, int root,
                       int* lab, int* order, int* best) noexcept nogil:
    # -1 / 0 / 1 as the rooted code compares to ``best``; stops at the first difference
    cdef int n = sigma.shape[0]
    cdef int i, s, v, nxt = 2
    for i in range(n):
        lab[i] = -1
    lab[root] = 0
    lab[root ^ 1] = 1
    order[0] = root
    order[1] = root ^ 1
    v = color[root]
    if v != best[0]:
        return -1 if v < best[0] else 1
    for i in range(n):
        s = sigma[order[i]]
        if lab[s] < 0:
            lab[s] = nxt
            lab[s ^ 1] = nxt + 1
            order[nxt] = s
            order[nxt + 1] = s ^ 1
            nxt += 2
        v = lab[s]
        if v != best[i + 1]:
            return -1 if v < best[i + 1] else 1
    return 0


def rooted_code(sigma, color, int root):
    cdef int[:] sg = np.ascontiguousarray(sigma, dtype=np.intc)
    cdef int[:] cl = np.ascontiguousarray(color, dtype=np.intc)
    cdef int n = sg.shape[0]
    _check_connected(sg)
    lab = np.empty(n, dtype=np.intc)
    order = np.empty(n, dtype=np.intc)
    code = np.empty(n + 1, dtype=np.intc)
    cdef int[:] lv = lab, ov = order, cv = code
    _code_into(sg, cl, root, &lv[0], &ov[0], &cv[0])
    return [int(x) for x in code], [int(x) for x in order]


def canonical_code(sigma, color):
    cdef int[:] sg = np.ascontiguousarray(sigma, dtype=np.intc)
    cdef int[:] cl = np.ascontiguousarray(color, dtype=np.intc)
    cdef int n = sg.shape[0]
    cdef int root, cmp, count = 1
    _check_connected(sg)
    lab = np.empty(n, dtype=np.intc)
    order = np.empty(n, dtype=np.intc)
    best = np.empty(n + 1, dtype=np.intc)
    best_order = np.empty(n, dtype=np.intc)
    cdef int[:] lv = lab, ov = order, bv = best, bo = best_order
    with nogil:
        _code_into(sg, cl, 0, &lv[0], &bo[0], &bv[0])
        for root in range(1, n):
            cmp = _compare_code(sg, cl, root, &lv[0], &ov[0], &bv[0])
            if cmp == 0:
                count += 1
            elif cmp < 0:
                _code_into(sg, cl, root, &lv[0], &bo[0], &bv[0])
                count = 1
    return tuple(int(x) for x in best), [int(x) for x in best_order], count


cdef void _check_connected(const int[:] sigma) except *:
    cdef int n = sigma.shape[0]
    seen = np.zeros(n, dtype=np.intc)
    stack = np.empty(n, dtype=np.intc)
    cdef int[:] sv = seen, st = stack
    cdef int top = 0, d, cnt = 0
    if n == 0:
        raise ValueError("map has no darts")
    sv[0] = 1
    st[top] = 0
    top += 1
    while top:
        top -= 1
        d = st[top]
        cnt += 1
        for e in (sigma[d], d ^ 1):
            if not sv[e]:
                sv[e] = 1
                st[top] = e
                top += 1
    if cnt != n:
        raise ValueError("map is not connected")


cdef int _steps_one(const double* cre, const double* cim, int ncoef,
                    double r_re, double r_im, double c_re, double c_im,
                    double wr, double wi, double r0sq, double bigsq,
                    int max_iter, bint use0, bint use1) noexcept nogil:
    cdef int n, k
    cdef double m2, dr, ur, ui, pr, pi, tr, ti, qr, qi, d
    cdef double polesq = 1e-14 * 1e-14
    for n in range(max_iter + 1):
        m2 = wr * wr + wi * wi
        if m2 > bigsq:
            return n
        if use0 and m2 < r0sq:
            return n
        if use1:
            dr = wr - 1.0
            if dr * dr + wi * wi < r0sq:
                return n
        if n == max_iter:
            break
        ur = wr - c_re
        ui = wi - c_im
        if ur * ur + ui * ui < polesq:
            return n + 1
        pr = cre[0]
        pi = cim[0]
        for k in range(1, ncoef):
            tr = pr * wr - pi * wi + cre[k]
            ti = pr * wi + pi * wr + cim[k]
            pr = tr
            pi = ti
        qr = r_re * ur - r_im * ui
        qi = r_re * ui + r_im * ur
        d = qr * qr + qi * qi
        wr = (pr * qr + pi * qi) / d
        wi = (pi * qr - pr * qi) / d
    return -1


def escape_steps(coef_re, coef_im, double r_re, double r_im, double c_re, double c_im,
                 z_re, z_im, double r0, double big_r, int max_iter, bint use0, bint use1):
    cdef double[:] cre = np.ascontiguousarray(coef_re, dtype=np.float64)
    cdef double[:] cim = np.ascontiguousarray(coef_im, dtype=np.float64)
    cdef double[:] zr = np.ascontiguousarray(np.ravel(z_re), dtype=np.float64)
    cdef double[:] zi = np.ascontiguousarray(np.ravel(z_im), dtype=np.float64)
    cdef Py_ssize_t i, npts = zr.shape[0]
    cdef int ncoef = cre.shape[0]
    out = np.empty(npts, dtype=np.int32)
    cdef int[:] ov = out
    cdef double r0sq = r0 * r0, bigsq = big_r * big_r
    with nogil:
        for i in range(npts):
            ov[i] = _steps_one(&cre[0], &cim[0], ncoef, r_re, r_im, c_re, c_im,
                               zr[i], zi[i], r0sq, bigsq, max_iter, use0, use1)
    return out
