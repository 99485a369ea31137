"""Pure-Python/numpy versions of the hot kernels.

Must stay operation-for-operation identical to ``_ckernels.pyx`` so both
backends give bit-identical escape counts.
"""
from __future__ import annotations

import numpy as np

BACKEND = "python"


def rooted_code(sigma, color, root):
    """Traversal code of a connected map rooted at dart ``root``.

    Darts are relabelled in discovery order, edge partners getting
    consecutive labels ``2i, 2i+1``.  Returns ``(code, order)`` where
    ``code = [colour of root vertex, label(sigma(order[0])), ...]`` and
    ``order[label] = dart``.
    """
    n = len(sigma)
    lab = [-1] * n
    order = [0] * n
    lab[root] = 0
    lab[root ^ 1] = 1
    order[0] = root
    order[1] = root ^ 1
    nxt = 2
    code = [color[root]]
    for i in range(n):
        if i >= nxt:
            raise ValueError("map is not connected")
        s = sigma[order[i]]
        if lab[s] < 0:
            lab[s] = nxt
            lab[s ^ 1] = nxt + 1
            order[nxt] = s
            order[nxt + 1] = s ^ 1
            nxt += 2
        code.append(lab[s])
    return code, order


def canonical_code(sigma, color):
    """Minimum rooted code over all darts.

    Returns ``(code, order, multiplicity)``; ``multiplicity`` is the number
    of roots attaining the minimum, i.e. the automorphism group order.
    """
    best = None
    best_order = None
    count = 0
    for root in range(len(sigma)):
        code, order = rooted_code(sigma, color, root)
        if best is None or code < best:
            best, best_order, count = code, order, 1
        elif code == best:
            count += 1
    return tuple(best), best_order, count


def escape_steps(coef_re, coef_im, r_re, r_im, c_re, c_im, z_re, z_im,
                 r0, big_r, max_iter, use0, use1):
    """Attraction/escape step counts for points ``z`` under
    ``w -> P(w) / (r (w - c))``; ``-1`` where nothing is reached.

    ``coef_*`` hold the coefficients of ``P`` highest degree first.
    """
    coef_re = np.asarray(coef_re, dtype=np.float64)
    coef_im = np.asarray(coef_im, dtype=np.float64)
    wr = np.array(z_re, dtype=np.float64).ravel()
    wi = np.array(z_im, dtype=np.float64).ravel()
    out = np.full(wr.shape, -1, dtype=np.int32)
    active = np.arange(wr.size)
    r0sq = r0 * r0
    bigsq = big_r * big_r
    polesq = 1e-14 * 1e-14
    for n in range(max_iter + 1):
        if active.size == 0:
            break
        ar = wr[active]
        ai = wi[active]
        m2 = ar * ar + ai * ai
        hit = m2 > bigsq
        if use0:
            hit |= m2 < r0sq
        if use1:
            dr = ar - 1.0
            hit |= dr * dr + ai * ai < r0sq
        out[active[hit]] = n
        keep = ~hit
        active = active[keep]
        ar = ar[keep]
        ai = ai[keep]
        if n == max_iter or active.size == 0:
            break
        ur = ar - c_re
        ui = ai - c_im
        pole = ur * ur + ui * ui < polesq
        out[active[pole]] = n + 1
        keep = ~pole
        active = active[keep]
        ar = ar[keep]
        ai = ai[keep]
        ur = ur[keep]
        ui = ui[keep]
        # Horner for P
        pr = np.full(ar.shape, coef_re[0])
        pi = np.full(ar.shape, coef_im[0])
        for k in range(1, coef_re.size):
            tr = pr * ar - pi * ai + coef_re[k]
            ti = pr * ai + pi * ar + coef_im[k]
            pr = tr
            pi = ti
        # denominator r (w - c)
        qr = r_re * ur - r_im * ui
        qi = r_re * ui + r_im * ur
        d = qr * qr + qi * qi
        wr[active] = (pr * qr + pi * qi) / d
        wi[active] = (pi * qr - pr * qi) / d
    return out
