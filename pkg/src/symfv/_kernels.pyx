# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled line-sweep kernel.

Statement-for-statement transliteration of ``_sweep_py``; the two must stay
bit-for-bit interchangeable.  Compiled with -O2, -ffp-contract=off and
-fno-fast-math so every expression keeps its written evaluation order and no
multiply-add contraction happens; all transcendental calls go through the
same libm the interpreter uses.

Lines are independent, so the batch loop can run under OpenMP; every thread
writes disjoint flux/label slices and no reduction exists, which makes the
output independent of the thread count.
"""

from cython.parallel cimport prange
from libc.math cimport exp, sqrt, tanh

import math

# Evaluated through the interpreter's math module on purpose: the C compiler
# constant-folds literal libm calls with its own (correctly rounded) library,
# which can disagree with the runtime libm in the last bit and would make the
# two backends diverge.
cdef double BETA_S = 1.1
cdef double BETA_L = 1.6
cdef double TANH_BS = math.tanh(BETA_S)
cdef double COSH_BS = math.cosh(BETA_S)
cdef double TANH_BL = math.tanh(BETA_L)
cdef double COSH_BL = math.cosh(BETA_L)
cdef double T1_BS = math.tanh(0.5 * BETA_S)
cdef double T1_BL = math.tanh(0.5 * BETA_L)


cdef inline void _p4(double s0, double s1, double s2, double s3, double s4,
                     bint sym, double* qr, double* ql) noexcept nogil:
    qr[0] = (2.0 * s0 - 13.0 * s1 + 47.0 * s2 + 27.0 * s3 - 3.0 * s4) / 60.0
    if sym:
        ql[0] = (2.0 * s4 - 13.0 * s3 + 47.0 * s2 + 27.0 * s1 - 3.0 * s0) / 60.0
    else:
        ql[0] = (-3.0 * s0 + 27.0 * s1 + 47.0 * s2 - 13.0 * s3 + 2.0 * s4) / 60.0


cdef inline void _thinc_orig(double qm, double qc, double qp, double beta,
                             double tanh_b, double cosh_b,
                             double* qr, double* ql) noexcept nogil:
    cdef double qmin, dq, theta, alpha, a
    if not (qc - qm) * (qp - qc) > 0.0:
        qr[0] = qc
        ql[0] = qc
        return
    qmin = qm if qm < qp else qp
    dq = abs(qp - qm)
    theta = 1.0 if qp > qm else -1.0
    alpha = theta * (2.0 * ((qc - qmin + 1e-20) / (dq + 1e-20)) - 1.0)
    a = (exp(alpha * beta) / cosh_b - 1.0) / tanh_b
    qr[0] = qmin + 0.5 * dq * (1.0 + theta * ((tanh_b + a) / (1.0 + a * tanh_b)))
    ql[0] = qmin + 0.5 * dq * (1.0 + theta * a)


cdef inline void _thinc_sym(double qm, double qc, double qp, double beta,
                            double t1, double* qr, double* ql) noexcept nogil:
    cdef double qa, qd, alpha, t2, rt
    if not (qc - qm) * (qp - qc) > 1e-20:
        qr[0] = qc
        ql[0] = qc
        return
    qa = 0.5 * (qp + qm)
    qd = 0.5 * (qp - qm)
    alpha = (qc - qa) / qd
    t2 = tanh(0.5 * (alpha * beta))
    rt = t2 / t1
    qr[0] = qa + qd * ((t1 + rt) / (1.0 + t2))
    ql[0] = qa - qd * ((t1 - rt) / (1.0 - t2))


cdef inline bint _hllc(const double* uL, const double* uR, double gamma,
                       double gm1, bint sym, double* out) noexcept nogil:
    cdef double rl, mnl, mtl, el, rr, mnr, mtr, er
    cdef double ul, vl, pl, ur, vr, pr, cl2, cr2, cl, cr, rho_bar, c_bar, ps, gfac
    cdef double qfl, qfr, sl, sr, dul, dur, al, ar, num, ss
    cdef double fl0, fl1, fl2, fl3, fr0, fr1, fr2, fr3
    cdef double cfl, cfr, stl0, stl1, stl2, stl3, str0, str1, str2, str3
    cdef double sm, sp, bl0, bl1, bl2, bl3, br0, br1, br2, br3, sg, wl, wr
    rl = uL[0]
    mnl = uL[1]
    mtl = uL[2]
    el = uL[3]
    rr = uR[0]
    mnr = uR[1]
    mtr = uR[2]
    er = uR[3]
    # Face states from unlimited reconstruction may overshoot at sub-cell
    # features, sending density and pressure negative together while the
    # squared sound speed stays positive and the flux stays finite.  Reject
    # only what would break the arithmetic: zero density or c^2 <= 0.
    if rl == 0.0 or rr == 0.0:
        return False
    ul = mnl / rl
    vl = mtl / rl
    pl = gm1 * (el - 0.5 * rl * (ul * ul + vl * vl))
    ur = mnr / rr
    vr = mtr / rr
    pr = gm1 * (er - 0.5 * rr * (ur * ur + vr * vr))
    cl2 = gamma * pl / rl
    cr2 = gamma * pr / rr
    if not cl2 > 0.0 or not cr2 > 0.0:
        return False
    cl = sqrt(cl2)
    cr = sqrt(cr2)
    rho_bar = 0.5 * (rl + rr)
    c_bar = 0.5 * (cl + cr)
    ps = 0.5 * (pl + pr) - 0.5 * (ur - ul) * rho_bar * c_bar
    if not ps > 0.0:
        ps = 0.0
    gfac = (gamma + 1.0) / (2.0 * gamma)
    qfl = 1.0 if ps <= pl else sqrt(1.0 + gfac * (ps / pl - 1.0))
    qfr = 1.0 if ps <= pr else sqrt(1.0 + gfac * (ps / pr - 1.0))
    sl = ul - cl * qfl
    sr = ur + cr * qfr
    dul = sl - ul
    dur = sr - ur
    al = (rl * ul) * dul
    ar = (rr * ur) * dur
    if sym:
        num = (pr - pl) + (al - ar)
    else:
        num = ((pr - pl) + al) - ar
    ss = num / (rl * dul - rr * dur)

    fl0 = mnl
    fl1 = mnl * ul + pl
    fl2 = mtl * ul
    fl3 = (el + pl) * ul
    fr0 = mnr
    fr1 = mnr * ur + pr
    fr2 = mtr * ur
    fr3 = (er + pr) * ur

    if sym:
        cfl = dul / (sl - ss)
        cfr = dur / (sr - ss)
        stl0 = cfl * rl
        stl1 = cfl * (rl * ss)
        stl2 = cfl * mtl
        stl3 = cfl * (el + (ss - ul) * (rl * ss + pl / dul))
        str0 = cfr * rr
        str1 = cfr * (rr * ss)
        str2 = cfr * mtr
        str3 = cfr * (er + (ss - ur) * (rr * ss + pr / dur))
        sm = sl if sl < 0.0 else 0.0
        sp = sr if sr > 0.0 else 0.0
        bl0 = fl0 + sm * (stl0 - rl)
        bl1 = fl1 + sm * (stl1 - mnl)
        bl2 = fl2 + sm * (stl2 - mtl)
        bl3 = fl3 + sm * (stl3 - el)
        br0 = fr0 + sp * (str0 - rr)
        br1 = fr1 + sp * (str1 - mnr)
        br2 = fr2 + sp * (str2 - mtr)
        br3 = fr3 + sp * (str3 - er)
        sg = <double>((ss > 0.0) - (ss < 0.0))
        wl = 0.5 * (1.0 + sg)
        wr = 0.5 * (1.0 - sg)
        out[0] = wl * bl0 + wr * br0
        out[1] = wl * bl1 + wr * br1
        out[2] = wl * bl2 + wr * br2
        out[3] = wl * bl3 + wr * br3
    else:
        if 0.0 <= sl:
            out[0] = fl0
            out[1] = fl1
            out[2] = fl2
            out[3] = fl3
        elif 0.0 <= ss:
            cfl = dul / (sl - ss)
            stl0 = cfl * rl
            stl1 = cfl * (rl * ss)
            stl2 = cfl * mtl
            stl3 = cfl * (el + (ss - ul) * (rl * ss + pl / dul))
            out[0] = fl0 + sl * (stl0 - rl)
            out[1] = fl1 + sl * (stl1 - mnl)
            out[2] = fl2 + sl * (stl2 - mtl)
            out[3] = fl3 + sl * (stl3 - el)
        elif 0.0 <= sr:
            cfr = dur / (sr - ss)
            str0 = cfr * rr
            str1 = cfr * (rr * ss)
            str2 = cfr * mtr
            str3 = cfr * (er + (ss - ur) * (rr * ss + pr / dur))
            out[0] = fr0 + sr * (str0 - rr)
            out[1] = fr1 + sr * (str1 - mnr)
            out[2] = fr2 + sr * (str2 - mtr)
            out[3] = fr3 + sr * (str3 - er)
        else:
            out[0] = fr0
            out[1] = fr1
            out[2] = fr2
            out[3] = fr3
    return True


cdef inline void _bvd_interface(const double* ws, bint sym,
                                double* q_l, double* q_r,
                                signed char* lab_l, signed char* lab_r) noexcept nogil:
    # Two-stage selection at the central interface of a ten-cell window:
    # fills the (left-side value, right-side value, left-cell label,
    # right-cell label) for the interface between window cells 4 and 5.
    cdef double p4r[10]
    cdef double p4l[10]
    cdef double tsr[10]
    cdef double tsl[10]
    cdef bint trip[10]
    cdef Py_ssize_t b, m
    cdef double tbv_p4, tbv_ts, tbv_i, tbv_tl
    cdef bint mark3, mark4, mark5, mark6
    cdef double s3r, s4l, s4r, s5l, s5r, s6l
    cdef double tl3r, _tl3l, tl4r, tl4l, tl5r, tl5l, _tl6r, tl6l

    for b in range(10):
        trip[b] = False

    for b in range(2, 8):
        _p4(ws[b - 2], ws[b - 1], ws[b], ws[b + 1], ws[b + 2], sym,
            &p4r[b], &p4l[b])
        if sym:
            _thinc_sym(ws[b - 1], ws[b], ws[b + 1], BETA_S, T1_BS,
                       &tsr[b], &tsl[b])
        else:
            _thinc_orig(ws[b - 1], ws[b], ws[b + 1], BETA_S, TANH_BS, COSH_BS,
                        &tsr[b], &tsl[b])
    for m in range(3, 7):
        tbv_p4 = abs(p4r[m - 1] - p4l[m]) + abs(p4r[m] - p4l[m + 1])
        tbv_ts = abs(tsr[m - 1] - tsl[m]) + abs(tsr[m] - tsl[m + 1])
        trip[m] = tbv_ts < tbv_p4

    # A tripped comparison drags the cell and both neighbours; comparisons
    # whose stencils leave the window do not exist and cannot drag anyone.
    mark3 = trip[3] or trip[4]
    mark4 = trip[3] or trip[4] or trip[5]
    mark5 = trip[4] or trip[5] or trip[6]
    mark6 = trip[5] or trip[6]
    s3r = tsr[3] if mark3 else p4r[3]
    s4l = tsl[4] if mark4 else p4l[4]
    s4r = tsr[4] if mark4 else p4r[4]
    s5l = tsl[5] if mark5 else p4l[5]
    s5r = tsr[5] if mark5 else p4r[5]
    s6l = tsl[6] if mark6 else p4l[6]

    if sym:
        _thinc_sym(ws[2], ws[3], ws[4], BETA_L, T1_BL, &tl3r, &_tl3l)
        _thinc_sym(ws[3], ws[4], ws[5], BETA_L, T1_BL, &tl4r, &tl4l)
        _thinc_sym(ws[4], ws[5], ws[6], BETA_L, T1_BL, &tl5r, &tl5l)
        _thinc_sym(ws[5], ws[6], ws[7], BETA_L, T1_BL, &_tl6r, &tl6l)
    else:
        _thinc_orig(ws[2], ws[3], ws[4], BETA_L, TANH_BL, COSH_BL, &tl3r, &_tl3l)
        _thinc_orig(ws[3], ws[4], ws[5], BETA_L, TANH_BL, COSH_BL, &tl4r, &tl4l)
        _thinc_orig(ws[4], ws[5], ws[6], BETA_L, TANH_BL, COSH_BL, &tl5r, &tl5l)
        _thinc_orig(ws[5], ws[6], ws[7], BETA_L, TANH_BL, COSH_BL, &_tl6r, &tl6l)

    # Stage two for the left cell of the interface.
    tbv_i = abs(s3r - s4l) + abs(s4r - s5l)
    tbv_tl = abs(tl3r - tl4l) + abs(tl4r - tl5l)
    if tbv_tl < tbv_i:
        q_l[0] = tl4r
        lab_l[0] = 2
    elif mark4:
        q_l[0] = tsr[4]
        lab_l[0] = 1
    else:
        q_l[0] = p4r[4]
        lab_l[0] = 0

    # Stage two for the right cell of the interface.
    tbv_i = abs(s4r - s5l) + abs(s5r - s6l)
    tbv_tl = abs(tl4r - tl5l) + abs(tl5r - tl6l)
    if tbv_tl < tbv_i:
        q_r[0] = tl5l
        lab_r[0] = 2
    elif mark5:
        q_r[0] = tsl[5]
        lab_r[0] = 1
    else:
        q_r[0] = p4l[5]
        lab_r[0] = 0


cdef inline void _sweep_line(const double[:, :, :] lines, double[:, :, :] fluxes,
                             signed char[:, :, :] labels, int[:] err,
                             Py_ssize_t li, Py_ssize_t n, double gamma,
                             double gm1, bint sym, bint axis_is_y) noexcept nogil:
    cdef double wwin[4][10]
    cdef double wl[4]
    cdef double wr[4]
    cdef signed char labs[4]
    cdef signed char labr
    cdef double uLf[4]
    cdef double uRf[4]
    cdef double fx[4]
    cdef Py_ssize_t k, ta, tb, b, j, s
    cdef double ra, ma1, ma2, ea, una, uta, pa, ha
    cdef double rb, mb1, mb2, eb, unb, utb, pb, hb
    cdef double sa, sb, den, un, ut, h, ke2, c2, c, invc, b2, b1
    cdef double l11, l12, l13, l14, l21, l22, l23, l24, l31, l32
    cdef double umc, upc, hmc, hpc, rr, mn, mt, ee, w0, w1, w2, w3

    for k in range(n + 1):
        ta = k + 4
        tb = k + 5
        ra = lines[0, li, ta]
        ma1 = lines[1, li, ta]
        ma2 = lines[2, li, ta]
        ea = lines[3, li, ta]
        if not ra > 0.0:
            err[li] = <int>ta
            return
        una = ma1 / ra
        uta = ma2 / ra
        pa = gm1 * (ea - 0.5 * ra * (una * una + uta * uta))
        if not pa > 0.0:
            err[li] = <int>ta
            return
        ha = (ea + pa) / ra
        rb = lines[0, li, tb]
        mb1 = lines[1, li, tb]
        mb2 = lines[2, li, tb]
        eb = lines[3, li, tb]
        if not rb > 0.0:
            err[li] = <int>tb
            return
        unb = mb1 / rb
        utb = mb2 / rb
        pb = gm1 * (eb - 0.5 * rb * (unb * unb + utb * utb))
        if not pb > 0.0:
            err[li] = <int>tb
            return
        hb = (eb + pb) / rb

        # Density-weighted frame; bit-equal neighbours bypass the average
        # because the weighted mean does not return equal inputs unchanged.
        if ra == rb and una == unb and uta == utb and ha == hb:
            un = una
            ut = uta
            h = ha
        else:
            sa = sqrt(ra)
            sb = sqrt(rb)
            den = sa + sb
            un = (sa * una + sb * unb) / den
            ut = (sa * uta + sb * utb) / den
            h = (sa * ha + sb * hb) / den
        ke2 = 0.5 * (un * un + ut * ut)
        c2 = gm1 * (h - ke2)
        if not c2 > 0.0:
            err[li] = <int>tb
            return
        c = sqrt(c2)
        invc = 1.0 / c
        b2 = gm1 / c2
        b1 = ke2 * b2
        l11 = 0.5 * (b1 + un * invc)
        l12 = -0.5 * (invc + b2 * un)
        l13 = -0.5 * (b2 * ut)
        l14 = 0.5 * b2
        l21 = 1.0 - b1
        l22 = b2 * un
        l23 = b2 * ut
        l24 = -b2
        l31 = 0.5 * (b1 - un * invc)
        l32 = 0.5 * (invc - b2 * un)
        umc = un - c
        upc = un + c
        hmc = h - un * c
        hpc = h + un * c

        for b in range(10):
            j = k + b
            rr = lines[0, li, j]
            mn = lines[1, li, j]
            mt = lines[2, li, j]
            ee = lines[3, li, j]
            if sym:
                w0 = l11 * rr + (l12 * mn + l13 * mt) + l14 * ee
                w1 = l21 * rr + (l22 * mn + l23 * mt) + l24 * ee
                w2 = l31 * rr + (l32 * mn + l13 * mt) + l14 * ee
            elif axis_is_y:
                w0 = ((l11 * rr + l13 * mt) + l12 * mn) + l14 * ee
                w1 = ((l21 * rr + l23 * mt) + l22 * mn) + l24 * ee
                w2 = ((l31 * rr + l13 * mt) + l32 * mn) + l14 * ee
            else:
                w0 = ((l11 * rr + l12 * mn) + l13 * mt) + l14 * ee
                w1 = ((l21 * rr + l22 * mn) + l23 * mt) + l24 * ee
                w2 = ((l31 * rr + l32 * mn) + l13 * mt) + l14 * ee
            w3 = (-ut) * rr + mt
            wwin[0][b] = w0
            wwin[1][b] = w1
            wwin[2][b] = w2
            wwin[3][b] = w3

        for s in range(4):
            _bvd_interface(wwin[s], sym, &wl[s], &wr[s], &labs[s], &labr)

        if sym:
            uLf[0] = (wl[0] + wl[2]) + wl[1]
            uLf[1] = (umc * wl[0] + upc * wl[2]) + un * wl[1]
            uLf[2] = ((ut * wl[0] + ut * wl[2]) + ut * wl[1]) + wl[3]
            uLf[3] = ((hmc * wl[0] + hpc * wl[2]) + ke2 * wl[1]) + ut * wl[3]
            uRf[0] = (wr[0] + wr[2]) + wr[1]
            uRf[1] = (umc * wr[0] + upc * wr[2]) + un * wr[1]
            uRf[2] = ((ut * wr[0] + ut * wr[2]) + ut * wr[1]) + wr[3]
            uRf[3] = ((hmc * wr[0] + hpc * wr[2]) + ke2 * wr[1]) + ut * wr[3]
        else:
            uLf[0] = (wl[0] + wl[1]) + wl[2]
            uLf[1] = (umc * wl[0] + un * wl[1]) + upc * wl[2]
            uLf[2] = ((ut * wl[0] + ut * wl[1]) + ut * wl[2]) + wl[3]
            uLf[3] = ((hmc * wl[0] + ke2 * wl[1]) + hpc * wl[2]) + ut * wl[3]
            uRf[0] = (wr[0] + wr[1]) + wr[2]
            uRf[1] = (umc * wr[0] + un * wr[1]) + upc * wr[2]
            uRf[2] = ((ut * wr[0] + ut * wr[1]) + ut * wr[2]) + wr[3]
            uRf[3] = ((hmc * wr[0] + ke2 * wr[1]) + hpc * wr[2]) + ut * wr[3]

        if not _hllc(uLf, uRf, gamma, gm1, sym, fx):
            err[li] = <int>tb
            return
        fluxes[0, li, k] = fx[0]
        fluxes[1, li, k] = fx[1]
        fluxes[2, li, k] = fx[2]
        fluxes[3, li, k] = fx[3]
        if k >= 1:
            labels[0, li, k - 1] = labs[0]
            labels[1, li, k - 1] = labs[1]
            labels[2, li, k - 1] = labs[2]
            labels[3, li, k - 1] = labs[3]


def sweep_lines(const double[:, :, :] lines, double[:, :, :] fluxes,
                signed char[:, :, :] labels, int[::1] err,
                double gamma, int variant, int axis_is_y, int num_threads=1):
    """Process all lines of one sweep; OpenMP across lines when asked.

    lines: (4, nlines, n+10) float64 in sweep layout.
    fluxes: (4, nlines, n+1) float64 out.
    labels: (4, nlines, n) int8 out, slots (u-c, u, u+c, shear).
    err: (nlines,) int32 out; nonzero marks the line and offending buffer cell.
    """
    cdef Py_ssize_t nlines = lines.shape[1]
    cdef Py_ssize_t n = lines.shape[2] - 10
    cdef double gm1 = gamma - 1.0
    cdef bint sym = variant == 1
    cdef bint ay = axis_is_y != 0
    cdef Py_ssize_t li
    if num_threads < 1:
        raise ValueError(f"num_threads must be >= 1, got {num_threads}")
    if lines.shape[0] != 4 or n < 1:
        raise ValueError("lines must be (4, nlines, n+10) with n >= 1")
    if fluxes.shape[0] != 4 or fluxes.shape[1] != nlines or fluxes.shape[2] != n + 1:
        raise ValueError("fluxes must be (4, nlines, n+1)")
    if labels.shape[0] != 4 or labels.shape[1] != nlines or labels.shape[2] != n:
        raise ValueError("labels must be (4, nlines, n)")
    if err.shape[0] != nlines:
        raise ValueError("err must be (nlines,)")
    if num_threads == 1:
        with nogil:
            for li in range(nlines):
                _sweep_line(lines, fluxes, labels, err, li, n, gamma, gm1, sym, ay)
    else:
        for li in prange(nlines, num_threads=num_threads, schedule='static',
                         nogil=True):
            _sweep_line(lines, fluxes, labels, err, li, n, gamma, gm1, sym, ay)
