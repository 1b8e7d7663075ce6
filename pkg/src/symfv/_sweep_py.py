"""Pure-Python line-sweep kernel; reference implementation for the compiled one.

One call processes a batch of 1D lines in sweep layout: component planes
(rho, normal momentum, transverse momentum, E), each line padded with five
ghost cells per side.  Per interface it freezes a characteristic frame from
the density-weighted average of the two adjacent cell averages, projects the
ten-cell window centred on that interface, runs the two-stage candidate
selection per characteristic component for the two cells touching it,
back-projects the selected pair of face states, and feeds the pair to the
approximate Riemann solver.  Every interface flux is therefore a pure
function of its own ten-cell window.  Each interior cell's selection label
is the one recorded at its right interface, where the cell sits on the left
side of the stage-two comparison.

The compiled kernel is a statement-for-statement transliteration; any edit
here must be mirrored there, or backend parity breaks at the bit level.
"""

from __future__ import annotations

from math import cosh, exp, sqrt, tanh

BETA_S = 1.1
BETA_L = 1.6
TANH_BS = tanh(BETA_S)
COSH_BS = cosh(BETA_S)
TANH_BL = tanh(BETA_L)
COSH_BL = cosh(BETA_L)
T1_BS = tanh(0.5 * BETA_S)
T1_BL = tanh(0.5 * BETA_L)


def _p4(s0, s1, s2, s3, s4, sym):
    qr = (2.0 * s0 - 13.0 * s1 + 47.0 * s2 + 27.0 * s3 - 3.0 * s4) / 60.0
    if sym:
        ql = (2.0 * s4 - 13.0 * s3 + 47.0 * s2 + 27.0 * s1 - 3.0 * s0) / 60.0
    else:
        ql = (-3.0 * s0 + 27.0 * s1 + 47.0 * s2 - 13.0 * s3 + 2.0 * s4) / 60.0
    return qr, ql


def _thinc_orig(qm, qc, qp, beta, tanh_b, cosh_b):
    if not (qc - qm) * (qp - qc) > 0.0:
        return qc, qc
    qmin = qm if qm < qp else qp
    dq = abs(qp - qm)
    theta = 1.0 if qp > qm else -1.0
    alpha = theta * (2.0 * ((qc - qmin + 1e-20) / (dq + 1e-20)) - 1.0)
    a = (exp(alpha * beta) / cosh_b - 1.0) / tanh_b
    qr = qmin + 0.5 * dq * (1.0 + theta * ((tanh_b + a) / (1.0 + a * tanh_b)))
    ql = qmin + 0.5 * dq * (1.0 + theta * a)
    return qr, ql


def _thinc_sym(qm, qc, qp, beta, t1):
    if not (qc - qm) * (qp - qc) > 1e-20:
        return qc, qc
    qa = 0.5 * (qp + qm)
    qd = 0.5 * (qp - qm)
    alpha = (qc - qa) / qd
    t2 = tanh(0.5 * (alpha * beta))
    rt = t2 / t1
    qr = qa + qd * ((t1 + rt) / (1.0 + t2))
    ql = qa - qd * ((t1 - rt) / (1.0 - t2))
    return qr, ql


def _hllc(uL, uR, gamma, gm1, sym, out):
    """Sweep-frame interface flux; returns False on an unusable input state.

    Face states come from unlimited reconstruction, so at sub-cell features
    they can overshoot the data range; density and pressure then go negative
    together, the squared sound speed stays positive, and the flux remains
    finite.  Only states that would break the arithmetic are rejected: zero
    density, or a squared sound speed that is not strictly positive.
    """
    rl, mnl, mtl, el = uL
    rr, mnr, mtr, er = uR
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
        sg = float((ss > 0.0) - (ss < 0.0))
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


def _bvd_interface(ws, sym, face):
    """Two-stage selection at the central interface of a ten-cell window.

    Fills ``face`` with (left-side value, right-side value, left-cell label,
    right-cell label) for the interface between window cells 4 and 5.
    """
    p4r = [0.0] * 10
    p4l = [0.0] * 10
    tsr = [0.0] * 10
    tsl = [0.0] * 10
    trip = [False] * 10

    for b in range(2, 8):
        p4r[b], p4l[b] = _p4(ws[b - 2], ws[b - 1], ws[b], ws[b + 1], ws[b + 2], sym)
        if sym:
            tsr[b], tsl[b] = _thinc_sym(ws[b - 1], ws[b], ws[b + 1], BETA_S, T1_BS)
        else:
            tsr[b], tsl[b] = _thinc_orig(
                ws[b - 1], ws[b], ws[b + 1], BETA_S, TANH_BS, COSH_BS
            )
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
        tl3r, _tl3l = _thinc_sym(ws[2], ws[3], ws[4], BETA_L, T1_BL)
        tl4r, tl4l = _thinc_sym(ws[3], ws[4], ws[5], BETA_L, T1_BL)
        tl5r, tl5l = _thinc_sym(ws[4], ws[5], ws[6], BETA_L, T1_BL)
        _tl6r, tl6l = _thinc_sym(ws[5], ws[6], ws[7], BETA_L, T1_BL)
    else:
        tl3r, _tl3l = _thinc_orig(ws[2], ws[3], ws[4], BETA_L, TANH_BL, COSH_BL)
        tl4r, tl4l = _thinc_orig(ws[3], ws[4], ws[5], BETA_L, TANH_BL, COSH_BL)
        tl5r, tl5l = _thinc_orig(ws[4], ws[5], ws[6], BETA_L, TANH_BL, COSH_BL)
        _tl6r, tl6l = _thinc_orig(ws[5], ws[6], ws[7], BETA_L, TANH_BL, COSH_BL)

    # Stage two for the left cell of the interface.
    tbv_i = abs(s3r - s4l) + abs(s4r - s5l)
    tbv_tl = abs(tl3r - tl4l) + abs(tl4r - tl5l)
    if tbv_tl < tbv_i:
        face[0] = tl4r
        face[2] = 2
    elif mark4:
        face[0] = tsr[4]
        face[2] = 1
    else:
        face[0] = p4r[4]
        face[2] = 0

    # Stage two for the right cell of the interface.
    tbv_i = abs(s4r - s5l) + abs(s5r - s6l)
    tbv_tl = abs(tl4r - tl5l) + abs(tl5r - tl6l)
    if tbv_tl < tbv_i:
        face[1] = tl5l
        face[3] = 2
    elif mark5:
        face[1] = tsl[5]
        face[3] = 1
    else:
        face[1] = p4l[5]
        face[3] = 0


def _sweep_line(lines, fluxes, labels, err, li, n, gamma, gm1, sym, axis_is_y):
    ln0 = lines[0, li].tolist()
    ln1 = lines[1, li].tolist()
    ln2 = lines[2, li].tolist()
    ln3 = lines[3, li].tolist()
    wwin = [[0.0] * 10 for _ in range(4)]
    face = [0.0, 0.0, 0, 0]
    wl = [0.0] * 4
    wr = [0.0] * 4
    labs = [0] * 4
    uLf = [0.0] * 4
    uRf = [0.0] * 4
    fx = [0.0] * 4

    for k in range(n + 1):
        ta = k + 4
        tb = k + 5
        ra = ln0[ta]
        ma1 = ln1[ta]
        ma2 = ln2[ta]
        ea = ln3[ta]
        if not ra > 0.0:
            err[li] = ta
            return
        una = ma1 / ra
        uta = ma2 / ra
        pa = gm1 * (ea - 0.5 * ra * (una * una + uta * uta))
        if not pa > 0.0:
            err[li] = ta
            return
        ha = (ea + pa) / ra
        rb = ln0[tb]
        mb1 = ln1[tb]
        mb2 = ln2[tb]
        eb = ln3[tb]
        if not rb > 0.0:
            err[li] = tb
            return
        unb = mb1 / rb
        utb = mb2 / rb
        pb = gm1 * (eb - 0.5 * rb * (unb * unb + utb * utb))
        if not pb > 0.0:
            err[li] = tb
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
            err[li] = tb
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
            rr = ln0[j]
            mn = ln1[j]
            mt = ln2[j]
            ee = ln3[j]
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
            _bvd_interface(wwin[s], sym, face)
            wl[s] = face[0]
            wr[s] = face[1]
            labs[s] = face[2]

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
            err[li] = tb
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


def sweep_lines(lines, fluxes, labels, err, gamma, variant, axis_is_y, num_threads=1):
    """Process all lines of one sweep; serial reference (num_threads ignored).

    lines: (4, nlines, n+10) float64 in sweep layout.
    fluxes: (4, nlines, n+1) float64 out.
    labels: (4, nlines, n) int8 out, slots (u-c, u, u+c, shear).
    err: (nlines,) int32 out; nonzero marks the line and offending buffer cell.
    """
    nlines = lines.shape[1]
    n = lines.shape[2] - 10
    gm1 = gamma - 1.0
    sym = variant == 1
    for li in range(nlines):
        _sweep_line(lines, fluxes, labels, err, li, n, gamma, gm1, sym, axis_is_y)
