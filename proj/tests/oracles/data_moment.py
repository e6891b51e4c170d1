"""Reference values of integrals of |zeta(1/2+it)|^{2k}.

Independent of the C++ code: mpmath's Riemann-Siegel Z, zeros located by
sign changes on a fine grid and refined with findroot, tanh-sinh between
consecutive zeros (robust to the |t - t0|^{2k} endpoint behaviour).
"""
import mpmath as mp

mp.mp.dps = 20


def integral(k, lo, hi, step=0.05):
    z = mp.siegelz
    cuts = [mp.mpf(lo)]
    t = mp.mpf(lo)
    zt = z(t)
    while t < hi:
        u = min(t + step, mp.mpf(hi))
        zu = z(u)
        if zt * zu < 0:
            cuts.append(mp.findroot(z, (t, u), solver="anderson"))
        t, zt = u, zu
    cuts.append(mp.mpf(hi))
    f = lambda x: mp.exp(k * mp.log(mp.siegelz(x) ** 2))
    return mp.fsum(mp.quad(f, [a, b], method="tanh-sinh") for a, b in zip(cuts, cuts[1:]))


def integral_even(k, lo, hi):
    # |zeta|^2k is analytic for integer k: no zero splitting needed
    f = lambda x: abs(mp.zeta(mp.mpf("0.5") + 1j * x)) ** (2 * k)
    return mp.quad(f, mp.linspace(lo, hi, 2 * (hi - lo) + 1))


if __name__ == "__main__":
    print("k=1 [0,200]:", mp.nstr(integral_even(1, 0, 200), 15))
    print("k=0.5+i [100,200]:", mp.nstr(integral(mp.mpc("0.5", "1"), 100, 200), 15))
    print("k=3 [45000,45010]:", mp.nstr(integral_even(3, 45000, 45010), 15))
    print("k=0.5 [100,1000]:", mp.nstr(integral(mp.mpf("0.5"), 100, 1000), 15))
