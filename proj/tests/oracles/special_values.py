"""Reference values for the special-function tests, computed with mpmath."""
import mpmath as mp

mp.mp.dps = 50


def show(name, v):
    if isinstance(v, mp.mpc):
        print(f"{name}: {mp.nstr(v.real, 40)} {mp.nstr(v.imag, 40)}")
    else:
        print(f"{name}: {mp.nstr(v, 40)}")


show("zeta(2)", mp.zeta(2))
show("zeta'(2)", mp.zeta(2, derivative=1))
show("zeta''(2)/2", mp.zeta(2, derivative=2) / 2)
show("zeta(3.5)", mp.zeta(3.5))
show("zeta'''(3.5)/6", mp.zeta(3.5, derivative=3) / 6)
for n in range(0, 11):
    show(f"stieltjes {n}", mp.stieltjes(n))
show("stieltjes 20", mp.stieltjes(20))
show("primezeta(2)", mp.primezeta(2))
show("primezeta(3)", mp.primezeta(3))
show("-primezeta'(2)", -mp.diff(mp.primezeta, 2))
show("primezeta''(3)", mp.diff(mp.primezeta, 3, 2))
show("(zeta'/zeta)(2)", mp.zeta(2, derivative=1) / mp.zeta(2))
show("(log zeta)''(2)", mp.diff(lambda s: mp.log(mp.zeta(s)), 2, 2))
show("(log zeta)'''(4)", mp.diff(lambda s: mp.log(mp.zeta(s)), 4, 3))
show("2F1(1.5,2.5;1;0.3)", mp.hyp2f1(1.5, 2.5, 1, mp.mpf("0.3")))
show("2F1(0.5+1j,3.5+1j;4;0.5)", mp.hyp2f1(0.5 + 1j, 3.5 + 1j, 4, 0.5))
show("2F1(2.25,2.25;1;0.9)", mp.hyp2f1(2.25, 2.25, 1, mp.mpf("0.9")))
show("zeta(1/2)", mp.zeta(0.5))
show("zeta(1/2+i)", mp.zeta(mp.mpc(0.5, 1)))
show("zeta(1/2+100i)", mp.zeta(mp.mpc(0.5, 100)))
show("zeta(2+3i)", mp.zeta(mp.mpc(2, 3)))
show("loggamma(0.5+1j)", mp.loggamma(mp.mpc(0.5, 1)))
show("loggamma(3.7)", mp.loggamma(mp.mpf("3.7")))
show("barnesg(1.5)", mp.barnesg(1.5))
show("barnesg(2.5+1j)", mp.barnesg(mp.mpc(2.5, 1)))
show("zeta'(-1)", mp.zeta(-1, derivative=1))


def theta(A, B, C, t):
    f = lambda u: (1 - mp.expjpi(2 * u) * mp.sqrt(t)) ** (-A) * (1 - mp.expjpi(-2 * u) * mp.sqrt(t)) ** (-B) * mp.expjpi(2 * C * u)
    return mp.quad(f, [0, 0.25, 0.5, 0.75, 1])


show("theta(3,2,1,0.25)", theta(3, 2, 1, mp.mpf(0.25)))
show("theta(2,4,-2,0.1)", theta(2, 4, -2, mp.mpf("0.1")))
show("theta(1.5+1j,2.5+1j,0,0.5)", theta(mp.mpc(1.5, 1), mp.mpc(2.5, 1), 0, mp.mpf(0.5)))
