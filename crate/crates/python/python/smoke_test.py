"""Smoke test for the humbert_py extension module.

Build and install the module first, for example

    pip install maturin
    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/humbert_py-*.whl

then run ``python crates/python/python/smoke_test.py``.
"""

import math
import sys

import humbert_py as h


def close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(b))


def main():
    p = h.Phi1Params(0.5, 1.0, 1.5)
    assert p.a == 0.5 and p.c == 1.5

    # Phi_1 with y = 0 reduces to 2F1(1/2, 1; 3/2; x) = artanh(sqrt x)/sqrt x
    x = 0.3
    r = h.evaluate(p, x, 0.0)
    assert r.regime == "series-2f1", r.regime
    assert close(r.value, math.atanh(math.sqrt(x)) / math.sqrt(x), 1e-13), r
    assert r.err_est >= 0.0

    # the dispatcher picks the large-x expansion and it agrees with the
    # convergent methods
    big = h.evaluate(p, -40.0, 1.0)
    assert big.regime == "large-x"
    forced = h.evaluate(p, -40.0, 1.0, regime="series-2f1")
    assert close(big.value, forced.value, 1e-10)

    cc = h.cross_check(p, -20.0, 0.5)
    assert len(cc.methods) >= 2 and cc.max_delta <= 1e-7
    assert "large-x" in h.applicable_regimes(p, -20.0, 0.5)

    z = 0.2 + 0.1j
    assert close(h.phi1_taylor(p, z, 0.4), h.phi1_euler_integral(p, z, 0.4), 1e-12)

    # zero-temperature Glauber autocorrelation is (2/pi) arctan(sqrt(2s/tau))
    for s, tau in [(1.0, 2.0), (0.3, 5.0), (40.0, 3.0)]:
        want = 2.0 / math.pi * math.atan(math.sqrt(2.0 * s / tau))
        assert close(h.glauber_c0(s, tau, 0.0), want, 1e-12)
        assert close(h.glauber_zero_temperature(s, tau), want, 1e-15)

    # A+ of t^rho: closed form against quadrature of a Python callable
    pp = h.PrabhakarParams(0.3, 0.55, 1.2, 0.4, 1.0)
    closed = h.prabhakar_power(pp, 0.5, 0.7, side="plus")
    quad, err = h.prabhakar_apply(pp, lambda t: t ** 0.5, 0.5, 0.7, side="plus")
    assert close(quad, closed, 1e-8) and err >= 0.0

    # F_M with z = 0 factors into two Gauss functions; with z = y = 0 it is
    # 2F1(a1, b1; g1; x). Compare series and integral forms instead.
    args = (0.5, 0.5, 0.25, 0.75, 1.5, 1.25, 0.2, 0.1, 0.3)
    assert close(h.fm_series(*args), h.fm_laplace(*args), 1e-7)

    try:
        h.evaluate(p, 3.0, 1.0)
    except h.DomainError as e:
        assert "cut" in str(e)
    else:
        raise AssertionError("expected a DomainError on the branch cut")

    try:
        h.prabhakar_apply(pp, lambda t: 1 / 0, 0.0, 0.5)
    except ZeroDivisionError:
        pass
    else:
        raise AssertionError("callback errors must propagate")

    print("humbert_py smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
