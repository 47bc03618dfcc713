"""Pure-Python fallback for the compiled kernels.

Mirrors dephmeter._kernels operation for operation so that both backends
produce identical trajectories.  The per-step amplitude recursion is a
plain Python loop (the recurrence is sequential); the mutual-information
profile is vectorized with numpy.
"""

import math

import numpy as np

COMPILED = False


def evolve_amplitudes(omega, omega_m, theta, tau, n_steps, start_step=0,
                      meter0=0j, gsq0=0.0):
    """Run the collision amplitude recursion for n_steps collisions.

    Returns (meter, gamma, gsq):
      meter[i]  meter coherent amplitude on the upper branch after step
                start_step + i (meter[0] is the initial amplitude meter0)
      gamma[i]  amplitude handed to ancilla start_step + i + 1
      gsq[i]    running sum gsq0 + sum of |gamma|^2 up to entry i
    """
    meter = np.empty(n_steps + 1, dtype=np.complex128)
    gamma = np.empty(n_steps, dtype=np.complex128)
    gsq = np.empty(n_steps + 1, dtype=np.float64)

    c = math.cos(0.5 * theta)
    s = math.sin(0.5 * theta)
    wt = omega_m * tau
    x = 0.5 * wt
    if abs(wt) < 1e-6:
        sinc = 1.0 - x * x / 6.0 + x * x * x * x / 120.0
    else:
        sinc = math.sin(x) / x
    be = omega * tau * sinc
    base = complex(-be * math.sin(x), -be * math.cos(x))

    m_prev = complex(meter0)
    gacc = float(gsq0)
    meter[0] = m_prev
    gsq[0] = gacc
    for i in range(1, n_steps + 1):
        k = start_step + i
        arg = wt * (k - 1)
        phase = complex(math.cos(arg), -math.sin(arg))
        alpha = base * phase
        pre = m_prev + alpha
        m_prev = pre * c
        g = 1j * pre * s
        meter[i] = m_prev
        gamma[i - 1] = g
        gacc = gacc + (g.real * g.real + g.imag * g.imag)
        gsq[i] = gacc
    return meter, gamma, gsq


def mi_profile(gsq, meter_sq, p):
    """Mutual information I(S:F_m) in bits for every m = 0..len(gsq)-1.

    gsq is the prefix-sum array of |gamma_j|^2, meter_sq the squared
    modulus of the final meter amplitude, p a pointer population.
    """
    gsq = np.asarray(gsq, dtype=np.float64)
    n = gsq.shape[0] - 1
    fourpq = 4.0 * p * (1.0 - p)
    gl = gsq[n]
    s_sys = _h_plus(_lam_plus(fourpq, math.exp(-4.0 * (meter_sq + gl))))
    lam_f = _lam_plus_arr(fourpq, np.exp(-4.0 * gsq))
    lam_j = _lam_plus_arr(fourpq, np.exp(-4.0 * (meter_sq + (gl - gsq))))
    return np.maximum(s_sys + _h_plus_arr(lam_f) - _h_plus_arr(lam_j), 0.0)


def _lam_plus(fourpq, o2):
    rad = 1.0 - fourpq * (1.0 - o2)
    if rad < 0.0:
        rad = 0.0
    elif rad > 1.0:
        rad = 1.0
    return 0.5 * (1.0 + math.sqrt(rad))


def _h_plus(lam):
    mu = 1.0 - lam
    if lam >= 1.0 or mu <= 0.0:
        return 0.0
    return -(lam * math.log2(lam) + mu * math.log2(mu))


def _lam_plus_arr(fourpq, o2):
    rad = np.clip(1.0 - fourpq * (1.0 - o2), 0.0, 1.0)
    return 0.5 * (1.0 + np.sqrt(rad))


def _h_plus_arr(lam):
    mu = 1.0 - lam
    out = np.zeros_like(lam)
    inside = mu > 0.0
    lam = lam[inside]
    mu = mu[inside]
    out[inside] = -(lam * np.log2(lam) + mu * np.log2(mu))
    return out
