#include "bknot/elliptic.hpp"

#include <cmath>

namespace bknot::elliptic {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_modulus(double k) {
    if (!(k >= 0.0) || k >= 1.0 || !std::isfinite(k))
        throw DomainError("elliptic modulus must satisfy 0 <= k < 1, got " + std::to_string(k));
}

// Amplitude on the reduced interval v in [-K, K] by the descending AGM
// recurrence (Abramowitz & Stegun 16.4, same scheme as Cephes ellpj).
double am_core(double v, const Modulus& m) {
    if (m.stages == 0) return v;  // k == 0 degenerates to the identity
    double phi = std::ldexp(1.0, m.stages) * m.agm_a[m.stages] * v;
    for (int i = m.stages; i >= 1; --i) {
        double t = m.agm_c[i] * std::sin(phi) / m.agm_a[i];
        t = std::fmin(1.0, std::fmax(-1.0, t));
        phi = 0.5 * (std::asin(t) + phi);
    }
    return phi;
}

}  // namespace

Modulus Modulus::from_k(double k) {
    check_modulus(k);
    Modulus m;
    m.k = k;
    m.k2 = k * k;

    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    m.agm_a[0] = a;
    m.agm_c[0] = k;
    int i = 0;
    while (std::fabs(m.agm_c[i]) > kAgmEps * m.agm_a[i]) {
        if (i + 1 >= static_cast<int>(m.agm_a.size()))
            throw std::runtime_error("AGM failed to converge");
        const double an = 0.5 * (a + b);
        const double cn = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        ++i;
        m.agm_a[i] = a;
        m.agm_c[i] = cn;
    }
    m.stages = i;
    m.K = kPi / (2.0 * a);
    return m;
}

double complete_K(double k) { return Modulus::from_k(k).K; }

double incomplete_F(double phi, const Modulus& m) {
    if (m.k == 0.0) return phi;

    // Reduce to [-pi/2, pi/2]; each half turn of amplitude adds 2K.
    const double j = std::round(phi / kPi);
    double r = phi - j * kPi;
    const double sign = r < 0.0 ? -1.0 : 1.0;
    r = std::fabs(r);

    // Ascending phase recursion: tan(phi_{n+1} - phi_n) = (b/a) tan(phi_n)
    // with the branch keeping phi_{n+1} close to 2 phi_n.
    double a = 1.0;
    double b = std::sqrt((1.0 - m.k) * (1.0 + m.k));
    double p = r;
    double twon = 1.0;
    while (a - b > kAgmEps * a) {
        const double psi = std::atan2(b * std::sin(p), a * std::cos(p));
        const double step = psi + kPi * std::round((p - psi) / kPi);
        p += step;
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        twon *= 2.0;
    }
    return sign * p / (twon * a) + 2.0 * j * m.K;
}

double incomplete_F(double phi, double k) {
    check_modulus(k);
    if (k == 0.0) return phi;
    return incomplete_F(phi, Modulus::from_k(k));
}

double jacobi_am(double u, const Modulus& m) {
    if (m.k == 0.0) return u;
    const double n = std::round(u / (2.0 * m.K));
    const double v = u - 2.0 * n * m.K;
    return am_core(v, m) + n * kPi;
}

double jacobi_am(double u, double k) {
    check_modulus(k);
    return jacobi_am(u, Modulus::from_k(k));
}

JacobiTriple jacobi_sn_cn_dn(double u, const Modulus& m) {
    const double phi = jacobi_am(u, m);
    JacobiTriple t;
    t.sn = std::sin(phi);
    t.cn = std::cos(phi);
    t.dn = std::sqrt(std::fmax(0.0, 1.0 - m.k2 * t.sn * t.sn));
    return t;
}

JacobiTriple jacobi_sn_cn_dn(double u, double k) {
    check_modulus(k);
    return jacobi_sn_cn_dn(u, Modulus::from_k(k));
}

}  // namespace bknot::elliptic
