#pragma once

#include <array>

#include "bknot/common.hpp"

namespace bknot::elliptic {

// Module-wide tolerance defaults.  Root finders downstream assume these.
inline constexpr double kAgmEps = 1.0e-16;
inline constexpr double kIdentityTol = 1.0e-12;
inline constexpr double kInversionTol = 1.0e-10;

/// Elliptic modulus k in [0,1) together with the cached quarter period K(k)
/// and the AGM ladder used to evaluate the amplitude.
struct Modulus {
    double k = 0.0;
    double k2 = 0.0;
    double K = 0.0;

    static Modulus from_k(double k);

    // AGM scale, filled by from_k.  stage 0 holds (a0, c0) = (1, k).
    int stages = 0;
    std::array<double, 24> agm_a{};
    std::array<double, 24> agm_c{};
};

struct JacobiTriple {
    double sn = 0.0;
    double cn = 1.0;
    double dn = 1.0;
};

/// Complete elliptic integral of the first kind via the arithmetic-geometric
/// mean: K = pi / (2 agm(1, k')).  Rejects k outside [0,1).
double complete_K(double k);

/// Incomplete integral F(phi,k), evaluated by the ascending AGM phase
/// recursion after reducing phi modulo pi (F(phi+pi) = F(phi) + 2K).
double incomplete_F(double phi, double k);
double incomplete_F(double phi, const Modulus& m);

/// Jacobi amplitude am(u,k).  Large u is range reduced modulo 2K so that
/// am(u + 2nK) = am(u) + n pi holds exactly.
double jacobi_am(double u, double k);
double jacobi_am(double u, const Modulus& m);

JacobiTriple jacobi_sn_cn_dn(double u, double k);
JacobiTriple jacobi_sn_cn_dn(double u, const Modulus& m);

}  // namespace bknot::elliptic
