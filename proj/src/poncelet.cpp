#include "bknot/poncelet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace bknot::poncelet {

using elliptic::jacobi_sn_cn_dn;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_frame_domain(const geom::Ellipse& E, double lambda) {
    if (!(E.A > E.B))
        throw ValidationError("Jacobi frame requires A > B");
    if (!(lambda > 0.0) || !(lambda < E.B * E.B))
        throw DomainError("caustic parameter must lie in (0, B^2)");
}

}  // namespace

JacobiFrame JacobiFrame::build(const geom::Ellipse& E, double lambda) {
    check_frame_domain(E, lambda);
    JacobiFrame f;
    f.base = E;
    f.lambda = lambda;
    const double A2 = E.A * E.A, B2 = E.B * E.B;
    f.c1 = std::sqrt(A2 - lambda);
    f.c2 = std::sqrt(B2 - lambda);
    f.a_star = E.B / f.c2;
    f.b_star = E.A / f.c1;
    const double k2 = (A2 - B2) / (A2 - lambda);
    f.modulus = elliptic::Modulus::from_k(std::sqrt(k2));
    f.beta = elliptic::incomplete_F(std::acos(1.0 / f.a_star), f.modulus);
    f.theta = 2.0 * f.beta;

    // The two defining relations of the normalized frame must hold
    // simultaneously; this pins the modulus.
    const auto t = jacobi_sn_cn_dn(f.beta, f.modulus);
    if (std::fabs(t.cn - 1.0 / f.a_star) > 1.0e-10 ||
        std::fabs(t.dn - f.b_star / f.a_star) > 1.0e-10)
        throw std::runtime_error("Jacobi frame consistency check failed");
    return f;
}

Vec2 JacobiFrame::vertex_at(double psi) const {
    const auto t = jacobi_sn_cn_dn(psi, modulus);
    return {base.A * t.sn, base.B * t.cn};
}

Vec2 JacobiFrame::tangency_at(double phi) const {
    const auto t = jacobi_sn_cn_dn(phi, modulus);
    return {c1 * t.sn, c2 * t.cn};
}

double rotation_number(const geom::Ellipse& E, double lambda) {
    return JacobiFrame::build(E, lambda).rotation_number();
}

JacobiFrame solve_caustic(const geom::Ellipse& E, int n, int p, double tol) {
    if (n < 3 || p < 1)
        throw ValidationError("need n >= 3 and p >= 1");
    if (std::gcd(n, p) != 1)
        throw NonCoprimeError("n and p must be coprime, got n=" + std::to_string(n) +
                              " p=" + std::to_string(p));
    if (!(E.A > E.B))
        throw ValidationError("solve_caustic requires A > B");

    const double target = static_cast<double>(p) / n;
    const double B2 = E.B * E.B;
    const double lo_frac = 1.0e-9, hi_frac = 1.0 - 1.0e-9;

    // Scan for a sign change; rho is expected monotone increasing.
    const int scan = 64;
    double prev_l = B2 * lo_frac;
    double prev_r = rotation_number(E, prev_l) - target;
    double lo = 0.0, hi = 0.0;
    bool bracketed = false;
    double rho_min = prev_r + target, rho_max = prev_r + target;
    for (int i = 1; i < scan; ++i) {
        const double frac = lo_frac + (hi_frac - lo_frac) * i / (scan - 1);
        const double l = B2 * frac;
        const double r = rotation_number(E, l) - target;
        if (r + target < rho_max - 1.0e-12)
            throw std::runtime_error("rotation number is not monotone in lambda");
        rho_min = std::fmin(rho_min, r + target);
        rho_max = std::fmax(rho_max, r + target);
        if (!bracketed && prev_r <= 0.0 && r >= 0.0) {
            lo = prev_l;
            hi = l;
            bracketed = true;
        }
        prev_l = l;
        prev_r = r;
    }
    if (!bracketed) {
        std::ostringstream os;
        os << "rotation number p/n = " << target << " is outside the scanned range ["
           << rho_min << ", " << rho_max << "] for lambda in (0, " << B2 << ")";
        throw NoRootError(os.str());
    }

    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double r = rotation_number(E, mid) - target;
        if (std::fabs(r) < tol) return JacobiFrame::build(E, mid);
        if (r < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1.0e-16 * B2) break;
    }
    const double mid = 0.5 * (lo + hi);
    const double r = rotation_number(E, mid) - target;
    if (std::fabs(r) < 1.0e-9) return JacobiFrame::build(E, mid);
    throw NoRootError("bisection stalled before reaching the rotation-number tolerance");
}

geom::Line2 PonceletPolygon::side_line(int j) const {
    const int m = ((j % n) + n) % n;
    const Vec2& a = vertices[(m + n - 1) % n];
    const Vec2& b = vertices[m];
    return geom::Line2::through(a, b);
}

PonceletPolygon polygon(const JacobiFrame& frame, int n, int p, double phi) {
    if (std::gcd(n, p) != 1) throw NonCoprimeError("n and p must be coprime");
    if (n < 2 * p + 1) throw ValidationError("polygon requires n >= 2p + 1");

    PonceletPolygon poly;
    poly.frame = frame;
    poly.n = n;
    poly.p = p;
    poly.phi = phi;
    poly.vertices.reserve(n);
    poly.tangency_points.reserve(n);
    for (int j = 0; j < n; ++j) {
        poly.vertices.push_back(frame.vertex_at(phi + frame.beta + j * frame.theta));
        poly.tangency_points.push_back(frame.tangency_at(phi + j * frame.theta));
    }
    double per = 0.0;
    for (int j = 0; j < n; ++j)
        per += (poly.vertices[(j + 1) % n] - poly.vertices[j]).norm();
    poly.perimeter = per;

    // Construction guarantees, kept as cheap invariants.
    const Vec2 vn = frame.vertex_at(phi + frame.beta + n * frame.theta);
    if ((vn - poly.vertices[0]).norm() > 1.0e-9)
        throw std::runtime_error("Poncelet polygon failed to close");
    for (int j = 0; j < n; ++j) {
        if (std::fabs(frame.base.value(poly.vertices[j]) - 1.0) > 1.0e-9)
            throw std::runtime_error("polygon vertex left the ellipse");
        geom::ConfocalConic C;
        C.base = frame.base;
        C.lambda = frame.lambda;
        C.kind = geom::ConicKind::Ellipse;
        if (geom::tangency_residual(C, poly.side_line(j)) > 1.0e-8)
            throw std::runtime_error("polygon side is not tangent to the caustic");
    }
    return poly;
}

namespace {

// Point of E at true anomaly nu seen from the focus (f, 0).
Vec2 focal_point(const geom::Ellipse& E, double nu) {
    const double f = E.focal_half_distance();
    const double ecc = f / E.A;
    const double ell = E.B * E.B / E.A;  // semi-latus rectum
    const double r = ell / (1.0 + ecc * std::cos(nu));
    return {f + r * std::cos(nu), r * std::sin(nu)};
}

double golden_max(const std::function<double(double)>& fn, double lo, double hi, int iters) {
    const double g = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = fn(x1), f2 = fn(x2);
    for (int i = 0; i < iters && b - a > 1.0e-14; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = fn(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = fn(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

BirkhoffResult birkhoff_polygon(const geom::Ellipse& E, int n, int p, const Vec2& P0,
                                int max_sweeps) {
    if (std::gcd(n, p) != 1) throw NonCoprimeError("n and p must be coprime");
    if (n < 2 * p + 1) throw ValidationError("need n >= 2p + 1");
    if (!E.on_boundary(P0, 1.0e-7)) throw DomainError("P0 must lie on the ellipse");

    const double f = E.focal_half_distance();
    const double nu0 = std::atan2(P0.y, P0.x - f);
    const double eps = 1.0e-6;  // keeps every focal angle in (0, pi)

    // nu[0] = nu0 fixed, nu[n] = nu0 + 2 pi p fixed; interior angles free.
    std::vector<double> nu(n + 1);
    for (int i = 0; i <= n; ++i) nu[i] = nu0 + 2.0 * kPi * p * i / n;

    auto seglen = [&](double a, double b) { return (focal_point(E, a) - focal_point(E, b)).norm(); };

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double moved = 0.0;
        for (int i = 1; i < n; ++i) {
            const double lo = std::fmax(nu[i - 1] + eps, nu[i + 1] - kPi + eps);
            const double hi = std::fmin(nu[i - 1] + kPi - eps, nu[i + 1] - eps);
            if (!(hi > lo)) continue;
            const double best = golden_max(
                [&](double x) { return seglen(nu[i - 1], x) + seglen(x, nu[i + 1]); }, lo, hi, 120);
            moved = std::fmax(moved, std::fabs(best - nu[i]));
            nu[i] = best;
        }
        if (moved < 1.0e-11) break;
    }

    BirkhoffResult res;
    res.sweeps = sweep;
    res.vertices.reserve(n);
    for (int i = 0; i < n; ++i) res.vertices.push_back(focal_point(E, nu[i]));
    for (int i = 0; i < n; ++i)
        res.perimeter += (res.vertices[(i + 1) % n] - res.vertices[i]).norm();

    double max_res = 0.0;
    for (int i = 1; i < n; ++i) {
        const Vec2 prev = res.vertices[i - 1], cur = res.vertices[i],
                   next = res.vertices[(i + 1) % n];
        const Vec2 din = (cur - prev).normalized();
        const Vec2 nrm = E.outward_normal(cur);
        const Vec2 dout = (din - 2.0 * din.dot(nrm) * nrm).normalized();
        max_res = std::fmax(max_res, (dout - (next - cur).normalized()).norm());
    }
    res.max_reflection_residual = max_res;
    if (max_res > 1.0e-5)
        throw NonConvergenceError("Birkhoff ascent did not reach a billiard polygon", max_res);

    const auto L = geom::Line2::through(res.vertices[0], res.vertices[1]);
    res.lambda = geom::caustic_from_chord(E, L).lambda;
    return res;
}

double graves_spread(const JacobiFrame& frame, int n, int p, std::span<const double> phis) {
    if (phis.empty()) throw ValidationError("graves_spread needs at least one phi");
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (double phi : phis) {
        const double per = polygon(frame, n, p, phi).perimeter;
        if (first) {
            lo = hi = per;
            first = false;
        } else {
            lo = std::fmin(lo, per);
            hi = std::fmax(hi, per);
        }
    }
    return hi - lo;
}

DarbouxResult darboux_residual(const PonceletPolygon& poly) {
    if (poly.n % 2 != 0) throw DomainError("diagonal concurrency requires an even polygon");
    const int h = poly.n / 2;

    struct Diag {
        Vec2 p, d;
    };
    std::vector<Diag> diags;
    diags.reserve(h);
    for (int j = 0; j < h; ++j)
        diags.push_back({poly.vertices[j], poly.vertices[j + h] - poly.vertices[j]});

    std::vector<Vec2> pts;
    for (int i = 0; i < h; ++i) {
        for (int j = i + 1; j < h; ++j) {
            const double den = diags[i].d.cross(diags[j].d);
            if (std::fabs(den) < 1.0e-14) continue;
            const double t = (diags[j].p - diags[i].p).cross(diags[j].d) / den;
            pts.push_back(diags[i].p + t * diags[i].d);
        }
    }
    DarbouxResult r;
    if (pts.empty()) {
        // n = 4 has a single intersection pair; recompute directly
        const double den = diags[0].d.cross(diags[1].d);
        const double t = (diags[1].p - diags[0].p).cross(diags[1].d) / den;
        r.point = diags[0].p + t * diags[0].d;
        return r;
    }
    Vec2 mean{0.0, 0.0};
    for (const auto& q : pts) mean = mean + q;
    mean = mean * (1.0 / pts.size());
    double worst = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            worst = std::fmax(worst, (pts[i] - pts[j]).norm());
    r.residual = worst;
    r.point = mean;
    return r;
}

}  // namespace bknot::poncelet
