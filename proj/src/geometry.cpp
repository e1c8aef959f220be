#include "bknot/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace bknot::geom {

Ellipse::Ellipse(double a, double b) : A(a), B(b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw ValidationError("ellipse semi-axes must be positive");
}

std::pair<Vec2, Vec2> Ellipse::foci() const {
    const double f = focal_half_distance();
    if (A >= B) return {Vec2{-f, 0.0}, Vec2{f, 0.0}};
    return {Vec2{0.0, -f}, Vec2{0.0, f}};
}

double Ellipse::perimeter(int samples) const {
    // Composite trapezoid on the regular parametrization; used only for
    // reporting, not for arc-length bookkeeping.
    double len = 0.0;
    Vec2 prev{A, 0.0};
    for (int i = 1; i <= samples; ++i) {
        const double t = 2.0 * 3.141592653589793238462643 * i / samples;
        const Vec2 cur{A * std::cos(t), B * std::sin(t)};
        len += (cur - prev).norm();
        prev = cur;
    }
    return len;
}

Ellipse ConfocalConic::as_ellipse() const {
    if (kind != ConicKind::Ellipse)
        throw DomainError("confocal conic is not an ellipse");
    return Ellipse(std::sqrt(sx2()), std::sqrt(sy2()));
}

Line2 Line2::from_coeffs(double a, double b, double c) {
    const double n = std::hypot(a, b);
    if (n == 0.0) throw ValidationError("line normal must be nonzero");
    a /= n;
    b /= n;
    c /= n;
    if (c < 0.0 || (c == 0.0 && (a < 0.0 || (a == 0.0 && b < 0.0)))) {
        a = -a;
        b = -b;
        c = -c;
    }
    Line2 l;
    l.a = a;
    l.b = b;
    l.c = c;
    return l;
}

Line2 Line2::through(const Vec2& p, const Vec2& q) {
    const Vec2 d = q - p;
    return from_coeffs(-d.y, d.x, -d.y * p.x + d.x * p.y);
}

Vec2 reflect_direction(const Ellipse& E, const Vec2& P, const Vec2& d_in) {
    if (!E.on_boundary(P))
        throw DomainError("reflection point is not on the ellipse");
    const Vec2 d = d_in.normalized();
    const Vec2 n = E.outward_normal(P);
    if (d.dot(n) > 1.0 - kOnCurveTol)
        throw DomainError("direction points straight out of the ellipse");
    const double s = d.dot(n);
    return (d - 2.0 * s * n).normalized();
}

Vec2 advance(const Ellipse& E, const Vec2& P, const Vec2& dir) {
    if (!E.on_boundary(P, 1.0e-7))
        throw DomainError("ray origin is not on the ellipse");
    const Vec2 d = dir.normalized();

    // (P + s d) on E gives a quadratic a s^2 + b s + c with c ~ 0.
    const double a = sq(d.x / E.A) + sq(d.y / E.B);
    const double b = 2.0 * (P.x * d.x / (E.A * E.A) + P.y * d.y / (E.B * E.B));
    const double c = E.value(P) - 1.0;

    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) throw GrazingError("ray misses the ellipse");
    const double sd = std::sqrt(disc);
    const double q = -0.5 * (b + (b >= 0.0 ? sd : -sd));
    double s1 = q / a;
    double s2 = (q != 0.0) ? c / q : 0.0;
    if (s1 < s2) std::swap(s1, s2);
    const double s = s1;  // forward root; s2 is the ~0 root at P itself
    if (!(s > kGrazeTol))
        throw GrazingError("forward ray is tangent or leaves the ellipse");
    return P + s * d;
}

std::vector<Vec2> simulate(const Ellipse& E, const Vec2& P0, const Vec2& d0, int steps) {
    if (steps < 1) throw ValidationError("simulate needs steps >= 1");
    std::vector<Vec2> pts;
    pts.reserve(steps + 1);
    pts.push_back(P0);
    Vec2 p = P0;
    Vec2 d = d0.normalized();
    for (int i = 0; i < steps; ++i) {
        const Vec2 q = advance(E, p, d);
        const Vec2 n = E.outward_normal(q);
        d = d - 2.0 * d.dot(n) * n;
        d = d.normalized();
        p = q;
        pts.push_back(p);
    }
    return pts;
}

ConfocalConic caustic_from_chord(const Ellipse& E, const Line2& L) {
    if (!(E.A > E.B))
        throw ValidationError("caustic identification requires A > B");
    if (L.c < kGrazeTol)
        throw DomainError("chord through the center: tangency is asymptotic");
    const double B2 = E.B * E.B;
    double lambda = sq(E.A * L.a) + sq(E.B * L.b) - sq(L.c);
    if (lambda < -kKindTol)
        throw DomainError("line does not meet the interior of the ellipse");
    lambda = std::fmax(lambda, 0.0);

    ConfocalConic C;
    C.base = E;
    C.lambda = lambda;
    if (std::fabs(lambda - B2) < kKindTol)
        C.kind = ConicKind::DegenerateFocal;
    else
        C.kind = lambda < B2 ? ConicKind::Ellipse : ConicKind::Hyperbola;
    return C;
}

double tangency_residual(const ConfocalConic& C, const Line2& L) {
    return std::fabs(sq(L.c) - C.sx2() * sq(L.a) - C.sy2() * sq(L.b));
}

std::pair<Vec2, Vec2> tangent_contacts(const Ellipse& E, const Vec2& P) {
    if (E.value(P) <= 1.0 + kOnCurveTol)
        throw DomainError("tangent contacts require an exterior point");

    // Contacts are the intersections of the polar line of P with E.
    const double A2 = E.A * E.A, B2 = E.B * E.B;
    const double u = P.x / A2, v = P.y / B2;  // polar: u x + v y = 1

    if (std::fabs(v) * E.B >= std::fabs(u) * E.A) {
        // substitute y = (1 - u x)/v
        const double a = 1.0 / A2 + sq(u / v) / B2;
        const double b = -2.0 * u / (v * v * B2);
        const double c = 1.0 / (v * v * B2) - 1.0;
        const double disc = std::sqrt(std::fmax(0.0, b * b - 4.0 * a * c));
        const double x1 = (-b + disc) / (2.0 * a);
        const double x2 = (-b - disc) / (2.0 * a);
        return {Vec2{x1, (1.0 - u * x1) / v}, Vec2{x2, (1.0 - u * x2) / v}};
    }
    const double a = 1.0 / B2 + sq(v / u) / A2;
    const double b = -2.0 * v / (u * u * A2);
    const double c = 1.0 / (u * u * A2) - 1.0;
    const double disc = std::sqrt(std::fmax(0.0, b * b - 4.0 * a * c));
    const double y1 = (-b + disc) / (2.0 * a);
    const double y2 = (-b - disc) / (2.0 * a);
    return {Vec2{(1.0 - v * y1) / u, y1}, Vec2{(1.0 - v * y2) / u, y2}};
}

double bisector_residual(const Ellipse& E, const Vec2& P) {
    const auto [M1, M2] = tangent_contacts(E, P);
    const Vec2 u1 = (M1 - P).normalized();
    const Vec2 u2 = (M2 - P).normalized();
    const Vec2 wm = (u1 + u2).normalized();

    const auto [F1, F2] = E.foci();
    Vec2 wf;
    if ((F2 - F1).norm() < 1.0e-14) {
        wf = (F1 - P).normalized();
    } else {
        const Vec2 v1 = (F1 - P).normalized();
        const Vec2 v2 = (F2 - P).normalized();
        wf = (v1 + v2).normalized();
    }
    const double d = std::fmin(1.0, std::fabs(wm.dot(wf)));
    return std::acos(d);
}

bool crosses_focal_segment(const Ellipse& E, const Vec2& P, const Vec2& Q) {
    const auto [F1, F2] = E.foci();
    // Segment intersection of PQ with the open segment F1F2.
    const Vec2 r = Q - P;
    const Vec2 s = F2 - F1;
    const double denom = r.cross(s);
    if (std::fabs(denom) < 1.0e-15) return false;
    const Vec2 w = F1 - P;
    const double t = w.cross(s) / denom;
    const double u = w.cross(r) / denom;
    return t > 1.0e-12 && t < 1.0 - 1.0e-12 && u > 1.0e-12 && u < 1.0 - 1.0e-12;
}

Vec2 chord_tangent_to_caustic(const Ellipse& E, double lambda, const Vec2& P, int side) {
    if (!(lambda > 0.0) || !(lambda < E.B * E.B))
        throw DomainError("caustic parameter must lie in (0, B^2)");
    ConfocalConic C;
    C.base = E;
    C.lambda = lambda;
    C.kind = ConicKind::Ellipse;
    const auto [M1, M2] = tangent_contacts(C.as_ellipse(), P);
    const Vec2 M = (side % 2 == 0) ? M1 : M2;
    return (M - P).normalized();
}

}  // namespace bknot::geom
