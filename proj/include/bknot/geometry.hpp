#pragma once

#include <utility>
#include <vector>

#include "bknot/common.hpp"

namespace bknot::geom {

inline constexpr double kOnCurveTol = 1.0e-9;
inline constexpr double kGrazeTol = 1.0e-12;
inline constexpr double kKindTol = 1.0e-10;

/// Axis-aligned ellipse x^2/A^2 + y^2/B^2 = 1.
struct Ellipse {
    double A = 1.0;
    double B = 1.0;

    Ellipse() = default;
    Ellipse(double a, double b);

    double value(const Vec2& p) const { return sq(p.x / A) + sq(p.y / B); }
    bool on_boundary(const Vec2& p, double tol = kOnCurveTol) const {
        return std::fabs(value(p) - 1.0) <= tol;
    }
    /// Outward unit normal at a boundary point.
    Vec2 outward_normal(const Vec2& p) const {
        return Vec2{p.x / (A * A), p.y / (B * B)}.normalized();
    }
    /// Focal half distance; foci lie on the major axis.
    double focal_half_distance() const { return std::sqrt(std::fabs(A * A - B * B)); }
    std::pair<Vec2, Vec2> foci() const;
    double perimeter(int samples = 4096) const;
};

enum class ConicKind { Ellipse, Hyperbola, DegenerateFocal };

/// Member of the confocal family x^2/(A^2-l) + y^2/(B^2-l) = 1 of a base
/// ellipse with A > B.
struct ConfocalConic {
    Ellipse base;
    double lambda = 0.0;
    ConicKind kind = ConicKind::Ellipse;

    double sx2() const { return base.A * base.A - lambda; }
    double sy2() const { return base.B * base.B - lambda; }
    Ellipse as_ellipse() const;
};

/// Line {a x + b y = c}, stored with a^2 + b^2 = 1 and c >= 0.
struct Line2 {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;

    static Line2 from_coeffs(double a, double b, double c);
    static Line2 through(const Vec2& p, const Vec2& q);
    double eval(const Vec2& p) const { return a * p.x + b * p.y - c; }
};

/// Mirror reflection d - 2(d.n)n at a boundary point.  Accepts either
/// orientation of travel; the ray leaving P straight along the outward
/// normal has no billiard continuation and is rejected.
Vec2 reflect_direction(const Ellipse& E, const Vec2& P, const Vec2& d_in);

/// Second intersection of the ray {P + s d, s > 0} with the ellipse.
Vec2 advance(const Ellipse& E, const Vec2& P, const Vec2& d);

/// Billiard orbit: steps+1 points starting at P0.
std::vector<Vec2> simulate(const Ellipse& E, const Vec2& P0, const Vec2& d0, int steps);

/// Confocal conic tangent to the given chord line (Graves/caustic map):
/// lambda = A^2 a^2 + B^2 b^2 - c^2 for the normalized line.
ConfocalConic caustic_from_chord(const Ellipse& E, const Line2& L);

/// |c^2 - (A^2-l)a^2 - (B^2-l)b^2| for the normalized line; zero iff tangent.
double tangency_residual(const ConfocalConic& C, const Line2& L);

/// Contact points of the two tangents from an exterior point.
std::pair<Vec2, Vec2> tangent_contacts(const Ellipse& E, const Vec2& P);

/// Angle between the bisector of the tangent-contact angle and the bisector
/// of the focal angle at an exterior point; zero by the bisector theorem.
double bisector_residual(const Ellipse& E, const Vec2& P);

/// True when segment PQ meets the open focal segment of E.
bool crosses_focal_segment(const Ellipse& E, const Vec2& P, const Vec2& Q);

/// Direction from P on E toward a tangency point of the confocal caustic
/// with parameter lambda.  side selects one of the two tangent chords.
Vec2 chord_tangent_to_caustic(const Ellipse& E, double lambda, const Vec2& P, int side = 0);

}  // namespace bknot::geom
