#pragma once

#include <span>
#include <vector>

#include "bknot/elliptic.hpp"
#include "bknot/geometry.hpp"

namespace bknot::poncelet {

/// Normalized Poncelet setup for a confocal pair.  The caustic with
/// parameter lambda maps to the unit circle and the base ellipse to
/// {x^2/a*^2 + y^2/b*^2 = 1} with a* > b* > 1.  Because circle
/// normalization of a confocal pair puts the long axis of the image
/// ellipse on y, the map composes the axis scalings with a swap:
///
///   a* = B / sqrt(B^2 - lambda),  b* = A / sqrt(A^2 - lambda),
///   k^2 = (a*^2 - b*^2) / (a*^2 - 1) = (A^2 - B^2) / (A^2 - lambda),
///   cn(beta) = 1/a*,  dn(beta) = b*/a*,  theta = 2 beta.
///
/// Vertices pull back to V(psi) = (A sn psi, B cn psi) and tangency
/// points to M(phi) = (c1 sn phi, c2 cn phi) with c_i the caustic
/// semi-axes.
struct JacobiFrame {
    geom::Ellipse base;
    double lambda = 0.0;
    double c1 = 0.0, c2 = 0.0;          // caustic semi-axes
    double a_star = 0.0, b_star = 0.0;  // normalized outer semi-axes
    elliptic::Modulus modulus;
    double beta = 0.0;
    double theta = 0.0;

    static JacobiFrame build(const geom::Ellipse& E, double lambda);

    double rotation_number() const { return beta / (2.0 * modulus.K); }
    Vec2 to_normalized(const Vec2& p) const { return {p.y / c2, p.x / c1}; }
    Vec2 from_normalized(const Vec2& q) const { return {c1 * q.y, c2 * q.x}; }
    Vec2 vertex_at(double psi) const;
    Vec2 tangency_at(double phi) const;
};

/// rho(lambda) = beta / 2K in (0, 1/2).
double rotation_number(const geom::Ellipse& E, double lambda);

/// Solve rho(lambda) = p/n by a 64-point monotone scan plus bisection.
JacobiFrame solve_caustic(const geom::Ellipse& E, int n, int p, double tol = 1.0e-12);

struct PonceletPolygon {
    JacobiFrame frame;
    int n = 0;
    int p = 0;
    double phi = 0.0;
    std::vector<Vec2> vertices;         // V_j = V(phi + beta + j theta)
    std::vector<Vec2> tangency_points;  // M_j = M(phi + j theta); side (V_{j-1}, V_j) touches M_j
    double perimeter = 0.0;

    geom::Line2 side_line(int j) const;  // line through V_{j-1}, V_j
};

PonceletPolygon polygon(const JacobiFrame& frame, int n, int p, double phi);

/// Perimeter maximization over focal-angle vectors (Birkhoff/Chasles
/// construction): an independent generator of (n,p) billiard polygons.
struct BirkhoffResult {
    std::vector<Vec2> vertices;
    double perimeter = 0.0;
    double lambda = 0.0;  // caustic parameter induced by the first side
    double max_reflection_residual = 0.0;
    int sweeps = 0;
};

BirkhoffResult birkhoff_polygon(const geom::Ellipse& E, int n, int p, const Vec2& P0,
                                int max_sweeps = 600);

/// max - min perimeter over the given start parameters (Graves).
double graves_spread(const JacobiFrame& frame, int n, int p, std::span<const double> phis);

struct DarbouxResult {
    double residual = 0.0;  // max pairwise distance of diagonal intersections
    Vec2 point;             // concurrency point
};

/// Concurrency of the main diagonals for even n.
DarbouxResult darboux_residual(const PonceletPolygon& poly);

}  // namespace bknot::poncelet
