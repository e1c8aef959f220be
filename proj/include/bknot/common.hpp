#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace bknot {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }

    Vec2 normalized() const {
        const double n = norm();
        if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
        return {x / n, y / n};
    }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    Vec2 xy() const { return {x, y}; }
};

inline double sq(double v) { return v * v; }

// Error taxonomy. The CLI maps each family to a distinct exit code.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonCoprimeError : ValidationError {
    using ValidationError::ValidationError;
};

struct GrazingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateDiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateArcLengthError : DegenerateDiagramError {
    using DegenerateDiagramError::DegenerateDiagramError;
};

struct TooManyCrossingsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PadUncertifiedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleHeightsError : std::runtime_error {
    InfeasibleHeightsError(const std::string& msg, int best_m, double best_phi, double best_margin)
        : std::runtime_error(msg), m(best_m), phi_z(best_phi), margin(best_margin) {}
    int m;
    double phi_z;
    double margin;
};

struct GenericityExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvariantMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonConvergenceError : std::runtime_error {
    NonConvergenceError(const std::string& msg, double residual)
        : std::runtime_error(msg), best_residual(residual) {}
    double best_residual;
};

}  // namespace bknot
