#pragma once

#include <map>
#include <string>
#include <vector>

#include "bknot/braid.hpp"

namespace bknot::bracket {

/// Laurent polynomial in one variable A with integer coefficients.
struct LaurentPoly {
    std::map<int, long long> coeff;  // exponent -> coefficient

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(int exp, long long c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly shifted(int exp) const;  // multiply by A^exp
    bool operator==(const LaurentPoly& o) const { return coeff == o.coeff; }
    std::string str() const;
};

/// One crossing of a closed planar diagram, encoded by the four incident
/// arc ids and the oriented sign (+1 when (over, under) directions form a
/// positively oriented basis).
struct PDCrossing {
    int under_in = 0;
    int under_out = 0;
    int over_in = 0;
    int over_out = 0;
    int sign = 1;
};

struct PlanarDiagram {
    int arc_count = 0;
    std::vector<PDCrossing> crossings;
    int free_loops = 0;  // closed components with no crossings

    int writhe() const;
};

/// Kauffman bracket by the 2^c state sum.  Throws TooManyCrossingsError
/// above 24 crossings.
LaurentPoly kauffman_bracket(const PlanarDiagram& pd);

/// Writhe-corrected invariant f = (-A^3)^{-w} <D>.
LaurentPoly normalized_bracket(const PlanarDiagram& pd);

/// Closed-braid diagram of a word (strands oriented upward; a positive
/// letter takes the left strand over the right).
PlanarDiagram pd_from_braid_closure(const braid::BraidWord& w);

}  // namespace bknot::bracket
