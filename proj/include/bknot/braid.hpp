#pragma once

#include <string>
#include <vector>

#include "bknot/common.hpp"

namespace bknot::braid {

struct BraidLetter {
    int index = 1;  // generator index in [1, strands-1]
    int sign = 1;   // +1 or -1

    bool operator==(const BraidLetter&) const = default;
};

struct BraidWord {
    int strands = 2;
    std::vector<BraidLetter> letters;

    bool operator==(const BraidWord&) const = default;
};

/// Sign-pattern form of a braid on p strands built on the toric template
/// (s1 s2 ... s_{p-1})^n.  gcd(n, p) equals the component count of the
/// closure (1 for knots, mu > 1 for links).
struct QuasitoricSpec {
    int p = 2;
    int n = 1;
    std::vector<int> signs;  // length n (p-1)

    void validate() const;
    int mu() const;
};

/// (s1 s2 ... s_{p-1})^n with all positive crossings.
BraidWord toric(int p, int n);

/// Toric template with the letter signs replaced by spec.signs.
BraidWord quasitoric(const QuasitoricSpec& spec);

/// Cycle count of the underlying permutation: number of closure components.
int closure_components(const BraidWord& w);

/// Extend the spec to n' >= n_min with n' odd and the same closure.  Padding
/// appends cancelling (+period, -period) pairs, which is certified to
/// preserve the closure only on two strands (exponent sum is a complete
/// invariant there).  Specs already satisfying the constraints are returned
/// unchanged for every p.
QuasitoricSpec pad(const QuasitoricSpec& spec, int n_min);

std::string to_text(const BraidWord& w);
BraidWord parse_word(const std::string& text, int strands);

}  // namespace bknot::braid
