#include "bknot/braid.hpp"

#include <numeric>
#include <sstream>

namespace bknot::braid {

void QuasitoricSpec::validate() const {
    if (p < 2) throw ValidationError("quasitoric spec needs p >= 2");
    if (n < 1) throw ValidationError("quasitoric spec needs n >= 1");
    if (static_cast<int>(signs.size()) != n * (p - 1))
        throw ValidationError("sign pattern must have length n(p-1) = " +
                              std::to_string(n * (p - 1)) + ", got " +
                              std::to_string(signs.size()));
    for (int s : signs)
        if (s != 1 && s != -1) throw ValidationError("signs must be +1 or -1");
}

int QuasitoricSpec::mu() const { return std::gcd(p, n); }

BraidWord toric(int p, int n) {
    if (p < 2) throw ValidationError("toric braid needs p >= 2");
    if (n < 1) throw ValidationError("toric braid needs n >= 1");
    BraidWord w;
    w.strands = p;
    w.letters.reserve(static_cast<size_t>(n) * (p - 1));
    for (int r = 0; r < n; ++r)
        for (int i = 1; i < p; ++i) w.letters.push_back({i, 1});
    return w;
}

BraidWord quasitoric(const QuasitoricSpec& spec) {
    spec.validate();
    BraidWord w = toric(spec.p, spec.n);
    for (size_t i = 0; i < w.letters.size(); ++i) w.letters[i].sign = spec.signs[i];
    return w;
}

int closure_components(const BraidWord& w) {
    std::vector<int> perm(w.strands);
    for (int i = 0; i < w.strands; ++i) perm[i] = i;
    for (const auto& l : w.letters) {
        if (l.index < 1 || l.index >= w.strands)
            throw ValidationError("letter index out of range");
        std::swap(perm[l.index - 1], perm[l.index]);
    }
    std::vector<bool> seen(w.strands, false);
    int cycles = 0;
    for (int i = 0; i < w.strands; ++i) {
        if (seen[i]) continue;
        ++cycles;
        int j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
        }
    }
    return cycles;
}

QuasitoricSpec pad(const QuasitoricSpec& spec, int n_min) {
    spec.validate();
    if (n_min < spec.n)
        throw ValidationError("pad target must not shrink the spec");

    const int mu = spec.mu();
    auto satisfied = [&](int n) {
        const int n_comp = n / mu;
        return n >= n_min && n % mu == 0 && n_comp % 2 == 1;
    };
    if (satisfied(spec.n)) return spec;

    if (spec.p != 2)
        throw PadUncertifiedError(
            "padding is certified to preserve the closure only for p = 2; "
            "supply a longer quasitoric word instead (p = " +
            std::to_string(spec.p) + ")");

    // Appending a (+,-) period pair is the trivial two-strand braid, so the
    // closure is preserved; parity of n is preserved as well.
    int target = std::max(spec.n, n_min);
    while (!satisfied(target) || (target - spec.n) % 2 != 0) ++target;

    QuasitoricSpec out = spec;
    out.n = target;
    while (static_cast<int>(out.signs.size()) < target) {
        out.signs.push_back(1);
        out.signs.push_back(-1);
    }
    out.validate();
    if (out.mu() != mu)
        throw PadUncertifiedError("padding changed the component count");
    return out;
}

std::string to_text(const BraidWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << 's' << w.letters[i].index;
        if (w.letters[i].sign < 0) os << "^-1";
    }
    return os.str();
}

BraidWord parse_word(const std::string& text, int strands) {
    BraidWord w;
    w.strands = strands;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        int sign = 1;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            sign = -1;
            tok = tok.substr(0, tok.size() - 3);
        }
        if (tok.size() < 2 || tok[0] != 's')
            throw ValidationError("bad braid token: " + tok);
        const int idx = std::stoi(tok.substr(1));
        if (idx < 1 || idx >= strands)
            throw ValidationError("letter index out of range in token: " + tok);
        w.letters.push_back({idx, sign});
    }
    return w;
}

}  // namespace bknot::braid
