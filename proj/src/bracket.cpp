#include "bknot/bracket.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bknot::bracket {

LaurentPoly LaurentPoly::monomial(int exp, long long c) {
    LaurentPoly p;
    if (c != 0) p.coeff[exp] = c;
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeff) {
        r.coeff[e] += c;
        if (r.coeff[e] == 0) r.coeff.erase(e);
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeff)
        for (const auto& [e2, c2] : o.coeff) {
            r.coeff[e1 + e2] += c1 * c2;
            if (r.coeff[e1 + e2] == 0) r.coeff.erase(e1 + e2);
        }
    return r;
}

LaurentPoly LaurentPoly::shifted(int exp) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeff) r.coeff[e + exp] = c;
    return r;
}

std::string LaurentPoly::str() const {
    if (coeff.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeff) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const long long a = std::llabs(c);
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            if (a != 1) os << "*";
            os << "A";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

int PlanarDiagram::writhe() const {
    int w = 0;
    for (const auto& x : crossings) w += x.sign;
    return w;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

LaurentPoly kauffman_bracket(const PlanarDiagram& pd) {
    const int c = static_cast<int>(pd.crossings.size());
    if (c > 24)
        throw TooManyCrossingsError("state sum limited to 24 crossings, got " +
                                    std::to_string(c));

    const LaurentPoly delta =
        LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
    // Precompute delta^j for loop counts.
    std::vector<LaurentPoly> dpow(c + 2);
    dpow[0] = LaurentPoly::one();
    for (int j = 1; j <= c + 1; ++j) dpow[j] = dpow[j - 1] * delta;

    LaurentPoly total;
    const unsigned states = 1u << c;
    for (unsigned st = 0; st < states; ++st) {
        UnionFind uf(pd.arc_count);
        int a_count = 0;
        for (int i = 0; i < c; ++i) {
            const auto& x = pd.crossings[i];
            const bool a_smooth = ((st >> i) & 1u) == 0u;
            if (a_smooth) ++a_count;
            // For a positive crossing the A-smoothing joins under_in with
            // over_out and under_out with over_in; mirrored when negative.
            const bool join_in_out = (x.sign > 0) == a_smooth;
            if (join_in_out) {
                uf.unite(x.under_in, x.over_out);
                uf.unite(x.under_out, x.over_in);
            } else {
                uf.unite(x.under_in, x.over_in);
                uf.unite(x.under_out, x.over_out);
            }
        }
        std::vector<char> root_seen(pd.arc_count, 0);
        int loops = pd.free_loops;
        for (int a = 0; a < pd.arc_count; ++a) {
            const int r = uf.find(a);
            if (!root_seen[r]) {
                root_seen[r] = 1;
                ++loops;
            }
        }
        const int exp = a_count - (c - a_count);
        total = total + dpow[loops - 1].shifted(exp);
    }
    return total;
}

LaurentPoly normalized_bracket(const PlanarDiagram& pd) {
    const int w = pd.writhe();
    // (-A^3)^{-w}
    LaurentPoly norm = LaurentPoly::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
    return norm * kauffman_bracket(pd);
}

PlanarDiagram pd_from_braid_closure(const braid::BraidWord& w) {
    PlanarDiagram pd;
    std::vector<int> cur(w.strands);
    std::vector<bool> used(w.strands, false);
    int next = 0;
    for (int s = 0; s < w.strands; ++s) cur[s] = next++;
    const std::vector<int> initial = cur;

    for (const auto& l : w.letters) {
        const int i = l.index - 1;
        used[i] = used[i + 1] = true;
        PDCrossing x;
        const int left = cur[i], right = cur[i + 1];
        const int out_left = next++, out_right = next++;
        if (l.sign > 0) {
            // left strand passes over, exiting on the right
            x.over_in = left;
            x.over_out = out_right;
            x.under_in = right;
            x.under_out = out_left;
        } else {
            x.over_in = right;
            x.over_out = out_left;
            x.under_in = left;
            x.under_out = out_right;
        }
        x.sign = l.sign;
        pd.crossings.push_back(x);
        cur[i] = out_left;
        cur[i + 1] = out_right;
    }

    // Closure: identify the top arc of each position with its bottom arc.
    std::vector<int> remap(next);
    std::iota(remap.begin(), remap.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (remap[a] != a) {
            remap[a] = remap[remap[a]];
            a = remap[a];
        }
        return a;
    };
    for (int s = 0; s < w.strands; ++s) remap[find(cur[s])] = find(initial[s]);

    // Compact arc ids.
    std::vector<int> compact(next, -1);
    int arcs = 0;
    auto id = [&](int a) {
        const int r = find(a);
        if (compact[r] < 0) compact[r] = arcs++;
        return compact[r];
    };
    for (auto& x : pd.crossings) {
        x.under_in = id(x.under_in);
        x.under_out = id(x.under_out);
        x.over_in = id(x.over_in);
        x.over_out = id(x.over_out);
    }
    pd.arc_count = arcs;
    for (int s = 0; s < w.strands; ++s)
        if (!used[s]) ++pd.free_loops;
    return pd;
}

}  // namespace bknot::bracket
