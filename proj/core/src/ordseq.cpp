#include "nakct/ordseq.hpp"

#include "nakct/errors.hpp"

namespace nakct {

bool strictly_increasing(const Coords& x) {
    for (size_t i = 1; i < x.size(); i++)
        if (x[i] <= x[i - 1]) return false;
    return true;
}

bool member(const KupischSeries& s, int k, const Coords& x) {
    if (static_cast<int>(x.size()) != k) return false;
    if (!strictly_increasing(x)) return false;
    int width = x.back() - x.front() + 1;
    return width <= s.ell_at(x.back() - k + 1) + k - 1;
}

namespace {

void enumerate_rec(const KupischSeries& s, int k, Coords& prefix, int next_min, int last_max,
                   std::vector<Coords>& out) {
    if (static_cast<int>(prefix.size()) == k) {
        if (member(s, k, prefix)) out.push_back(prefix);
        return;
    }
    int remaining = k - static_cast<int>(prefix.size());
    for (int v = next_min; v + remaining - 1 <= last_max; v++) {
        prefix.push_back(v);
        enumerate_rec(s, k, prefix, v + 1, last_max, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Coords> enumerate_os(const KupischSeries& s, int k) {
    std::vector<Coords> out;
    if (k <= 0) return out;
    const int m = s.width();
    const int l = s.ell();
    Coords prefix;
    if (!s.cyclic()) {
        // x_1 >= 1 and x_k <= m + k - 1 are forced by the zero extension.
        for (int x1 = 1; x1 <= m; x1++) {
            prefix.push_back(x1);
            enumerate_rec(s, k, prefix, x1 + 1, std::min(m + k - 1, x1 + l + k - 2), out);
            prefix.pop_back();
        }
    } else {
        for (int x1 = 1; x1 <= m; x1++) {
            prefix.push_back(x1);
            enumerate_rec(s, k, prefix, x1 + 1, x1 + l + k - 2, out);
            prefix.pop_back();
        }
    }
    return out;
}

bool precedes(const Coords& x, const Coords& y) {
    if (x.size() != y.size()) throw length_mismatch();
    const size_t k = x.size();
    for (size_t i = 0; i < k; i++) {
        if (!(x[i] <= y[i])) return false;
        if (i + 1 < k && !(y[i] < x[i + 1])) return false;
    }
    return true;
}

std::optional<int> f_map(const KupischSeries& s, int d, int i) {
    int li = s.ell_at(static_cast<long long>(i) - d);
    if (li < 1) return std::nullopt;  // no member of os^{d+1} ends at i
    int raw = i - li - d + 1;
    if (!s.cyclic()) raw = std::max(raw, 1);
    return raw;
}

std::optional<int> g_map(const KupischSeries& s, int d, int i) {
    if (!s.cyclic() && (i < 1 || i > s.width())) return std::nullopt;
    // Largest y with y - l_{y-d} <= i + d - 1; the left side is non-decreasing.
    std::optional<int> best;
    for (int y = i + d; y <= i + s.ell() + d - 1; y++) {
        int ly = s.ell_at(static_cast<long long>(y) - d);
        if (ly >= 1 && y - ly <= i + d - 1)
            best = y;
        else if (best)
            break;
    }
    return best;
}

std::pair<Coords, int> canonicalize_shift(const KupischSeries& s, const Coords& x) {
    if (!s.cyclic()) throw acyclic_context();
    const int m = s.width();
    int j = x.front() >= 1 ? (x.front() - 1) / m : -(((-x.front()) / m) + 1);
    Coords rep = shift_by(x, -j * m);
    return {rep, j};
}

Coords shift_by(const Coords& x, int amount) {
    Coords out = x;
    for (int& v : out) v += amount;
    return out;
}

}  // namespace nakct
