#include "nakct/modcat.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "nakct/errors.hpp"

namespace nakct {

ModCat::ModCat(KupischSeries series, int d) : series_(std::move(series)), d_(d) {
    assert(d_ >= 1);
}

Coords ModCat::canonical(const Coords& x) const {
    if (!cyclic()) return x;
    return canonicalize_shift(series_, x).first;
}

bool ModCat::is_module_index(const Coords& x) const { return member(series_, d_ + 1, x); }

const std::vector<Coords>& ModCat::modules() const {
    if (modules_.empty()) {
        modules_ = enumerate_os(series_, d_ + 1);
        for (size_t i = 0; i < modules_.size(); i++) module_index_[modules_[i]] = static_cast<int>(i);
    }
    return modules_;
}

const std::vector<Coords>& ModCat::vertices() const {
    if (vertices_.empty()) vertices_ = enumerate_os(series_, d_);
    return vertices_;
}

void ModCat::require_module(const Coords& x) const {
    if (!is_module_index(x)) throw nakct_error("InvalidIndex", "not a module index: " + coords_to_string(x));
}

bool ModCat::is_projective(const Coords& x) const {
    require_module(x);
    auto f = f_map(series_, d_, x.back());
    return f && *f == x.front();
}

bool ModCat::is_injective(const Coords& x) const {
    require_module(x);
    auto g = g_map(series_, d_, x.front());
    return g && *g == x.back();
}

bool ModCat::is_simple(const Coords& x) const {
    require_module(x);
    for (size_t i = 1; i < x.size(); i++)
        if (x[i] != x[i - 1] + 1) return false;
    return true;
}

std::vector<std::pair<Coords, int>> ModCat::support_mult(const Coords& x) const {
    require_module(x);
    // lo = (x_1..x_d), hi = (x_2-1..x_{d+1}-1); z ranges over the interleaving
    // interval, coordinatewise z_i in [max(lo_i, hi_{i-1}+1), min(hi_i, lo_{i+1}-1)].
    std::vector<int> lo(x.begin(), x.end() - 1);
    std::vector<int> hi(x.begin() + 1, x.end());
    for (int& v : hi) v -= 1;
    std::vector<std::pair<int, int>> range(d_);
    for (int i = 0; i < d_; i++) {
        int a = lo[i];
        int b = hi[i];
        if (i > 0) a = std::max(a, hi[i - 1] + 1);
        if (i + 1 < d_) b = std::min(b, lo[i + 1] - 1);
        range[i] = {a, b};
    }
    std::map<Coords, int> counts;
    Coords z(d_);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == d_) {
            if (!member(series_, d_, z)) return;
            counts[cyclic() ? canonical(z) : z] += 1;
            return;
        }
        for (int v = range[pos].first; v <= range[pos].second; v++) {
            z[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return {counts.begin(), counts.end()};
}

std::vector<Coords> ModCat::support(const Coords& x) const {
    std::vector<Coords> out;
    for (const auto& [z, mult] : support_mult(x)) {
        if (mult != 1)
            throw nakct_error("SupportMultiplicity",
                              "support of " + coords_to_string(x) + " wraps vertex " + coords_to_string(z));
        out.push_back(z);
    }
    return out;
}

int ModCat::dim_module(const Coords& x) const {
    int total = 0;
    for (const auto& [z, mult] : support_mult(x)) {
        (void)z;
        total += mult;
    }
    return total;
}

std::vector<int> ModCat::hom_basis(const Coords& x, const Coords& y) const {
    require_module(x);
    require_module(y);
    if (!cyclic()) return precedes(x, y) ? std::vector<int>{0} : std::vector<int>{};
    // x interleaves shift^j(y) forces j*m in [x_1 - y_1, x_{d+1} - y_1]; scan
    // one extra shift on each side and insist the extremes stay empty.
    const int mm = m();
    auto floor_div = [](int a, int b) { return a >= 0 ? a / b : -(((-a) + b - 1) / b); };
    int j_lo = floor_div(x.front() - y.front(), mm) - 1;
    int j_hi = floor_div(x.back() - y.front(), mm) + 1;
    std::vector<int> out;
    for (int j = j_lo; j <= j_hi; j++) {
        if (precedes(x, shift_by(y, j * mm))) {
            if (j == j_lo || j == j_hi)
                throw nakct_error("ShiftWindow", "shift window bound violated for " + coords_to_string(x));
            out.push_back(j);
        }
    }
    return out;
}

StableIndex ModCat::syzygy_d(const Coords& x) const {
    require_module(x);
    if (is_projective(x)) return std::nullopt;
    auto f = f_map(series_, d_, x.back());
    Coords out;
    out.push_back(*f);
    out.insert(out.end(), x.begin(), x.end() - 1);
    return canonical(out);
}

StableIndex ModCat::cosyzygy_d(const Coords& x) const {
    require_module(x);
    if (is_injective(x)) return std::nullopt;
    auto g = g_map(series_, d_, x.front());
    Coords out(x.begin() + 1, x.end());
    out.push_back(*g);
    return canonical(out);
}

StableIndex ModCat::syzygy_d_pow(const StableIndex& x, int k) const {
    StableIndex cur = x;
    for (int i = 0; i < std::abs(k) && cur; i++) cur = k > 0 ? syzygy_d(*cur) : cosyzygy_d(*cur);
    return cur;
}

StableIndex ModCat::tau_d(const Coords& x) const {
    require_module(x);
    if (is_projective(x)) return std::nullopt;
    return canonical(shift_by(x, -1));
}

StableIndex ModCat::tau_d_inv(const Coords& x) const {
    require_module(x);
    if (is_injective(x)) return std::nullopt;
    return canonical(shift_by(x, 1));
}

StableIndex ModCat::tau_nd(const Coords& x, int n) const {
    StableIndex cur = syzygy_d_pow(x, n - 1);
    if (!cur) return std::nullopt;
    return tau_d(*cur);
}

StableIndex ModCat::tau_nd_inv(const Coords& x, int n) const {
    StableIndex cur = syzygy_d_pow(x, -(n - 1));
    if (!cur) return std::nullopt;
    return tau_d_inv(*cur);
}

ModCat::Resolution ModCat::proj_resolution(const Coords& x) const {
    require_module(x);
    if (is_projective(x)) throw is_projective_error();
    int f = *f_map(series_, d_, x.back());
    Resolution res;
    for (int i = 1; i <= d_; i++) {
        Coords p;
        p.push_back(f);
        for (int c = 0; c < d_ + 1; c++)
            if (c != i - 1) p.push_back(x[c]);
        if (is_module_index(p)) res.projectives.push_back(canonical(p));
    }
    res.omega_d = syzygy_d(x);
    return res;
}

int ModCat::ext_kd_dim(const Coords& y, const Coords& x, int k) const {
    require_module(x);
    require_module(y);
    assert(k >= 1);
    StableIndex z = syzygy_d_pow(y, k - 1);
    if (!z || is_projective(*z)) return 0;
    Coords target = shift_by(*z, -1);  // tau_d of the (k-1)-fold syzygy

    // Ext^d(Z, X) is dual to the injectively stable Hom(X, tau_d Z): a
    // morphism out of M(x) is killed exactly when it extends along the
    // injective envelope M(x_1, ..., x_d, g(x_1)).
    Coords envelope(x.begin(), x.end() - 1);
    envelope.push_back(*g_map(series_, d_, x.front()));

    if (!cyclic()) return precedes(x, target) && !precedes(envelope, target) ? 1 : 0;
    const int mm = m();
    int count = 0;
    for (int j : hom_basis(x, canonical(target))) {
        Coords shifted_target = shift_by(canonical(target), j * mm);
        if (!precedes(envelope, shifted_target)) count++;
    }
    return count;
}

ArQuiver ModCat::ar_quiver() const {
    ArQuiver q;
    q.nodes = modules();
    const int count = static_cast<int>(q.nodes.size());
    const int mm = cyclic() ? m() : 0;
    for (int xi = 0; xi < count; xi++) {
        const Coords& x = q.nodes[xi];
        for (int yi = 0; yi < count; yi++) {
            const Coords& y = q.nodes[yi];
            for (int j : hom_basis(x, y)) {
                if (xi == yi && j == 0) continue;  // identity
                // factorization through any (z, j1) with x interleaving
                // shift^{j1}(z) and z interleaving shift^{j - j1}(y)
                bool factors = false;
                for (int zi = 0; zi < count && !factors; zi++) {
                    const Coords& z = q.nodes[zi];
                    for (int j1 : hom_basis(x, z)) {
                        if (zi == xi && j1 == 0) continue;
                        int j2 = j - j1;
                        const Coords shifted = cyclic() ? shift_by(z, j1 * mm) : z;
                        if (zi == yi && j2 == 0) continue;
                        if (precedes(shifted, cyclic() ? shift_by(y, j * mm) : y)) {
                            factors = true;
                            break;
                        }
                    }
                }
                if (!factors) q.edges.emplace_back(xi, yi);
            }
        }
    }
    return q;
}

std::string ArQuiver::to_dot(const std::vector<Coords>& highlight) const {
    std::ostringstream out;
    out << "digraph ar_quiver {\n";
    out << "  rankdir=LR;\n";
    for (size_t i = 0; i < nodes.size(); i++) {
        out << "  n" << i << " [label=\"";
        for (size_t c = 0; c < nodes[i].size(); c++) {
            if (c) out << ' ';
            out << nodes[i][c];
        }
        out << "\"";
        if (std::find(highlight.begin(), highlight.end(), nodes[i]) != highlight.end())
            out << ", style=filled, fillcolor=lightblue";
        out << "];\n";
    }
    for (const auto& [a, b] : edges) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

int gldim_formula(int ell, int m, int d) {
    assert(ell >= 2 && m >= ell && d >= 1);
    int q = (m - 1) / (ell + d - 1);
    if ((m - 1) % (ell + d - 1) == 0) return d * (d + 1) * q;
    int rem = m - 1 - q * (ell + d - 1);
    int r = rem < ell ? 1 : rem - ell + 2;
    return d * ((d + 1) * q + r);
}

std::string coords_to_string(const Coords& x) {
    std::string out = "(";
    for (size_t i = 0; i < x.size(); i++) {
        if (i) out += ',';
        out += std::to_string(x[i]);
    }
    out += ')';
    return out;
}

}  // namespace nakct
