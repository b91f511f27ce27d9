#pragma once

// Combinatorial model of the distinguished cluster-tilting subcategory of a
// higher Nakayama algebra: module predicates, supports, Hom bases, d-fold
// syzygies, higher translations, Ext dimensions in degrees kd, projective
// resolutions and the AR-quiver.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nakct/kupisch.hpp"
#include "nakct/ordseq.hpp"

namespace nakct {

// Zero means the module vanished under a stable operator.
using StableIndex = std::optional<Coords>;

struct ArQuiver {
    std::vector<Coords> nodes;
    std::vector<std::pair<int, int>> edges;  // indices into nodes
    std::string to_dot(const std::vector<Coords>& highlight = {}) const;
};

class ModCat {
public:
    ModCat(KupischSeries series, int d);

    const KupischSeries& series() const { return series_; }
    int d() const { return d_; }
    int m() const { return series_.width(); }
    bool cyclic() const { return series_.cyclic(); }

    // Canonical representative of a module index (identity when acyclic).
    Coords canonical(const Coords& x) const;
    bool is_module_index(const Coords& x) const;
    const std::vector<Coords>& modules() const;   // os^{d+1} representatives
    const std::vector<Coords>& vertices() const;  // os^d representatives

    bool is_projective(const Coords& x) const;
    bool is_injective(const Coords& x) const;
    bool is_simple(const Coords& x) const;

    // Vertices carrying k in the representation M(x); cyclic supports are
    // reported on representatives. support() insists on multiplicity one and
    // throws otherwise; support_mult() reports multiplicities.
    std::vector<Coords> support(const Coords& x) const;
    std::vector<std::pair<Coords, int>> support_mult(const Coords& x) const;
    int dim_module(const Coords& x) const;

    // Shift exponents j with x interleaving the j-th shift of y; acyclic
    // answers are {0} or {}.
    std::vector<int> hom_basis(const Coords& x, const Coords& y) const;
    int hom_dim(const Coords& x, const Coords& y) const { return static_cast<int>(hom_basis(x, y).size()); }

    StableIndex syzygy_d(const Coords& x) const;
    StableIndex cosyzygy_d(const Coords& x) const;
    StableIndex syzygy_d_pow(const StableIndex& x, int k) const;    // k-fold, k may be negative
    StableIndex tau_d(const Coords& x) const;
    StableIndex tau_d_inv(const Coords& x) const;
    StableIndex tau_nd(const Coords& x, int n) const;
    StableIndex tau_nd_inv(const Coords& x, int n) const;

    struct Resolution {
        std::vector<Coords> projectives;  // P^1..P^d, zero terms dropped
        StableIndex omega_d;
    };
    Resolution proj_resolution(const Coords& x) const;  // throws IsProjective

    // dim Ext^{kd}(M(y), M(x)), k >= 1.
    int ext_kd_dim(const Coords& y, const Coords& x, int k) const;

    ArQuiver ar_quiver() const;

private:
    void require_module(const Coords& x) const;

    KupischSeries series_;
    int d_;
    mutable std::vector<Coords> modules_;
    mutable std::vector<Coords> vertices_;
    mutable std::map<Coords, int> module_index_;
};

// Global dimension of the acyclic homogeneous algebra with parameters
// (ell >= 2, m >= ell, d >= 1).
int gldim_formula(int ell, int m, int d);

std::string coords_to_string(const Coords& x);

}  // namespace nakct
