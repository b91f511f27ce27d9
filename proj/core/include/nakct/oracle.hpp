#pragma once

// Independent brute-force verifier. Builds the bound quiver algebra of a
// Kupisch series by enumerating path classes degree by degree (eliminating
// against the commutativity and zero relations), builds interval modules as
// explicit representations over the rationals, and computes Hom, Ext,
// minimal resolutions and global dimension by exact linear algebra. Nothing
// here consults the combinatorial Hom/Ext/syzygy formulas it is used to
// check.

#include <map>
#include <vector>

#include "nakct/finalg.hpp"
#include "nakct/kupisch.hpp"
#include "nakct/ordseq.hpp"

namespace nakct::oracle {

struct Arrow {
    int from = 0;  // vertex class ids
    int to = 0;
    int axis = 0;  // geometric step from -> from + e_axis
};

struct Algebra {
    KupischSeries series;
    int d = 0;
    std::vector<Coords> vertices;  // class representatives
    std::map<Coords, int> vertex_id;
    std::vector<Arrow> arrows;

    FinAlg alg;                    // path-class algebra; objects are the vertices
    std::vector<int> arrow_basis;  // arrow index -> basis index of its length-1 class

    // Per basis element: source class of the underlying path, its cover
    // endpoint relative to the canonical lift, and one representative route.
    struct PathInfo {
        int src_class = 0;  // class the path starts at (equals basis tgt)
        Coords displacement;
        std::vector<int> route;
    };
    std::vector<PathInfo> paths;

    int class_of(const Coords& cover_point) const;
};

Algebra build_algebra(const KupischSeries& s, int d, int cap = 500);

struct QuiverRep {
    const Algebra* A = nullptr;
    std::vector<int> dims;                   // per vertex class
    std::vector<std::vector<Coords>> lifts;  // cover coordinates of the basis per class
    std::vector<QMat> arr;                   // per arrow: dims[from] x dims[to]

    int total_dim() const;
};

// The interval representation of a module index; checks that every relation
// vanishes on it and throws otherwise.
QuiverRep build_module(const Algebra& A, const Coords& x);

// Intertwiner space dimension, solved from the arrow commutation constraints.
int hom_dim(const QuiverRep& M, const QuiverRep& N);

// Path actions assembled from arrow matrices (well defined once relations
// vanish); the result plugs into the finalg cover machinery.
RightModule to_right_module(const Algebra& A, const QuiverRep& M);

int hom_dim_right(const Algebra& A, const RightModule& M, const RightModule& N);

struct Resolution {
    std::vector<std::vector<int>> cover_mults;  // step i: multiplicities of P(v) in P_i
    std::vector<RightModule> syzygies;          // syzygies[i] = syzygy after step i
};

Resolution min_proj_resolution(const Algebra& A, const RightModule& M, int length);

// Resolves M once up to max_i and answers Ext^i(M, -) queries.
class ExtCalculator {
public:
    ExtCalculator(const Algebra& A, const QuiverRep& M, int max_i);
    int ext(const QuiverRep& N, int i) const;

private:
    const Algebra* A_;
    int max_i_;
    Resolution res_;
    RightModule m_;
};

int ext_dim(const Algebra& A, const QuiverRep& M, const QuiverRep& N, int i);

GldimResult algebra_gldim(const Algebra& A, int bound);

}  // namespace nakct::oracle
