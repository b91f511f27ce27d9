#pragma once

// Basic finite-dimensional algebras given by structure constants, with
// projective right modules, minimal covers and bounded global dimension.
// Products are written diagrammatically: mult(a, b) is "a then b".

#include <string>
#include <vector>

#include "nakct/linalg.hpp"

namespace nakct {

struct FinAlg {
    struct BasisElt {
        int src = 0;
        int tgt = 0;
        bool identity = false;
        std::string tag;
    };

    std::vector<std::string> objects;
    std::vector<BasisElt> basis;
    std::vector<int> identity_of;  // object -> basis index
    std::vector<int> table;        // table[a * dim + b] = index of (a then b), or -1

    int dim() const { return static_cast<int>(basis.size()); }
    int n_objects() const { return static_cast<int>(objects.size()); }
    int mult(int a, int b) const { return table[static_cast<size_t>(a) * basis.size() + b]; }

    bool associative() const;              // exhaustive over all triples
    bool radical_closed() const;           // products of non-identities never hit an identity
    int radical_nilpotency_index() const;  // smallest k with rad^k = 0; throws past dim+1
};

struct RightModule {
    const FinAlg* alg = nullptr;
    std::vector<int> dims;   // per object
    std::vector<QMat> act;   // per basis element b: dims[tgt(b)] x dims[src(b)]

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

RightModule zero_module_over(const FinAlg& a);
RightModule projective_module(const FinAlg& a, int e);
RightModule simple_module(const FinAlg& a, int e);
RightModule radical_of_projective(const FinAlg& a, int e);

std::vector<int> top_dims(const RightModule& x);

struct CoverResult {
    std::vector<int> cover_mults;  // per object
    RightModule kernel;
};

// Minimal projective cover via the top; kernel by exact elimination.
// Throws ZeroModule on zero input.
CoverResult proj_cover_and_syzygy(const RightModule& x);

struct GldimResult {
    bool exceeded = false;
    int value = 0;
};

// Max projective dimension over vertex simples, cut off past the bound.
GldimResult gldim(const FinAlg& a, int bound);

}  // namespace nakct
