#pragma once

// Kupisch series as values: validation, shape classification, gluing,
// degluing and self-(de)gluing. A series (l_1, ..., l_m) determines a higher
// Nakayama algebra; acyclic series start with 1, cyclic series are stored in
// their lexicographically smallest rotation.

#include <optional>
#include <string>
#include <vector>

namespace nakct {

class KupischSeries {
public:
    KupischSeries() : entries_{1} {}  // the width-1 series

    // Validates and (for cyclic input) canonicalizes to the smallest rotation.
    // Throws GrowthViolation / NotConnected / EntryTooSmall.
    static KupischSeries validate(std::vector<int> entries, bool cyclic);

    // Text format: comma-separated entries, leading '~' marks cyclic.
    static KupischSeries parse(const std::string& text);
    std::string to_text() const;

    int width() const { return static_cast<int>(entries_.size()); }
    int ell() const;  // max entry
    bool cyclic() const { return cyclic_; }
    const std::vector<int>& entries() const { return entries_; }

    // l_i for any integer i: acyclic reads 0 outside [1, m], cyclic wraps.
    int ell_at(long long i) const;

    bool homogeneous() const;  // acyclic: (1,2,...,l,l,...,l); cyclic: constant

    bool operator==(const KupischSeries& o) const { return cyclic_ == o.cyclic_ && entries_ == o.entries_; }

private:
    std::vector<int> entries_;
    bool cyclic_ = false;
};

struct SeriesShape {
    enum class Tag { AcyclicHomogeneous, CyclicHomogeneous, AcyclicDecomposable, CyclicDecomposable, Obstructed };
    Tag tag;
    int ell = 0;
    int width = 0;
    std::vector<KupischSeries> pieces;  // decomposable tags only, all acyclic homogeneous
    int witness = 0;                    // obstructed: 1-based start of the offending window
};

// (1,2,...,l_m) glued with (1,2,...,l_n) -> (1,2,...,l_m,2,...,l_n).
KupischSeries glue(const KupischSeries& a, const KupischSeries& b);
KupischSeries glue_chain(const std::vector<KupischSeries>& pieces);

struct Degluing {
    bool decomposable = false;
    int witness = 0;                         // when !decomposable
    std::vector<KupischSeries> pieces;       // acyclic homogeneous, left to right
    std::vector<std::vector<int>> bridges;   // simple bridge module indices, length d+1 each
    std::vector<int> piece_offsets;          // vertex-coordinate offset of each piece in the glued series
};

// Splits an acyclic series into homogeneous pieces. With finer_n set, an
// l=2 piece of width w additionally splits into (w-1)/n pieces of width n+1
// whenever n | (w-1).
Degluing deglue_all(const KupischSeries& s, int d, std::optional<int> finer_n = std::nullopt);

// (1,2,...,l_m) -> (l_m, l_2, ..., l_{m-1}) cyclic, canonicalized.
KupischSeries self_glue(const KupischSeries& s);

struct SelfDegluing {
    KupischSeries acyclic;
    // Rotation offset r of the canonical entries used for the split: the
    // acyclic cover coordinate q in [1, width] sits at canonical cyclic
    // coordinate ((q - 1 + r) mod width) + 1.
    int rotation = 0;
};

SelfDegluing self_deglue_with_rotation(const KupischSeries& s);
KupischSeries self_deglue(const KupischSeries& s);

SeriesShape classify_shape(const KupischSeries& s);

}  // namespace nakct
