#include "nakct/kupisch.hpp"

#include <algorithm>
#include <sstream>

#include "nakct/errors.hpp"

namespace nakct {

namespace {

std::vector<int> smallest_rotation(const std::vector<int>& v) {
    std::vector<int> best = v;
    std::vector<int> cur = v;
    for (size_t r = 1; r < v.size(); r++) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

}  // namespace

KupischSeries KupischSeries::validate(std::vector<int> entries, bool cyclic) {
    if (entries.empty()) throw nakct_error("EmptySeries", "width must be at least 1");
    const int m = static_cast<int>(entries.size());
    if (!cyclic) {
        if (entries[0] != 1) throw not_connected();
        for (int i = 1; i < m; i++) {
            if (entries[i] < 2) throw not_connected();  // a second 1 would disconnect
            if (entries[i] > entries[i - 1] + 1) throw growth_violation(i + 1);
        }
    } else {
        for (int i = 0; i < m; i++)
            if (entries[i] < 2) throw entry_too_small(i + 1);
        for (int i = 0; i < m; i++) {
            int prev = entries[(i + m - 1) % m];
            if (entries[i] > prev + 1) throw growth_violation(i + 1);
        }
        entries = smallest_rotation(entries);
    }
    KupischSeries s;
    s.entries_ = std::move(entries);
    s.cyclic_ = cyclic;
    return s;
}

KupischSeries KupischSeries::parse(const std::string& text) {
    std::string body = text;
    bool cyclic = false;
    if (!body.empty() && body[0] == '~') {
        cyclic = true;
        body = body.substr(1);
    }
    std::vector<int> entries;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        entries.push_back(v);
    }
    return validate(std::move(entries), cyclic);
}

std::string KupischSeries::to_text() const {
    std::string out = cyclic_ ? "~" : "";
    for (size_t i = 0; i < entries_.size(); i++) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

int KupischSeries::ell() const { return *std::max_element(entries_.begin(), entries_.end()); }

int KupischSeries::ell_at(long long i) const {
    const long long m = width();
    if (cyclic_) {
        long long r = ((i - 1) % m + m) % m;
        return entries_[static_cast<size_t>(r)];
    }
    if (i < 1 || i > m) return 0;
    return entries_[static_cast<size_t>(i - 1)];
}

bool KupischSeries::homogeneous() const {
    if (cyclic_) {
        for (int e : entries_)
            if (e != entries_[0]) return false;
        return true;
    }
    const int l = ell();
    if (l > width()) return false;
    for (int i = 0; i < width(); i++)
        if (entries_[i] != std::min(i + 1, l)) return false;
    return true;
}

KupischSeries glue(const KupischSeries& a, const KupischSeries& b) {
    if (a.cyclic() || b.cyclic()) throw cyclic_input();
    std::vector<int> e = a.entries();
    e.insert(e.end(), b.entries().begin() + 1, b.entries().end());
    return KupischSeries::validate(std::move(e), false);
}

KupischSeries glue_chain(const std::vector<KupischSeries>& pieces) {
    if (pieces.empty()) throw nakct_error("EmptySeries", "nothing to glue");
    KupischSeries out = pieces[0];
    for (size_t i = 1; i < pieces.size(); i++) out = glue(out, pieces[i]);
    return out;
}

namespace {

KupischSeries homogeneous_piece(int ell, int width) {
    std::vector<int> e(width);
    for (int i = 0; i < width; i++) e[i] = std::min(i + 1, ell);
    return KupischSeries::validate(std::move(e), false);
}

}  // namespace

Degluing deglue_all(const KupischSeries& s, int d, std::optional<int> finer_n) {
    if (s.cyclic()) throw cyclic_input();
    Degluing out;
    const std::vector<int>& e = s.entries();
    const int m = s.width();

    // Contributions are the per-piece tails (2,3,...,v,v,...) of the glued
    // series; the leading 1 belongs to the first piece only.
    struct Contribution {
        int ell;
        int len;  // piece width = len + 1
    };
    std::vector<Contribution> contributions;

    if (m == 1) {
        out.decomposable = true;
        out.pieces.push_back(s);
        out.piece_offsets.push_back(0);
        return out;
    }

    const int n_tokens = m - 1;
    auto tok = [&](int i) { return e[i + 1]; };  // tokens are entries 2..m
    int i = 0;
    while (i < n_tokens) {
        // maximal run of 2s
        int k = 0;
        while (i + k < n_tokens && tok(i + k) == 2) k++;
        if (i + k == n_tokens) {
            contributions.push_back({2, k});
            break;
        }
        // tok(i+k) == 3 by the growth rule; contributions always open with a 2
        if (k >= 2) contributions.push_back({2, k - 1});
        int start = i + k - 1;  // the 2 that opens the rising contribution
        int pos = start;
        int cur = 2;
        while (pos + 1 < n_tokens && tok(pos + 1) == cur + 1) {
            pos++;
            cur++;
        }
        bool repeated = false;
        while (pos + 1 < n_tokens && tok(pos + 1) == cur) {
            pos++;
            repeated = true;
        }
        if (pos + 1 < n_tokens) {
            int next = tok(pos + 1);
            if (next == cur + 1 && repeated) {
                // 2 < l_j = l_{j+1} < l_{j+2}
                out.decomposable = false;
                out.witness = pos + 1;  // series index of the first equal entry
                return out;
            }
            if (next != 2) {
                // l_j > l_{j+1} > 2
                out.decomposable = false;
                out.witness = pos + 2;
                return out;
            }
        }
        contributions.push_back({cur, pos - start + 1});
        i = pos + 1;
    }

    if (finer_n && *finer_n >= 1) {
        std::vector<Contribution> finer;
        for (const auto& c : contributions) {
            if (c.ell == 2 && c.len > *finer_n && c.len % *finer_n == 0) {
                for (int j = 0; j < c.len / *finer_n; j++) finer.push_back({2, *finer_n});
            } else {
                finer.push_back(c);
            }
        }
        contributions = std::move(finer);
    }

    out.decomposable = true;
    int offset = 0;
    for (size_t p = 0; p < contributions.size(); p++) {
        int w = contributions[p].len + 1;
        out.pieces.push_back(homogeneous_piece(contributions[p].ell, w));
        out.piece_offsets.push_back(offset);
        offset += w - 1;
        if (p + 1 < contributions.size()) {
            std::vector<int> bridge(d + 1);
            for (int c = 0; c <= d; c++) bridge[c] = offset + 1 + c;
            out.bridges.push_back(std::move(bridge));
        }
    }
    return out;
}

KupischSeries self_glue(const KupischSeries& s) {
    if (s.cyclic()) throw cyclic_input();
    if (s.width() < 2) throw nakct_error("WidthTooSmall", "self-gluing needs width >= 2");
    const std::vector<int>& e = s.entries();
    std::vector<int> out;
    out.push_back(e.back());
    for (int i = 1; i + 1 < s.width(); i++) out.push_back(e[i]);
    return KupischSeries::validate(std::move(out), true);
}

SelfDegluing self_deglue_with_rotation(const KupischSeries& s) {
    if (!s.cyclic()) throw nakct_error("CyclicRequired", "self-degluing applies to cyclic series");
    const std::vector<int>& c = s.entries();
    const int m = s.width();
    for (int r = 0; r < m; r++) {
        int first = c[r];
        int second = c[(r + 1) % m];
        if (first != 2 && second == 2) {
            std::vector<int> a;
            a.push_back(1);
            for (int i = 1; i < m; i++) a.push_back(c[(r + i) % m]);
            a.push_back(first);
            return SelfDegluing{KupischSeries::validate(std::move(a), false), r};
        }
    }
    throw no_self_deglue_point();
}

KupischSeries self_deglue(const KupischSeries& s) { return self_deglue_with_rotation(s).acyclic; }

namespace {

// Independent of the deglue parser: first wrap-aware window matching one of
// the two obstruction patterns, 0 if none.
int obstruction_witness(const KupischSeries& s) {
    const std::vector<int>& e = s.entries();
    const int m = s.width();
    auto at = [&](int j) {  // 1-based; wraps when cyclic, reads 0 outside otherwise
        if (s.cyclic()) return e[((j - 1) % m + m) % m];
        if (j < 1 || j > m) return 0;
        return e[j - 1];
    };
    for (int j = 1; j <= m; j++) {
        if (2 < at(j) && at(j) == at(j + 1) && at(j + 1) < at(j + 2)) return j;
        if (at(j) > at(j + 1) && at(j + 1) > 2) return j;
    }
    return 0;
}

}  // namespace

SeriesShape classify_shape(const KupischSeries& s) {
    SeriesShape shape;
    shape.ell = s.ell();
    shape.width = s.width();
    if (s.homogeneous()) {
        shape.tag = s.cyclic() ? SeriesShape::Tag::CyclicHomogeneous : SeriesShape::Tag::AcyclicHomogeneous;
        return shape;
    }
    if (int w = obstruction_witness(s)) {
        shape.tag = SeriesShape::Tag::Obstructed;
        shape.witness = w;
        return shape;
    }
    if (!s.cyclic()) {
        Degluing dg = deglue_all(s, 1);
        if (!dg.decomposable) {
            shape.tag = SeriesShape::Tag::Obstructed;
            shape.witness = dg.witness;
            return shape;
        }
        shape.tag = SeriesShape::Tag::AcyclicDecomposable;
        shape.pieces = std::move(dg.pieces);
        return shape;
    }
    SelfDegluing sd = self_deglue_with_rotation(s);
    Degluing dg = deglue_all(sd.acyclic, 1);
    if (!dg.decomposable) {
        shape.tag = SeriesShape::Tag::Obstructed;
        shape.witness = dg.witness;
        return shape;
    }
    shape.tag = SeriesShape::Tag::CyclicDecomposable;
    shape.pieces = std::move(dg.pieces);
    return shape;
}

}  // namespace nakct
