#include "nakct/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "nakct/errors.hpp"
#include "nakct/modcat.hpp"

namespace nakct::oracle {

namespace {

Coords plus_e(const Coords& x, int axis) {
    Coords out = x;
    out[axis] += 1;
    return out;
}

}  // namespace

int Algebra::class_of(const Coords& cover_point) const {
    Coords rep = series.cyclic() ? canonicalize_shift(series, cover_point).first : cover_point;
    auto it = vertex_id.find(rep);
    return it == vertex_id.end() ? -1 : it->second;
}

namespace {

// Path-class data of one source vertex: for every cover endpoint reached by a
// nonzero class, the scalar ext_in[axis] extending the class at (end - e_axis)
// by the final arrow, and one representative route.
struct SourceClasses {
    std::map<Coords, std::array<Rat, 8>> ext_in;
    std::map<Coords, std::vector<int>> route;

    bool nonzero(const Coords& w) const { return ext_in.count(w) > 0; }

    // Image of a route in the 1-dimensional class space (0 or 1).
    Rat eval(const Coords& start, const std::vector<int>& axes) const {
        Coords cur = start;
        Rat val = 1;
        for (int ax : axes) {
            cur[ax] += 1;
            auto it = ext_in.find(cur);
            if (it == ext_in.end()) return 0;
            val *= it->second[ax];
            if (val == 0) return 0;
        }
        return val;
    }
};

SourceClasses grow_source(const KupischSeries& s, int d, const Coords& u0, int length_cap) {
    SourceClasses out;
    out.ext_in[u0] = {};  // trivial path
    out.route[u0] = {};

    std::vector<Coords> layer_prev;  // nonzero classes at displacement level-1
    layer_prev.push_back(u0);

    // l=1 has no commutativity relations; the classical zero relations cut
    // paths once the window (u0, ..., w+1) leaves os^2.
    auto dead_by_length = [&](const Coords& w) {
        if (d != 1) return false;
        return w[0] - u0[0] > s.ell_at(w[0]) - 1;
    };

    for (int level = 1; !layer_prev.empty(); level++) {
        if (level > length_cap) throw cap_exceeded("path length cap exceeded while building the algebra");
        std::map<Coords, bool> frontier;
        for (const Coords& p : layer_prev)
            for (int ax = 0; ax < d; ax++) {
                Coords w = plus_e(p, ax);
                if (member(s, d, w)) frontier[w] = true;
            }
        std::vector<Coords> layer_cur;
        for (const auto& [w, _] : frontier) {
            (void)_;
            // Raw extension space: one slot per axis with a nonzero class one
            // step down; relations identify the two routes through each
            // codimension-2 predecessor (zero degenerations included).
            std::vector<int> slot_axis;
            for (int ax = 0; ax < d; ax++) {
                Coords p = w;
                p[ax] -= 1;
                if (strictly_increasing(p) && member(s, d, p) && out.nonzero(p)) slot_axis.push_back(ax);
            }
            if (slot_axis.empty()) continue;
            auto slot_of = [&](int ax) {
                for (size_t k = 0; k < slot_axis.size(); k++)
                    if (slot_axis[k] == ax) return static_cast<int>(k);
                return -1;
            };
            std::vector<std::vector<Rat>> relations;
            for (int i = 0; i < d; i++)
                for (int j = i + 1; j < d; j++) {
                    Coords base = w;
                    base[i] -= 1;
                    base[j] -= 1;
                    if (!strictly_increasing(base) || !member(s, d, base) || !out.nonzero(base)) continue;
                    std::vector<Rat> rel(slot_axis.size(), Rat(0));
                    bool nontrivial = false;
                    // base -> base+e_j -> w  (last arrow along axis i)
                    {
                        Coords mid = plus_e(base, j);
                        int sl = slot_of(i);
                        if (sl >= 0 && member(s, d, mid) && out.nonzero(mid)) {
                            rel[sl] += out.ext_in.at(mid)[j];
                            nontrivial = true;
                        }
                    }
                    // base -> base+e_i -> w  (last arrow along axis j)
                    {
                        Coords mid = plus_e(base, i);
                        int sl = slot_of(j);
                        if (sl >= 0 && member(s, d, mid) && out.nonzero(mid)) {
                            rel[sl] -= out.ext_in.at(mid)[i];
                            nontrivial = true;
                        }
                    }
                    if (nontrivial) relations.push_back(std::move(rel));
                }
            QMat relmat(static_cast<int>(relations.size()), static_cast<int>(slot_axis.size()));
            for (size_t r = 0; r < relations.size(); r++)
                for (size_t c = 0; c < slot_axis.size(); c++) relmat.at(static_cast<int>(r), static_cast<int>(c)) = relations[r][c];
            int qdim = static_cast<int>(slot_axis.size()) - (relations.empty() ? 0 : rank(relmat));
            if (qdim > 1)
                throw nakct_error("PathClassDim",
                                  "path class space of dimension " + std::to_string(qdim) + " at " + coords_to_string(w));
            if (qdim == 0) continue;
            if (dead_by_length(w)) continue;

            // One-dimensional quotient of the slot space: a linear functional
            // q vanishing on all relations records the image of each slot.
            std::array<Rat, 8> ext{};
            if (relations.empty()) {
                ext[slot_axis[0]] = 1;
            } else {
                QMat q = nullspace(relmat);
                assert(q.cols() == 1);
                int lead = -1;
                for (int r = 0; r < q.rows(); r++)
                    if (q.at(r, 0) != 0) {
                        lead = r;
                        break;
                    }
                assert(lead >= 0);
                Rat scale = 1 / q.at(lead, 0);
                for (size_t k = 0; k < slot_axis.size(); k++) ext[slot_axis[k]] = q.at(static_cast<int>(k), 0) * scale;
            }

            // Scalars feed route evaluation; they must be 0 or 1 so that
            // composites of path classes are path classes on the nose.
            int live_axis = -1;
            for (int ax = 0; ax < d; ax++) {
                if (ext[ax] != 0 && ext[ax] != 1)
                    throw nakct_error("PathClassScalar", "non-unit structure constant at " + coords_to_string(w));
                if (ext[ax] == 1 && live_axis < 0) live_axis = ax;
            }
            assert(live_axis >= 0);

            out.ext_in[w] = ext;
            Coords pred = w;
            pred[live_axis] -= 1;
            std::vector<int> route = out.route.at(pred);
            route.push_back(live_axis);
            out.route[w] = std::move(route);
            layer_cur.push_back(w);
        }
        layer_prev = std::move(layer_cur);
    }
    return out;
}

}  // namespace

Algebra build_algebra(const KupischSeries& s, int d, int cap) {
    if (d < 1 || d > 7) throw nakct_error("BadDimension", "d must be between 1 and 7");
    Algebra A;
    A.series = s;
    A.d = d;
    A.vertices = enumerate_os(s, d);
    if (static_cast<int>(A.vertices.size()) > cap)
        throw cap_exceeded("vertex count " + std::to_string(A.vertices.size()) + " above cap " + std::to_string(cap));
    for (size_t i = 0; i < A.vertices.size(); i++) A.vertex_id[A.vertices[i]] = static_cast<int>(i);

    for (size_t v = 0; v < A.vertices.size(); v++)
        for (int ax = 0; ax < d; ax++) {
            Coords tgt = plus_e(A.vertices[v], ax);
            if (!member(s, d, tgt)) continue;
            A.arrows.push_back({static_cast<int>(v), A.class_of(tgt), ax});
        }

    const int length_cap = s.ell() * (d + 1) * s.width();

    // FinAlg over the vertex classes; basis = identities + nonzero path
    // classes, product = route concatenation evaluated in the class spaces.
    FinAlg& alg = A.alg;
    for (const Coords& v : A.vertices) alg.objects.push_back(coords_to_string(v));
    alg.identity_of.assign(A.vertices.size(), -1);

    std::vector<SourceClasses> classes(A.vertices.size());
    for (size_t u = 0; u < A.vertices.size(); u++) classes[u] = grow_source(s, d, A.vertices[u], length_cap);

    std::map<std::pair<int, Coords>, int> basis_of;  // (source class, endpoint) -> basis index
    for (size_t u = 0; u < A.vertices.size(); u++) {
        for (const auto& [w, ext] : classes[u].ext_in) {
            (void)ext;
            FinAlg::BasisElt b;
            Coords delta(w.size());
            for (size_t c = 0; c < w.size(); c++) delta[c] = w[c] - A.vertices[u][c];
            bool is_id = std::all_of(delta.begin(), delta.end(), [](int v) { return v == 0; });
            b.src = A.class_of(w);
            b.tgt = static_cast<int>(u);
            b.identity = is_id;
            b.tag = coords_to_string(A.vertices[u]) + "->" + coords_to_string(w);
            int idx = alg.dim();
            alg.basis.push_back(b);
            if (is_id) alg.identity_of[u] = idx;
            basis_of[{static_cast<int>(u), w}] = idx;
            Algebra::PathInfo info;
            info.src_class = static_cast<int>(u);
            info.displacement = delta;
            info.route = classes[u].route.at(w);
            A.paths.push_back(std::move(info));
        }
    }

    const int n = alg.dim();
    alg.table.assign(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            // "a then b": right-module composition; the underlying geometric
            // path runs b's route first, then a's route shifted onto its end.
            if (alg.basis[a].tgt != alg.basis[b].src) continue;
            int ub = alg.basis[b].tgt;
            const Coords& ub0 = A.vertices[ub];
            Coords endpoint(ub0.size());
            const Coords& wb_delta = A.paths[b].displacement;
            for (size_t c = 0; c < ub0.size(); c++) endpoint[c] = ub0[c] + wb_delta[c] + A.paths[a].displacement[c];
            std::vector<int> route = A.paths[b].route;
            route.insert(route.end(), A.paths[a].route.begin(), A.paths[a].route.end());
            Rat val = classes[ub].eval(ub0, route);
            if (val == 0) continue;
            auto it = basis_of.find({ub, endpoint});
            if (it == basis_of.end())
                throw nakct_error("PathClassTable", "nonzero composite without a class entry");
            alg.table[static_cast<size_t>(a) * n + b] = it->second;
        }

    A.arrow_basis.assign(A.arrows.size(), -1);
    for (size_t ai = 0; ai < A.arrows.size(); ai++) {
        const Arrow& ar = A.arrows[ai];
        Coords endpoint = plus_e(A.vertices[ar.from], ar.axis);
        auto it = basis_of.find({ar.from, endpoint});
        if (it != basis_of.end()) A.arrow_basis[ai] = it->second;
    }
    return A;
}

int QuiverRep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

QuiverRep build_module(const Algebra& A, const Coords& x) {
    const KupischSeries& s = A.series;
    const int d = A.d;
    if (!member(s, d + 1, x)) throw nakct_error("InvalidIndex", "not a module index: " + coords_to_string(x));

    QuiverRep rep;
    rep.A = &A;
    rep.dims.assign(A.vertices.size(), 0);
    rep.lifts.assign(A.vertices.size(), {});

    // Interval support in the cover: lo <= z interleaved <= hi.
    std::vector<int> lo(x.begin(), x.end() - 1);
    std::vector<int> hi(x.begin() + 1, x.end());
    for (int& v : hi) v -= 1;
    Coords z(d);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == d) {
            if (!member(s, d, z)) return;
            int cls = A.class_of(z);
            if (cls < 0) return;
            rep.lifts[cls].push_back(z);
            rep.dims[cls]++;
            return;
        }
        int a = lo[pos];
        int b = hi[pos];
        if (pos > 0) a = std::max(a, hi[pos - 1] + 1);
        if (pos + 1 < d) b = std::min(b, lo[pos + 1] - 1);
        for (int v = a; v <= b; v++) {
            z[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);

    for (const Arrow& ar : A.arrows) {
        QMat mat(rep.dims[ar.from], rep.dims[ar.to]);
        for (int col = 0; col < rep.dims[ar.to]; col++) {
            Coords pred = rep.lifts[ar.to][col];
            pred[ar.axis] -= 1;
            for (int row = 0; row < rep.dims[ar.from]; row++)
                if (rep.lifts[ar.from][row] == pred) {
                    mat.at(row, col) = 1;
                    break;
                }
        }
        rep.arr.push_back(std::move(mat));
    }

    // Every commutativity relation (including zero degenerations) must act by
    // zero; this certifies the representation.
    std::map<std::pair<int, int>, int> arrow_at;  // (from class, axis) -> arrow id
    for (size_t ai = 0; ai < A.arrows.size(); ai++) arrow_at[{A.arrows[ai].from, A.arrows[ai].axis}] = static_cast<int>(ai);
    auto route_matrix = [&](int cls, int first_axis, int second_axis, int end_cls) {
        auto a1 = arrow_at.find({cls, first_axis});
        if (a1 == arrow_at.end()) return QMat(rep.dims[cls], rep.dims[end_cls]);
        int mid = A.arrows[a1->second].to;
        auto a2 = arrow_at.find({mid, second_axis});
        if (a2 == arrow_at.end()) return QMat(rep.dims[cls], rep.dims[end_cls]);
        return rep.arr[a1->second].mul(rep.arr[a2->second]);
    };
    for (size_t v = 0; v < A.vertices.size(); v++)
        for (int i = 0; i < d; i++)
            for (int j = i + 1; j < d; j++) {
                Coords end = plus_e(plus_e(A.vertices[v], i), j);
                if (!member(s, d, end)) continue;
                int end_cls = A.class_of(end);
                QMat r1 = route_matrix(static_cast<int>(v), i, j, end_cls);
                QMat r2 = route_matrix(static_cast<int>(v), j, i, end_cls);
                if (!r1.sub(r2).is_zero())
                    throw nakct_error("RelationViolated", "relation fails on " + coords_to_string(x) + " at vertex " +
                                                              coords_to_string(A.vertices[v]));
            }
    return rep;
}

int hom_dim(const QuiverRep& M, const QuiverRep& N) {
    assert(M.A == N.A);
    const Algebra& A = *M.A;
    // Unknown block phi_v : M_v -> N_v per class; constraints per arrow
    // a: u -> t:  phi_u * M_a = N_a * phi_t.
    std::vector<int> offset(A.vertices.size() + 1, 0);
    for (size_t v = 0; v < A.vertices.size(); v++) offset[v + 1] = offset[v] + M.dims[v] * N.dims[v];
    int unknowns = offset.back();
    if (unknowns == 0) return 0;

    std::vector<std::vector<Rat>> rows;
    auto var = [&](int v, int r, int c) { return offset[v] + r * M.dims[v] + c; };  // phi_v entry (r, c): N-row r, M-col c
    for (size_t ai = 0; ai < A.arrows.size(); ai++) {
        const Arrow& ar = A.arrows[ai];
        const QMat& Ma = M.arr[ai];
        const QMat& Na = N.arr[ai];
        // rows: N.dims[from] x M.dims[to]
        for (int r = 0; r < N.dims[ar.from]; r++)
            for (int c = 0; c < M.dims[ar.to]; c++) {
                std::vector<Rat> row(unknowns, Rat(0));
                bool nz = false;
                for (int k = 0; k < M.dims[ar.from]; k++)
                    if (Ma.at(k, c) != 0) {
                        row[var(ar.from, r, k)] += Ma.at(k, c);
                        nz = true;
                    }
                for (int k = 0; k < N.dims[ar.to]; k++)
                    if (Na.at(r, k) != 0) {
                        row[var(ar.to, k, c)] -= Na.at(r, k);
                        nz = true;
                    }
                if (nz) rows.push_back(std::move(row));
            }
    }
    QMat sys(static_cast<int>(rows.size()), unknowns);
    for (size_t r = 0; r < rows.size(); r++)
        for (int c = 0; c < unknowns; c++) sys.at(static_cast<int>(r), c) = rows[r][c];
    return unknowns - (rows.empty() ? 0 : rank(sys));
}

RightModule to_right_module(const Algebra& A, const QuiverRep& M) {
    RightModule x;
    x.alg = &A.alg;
    x.dims = M.dims;
    std::map<std::pair<int, int>, int> arrow_at;
    for (size_t ai = 0; ai < A.arrows.size(); ai++) arrow_at[{A.arrows[ai].from, A.arrows[ai].axis}] = static_cast<int>(ai);
    for (int b = 0; b < A.alg.dim(); b++) {
        const auto& info = A.paths[b];
        // walk the representative route, multiplying arrow matrices
        int cls = info.src_class;
        QMat acc = QMat::identity(M.dims[cls]);
        for (int ax : info.route) {
            int ai = arrow_at.at({cls, ax});
            acc = acc.mul(M.arr[ai]);
            cls = A.arrows[ai].to;
        }
        // acc: M_{src_class} <- M_{end}; right action of the path maps the
        // space at its endpoint class (basis src) to its start (basis tgt).
        x.act.push_back(std::move(acc));
    }
    return x;
}

int hom_dim_right(const Algebra& A, const RightModule& M, const RightModule& N) {
    QuiverRep m, n;
    m.A = &A;
    n.A = &A;
    m.dims = M.dims;
    n.dims = N.dims;
    for (size_t ai = 0; ai < A.arrows.size(); ai++) {
        int b = A.arrow_basis[ai];
        if (b >= 0) {
            m.arr.push_back(M.act[b]);
            n.arr.push_back(N.act[b]);
        } else {
            m.arr.push_back(QMat(M.dims[A.arrows[ai].from], M.dims[A.arrows[ai].to]));
            n.arr.push_back(QMat(N.dims[A.arrows[ai].from], N.dims[A.arrows[ai].to]));
        }
    }
    return hom_dim(m, n);
}

Resolution min_proj_resolution(const Algebra& A, const RightModule& M, int length) {
    Resolution res;
    RightModule cur = M;
    for (int step = 0; step < length; step++) {
        if (cur.is_zero()) break;
        CoverResult c = proj_cover_and_syzygy(cur);
        res.cover_mults.push_back(c.cover_mults);
        res.syzygies.push_back(c.kernel);
        cur = res.syzygies.back();
    }
    return res;
}

ExtCalculator::ExtCalculator(const Algebra& A, const QuiverRep& M, int max_i) : A_(&A), max_i_(max_i) {
    m_ = to_right_module(A, M);
    res_ = min_proj_resolution(A, m_, max_i);
}

int ExtCalculator::ext(const QuiverRep& N, int i) const {
    assert(i >= 1 && i <= max_i_);
    // 0 -> Hom(X, N) -> Hom(P, N) -> Hom(Omega X, N) -> Ext^1(X, N) -> 0
    // with X the (i-1)-st syzygy of M and P its cover; Hom(P(v), N) = N_v.
    if (static_cast<int>(res_.syzygies.size()) < i) return 0;  // pd M < i
    const RightModule& omega_prev = i >= 2 ? res_.syzygies[i - 2] : m_;
    const RightModule& omega = res_.syzygies[i - 1];
    RightModule n = to_right_module(*A_, N);
    int hom_omega = hom_dim_right(*A_, omega, n);
    int hom_prev = hom_dim_right(*A_, omega_prev, n);
    int hom_cover = 0;
    for (size_t v = 0; v < res_.cover_mults[i - 1].size(); v++) hom_cover += res_.cover_mults[i - 1][v] * N.dims[v];
    return hom_omega - hom_cover + hom_prev;
}

int ext_dim(const Algebra& A, const QuiverRep& M, const QuiverRep& N, int i) {
    ExtCalculator calc(A, M, i);
    return calc.ext(N, i);
}

GldimResult algebra_gldim(const Algebra& a, int bound) { return gldim(a.alg, bound); }

}  // namespace nakct::oracle
