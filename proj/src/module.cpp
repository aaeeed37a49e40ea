#include "mcmlab/module.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mcmlab/rng.hpp"

namespace mcmlab {

PolyMatrix PolyMatrix::identity(const Field& k, int n, int nvars) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(k, k.one(), nvars);
    return m;
}

PolyMatrix PolyMatrix::from_cols(int rows, std::vector<PolyVec> cols) {
    PolyMatrix m;
    m.rows = rows;
    for (auto& c : cols)
        if (static_cast<int>(c.size()) != rows)
            throw std::invalid_argument("PolyMatrix::from_cols: ragged column");
    m.cols = std::move(cols);
    return m;
}

PolyMatrix pm_mul(const Field& k, const PolyMatrix& a, const PolyMatrix& b) {
    if (a.ncols() != b.rows) throw std::invalid_argument("pm_mul: dimension mismatch");
    PolyMatrix out(a.rows, b.ncols());
    for (int c = 0; c < b.ncols(); ++c)
        for (int j = 0; j < b.rows; ++j) {
            const Poly& f = b.at(j, c);
            if (f.is_zero()) continue;
            for (int r = 0; r < a.rows; ++r)
                out.at(r, c) = poly_add(k, out.at(r, c), poly_mul(k, a.at(r, j), f));
        }
    return out;
}

PolyMatrix pm_hcat(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.ncols() == 0 && a.rows == 0) return b;
    if (b.ncols() == 0 && b.rows == 0) return a;
    if (a.rows != b.rows) throw std::invalid_argument("pm_hcat: row mismatch");
    PolyMatrix out = a;
    out.cols.insert(out.cols.end(), b.cols.begin(), b.cols.end());
    return out;
}

PolyMatrix pm_transpose(const PolyMatrix& a) {
    PolyMatrix out(a.ncols(), a.rows);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.ncols(); ++c) out.at(c, r) = a.at(r, c);
    return out;
}

PolyVec pm_apply(const Field& k, const PolyMatrix& a, const PolyVec& v) {
    if (static_cast<int>(v.size()) != a.ncols()) throw std::invalid_argument("pm_apply: size");
    PolyVec out = vec_zero(a.rows);
    for (int c = 0; c < a.ncols(); ++c) {
        if (v[c].is_zero()) continue;
        for (int r = 0; r < a.rows; ++r)
            out[r] = poly_add(k, out[r], poly_mul(k, a.at(r, c), v[c]));
    }
    return out;
}

bool pm_is_zero_mod(const GradedRing& ring, Side side, const PolyMatrix& a) {
    for (const auto& c : a.cols) {
        PolyVec r = side == Side::R ? reduce_mod_ideal(ring, c) : c;
        if (!vec_is_zero(r)) return false;
    }
    return true;
}

PolyMatrix pm_reduce(const GradedRing& ring, Side side, const PolyMatrix& a) {
    if (side == Side::S) return a;
    PolyMatrix out = a;
    for (auto& c : out.cols) c = reduce_mod_ideal(ring, c);
    return out;
}

PolyMatrix pm_scale(const Field& k, const FieldElem& c, const PolyMatrix& a) {
    PolyMatrix out = a;
    for (auto& col : out.cols) col = vec_scale(k, c, col);
    return out;
}

// ---------------------------------------------------------------------------

struct FreePresentation::Cache {
    std::optional<ModuleGB> gb;
    std::optional<std::vector<std::vector<Monomial>>> staircase;
    std::optional<bool> zero;
};

FreePresentation::FreePresentation(const GradedRing* ring, Side side, std::vector<int> twists,
                                   std::vector<PolyVec> rels)
    : ring_(ring), side_(side), twists_(std::move(twists)), rels_(std::move(rels)),
      cache_(std::make_shared<Cache>()) {
    for (auto& c : rels_) {
        if (static_cast<int>(c.size()) != ngens())
            throw std::invalid_argument("presentation: relation rank mismatch");
        if (side_ == Side::R) c = reduce_mod_ideal(*ring_, c);
        if (!vec_is_homogeneous(c, twists_))
            throw std::invalid_argument("presentation: non-homogeneous relation");
    }
    std::vector<PolyVec> kept;
    for (auto& c : rels_)
        if (!vec_is_zero(c)) kept.push_back(std::move(c));
    rels_ = std::move(kept);
}

int FreePresentation::min_twist() const {
    int m = 0;
    for (size_t i = 0; i < twists_.size(); ++i) m = i == 0 ? twists_[i] : std::min(m, twists_[i]);
    return m;
}

int FreePresentation::max_twist() const {
    int m = 0;
    for (size_t i = 0; i < twists_.size(); ++i) m = i == 0 ? twists_[i] : std::max(m, twists_[i]);
    return m;
}

const ModuleGB& FreePresentation::span_gb() const {
    if (!cache_->gb) cache_->gb = module_groebner(*ring_, side_, rels_, twists_);
    return *cache_->gb;
}

const std::vector<std::vector<Monomial>>& FreePresentation::staircase() const {
    if (!cache_->staircase) cache_->staircase = lead_staircase(span_gb());
    return *cache_->staircase;
}

int FreePresentation::hilbert(int j) const { return static_cast<int>(basis(j).size()); }

std::vector<std::pair<Monomial, int>> FreePresentation::basis(int j) const {
    return standard_monomials(staircase(), twists_, j, ring_->nvars());
}

std::vector<FieldElem> FreePresentation::expand(const PolyVec& elem, int j) const {
    const Field& k = ring_->field();
    auto b = basis(j);
    std::map<std::pair<int, std::vector<int>>, int> index;
    for (size_t i = 0; i < b.size(); ++i) index[{b[i].second, b[i].first.e}] = static_cast<int>(i);
    PolyVec nf = normal_form(*ring_, span_gb(), elem);
    std::vector<FieldElem> out(b.size(), k.zero());
    for (size_t pos = 0; pos < nf.size(); ++pos)
        for (const auto& t : nf[pos].terms()) {
            auto it = index.find({static_cast<int>(pos), t.m.e});
            if (it == index.end())
                throw std::runtime_error("expand: element not homogeneous of the stated degree");
            out[it->second] = t.c;
        }
    return out;
}

ExactMatrix FreePresentation::mult_map(const Poly& f, int j) const {
    const Field& k = ring_->field();
    if (f.is_zero()) return ExactMatrix(0, hilbert(j));
    if (!f.is_homogeneous()) throw std::invalid_argument("mult_map: non-homogeneous multiplier");
    int d = f.degree();
    auto src = basis(j);
    ExactMatrix m(hilbert(j + d), static_cast<int>(src.size()));
    for (size_t c = 0; c < src.size(); ++c) {
        PolyVec fe = vec_zero(ngens());
        fe[src[c].second] = poly_mul_term(k, f, src[c].first, k.one());
        auto col = expand(fe, j + d);
        for (size_t r = 0; r < col.size(); ++r)
            m.at(static_cast<int>(r), static_cast<int>(c)) = col[r];
    }
    return m;
}

bool FreePresentation::elem_is_zero(const PolyVec& elem) const {
    return vec_is_zero(normal_form(*ring_, span_gb(), elem));
}

bool FreePresentation::is_zero_module() const {
    if (!cache_->zero) cache_->zero = minimalize(*this).minimal.ngens() == 0;
    return *cache_->zero;
}

// ---------------------------------------------------------------------------

MinimalizeResult minimalize(const FreePresentation& m) {
    const GradedRing& ring = m.ring();
    const Field& k = ring.field();
    int nvars = ring.nvars();

    std::vector<int> twists = m.twists();
    std::vector<PolyVec> rels = m.rels();
    std::vector<int> kept(twists.size());
    for (size_t i = 0; i < kept.size(); ++i) kept[i] = static_cast<int>(i);
    std::vector<PolyVec> old_in_new(m.ngens());
    for (int j = 0; j < m.ngens(); ++j) old_in_new[j] = vec_unit(k, m.ngens(), j, nvars);

    while (true) {
        int pr = -1, pc = -1;
        for (size_t c = 0; c < rels.size() && pr < 0; ++c)
            for (size_t r = 0; r < rels[c].size(); ++r)
                if (rels[c][r].is_unit()) {
                    pr = static_cast<int>(r);
                    pc = static_cast<int>(c);
                    break;
                }
        if (pr < 0) break;

        FieldElem uinv = k.inv(rels[pc][pr].lead().c);
        PolyVec pivot_col = rels[pc];

        for (size_t c = 0; c < rels.size(); ++c) {
            if (static_cast<int>(c) == pc || rels[c][pr].is_zero()) continue;
            Poly q = poly_scale(k, uinv, rels[c][pr]);
            for (size_t r = 0; r < rels[c].size(); ++r)
                rels[c][r] = poly_sub(k, rels[c][r], poly_mul(k, q, pivot_col[r]));
            if (m.side() == Side::R) rels[c] = reduce_mod_ideal(ring, rels[c]);
        }

        int cur_n = static_cast<int>(twists.size());
        PolyVec subst = vec_zero(cur_n - 1);
        {
            int w = 0;
            for (int r = 0; r < cur_n; ++r) {
                if (r == pr) continue;
                subst[w] = poly_scale(k, k.neg(uinv), pivot_col[r]);
                if (m.side() == Side::R) subst[w] = reduce_mod_ideal(ring, subst[w]);
                ++w;
            }
        }

        rels.erase(rels.begin() + pc);
        for (auto& c : rels) c.erase(c.begin() + pr);
        twists.erase(twists.begin() + pr);
        kept.erase(kept.begin() + pr);

        for (auto& expr : old_in_new) {
            Poly coeff = expr[pr];
            expr.erase(expr.begin() + pr);
            if (coeff.is_zero()) continue;
            for (size_t r = 0; r < expr.size(); ++r)
                expr[r] = poly_add(k, expr[r], poly_mul(k, coeff, subst[r]));
            if (m.side() == Side::R) expr = reduce_mod_ideal(ring, expr);
        }

        std::vector<PolyVec> live;
        for (auto& c : rels)
            if (!vec_is_zero(c)) live.push_back(std::move(c));
        rels = std::move(live);
    }

    if (!rels.empty()) {
        std::vector<int> keep_rel = minimal_generators(ring, m.side(), rels, twists);
        std::vector<PolyVec> pruned;
        for (int i : keep_rel) pruned.push_back(rels[i]);
        rels = std::move(pruned);
    }

    MinimalizeResult out;
    out.minimal = FreePresentation(m.ring_ptr(), m.side(), twists, rels);
    out.kept = std::move(kept);
    out.old_in_new = std::move(old_in_new);
    return out;
}

std::vector<int> minimal_generators(const GradedRing& ring, Side side,
                                    const std::vector<PolyVec>& vecs,
                                    const std::vector<int>& ambient_twists) {
    const Field& k = ring.field();
    std::vector<int> order;
    std::vector<int> degs(vecs.size(), 0);
    std::vector<PolyVec> reduced(vecs.size());
    for (size_t i = 0; i < vecs.size(); ++i) {
        reduced[i] = side == Side::R ? reduce_mod_ideal(ring, vecs[i]) : vecs[i];
        if (vec_is_zero(reduced[i])) continue;
        auto d = vec_degree(reduced[i], ambient_twists);
        if (!d) throw std::invalid_argument("minimal_generators: non-homogeneous vector");
        degs[i] = *d;
        order.push_back(static_cast<int>(i));
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degs[a] < degs[b]; });

    // A vector of degree D is a minimal generator iff its class survives in
    // (W/mW)_D, where W is the span of everything; mW at degree D is
    // spanned by the proper monomial multiples (plus ideal multiples of the
    // ambient frame over R).
    std::vector<int> kept;
    std::vector<std::vector<Monomial>> empty_staircase(ambient_twists.size());
    size_t i = 0;
    while (i < order.size()) {
        int D = degs[order[i]];
        size_t j = i;
        while (j < order.size() && degs[order[j]] == D) ++j;

        auto ambient = standard_monomials(empty_staircase, ambient_twists, D, ring.nvars());
        std::map<std::pair<int, std::vector<int>>, int> index;
        for (size_t b = 0; b < ambient.size(); ++b)
            index[{ambient[b].second, ambient[b].first.e}] = static_cast<int>(b);
        auto expand_vec = [&](const PolyVec& v) {
            std::vector<FieldElem> out(ambient.size(), k.zero());
            for (size_t pos = 0; pos < v.size(); ++pos)
                for (const auto& t : v[pos].terms())
                    out[index.at({static_cast<int>(pos), t.m.e})] = t.c;
            return out;
        };

        std::vector<std::vector<FieldElem>> cols;
        auto add_multiples = [&](const PolyVec& v, int vdeg, bool proper_only) {
            int gap = D - vdeg;
            if (gap < 0 || (proper_only && gap == 0)) return;
            for (const auto& mult : monomials_of_degree(ring.nvars(), gap))
                cols.push_back(expand_vec(vec_mul_term(k, v, mult, k.one())));
        };
        for (size_t t = 0; t < vecs.size(); ++t) {
            if (vec_is_zero(reduced[t])) continue;
            add_multiples(reduced[t], degs[t], true);
        }
        if (side == Side::R)
            for (const auto& f : ring.ideal_gb())
                for (size_t pos = 0; pos < ambient_twists.size(); ++pos) {
                    PolyVec v = vec_zero(static_cast<int>(ambient_twists.size()));
                    v[pos] = f;
                    add_multiples(v, f.degree() + ambient_twists[pos], false);
                }

        ExactMatrix acc(static_cast<int>(ambient.size()), static_cast<int>(cols.size()));
        for (size_t c = 0; c < cols.size(); ++c)
            for (size_t r = 0; r < ambient.size(); ++r)
                acc.at(static_cast<int>(r), static_cast<int>(c)) = cols[c][r];
        int acc_rank = rank_of(k, acc);

        for (size_t t = i; t < j; ++t) {
            int idx = order[t];
            ExactMatrix trial(acc.rows, acc.cols + 1);
            for (int r = 0; r < acc.rows; ++r)
                for (int c = 0; c < acc.cols; ++c) trial.at(r, c) = acc.at(r, c);
            auto coords = expand_vec(reduced[idx]);
            for (int r = 0; r < acc.rows; ++r) trial.at(r, acc.cols) = coords[r];
            int new_rank = rank_of(k, trial);
            if (new_rank > acc_rank) {
                kept.push_back(idx);
                acc = std::move(trial);
                acc_rank = new_rank;
            }
        }
        i = j;
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

FreePresentation subquotient(const GradedRing& ring, Side side,
                             const std::vector<int>& ambient_twists,
                             const std::vector<PolyVec>& numerator,
                             const std::vector<PolyVec>& denominator) {
    std::vector<int> gen_twists;
    std::vector<PolyVec> gens;
    for (const auto& u : numerator) {
        PolyVec v = side == Side::R ? reduce_mod_ideal(ring, u) : u;
        if (vec_is_zero(v)) continue;
        auto d = vec_degree(v, ambient_twists);
        if (!d) throw std::invalid_argument("subquotient: non-homogeneous numerator");
        gens.push_back(v);
        gen_twists.push_back(*d);
    }
    std::vector<PolyVec> all = gens;
    for (const auto& w : denominator) all.push_back(w);
    auto syz = syzygy_generators(ring, side, all, ambient_twists);
    std::vector<PolyVec> rels;
    for (const auto& s : syz) {
        PolyVec r(s.begin(), s.begin() + gens.size());
        if (!vec_is_zero(r)) rels.push_back(std::move(r));
    }
    return FreePresentation(&ring, side, gen_twists, rels);
}

std::vector<PolyVec> map_kernel_gens(const GradedRing& ring, Side side, const PolyMatrix& f,
                                     const std::vector<int>& dst_twists,
                                     const std::vector<PolyVec>& dst_rels, int src_ngens) {
    std::vector<PolyVec> all = f.cols;
    for (const auto& r : dst_rels) all.push_back(r);
    auto syz = syzygy_generators(ring, side, all, dst_twists);
    std::vector<PolyVec> out;
    for (const auto& s : syz) {
        PolyVec u(s.begin(), s.begin() + src_ngens);
        if (!vec_is_zero(u)) out.push_back(std::move(u));
    }
    return out;
}

FreePresentation twist_module(const FreePresentation& m, int shift) {
    std::vector<int> tw = m.twists();
    for (auto& t : tw) t -= shift;
    return FreePresentation(m.ring_ptr(), m.side(), tw, m.rels());
}

FreePresentation direct_sum(const FreePresentation& a, const FreePresentation& b) {
    if (a.ring_ptr() != b.ring_ptr() || a.side() != b.side())
        throw std::invalid_argument("direct_sum: mismatched rings");
    std::vector<int> tw = a.twists();
    tw.insert(tw.end(), b.twists().begin(), b.twists().end());
    std::vector<PolyVec> rels;
    for (const auto& r : a.rels()) {
        PolyVec v = r;
        v.resize(tw.size());
        rels.push_back(v);
    }
    for (const auto& r : b.rels()) {
        PolyVec v = vec_zero(static_cast<int>(tw.size()));
        for (size_t i = 0; i < r.size(); ++i) v[a.ngens() + i] = r[i];
        rels.push_back(v);
    }
    return FreePresentation(a.ring_ptr(), a.side(), tw, rels);
}

std::vector<PolyMatrix> hom_space_basis(const FreePresentation& m, const FreePresentation& n) {
    const GradedRing& ring = m.ring();
    const Field& k = ring.field();
    std::vector<std::vector<std::pair<Monomial, int>>> target_basis(m.ngens());
    std::vector<int> offset(m.ngens() + 1, 0);
    for (int i = 0; i < m.ngens(); ++i) {
        target_basis[i] = n.basis(m.twists()[i]);
        offset[i + 1] = offset[i] + static_cast<int>(target_basis[i].size());
    }
    int unknowns = offset[m.ngens()];

    std::vector<std::vector<FieldElem>> rows;
    for (const auto& rel : m.rels()) {
        auto rd = vec_degree(rel, m.twists());
        if (!rd) continue;
        int D = *rd;
        int nrows = n.hilbert(D);
        std::vector<std::vector<FieldElem>> block(nrows, std::vector<FieldElem>(unknowns, k.zero()));
        for (int i = 0; i < m.ngens(); ++i) {
            if (rel[i].is_zero()) continue;
            ExactMatrix mm = n.mult_map(rel[i], m.twists()[i]);
            for (int c = 0; c < mm.cols; ++c)
                for (int r = 0; r < mm.rows; ++r)
                    block[r][offset[i] + c] = k.add(block[r][offset[i] + c], mm.at(r, c));
        }
        for (auto& row : block) rows.push_back(std::move(row));
    }

    ExactMatrix sys(static_cast<int>(rows.size()), unknowns);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < unknowns; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
    KernelRank kr = kernel_and_rank(k, sys);

    std::vector<PolyMatrix> out;
    for (const auto& v : kr.kernel_basis) {
        PolyMatrix f(n.ngens(), m.ngens());
        for (int i = 0; i < m.ngens(); ++i)
            for (size_t b = 0; b < target_basis[i].size(); ++b) {
                const FieldElem& c = v[offset[i] + b];
                if (k.is_zero(c)) continue;
                const auto& [mon, pos] = target_basis[i][b];
                f.at(pos, i) = poly_add(k, f.at(pos, i), Poly::monomial(k, mon, c));
            }
        out.push_back(std::move(f));
    }
    return out;
}

bool map_is_surjective(const FreePresentation& m, const FreePresentation& n, const PolyMatrix& f) {
    (void)m;
    std::vector<PolyVec> rels = f.cols;
    for (const auto& r : n.rels()) rels.push_back(r);
    FreePresentation coker(n.ring_ptr(), n.side(), n.twists(), rels);
    return coker.is_zero_module();
}

namespace {

bool find_surjection(const FreePresentation& a, const FreePresentation& b, DetRng& rng) {
    const Field& k = a.ring().field();
    if (b.is_zero_module()) return true;
    auto basis = hom_space_basis(a, b);
    if (basis.empty()) return false;
    for (const auto& f : basis)
        if (map_is_surjective(a, b, f)) return true;
    for (int trial = 0; trial < 48; ++trial) {
        PolyMatrix f(b.ngens(), a.ngens());
        for (const auto& g : basis) {
            FieldElem c = k.from_int(rng.uniform_int(1, 4096));
            for (int col = 0; col < f.ncols(); ++col)
                for (int r = 0; r < f.rows; ++r)
                    f.at(r, col) = poly_add(k, f.at(r, col), poly_scale(k, c, g.at(r, col)));
        }
        if (map_is_surjective(a, b, f)) return true;
    }
    return false;
}

}  // namespace

bool modules_isomorphic(const FreePresentation& a, const FreePresentation& b,
                        unsigned long long seed) {
    FreePresentation ma = minimalize(a).minimal;
    FreePresentation mb = minimalize(b).minimal;
    if (ma.ngens() == 0 && mb.ngens() == 0) return true;
    std::vector<int> ta = ma.twists(), tb = mb.twists();
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    if (ta != tb) return false;
    DetRng rng(seed ^ 0x150da7aULL);
    return find_surjection(ma, mb, rng) && find_surjection(mb, ma, rng);
}

FreePresentation free_module(const GradedRing* ring, Side side, std::vector<int> twists) {
    return FreePresentation(ring, side, std::move(twists), {});
}

FreePresentation residue_field(const GradedRing* ring, Side side) {
    const Field& k = ring->field();
    std::vector<PolyVec> rels;
    for (int i = 0; i < ring->nvars(); ++i)
        rels.push_back(PolyVec{Poly::variable(k, i, ring->nvars())});
    return FreePresentation(ring, side, {0}, rels);
}

FreePresentation ring_as_module(const GradedRing* ring, Side side) {
    if (side == Side::S || ring->ideal_gens().empty())
        return FreePresentation(ring, side, {0}, {});
    std::vector<PolyVec> rels;
    for (const auto& f : ring->ideal_gens()) rels.push_back(PolyVec{f});
    return FreePresentation(ring, Side::R, {0}, rels);
}

int module_dimension(const FreePresentation& m) {
    if (m.ngens() == 0) return -1;
    return staircase_dimension(m.staircase(), m.ring().nvars());
}

bool module_finite_length(const FreePresentation& m) {
    if (m.ngens() == 0) return true;
    return staircase_finite_colength(m.staircase(), m.ring().nvars(), nullptr);
}

int module_length(const FreePresentation& m) {
    if (!module_finite_length(m)) throw std::invalid_argument("module_length: infinite length");
    int total = 0;
    if (m.ngens() == 0) return 0;
    for (int j = m.min_twist();; ++j) {
        int h = m.hilbert(j);
        if (h == 0 && j > m.max_twist()) break;
        total += h;
    }
    return total;
}

}  // namespace mcmlab
