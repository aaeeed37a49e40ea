#include "mcmlab/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace mcmlab {

namespace {

// Canonical ordering of basis vectors: by lead position ascending, then
// lead monomial ascending in degrevlex.
bool lead_less(const PolyVec& a, const PolyVec& b) {
    VecLead la = vec_lead(a), lb = vec_lead(b);
    if (la.pos != lb.pos) return la.pos < lb.pos;
    return cmp_degrevlex(la.m, lb.m) < 0;
}

// Full normal-form reduction of w against tracked elements, maintaining
// w_final = w_initial + A * cof_delta where A is the tracked column set.
PolyVec tracked_reduce(const Field& k, int rank, const std::vector<GBElem>& elems, PolyVec w,
                       PolyVec& cof) {
    PolyVec remainder = vec_zero(rank);
    while (true) {
        VecLead l = vec_lead(w);
        if (l.pos < 0) break;
        bool reduced = false;
        for (const auto& g : elems) {
            if (g.lead.pos != l.pos || !divides(g.lead.m, l.m)) continue;
            Monomial q = mon_div(l.m, g.lead.m);
            FieldElem c = k.div(l.c, g.lead.c);
            w = vec_sub(k, w, vec_mul_term(k, g.v, q, c));
            cof = vec_sub(k, cof, vec_mul_term(k, g.cof, q, c));
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly t = Poly::monomial(k, l.m, l.c);
            remainder[l.pos] = poly_add(k, remainder[l.pos], t);
            w[l.pos] = poly_sub(k, w[l.pos], t);
        }
    }
    return remainder;
}

// Plain (untracked) full normal form against a basis list.
PolyVec reduce_plain(const Field& k, int rank, PolyVec w, const std::vector<PolyVec>& basis,
                     const std::vector<VecLead>& leads) {
    PolyVec remainder = vec_zero(rank);
    while (true) {
        VecLead l = vec_lead(w);
        if (l.pos < 0) break;
        bool reduced = false;
        for (size_t g = 0; g < basis.size(); ++g) {
            if (leads[g].pos != l.pos || !divides(leads[g].m, l.m)) continue;
            Monomial q = mon_div(l.m, leads[g].m);
            FieldElem c = k.div(l.c, leads[g].c);
            w = vec_sub(k, w, vec_mul_term(k, basis[g], q, c));
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly t = Poly::monomial(k, l.m, l.c);
            remainder[l.pos] = poly_add(k, remainder[l.pos], t);
            w[l.pos] = poly_sub(k, w[l.pos], t);
        }
    }
    return remainder;
}

struct Completion {
    const Field& k;
    int nvars;
    int rank;
    std::vector<int> twists;
    int total_cols;
    std::vector<GBElem> elems;
    std::vector<PolyVec> syz;

    // Buchberger completion over all S-pairs with equal lead positions.
    // No pair criteria are applied: the zero-reduction cofactors must
    // generate the full syzygy module of the input columns.
    void run(const std::vector<PolyVec>& cols) {
        std::set<std::tuple<int, int, int>> pairs;
        auto add_pairs_for = [&](int idx) {
            for (int i = 0; i < idx; ++i) {
                if (elems[i].lead.pos != elems[idx].lead.pos) continue;
                Monomial l = mon_lcm(elems[i].lead.m, elems[idx].lead.m);
                int deg = l.degree() + twists[elems[idx].lead.pos];
                pairs.insert({deg, i, idx});
            }
        };

        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            if (vec_is_zero(cols[j])) {
                PolyVec s = vec_zero(total_cols);
                s[j] = Poly::constant(k, k.one(), nvars);
                syz.push_back(std::move(s));
                continue;
            }
            GBElem e;
            e.v = cols[j];
            e.cof = vec_zero(total_cols);
            e.cof[j] = Poly::constant(k, k.one(), nvars);
            FieldElem inv = k.inv(vec_lead(e.v).c);
            e.v = vec_scale(k, inv, e.v);
            e.cof = vec_scale(k, inv, e.cof);
            e.lead = vec_lead(e.v);
            elems.push_back(std::move(e));
            add_pairs_for(static_cast<int>(elems.size()) - 1);
        }

        while (!pairs.empty()) {
            auto [deg, i, j] = *pairs.begin();
            (void)deg;
            pairs.erase(pairs.begin());
            const GBElem gi = elems[i];
            const GBElem gj = elems[j];
            Monomial l = mon_lcm(gi.lead.m, gj.lead.m);
            Monomial qi = mon_div(l, gi.lead.m);
            Monomial qj = mon_div(l, gj.lead.m);
            PolyVec sp = vec_sub(k, vec_mul_term(k, gi.v, qi, k.one()),
                                 vec_mul_term(k, gj.v, qj, k.one()));
            PolyVec cof = vec_sub(k, vec_mul_term(k, gi.cof, qi, k.one()),
                                  vec_mul_term(k, gj.cof, qj, k.one()));
            PolyVec r = tracked_reduce(k, rank, elems, std::move(sp), cof);
            if (vec_is_zero(r)) {
                if (!vec_is_zero(cof)) syz.push_back(std::move(cof));
            } else {
                GBElem e;
                FieldElem inv = k.inv(vec_lead(r).c);
                e.v = vec_scale(k, inv, r);
                e.cof = vec_scale(k, inv, cof);
                e.lead = vec_lead(e.v);
                elems.push_back(std::move(e));
                add_pairs_for(static_cast<int>(elems.size()) - 1);
            }
        }
    }
};

std::vector<PolyVec> extract_reduced(const Field& k, int rank, const std::vector<GBElem>& elems) {
    int n = static_cast<int>(elems.size());
    std::vector<bool> keep(n, true);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n && keep[i]; ++j) {
            if (j == i || !keep[j]) continue;
            if (elems[j].lead.pos != elems[i].lead.pos) continue;
            if (!divides(elems[j].lead.m, elems[i].lead.m)) continue;
            if (elems[j].lead.m == elems[i].lead.m && j > i) continue;
            keep[i] = false;
        }
    }
    std::vector<PolyVec> basis;
    for (int i = 0; i < n; ++i)
        if (keep[i]) basis.push_back(elems[i].v);

    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 64) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<PolyVec> others;
            std::vector<VecLead> other_leads;
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) {
                    others.push_back(basis[j]);
                    other_leads.push_back(vec_lead(basis[j]));
                }
            PolyVec nf = reduce_plain(k, rank, basis[i], others, other_leads);
            bool same = true;
            for (size_t c = 0; c < nf.size() && same; ++c) same = nf[c].equals(k, basis[i][c]);
            if (!same) {
                basis[i] = nf;
                changed = true;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), lead_less);
    return basis;
}

}  // namespace

ModuleGB module_groebner(const GradedRing& ring, Side side, const std::vector<PolyVec>& cols,
                         const std::vector<int>& twists) {
    const Field& k = ring.field();
    int rank = static_cast<int>(twists.size());
    for (const auto& c : cols) {
        if (static_cast<int>(c.size()) != rank)
            throw std::invalid_argument("module_groebner: column rank mismatch");
        if (!vec_is_homogeneous(c, twists))
            throw std::invalid_argument("module_groebner: non-homogeneous column");
    }

    std::vector<PolyVec> all;
    all.reserve(cols.size());
    for (const auto& c : cols) all.push_back(side == Side::R ? reduce_mod_ideal(ring, c) : c);
    int ncols = static_cast<int>(all.size());
    if (side == Side::R) {
        for (const Poly& f : ring.ideal_gb())
            for (int i = 0; i < rank; ++i) {
                PolyVec v = vec_zero(rank);
                v[i] = f;
                all.push_back(std::move(v));
            }
    }

    ModuleGB gb;
    gb.rank = rank;
    gb.twists = twists;
    gb.side = side;
    gb.ncols = ncols;

    Completion comp{k, ring.nvars(), rank, twists, static_cast<int>(all.size()), {}, {}};
    comp.run(all);
    gb.elems = std::move(comp.elems);
    gb.syz_cofactors = std::move(comp.syz);
    gb.reduced = extract_reduced(k, rank, gb.elems);
    return gb;
}

PolyVec normal_form(const GradedRing& ring, const ModuleGB& gb, const PolyVec& v) {
    if (static_cast<int>(v.size()) != gb.rank)
        throw std::invalid_argument("normal_form: rank mismatch");
    std::vector<VecLead> leads;
    leads.reserve(gb.reduced.size());
    for (const auto& g : gb.reduced) leads.push_back(vec_lead(g));
    return reduce_plain(ring.field(), gb.rank, v, gb.reduced, leads);
}

bool in_span(const GradedRing& ring, const ModuleGB& gb, const PolyVec& v) {
    return vec_is_zero(normal_form(ring, gb, v));
}

std::vector<PolyVec> syzygy_generators(const GradedRing& ring, Side side,
                                       const std::vector<PolyVec>& cols,
                                       const std::vector<int>& twists) {
    ModuleGB gb = module_groebner(ring, side, cols, twists);
    std::vector<PolyVec> out;
    for (const auto& s : gb.syz_cofactors) {
        PolyVec proj(s.begin(), s.begin() + gb.ncols);
        if (side == Side::R) proj = reduce_mod_ideal(ring, proj);
        if (!vec_is_zero(proj)) out.push_back(std::move(proj));
    }
    return out;
}

std::optional<PolyVec> lift_through_gb(const GradedRing& ring, const ModuleGB& gb,
                                       const PolyVec& target) {
    const Field& k = ring.field();
    int total = gb.elems.empty() ? 0 : static_cast<int>(gb.elems.front().cof.size());
    PolyVec cof = vec_zero(total);
    PolyVec t = gb.side == Side::R ? reduce_mod_ideal(ring, target) : target;
    PolyVec r = tracked_reduce(k, gb.rank, gb.elems, std::move(t), cof);
    if (!vec_is_zero(r)) return std::nullopt;
    PolyVec lift(cof.begin(), cof.begin() + gb.ncols);
    lift = vec_scale(k, k.from_int(-1), lift);
    if (gb.side == Side::R) lift = reduce_mod_ideal(ring, lift);
    return lift;
}

std::optional<PolyVec> lift_through(const GradedRing& ring, Side side,
                                    const std::vector<PolyVec>& cols,
                                    const std::vector<int>& twists, const PolyVec& target) {
    ModuleGB gb = module_groebner(ring, side, cols, twists);
    return lift_through_gb(ring, gb, target);
}

std::vector<Poly> ideal_groebner(const GradedRing& ring, Side side, const std::vector<Poly>& gens) {
    std::vector<PolyVec> cols;
    for (const auto& g : gens) {
        if (!g.is_homogeneous())
            throw std::invalid_argument("ideal_groebner: non-homogeneous generator");
        cols.push_back(PolyVec{g});
    }
    ModuleGB gb = module_groebner(ring, side, cols, {0});
    std::vector<Poly> out;
    for (const auto& v : gb.reduced) out.push_back(v[0]);
    return out;
}

Poly poly_normal_form(const GradedRing& ring, const ModuleGB& gb, const Poly& f) {
    return normal_form(ring, gb, PolyVec{f})[0];
}

Poly reduce_mod_ideal(const GradedRing& ring, const Poly& f) {
    if (ring.ideal_gb().empty()) return f;
    std::vector<PolyVec> basis;
    std::vector<VecLead> leads;
    for (const auto& g : ring.ideal_gb()) {
        basis.push_back(PolyVec{g});
        leads.push_back(vec_lead(basis.back()));
    }
    return reduce_plain(ring.field(), 1, PolyVec{f}, basis, leads)[0];
}

PolyVec reduce_mod_ideal(const GradedRing& ring, const PolyVec& v) {
    PolyVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = reduce_mod_ideal(ring, v[i]);
    return out;
}

std::vector<std::vector<Monomial>> lead_staircase(const ModuleGB& gb) {
    std::vector<std::vector<Monomial>> st(gb.rank);
    for (const auto& g : gb.reduced) {
        VecLead l = vec_lead(g);
        st[l.pos].push_back(l.m);
    }
    return st;
}

std::vector<std::pair<Monomial, int>> standard_monomials(
    const std::vector<std::vector<Monomial>>& staircase, const std::vector<int>& twists, int j,
    int nvars) {
    std::vector<std::pair<Monomial, int>> out;
    for (size_t i = 0; i < twists.size(); ++i) {
        int d = j - twists[i];
        if (d < 0) continue;
        for (const auto& m : monomials_of_degree(nvars, d)) {
            bool reducible = false;
            for (const auto& lm : staircase[i])
                if (divides(lm, m)) {
                    reducible = true;
                    break;
                }
            if (!reducible) out.emplace_back(m, static_cast<int>(i));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return cmp_degrevlex(a.first, b.first) > 0;
    });
    return out;
}

int staircase_dimension(const std::vector<std::vector<Monomial>>& staircase, int nvars) {
    int best = -1;
    for (const auto& leads : staircase) {
        bool zero_quotient = false;
        for (const auto& m : leads)
            if (m.is_one()) zero_quotient = true;
        if (zero_quotient) continue;
        for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
            int size = __builtin_popcount(mask);
            if (size <= best) continue;
            bool independent = true;
            for (const auto& m : leads) {
                bool inside = true;
                for (int v = 0; v < nvars; ++v)
                    if (m.e[v] > 0 && !(mask & (1u << v))) {
                        inside = false;
                        break;
                    }
                if (inside) {
                    independent = false;
                    break;
                }
            }
            if (independent) best = size;
        }
    }
    return best;
}

bool staircase_finite_colength(const std::vector<std::vector<Monomial>>& staircase, int nvars,
                               std::vector<int>* max_powers) {
    if (max_powers) max_powers->assign(nvars, 0);
    for (const auto& leads : staircase) {
        for (int v = 0; v < nvars; ++v) {
            int found = -1;
            for (const auto& m : leads) {
                if (m.is_one()) {
                    found = 0;
                    break;
                }
                bool pure = m.e[v] > 0;
                for (int w = 0; w < nvars && pure; ++w)
                    if (w != v && m.e[w] > 0) pure = false;
                if (pure && (found < 0 || m.e[v] < found)) found = m.e[v];
            }
            if (found < 0) return false;
            if (max_powers) (*max_powers)[v] = std::max((*max_powers)[v], found);
        }
    }
    return true;
}

}  // namespace mcmlab
