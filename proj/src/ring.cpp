#include "mcmlab/ring.hpp"

#include <stdexcept>

#include "mcmlab/groebner.hpp"
#include "mcmlab/rng.hpp"

namespace mcmlab {

namespace {

void validate_ideal_gens(const std::vector<Poly>& gens) {
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw std::invalid_argument("graded ring: ideal generator is not homogeneous");
        if (g.degree() == 0)
            throw std::invalid_argument("graded ring: ideal generator of degree 0");
    }
}

}  // namespace

GradedRing::GradedRing(Field field, std::vector<std::string> vars, std::vector<Poly> ideal_gens)
    : field_(field), vars_(std::move(vars)), ideal_gens_(std::move(ideal_gens)) {
    validate_ideal_gens(ideal_gens_);
    GradedRing ambient;
    ambient.field_ = field_;
    ambient.vars_ = vars_;
    ambient.dim_ = nvars();
    std::vector<Poly> nonzero;
    for (const auto& g : ideal_gens_)
        if (!g.is_zero()) nonzero.push_back(g);
    ideal_gb_ = ideal_groebner(ambient, Side::S, nonzero);
    finish_init();
}

GradedRing GradedRing::with_precomputed_gb(Field field, std::vector<std::string> vars,
                                           std::vector<Poly> ideal_gens, std::vector<Poly> gb) {
    validate_ideal_gens(ideal_gens);
    GradedRing r;
    r.field_ = field;
    r.vars_ = std::move(vars);
    r.ideal_gens_ = std::move(ideal_gens);
    r.ideal_gb_ = std::move(gb);
    r.finish_init();
    return r;
}

void GradedRing::finish_init() {
    std::vector<std::vector<Monomial>> staircase(1);
    for (const auto& g : ideal_gb_) staircase[0].push_back(g.lead().m);
    dim_ = staircase_dimension(staircase, nvars());
    if (dim_ < 0) throw std::invalid_argument("graded ring: ideal is the whole ring");
}

std::string GradedRing::describe() const {
    std::string s = field_.is_rational() ? "QQ" : "F" + std::to_string(field_.characteristic());
    s += "[";
    for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    s += "]";
    if (!ideal_gens_.empty()) {
        s += "/(";
        for (size_t i = 0; i < ideal_gens_.size(); ++i) {
            if (i) s += ", ";
            s += ideal_gens_[i].str(field_, vars_);
        }
        s += ")";
    }
    return s;
}

namespace {

struct SopCheck {
    bool ok = false;
    int colength = 0;
    std::vector<int> max_powers;
};

SopCheck check_sop(const GradedRing& ring, const std::vector<Poly>& sop) {
    std::vector<Poly> gens = ring.ideal_gens();
    for (const auto& f : sop) gens.push_back(f);
    for (auto it = gens.begin(); it != gens.end();)
        it = it->is_zero() ? gens.erase(it) : std::next(it);
    std::vector<Poly> gb = ideal_groebner(ring, Side::S, gens);
    std::vector<std::vector<Monomial>> staircase(1);
    for (const auto& g : gb) staircase[0].push_back(g.lead().m);
    SopCheck out;
    if (!staircase_finite_colength(staircase, ring.nvars(), &out.max_powers)) return out;
    out.ok = true;
    std::vector<int> twists{0};
    for (int j = 0;; ++j) {
        int c = static_cast<int>(standard_monomials(staircase, twists, j, ring.nvars()).size());
        if (c == 0) break;  // standard graded: the Hilbert function has no gaps
        out.colength += c;
    }
    return out;
}

}  // namespace

SopResult krull_dim_and_sop(const GradedRing& ring, unsigned long long seed) {
    const Field& k = ring.field();
    int n = ring.nvars();
    int d = ring.dim();
    SopResult res;
    res.dim = d;

    if (d == 0) {
        SopCheck c = check_sop(ring, {});
        res.colength = c.colength;
        res.max_powers = c.max_powers;
        res.attempts = 1;
        return res;
    }

    auto try_candidate = [&](const std::vector<Poly>& cand) -> bool {
        ++res.attempts;
        SopCheck c = check_sop(ring, cand);
        if (!c.ok) return false;
        res.sop = cand;
        res.colength = c.colength;
        res.max_powers = c.max_powers;
        return true;
    };

    // Variable subsets of size d, lexicographic.
    std::vector<int> idx(d);
    auto subsets = [&](auto&& self, int start, int depth) -> bool {
        if (depth == d) {
            std::vector<Poly> cand;
            for (int i : idx) cand.push_back(Poly::variable(k, i, n));
            return try_candidate(cand);
        }
        for (int v = start; v <= n - (d - depth); ++v) {
            idx[depth] = v;
            if (self(self, v + 1, depth + 1)) return true;
        }
        return false;
    };
    if (subsets(subsets, 0, 0)) return res;

    // Staggered integer sums l_i = sum_j (j+1)^(i-1) x_j; the first row is
    // the plain sum of the variables.
    {
        std::vector<Poly> cand;
        for (int i = 1; i <= d; ++i) {
            std::vector<Term> terms;
            for (int j = 0; j < n; ++j) {
                long long coef = 1;
                for (int e = 1; e < i; ++e) coef *= (j + 1);
                Monomial m(n);
                m.e[j] = 1;
                terms.push_back(Term{m, k.from_int(coef)});
            }
            cand.push_back(Poly::make(k, std::move(terms)));
        }
        if (try_candidate(cand)) return res;
    }

    // Seeded random linear forms, leading coefficient normalized to 1.
    DetRng rng(seed ^ 0x5e8f00d5ULL);
    const int kMaxRandom = 256;
    for (int attempt = 0; attempt < kMaxRandom; ++attempt) {
        std::vector<Poly> cand;
        for (int i = 0; i < d; ++i) {
            std::vector<Term> terms;
            for (int j = 0; j < n; ++j) {
                long long c = k.is_rational() ? rng.uniform_int(-20, 20)
                                              : rng.uniform_int(0, static_cast<int>(std::min<long long>(
                                                                       k.characteristic() - 1, 1 << 20)));
                if (c == 0) continue;
                Monomial m(n);
                m.e[j] = 1;
                terms.push_back(Term{m, k.from_int(c)});
            }
            Poly f = Poly::make(k, std::move(terms));
            if (!f.is_zero()) f = poly_scale(k, k.inv(f.lead().c), f);
            cand.push_back(f);
        }
        bool any_zero = false;
        for (const auto& f : cand) any_zero |= f.is_zero();
        if (any_zero) continue;
        if (try_candidate(cand)) return res;
    }
    throw std::runtime_error("sop-search-exhausted after " + std::to_string(res.attempts) +
                             " attempts");
}

}  // namespace mcmlab
