#include "mcmlab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mcmlab {

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (nvars == 0) {
        if (degree == 0) out.push_back(Monomial(0));
        return out;
    }
    Monomial cur(nvars);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            cur.e[var] = remaining;
            out.push_back(cur);
            cur.e[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur.e[var] = e;
            self(self, var + 1, remaining - e);
        }
        cur.e[var] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return cmp_degrevlex(a, b) > 0; });
    return out;
}

namespace {
struct MonCmpDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return cmp_degrevlex(a, b) > 0; }
};
}  // namespace

Poly Poly::make(const Field& k, std::vector<Term> terms) {
    std::map<Monomial, FieldElem, MonCmpDesc> acc;
    for (auto& t : terms) {
        auto it = acc.find(t.m);
        if (it == acc.end())
            acc.emplace(t.m, t.c);
        else
            it->second = k.add(it->second, t.c);
    }
    Poly p;
    for (auto& [m, c] : acc)
        if (!k.is_zero(c)) p.t.push_back(Term{m, c});
    return p;
}

Poly Poly::constant(const Field& k, const FieldElem& c, int nvars) {
    Poly p;
    if (!k.is_zero(c)) p.t.push_back(Term{Monomial(nvars), c});
    return p;
}

Poly Poly::monomial(const Field& k, const Monomial& m, const FieldElem& c) {
    Poly p;
    if (!k.is_zero(c)) p.t.push_back(Term{m, c});
    return p;
}

Poly Poly::variable(const Field& k, int index, int nvars) {
    Monomial m(nvars);
    m.e[index] = 1;
    return monomial(k, m, k.one());
}

bool Poly::is_homogeneous() const {
    if (t.empty()) return true;
    int d = t.front().m.degree();
    for (const auto& tm : t)
        if (tm.m.degree() != d) return false;
    return true;
}

bool Poly::equals(const Field& k, const Poly& o) const {
    if (t.size() != o.t.size()) return false;
    for (size_t i = 0; i < t.size(); ++i)
        if (!(t[i].m == o.t[i].m) || !k.eq(t[i].c, o.t[i].c)) return false;
    return true;
}

Poly poly_add(const Field& k, const Poly& a, const Poly& b) {
    Poly p;
    p.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = cmp_degrevlex(a.t[i].m, b.t[j].m);
        if (c > 0)
            p.t.push_back(a.t[i++]);
        else if (c < 0)
            p.t.push_back(b.t[j++]);
        else {
            FieldElem s = k.add(a.t[i].c, b.t[j].c);
            if (!k.is_zero(s)) p.t.push_back(Term{a.t[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.t.size(); ++i) p.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) p.t.push_back(b.t[j]);
    return p;
}

Poly poly_neg(const Field& k, const Poly& a) {
    Poly p = a;
    for (auto& t : p.t) t.c = k.neg(t.c);
    return p;
}

Poly poly_sub(const Field& k, const Poly& a, const Poly& b) { return poly_add(k, a, poly_neg(k, b)); }

Poly poly_scale(const Field& k, const FieldElem& c, const Poly& a) {
    if (k.is_zero(c)) return Poly();
    Poly p = a;
    for (auto& t : p.t) t.c = k.mul(t.c, c);
    return p;
}

Poly poly_mul_term(const Field& k, const Poly& a, const Monomial& m, const FieldElem& c) {
    if (k.is_zero(c)) return Poly();
    Poly p = a;
    for (auto& t : p.t) {
        t.m = mon_mul(t.m, m);
        t.c = k.mul(t.c, c);
    }
    return p;
}

Poly poly_mul(const Field& k, const Poly& a, const Poly& b) {
    std::vector<Term> acc;
    acc.reserve(a.t.size() * b.t.size());
    for (const auto& ta : a.t)
        for (const auto& tb : b.t) acc.push_back(Term{mon_mul(ta.m, tb.m), k.mul(ta.c, tb.c)});
    return Poly::make(k, std::move(acc));
}

Poly poly_pow(const Field& k, const Poly& a, int e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    if (e == 0) {
        int nv = a.is_zero() ? 0 : a.lead().m.nvars();
        return Poly::constant(k, k.one(), nv);
    }
    Poly r = a;
    for (int i = 1; i < e; ++i) r = poly_mul(k, r, a);
    return r;
}

std::string Poly::str(const Field& k, const std::vector<std::string>& vars) const {
    if (t.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& tm : t) {
        std::string cs = k.str(tm.c);
        bool negative = !cs.empty() && cs[0] == '-';
        std::string abs = negative ? cs.substr(1) : cs;
        if (first) {
            if (negative) s += "-";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        std::string mon;
        for (int i = 0; i < tm.m.nvars(); ++i) {
            if (tm.m.e[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += vars[i];
            if (tm.m.e[i] > 1) mon += "^" + std::to_string(tm.m.e[i]);
        }
        if (mon.empty()) {
            s += abs;
        } else {
            if (abs != "1") s += abs + "*";
            s += mon;
        }
    }
    return s;
}

bool vec_is_zero(const PolyVec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

PolyVec vec_add(const Field& k, const PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: rank mismatch");
    PolyVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = poly_add(k, a[i], b[i]);
    return out;
}

PolyVec vec_sub(const Field& k, const PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: rank mismatch");
    PolyVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = poly_sub(k, a[i], b[i]);
    return out;
}

PolyVec vec_scale(const Field& k, const FieldElem& c, const PolyVec& a) {
    PolyVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = poly_scale(k, c, a[i]);
    return out;
}

PolyVec vec_mul_term(const Field& k, const PolyVec& a, const Monomial& m, const FieldElem& c) {
    PolyVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = poly_mul_term(k, a[i], m, c);
    return out;
}

PolyVec vec_mul_poly(const Field& k, const PolyVec& a, const Poly& p) {
    PolyVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = poly_mul(k, a[i], p);
    return out;
}

PolyVec vec_zero(int rank) { return PolyVec(static_cast<size_t>(rank)); }

PolyVec vec_unit(const Field& k, int rank, int pos, int nvars) {
    PolyVec v = vec_zero(rank);
    v[pos] = Poly::constant(k, k.one(), nvars);
    return v;
}

bool vec_is_homogeneous(const PolyVec& v, const std::vector<int>& twists) {
    std::optional<int> deg;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!v[i].is_homogeneous()) return false;
        int d = v[i].degree() + twists[i];
        if (deg && *deg != d) return false;
        deg = d;
    }
    return true;
}

std::optional<int> vec_degree(const PolyVec& v, const std::vector<int>& twists) {
    std::optional<int> deg;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        int d = v[i].degree() + twists[i];
        if (!deg) deg = d;
    }
    return deg;
}

VecLead vec_lead(const PolyVec& v) {
    VecLead l;
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
            l.pos = static_cast<int>(i);
            l.m = v[i].lead().m;
            l.c = v[i].lead().c;
            return l;
        }
    }
    return l;
}

}  // namespace mcmlab
