#pragma once

#include <numeric>
#include <vector>

namespace mcmlab {

/// Exponent vector in the ambient polynomial ring; all variables have
/// internal degree 1 (standard grading).
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    int nvars() const { return static_cast<int>(e.size()); }
    bool is_one() const {
        for (int x : e)
            if (x) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

/// Degree-reverse-lexicographic comparison with x_1 > x_2 > ... > x_n.
/// Returns +1 when a > b, 0 on equality, -1 otherwise.
inline int cmp_degrevlex(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (int i = a.nvars() - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial mon_mul(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (int i = 0; i < m.nvars(); ++i) m.e[i] += b.e[i];
    return m;
}

/// Quotient b / a; caller guarantees divisibility.
inline Monomial mon_div(const Monomial& b, const Monomial& a) {
    Monomial m = b;
    for (int i = 0; i < m.nvars(); ++i) m.e[i] -= a.e[i];
    return m;
}

inline Monomial mon_lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (int i = 0; i < m.nvars(); ++i) m.e[i] = std::max(m.e[i], b.e[i]);
    return m;
}

/// All monomials of the given total degree, in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace mcmlab
