#include <catch2/catch_amalgamated.hpp>

#include "mcmlab/matrix.hpp"
#include "mcmlab/rng.hpp"

using namespace mcmlab;

namespace {

ExactMatrix from_ints(const Field& k, int rows, int cols, const std::vector<long long>& vals) {
    ExactMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = k.from_int(vals[r * cols + c]);
    return m;
}

ExactMatrix random_matrix(const Field& k, DetRng& rng, int rows, int cols) {
    ExactMatrix m(rows, cols);
    for (auto& e : m.a) e = k.from_int(rng.uniform_int(-6, 6));
    return m;
}

bool same_result(const Field& k, const KernelRank& a, const KernelRank& b) {
    if (a.rank != b.rank || a.kernel_basis.size() != b.kernel_basis.size()) return false;
    for (size_t i = 0; i < a.kernel_basis.size(); ++i)
        for (size_t j = 0; j < a.kernel_basis[i].size(); ++j)
            if (!k.eq(a.kernel_basis[i][j], b.kernel_basis[i][j])) return false;
    return true;
}

}  // namespace

TEST_CASE("field arithmetic over F_p and Q") {
    Field fp(32003);
    REQUIRE(fp.eq(fp.add(fp.from_int(32000), fp.from_int(5)), fp.from_int(2)));
    REQUIRE(fp.eq(fp.mul(fp.from_int(-1), fp.from_int(7)), fp.from_int(31996)));
    REQUIRE(fp.eq(fp.mul(fp.inv(fp.from_int(1234)), fp.from_int(1234)), fp.one()));

    Field q(0);
    FieldElem half = q.div(q.one(), q.from_int(2));
    REQUIRE(q.eq(q.add(half, half), q.one()));
    REQUIRE(q.str(q.div(q.from_int(-4), q.from_int(6))) == "-2/3");

    REQUIRE_THROWS(Field(2));
    REQUIRE_THROWS(Field(32001));  // 3 * 10667
}

TEST_CASE("kernel_and_rank on the identity over F_5") {
    Field k(5);
    ExactMatrix m = from_ints(k, 2, 2, {1, 0, 0, 1});
    KernelRank kr = kernel_and_rank(k, m);
    REQUIRE(kr.rank == 2);
    REQUIRE(kr.kernel_basis.empty());
}

TEST_CASE("kernel_and_rank on the zero map over Q") {
    Field k(0);
    ExactMatrix m(2, 2);
    for (auto& e : m.a) e = k.zero();
    KernelRank kr = kernel_and_rank(k, m);
    REQUIRE(kr.rank == 0);
    REQUIRE(kr.kernel_basis.size() == 2);
    REQUIRE(k.is_one(kr.kernel_basis[0][0]));
    REQUIRE(k.is_zero(kr.kernel_basis[0][1]));
    REQUIRE(k.is_zero(kr.kernel_basis[1][0]));
    REQUIRE(k.is_one(kr.kernel_basis[1][1]));
}

TEST_CASE("kernel_and_rank on proportional rows over Q") {
    Field k(0);
    ExactMatrix m = from_ints(k, 2, 2, {1, 2, 2, 4});
    KernelRank kr = kernel_and_rank(k, m);
    REQUIRE(kr.rank == 1);
    REQUIRE(kr.kernel_basis.size() == 1);
    REQUIRE(k.eq(kr.kernel_basis[0][0], k.from_int(-2)));
    REQUIRE(k.eq(kr.kernel_basis[0][1], k.from_int(1)));
}

TEST_CASE("kernel_and_rank is deterministic and rank-transpose invariant") {
    Field k(32003);
    DetRng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = rng.uniform_int(0, 6), cols = rng.uniform_int(0, 6);
        ExactMatrix m = random_matrix(k, rng, rows, cols);
        KernelRank a = kernel_and_rank(k, m);
        KernelRank b = kernel_and_rank(k, m);
        REQUIRE(same_result(k, a, b));
        REQUIRE(a.rank + static_cast<int>(a.kernel_basis.size()) == cols);
        REQUIRE(rank_of(k, m) == rank_of(k, transpose(k, m)));
        // Every kernel vector really is in the kernel.
        for (const auto& v : a.kernel_basis)
            for (int r = 0; r < rows; ++r) {
                FieldElem s = k.zero();
                for (int c = 0; c < cols; ++c) s = k.add(s, k.mul(m.at(r, c), v[c]));
                REQUIRE(k.is_zero(s));
            }
    }
}

TEST_CASE("composable maps with zero product satisfy the rank bound") {
    Field k(32003);
    DetRng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = rng.uniform_int(1, 5), cols = rng.uniform_int(1, 5);
        ExactMatrix m1 = random_matrix(k, rng, rows, cols);
        KernelRank kr = kernel_and_rank(k, m1);
        // Build m2 whose columns are random combinations of kernel vectors.
        int c2 = rng.uniform_int(1, 4);
        ExactMatrix m2(cols, c2);
        for (int c = 0; c < c2; ++c)
            for (const auto& v : kr.kernel_basis) {
                FieldElem w = k.from_int(rng.uniform_int(-5, 5));
                for (int r = 0; r < cols; ++r)
                    m2.at(r, c) = k.add(m2.at(r, c), k.mul(w, v[r]));
            }
        ExactMatrix prod = mat_mul(k, m1, m2);
        for (const auto& e : prod.a) REQUIRE(k.is_zero(e));
        REQUIRE(rank_of(k, m1) + rank_of(k, m2) <= cols);
    }
}
