#include <doctest.h>

#include <random>

#include "eres/linear.hpp"

using namespace eres;

namespace {

DgElement elem(const Field& f, int degree, std::initializer_list<std::pair<const char*, int>> terms) {
    DgElement e;
    e.degree = degree;
    for (auto& [n, c] : terms) e.add(f, n, f.from_int(c));
    return e;
}

// Plain Gaussian elimination over F_p on a dense int64 matrix.
int64_t rank_mod_p(std::vector<std::vector<int64_t>> m, int64_t p) {
    auto pw = [p](int64_t b, int64_t e) {
        int64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int64_t rank = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t c = 0; c < cols && rank < static_cast<int64_t>(m.size()); ++c) {
        size_t piv = rank;
        while (piv < m.size() && ((m[piv][c] % p) + p) % p == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        int64_t inv = pw(((m[rank][c] % p) + p) % p, p - 2);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<size_t>(rank)) continue;
            int64_t k = ((m[r][c] % p) + p) % p * inv % p;
            for (size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - k * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Fraction-free (Bareiss) rank over Q for small integer matrices.
int64_t rank_bareiss(std::vector<std::vector<__int128>> m) {
    int64_t rank = 0;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    __int128 prev = 1;
    for (size_t c = 0; c < cols && static_cast<size_t>(rank) < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t j = c + 1; j < cols; ++j) m[r][j] = (m[rank][c] * m[r][j] - m[r][c] * m[rank][j]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return rank;
}

std::vector<SparseRow> to_rows(const Field& f, const std::vector<std::vector<int64_t>>& m) {
    std::vector<SparseRow> rows;
    for (auto& r : m) {
        SparseRow s;
        for (size_t j = 0; j < r.size(); ++j)
            if (!f.is_zero(f.from_int(r[j]))) s.emplace_back(static_cast<uint32_t>(j), f.from_int(r[j]));
        rows.push_back(s);
    }
    return rows;
}

}  // namespace

TEST_CASE("field arithmetic") {
    Field f5(5), q(0);
    CHECK(f5.is_one(f5.mul(f5.from_int(2), f5.inv(f5.from_int(2)))));
    CHECK(f5.format(f5.from_int(4)) == "-1");
    CHECK(q.from_frac(2, 4) == q.from_frac(1, 2));
    CHECK(q.format(q.from_frac(-3, 6)) == "-1/2");
    CHECK(q.is_zero(q.add(q.from_frac(1, 3), q.from_frac(-1, 3))));
    CHECK_THROWS_AS(Field(4), std::invalid_argument);
    Scalar big = q.from_int(int64_t(1) << 40);
    CHECK_THROWS_AS(q.mul(big, big), OverflowError);
}

TEST_CASE("Koszul swap of tensors") {
    Field q(0), f2(2);
    auto x = elem(q, 1, {{"x", 1}}), y = elem(q, 1, {{"y", 1}});
    CHECK(tensor_elements(q, x, y, true) == elem(q, 2, {{"y ⊗ x", -1}}));
    auto x2 = elem(f2, 1, {{"x", 1}}), y2 = elem(f2, 1, {{"y", 1}});
    CHECK(tensor_elements(f2, x2, y2, true) == elem(f2, 2, {{"y ⊗ x", 1}}));
    auto xe = elem(q, 2, {{"x", 1}});
    CHECK(tensor_elements(q, xe, y, true) == elem(q, 3, {{"y ⊗ x", 1}}));
}

TEST_CASE("linear rules") {
    Field q(0);
    LinearRule id{{"x", elem(q, 1, {{"x", 1}})}, {"y", elem(q, 1, {{"y", 1}})}};
    auto e = elem(q, 1, {{"x", 2}, {"y", -1}});
    CHECK(apply_rule(q, id, e, 1) == e);
    LinearRule zero{{"x", DgElement{}}, {"y", DgElement{}}};
    CHECK(apply_rule(q, zero, e, 1).zero());
    LinearRule shear{{"x", elem(q, 1, {{"x", 1}, {"y", 1}})}};
    CHECK(apply_rule(q, shear, elem(q, 1, {{"x", 2}}), 1) == elem(q, 1, {{"x", 2}, {"y", 2}}));
    CHECK_THROWS_AS(apply_rule(q, shear, elem(q, 1, {{"z", 1}}), 1), std::out_of_range);
}

TEST_CASE("homology of small complexes") {
    Field f2(2);
    FiniteChainComplex c;
    c.module.basis = {{"a", 1}, {"b", 2}};
    c.module.lo = 1;
    c.module.hi = 3;
    auto h = homology_dims(f2, c, 2);
    REQUIRE(h.size() == 2);
    CHECK(h[0] == std::pair<int, int64_t>{1, 1});
    CHECK(h[1] == std::pair<int, int64_t>{2, 1});

    FiniteChainComplex k;
    k.module.basis = {{"u", 1}, {"v", 2}};
    k.module.lo = 1;
    k.module.hi = 3;
    k.differential["v"] = elem(f2, 1, {{"u", 1}});
    for (auto& [d, n] : homology_dims(f2, k, 2)) CHECK(n == 0);

    // d z = a + b with a, b in degree 1: rank 1, so H_1 = 1 and H_2 = 0
    FiniteChainComplex w;
    w.module.basis = {{"a", 1}, {"b", 1}, {"z", 2}};
    w.module.lo = 1;
    w.module.hi = 3;
    w.differential["z"] = elem(f2, 1, {{"a", 1}, {"b", 1}});
    auto hw = homology_dims(f2, w, 2);
    CHECK(hw[0].second == 1);
    CHECK(hw[1].second == 0);
    CHECK(w.dd_failures(f2).empty());
    CHECK_THROWS_AS(homology_dims(f2, w, 3), TruncationError);
}

TEST_CASE("rank against independent elimination") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        std::vector<std::vector<int64_t>> m(rows, std::vector<int64_t>(cols));
        for (auto& r : m)
            for (auto& v : r) v = (rng() % 3 == 0) ? static_cast<int64_t>(rng() % 7) - 3 : 0;
        if (trial % 4 == 0 && rows > 2) {  // force a dependency
            for (int j = 0; j < cols; ++j) m[rows - 1][j] = m[0][j] - 2 * m[1][j];
        }
        for (uint32_t p : {2u, 3u, 7u}) {
            Field f(p);
            auto sr = to_rows(f, m);
            int64_t want = rank_mod_p(m, p);
            CHECK(matrix_rank(f, sr, cols) == want);
            CHECK(matrix_rank_dense(f, sr, cols) == want);
            CHECK(matrix_rank_sparse(f, sr, cols) == want);
        }
        Field q(0);
        std::vector<std::vector<__int128>> mq(rows, std::vector<__int128>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) mq[i][j] = m[i][j];
        auto sr = to_rows(q, m);
        int64_t want = rank_bareiss(mq);
        CHECK(matrix_rank(q, sr, cols) == want);
        CHECK(matrix_rank_dense(q, sr, cols) == want);
        CHECK(matrix_rank_sparse(q, sr, cols) == want);

        RowSpan span(q);
        for (auto& r : sr) span.insert(r);
        CHECK(span.rank() == want);
        if (rows >= 2) {
            SparseRow sum;
            std::map<uint32_t, Scalar> acc;
            for (auto& [c, v] : sr[0]) acc[c] = q.add(acc.count(c) ? acc[c] : q.zero(), v);
            for (auto& [c, v] : sr[1]) acc[c] = q.add(acc.count(c) ? acc[c] : q.zero(), q.mul(v, q.from_int(3)));
            for (auto& [c, v] : acc)
                if (!q.is_zero(v)) sum.emplace_back(c, v);
            CHECK(span.contains(sum));
        }
    }
}
