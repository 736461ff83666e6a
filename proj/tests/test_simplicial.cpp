#include <doctest.h>

#include "eres/simplicial.hpp"

using namespace eres;

namespace {

SimplexFace face(int n, std::vector<int> v) { return {n, std::move(v)}; }

DgElement named(const Field& f, int degree, std::initializer_list<std::pair<const char*, int>> terms) {
    DgElement e;
    e.degree = degree;
    for (auto& [n, c] : terms) e.add(f, n, f.from_int(c));
    return e;
}

// ∂ then push along u, versus push then ∂, as named elements.
DgElement push_element(const Field& f, const MonotoneMap& u, const DgElement& e) {
    DgElement out;
    out.degree = e.degree;
    for (auto& [name, c] : e.terms) {
        std::vector<int> v;
        for (char ch : name)
            if (ch >= '0' && ch <= '9') v.push_back(ch - '0');
        for (auto& [n2, c2] : pushforward(f, u, face(u.source, v)).terms) out.add(f, n2, f.mul(c, c2));
    }
    return out;
}

}  // namespace

TEST_CASE("face bases") {
    CHECK(face_basis(1, 0) == std::vector<SimplexFace>{face(1, {0}), face(1, {1})});
    CHECK(face_basis(2, 1) == std::vector<SimplexFace>{face(2, {0, 1}), face(2, {0, 2}), face(2, {1, 2})});
    CHECK(face_basis(3, 2).size() == 4);
    for (int n = 0; n <= 4; ++n) {
        size_t total = 0;
        for (int m = 0; m <= n; ++m) total += face_basis(n, m).size();
        CHECK(total == (size_t(1) << (n + 1)) - 1);
    }
    SimplexFace s = face(3, {0, 2, 3});
    CHECK(SimplexFace::from_mask(3, s.mask()) == s);
}

TEST_CASE("simplicial boundary") {
    Field q(0), f3(3);
    CHECK(boundary(q, face(1, {0, 1})) == named(q, 0, {{"[1]", 1}, {"[0]", -1}}));
    CHECK(boundary(q, face(2, {0, 1, 2})) == named(q, 1, {{"[12]", 1}, {"[02]", -1}, {"[01]", 1}}));
    for (const Field* f : {&q, &f3}) {
        for (int n = 1; n <= 4; ++n) {
            DgElement dd;
            for (auto& [t, c] : boundary_terms(SimplexFace::full(n)))
                for (auto& [t2, c2] : boundary_terms(t)) dd.add(*f, t2.name(), f->from_int(c * c2));
            CHECK(dd.zero());
        }
    }
}

TEST_CASE("cosimplicial maps on chains") {
    Field q(0);
    CHECK(pushforward(q, MonotoneMap::codegeneracy(0, 0), face(1, {0, 1})).zero());
    CHECK(pushforward(q, MonotoneMap::coface(2, 1), face(1, {0, 1})) == named(q, 1, {{"[02]", 1}}));
    auto id = MonotoneMap::identity(2);
    for (auto& s : face_basis(2, 1)) CHECK(pushforward(q, id, s) == named(q, 1, {{s.name().c_str(), 1}}));

    // every monotone map induces a chain map on normalized chains
    for (int k = 0; k <= 3; ++k)
        for (int n = 0; n <= 3; ++n)
            for (auto& u : MonotoneMap::all(k, n))
                for (int m = 1; m <= k; ++m)
                    for (auto& s : face_basis(k, m)) {
                        DgElement lhs = push_element(q, u, boundary(q, s));
                        DgElement pushed = pushforward(q, u, s), rhs;
                        rhs.degree = m - 1;
                        for (auto& [name, c] : pushed.terms) {
                            std::vector<int> v;
                            for (char ch : name)
                                if (ch >= '0' && ch <= '9') v.push_back(ch - '0');
                            for (auto& [n2, c2] : boundary(q, face(n, v)).terms) rhs.add(q, n2, q.mul(c, c2));
                        }
                        CHECK(lhs == rhs);
                    }
}

TEST_CASE("cosimplicial identities of monotone maps") {
    using M = MonotoneMap;
    for (int n = 1; n <= 4; ++n) {
        for (int i = 0; i <= n + 1; ++i)
            for (int j = 0; j < i; ++j)
                CHECK(M::compose(M::coface(n + 1, i), M::coface(n, j)) ==
                      M::compose(M::coface(n + 1, j), M::coface(n, i - 1)));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= i; ++j)
                CHECK(M::compose(M::codegeneracy(n, j), M::codegeneracy(n + 1, i + 1)) ==
                      M::compose(M::codegeneracy(n, i), M::codegeneracy(n + 1, j)));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i <= n; ++i) {
                auto lhs = M::compose(M::codegeneracy(n - 1, j), M::coface(n, i));
                if (i == j || i == j + 1)
                    CHECK(lhs == M::identity(n - 1));
                else if (i < j)
                    CHECK(lhs == M::compose(M::coface(n - 1, i), M::codegeneracy(n - 2, j - 1)));
                else
                    CHECK(lhs == M::compose(M::coface(n - 1, i - 1), M::codegeneracy(n - 2, j)));
            }
    }
    size_t count = 0;
    for (auto& u : M::all(2, 3)) {
        CHECK(u.valid());
        ++count;
    }
    CHECK(count == 20);  // C(3 + 3, 3)
}

TEST_CASE("Alexander-Whitney diagonal") {
    Field q(0);
    CHECK(aw_diagonal(q, face(0, {0})) == named(q, 0, {{"[0] ⊗ [0]", 1}}));
    CHECK(aw_diagonal(q, face(1, {0, 1})) == named(q, 1, {{"[0] ⊗ [01]", 1}, {"[01] ⊗ [1]", 1}}));
    CHECK(aw_diagonal(q, face(2, {0, 1, 2})) ==
          named(q, 2, {{"[0] ⊗ [012]", 1}, {"[01] ⊗ [12]", 1}, {"[012] ⊗ [2]", 1}}));
}

TEST_CASE("trace pairing") {
    Field q(0);
    CHECK(trace_pairing(q, 0) == named(q, 0, {{"[0] ⊗ [0]*", 1}}));
    CHECK(trace_pairing(q, 1) == named(q, 0, {{"[0] ⊗ [0]*", 1}, {"[1] ⊗ [1]*", 1}, {"[01] ⊗ [01]*", 1}}));
    CHECK(trace_pairing(q, 2).terms.size() == 7);

    // δ on cochains is dual to ∂ up to the sign (-1)^{p+1}
    for (int n = 1; n <= 3; ++n)
        for (int p = 0; p < n; ++p)
            for (auto& s : face_basis(n, p)) {
                CochainElement a{n, p, {{s.vertices, q.one()}}};
                CochainElement da = cochain_differential(q, a);
                for (auto& t : face_basis(n, p + 1)) {
                    Scalar coeff = q.zero();
                    for (auto& [b, c] : boundary_terms(t))
                        if (b == s) coeff = q.from_int(c);
                    CHECK(evaluate_cochain(q, da, t) == q.mul(q.sign(p + 1), coeff));
                }
            }
}
