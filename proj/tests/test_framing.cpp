#include <doctest.h>

#include "eres/framing.hpp"

using namespace eres;

namespace {

struct Setup {
    Field q{0};
    FreeAlgebra L{q, [](Id) { return 1; }, [](Id g) { return std::string(1, static_cast<char>('a' + g)); }};
    FramedAlgebra F{q, [](Id) { return 1; }, [](Id g) { return std::string(1, static_cast<char>('a' + g)); }};
    LabelId e2 = Labels::get().unit(2);

    Lin<Id> pair(const Lin<Id>& u, const Lin<Id>& v) { return F.algebra().act(e2, {&u, &v}); }
};

}  // namespace

TEST_CASE("f-sharp") {
    Setup s;
    const Field& q = s.q;
    Lin<Id> a = s.L.gen_element(0), b = s.L.gen_element(1);
    // weight one: f ⊗ id on the face
    CHECK(f_sharp(s.L, a, 2, 0b101, s.F) == s.F.element(0, 2, 0b101));
    CHECK(f_sharp(s.L, {}, 1, 0b11, s.F).empty());
    // e₂(a, b) on [01]: Δ(e₂) = e₂ ⊗ e₂, then [0]⊗[01] + [01]⊗[1], with a
    // Koszul sign where the face [01] moves past b
    Lin<Id> ab = s.L.act(s.e2, {&a, &b});
    Lin<Id> want = lin_add(q, s.pair(s.F.element(0, 1, 0b01), s.F.element(1, 1, 0b11)),
                           s.pair(s.F.element(0, 1, 0b11), s.F.element(1, 1, 0b10)), q.from_int(-1));
    CHECK(f_sharp(s.L, ab, 1, 0b11, s.F) == want);
    // on a vertex the face factors are all that vertex
    CHECK(f_sharp(s.L, ab, 1, 0b10, s.F) == s.pair(s.F.element(0, 1, 0b10), s.F.element(1, 1, 0b10)));
}

TEST_CASE("cosimplicial structure maps") {
    Setup s;
    Lin<Id> a01 = s.F.element(0, 1, 0b11);
    CHECK(frame_structure_map(s.F, MonotoneMap::coface(2, 1), a01) == s.F.element(0, 2, 0b101));
    CHECK(frame_structure_map(s.F, MonotoneMap::codegeneracy(0, 0), a01).empty());
    Lin<Id> x = s.pair(s.F.element(0, 1, 0b01), s.F.element(1, 1, 0b11));
    CHECK(frame_structure_map(s.F, MonotoneMap::coface(2, 0), x) ==
          s.pair(s.F.element(0, 2, 0b010), s.F.element(1, 2, 0b110)));
    CHECK(frame_structure_map(s.F, MonotoneMap::identity(1), x) == x);
    // chain maps and functoriality on a weight-two window over Δ²
    auto zero_diff = [](Id) { return Lin<Id>{}; };
    for (uint32_t m1 = 1; m1 < 8; ++m1)
        for (uint32_t m2 = 1; m2 < 8; ++m2) {
            Lin<Id> y = s.pair(s.F.element(0, 2, m1), s.F.element(1, 2, m2));
            for (int k = 0; k <= 3; ++k)
                for (auto& u : MonotoneMap::all(2, k)) {
                    Lin<Id> uy = frame_structure_map(s.F, u, y);
                    CHECK(s.F.differential(uy, zero_diff) == frame_structure_map(s.F, u, s.F.differential(y, zero_diff)));
                    for (auto& v : MonotoneMap::all(k, 1))
                        CHECK(frame_structure_map(s.F, v, uy) == frame_structure_map(s.F, MonotoneMap::compose(v, u), y));
                }
        }
}

TEST_CASE("frame_map") {
    Setup s;
    const Field& q = s.q;
    Lin<Id> a = s.L.gen_element(0), b = s.L.gen_element(1);
    std::vector<Lin<Id>> shear{lin_add(q, a, b, q.one()), b};
    auto f = [&](Id g) { return shear[g]; };
    auto id = [&](Id g) { return s.L.gen_element(g); };
    // over Δ⁰ the framing is inert: φ_f(e₂(a, b)) = e₂(a, b) + e₂(b, b)
    Lin<Id> x0 = s.pair(s.F.element(0, 0, 1), s.F.element(1, 0, 1));
    Lin<Id> want0 = lin_add(q, x0, s.pair(s.F.element(1, 0, 1), s.F.element(1, 0, 1)), q.one());
    CHECK(frame_map(s.F, f, s.L, s.F, x0) == want0);
    for (uint32_t m1 = 1; m1 < 4; ++m1)
        for (uint32_t m2 = 1; m2 < 4; ++m2) {
            Lin<Id> x = s.pair(s.F.element(0, 1, m1), s.F.element(1, 1, m2));
            CHECK(frame_map(s.F, id, s.L, s.F, x) == x);
            // (φ_f ⊗ Δ¹)(φ_f ⊗ Δ¹) = φ_{φ_f f} ⊗ Δ¹
            auto ff = [&](Id g) { return extend_morphism(s.L, s.L, [&](Id h) -> const Lin<Id>& { return shear[h]; }, shear[g]); };
            CHECK(frame_map(s.F, f, s.L, s.F, frame_map(s.F, f, s.L, s.F, x)) == frame_map(s.F, ff, s.L, s.F, x));
        }
}

TEST_CASE("adjunction on cochain-valued maps") {
    Field q(0);
    FiniteChainComplex K, B;
    K.module.basis = {{"k", 0}};
    K.module.lo = 0;
    K.module.hi = 0;
    B.module.basis = {{"b0", 0}, {"b1", 1}};
    B.module.lo = 0;
    B.module.hi = 1;
    DgElement db;
    db.degree = 0;
    db.add(q, "b0", q.one());
    B.differential["b1"] = db;

    CochainValuedMap m;
    m.n = 1;
    m.images["k"][{"b1", {0, 1}}] = q.from_int(3);
    auto t = transpose(q, K, m);
    CHECK(t.images.at({"k", {0, 1}}).terms.at("b1") == q.from_int(3));
    CHECK(t.images.at({"k", {0}}).zero());
    auto v = adjoint_roundtrip(q, K, B, m);
    CHECK(v.roundtrip);
    CHECK(v.differential);

    // Δ⁰: the plain adjunction, k ↦ b0 ⊗ [0]*
    CochainValuedMap p;
    p.n = 0;
    p.images["k"][{"b0", {0}}] = q.one();
    CHECK(transpose(q, K, p).images.at({"k", {0}}).terms.at("b0") == q.one());
    CHECK(adjoint_roundtrip(q, K, B, p).ok());
}
