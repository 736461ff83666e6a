#include "eres/framing.hpp"

#include <bit>
#include <stdexcept>

namespace eres {

FramedAlgebra::FramedAlgebra(const Field& f, DegreeFn base_degree, NameFn base_name, bool commutative)
    : f_(f), base_degree_(std::move(base_degree)), base_name_(std::move(base_name)) {
    alg_ = std::make_unique<FreeAlgebra>(
        f_, [this](Id g) { return degree(g); }, [this](Id g) { return gen_name(g); }, commutative);
}

Id FramedAlgebra::framed(Id base, int n, uint32_t mask) {
    if (mask == 0 || (mask >> (n + 1)) != 0) throw std::invalid_argument("face mask outside the simplex");
    auto key = std::make_tuple(base, n, mask);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    gens_.push_back({base, n, mask});
    Id g = static_cast<Id>(gens_.size() - 1);
    index_.emplace(key, g);
    return g;
}

int FramedAlgebra::degree(Id g) const { return base_degree_(gens_[g].base) + std::popcount(gens_[g].mask) - 1; }

std::string FramedAlgebra::gen_name(Id g) const {
    const FramedGen& x = gens_[g];
    return base_name_(x.base) + "⊗" + SimplexFace::from_mask(x.n, x.mask).name();
}

Lin<Id> FramedAlgebra::differential(const Lin<Id>& x, const std::function<Lin<Id>(Id)>& base_diff) {
    std::map<Id, Lin<Id>> gd;
    auto gen_diff = [&](Id g) -> const Lin<Id>& {
        auto it = gd.find(g);
        if (it != gd.end()) return it->second;
        FramedGen fg = gens_[g];
        Accum<Id> acc(f_);
        for (auto& [b, c] : base_diff(fg.base)) acc.add(alg_->generator(framed(b, fg.n, fg.mask)), c);
        if (std::popcount(fg.mask) > 1) {
            Scalar s = f_.sign(base_degree_(fg.base));
            int i = 0;
            for (int v = 0; v <= fg.n; ++v) {
                if (!(fg.mask >> v & 1)) continue;
                acc.add(alg_->generator(framed(fg.base, fg.n, fg.mask & ~(1u << v))), f_.mul(s, f_.sign(i)));
                ++i;
            }
        }
        return gd.emplace(g, acc.take()).first->second;
    };
    Accum<Id> acc(f_);
    for (auto& [m, c] : x) {
        for (Id g : alg_->mono(m).args) gen_diff(g);
        acc.add(alg_->differential(m, gen_diff), c);
    }
    return acc.take();
}

std::string FramedAlgebra::element_name(const Lin<Id>& x) {
    DgElement e;
    for (auto& [m, c] : x) e.add(f_, alg_->name(m), c);
    return e.format(f_);
}

void distribute_faces(const Field& f, LabelId pi, const std::vector<int>& degs, int m, bool commutative, Scalar a,
                      const FaceEmit& emit) {
    Labels& L = Labels::get();
    auto cut = [&](LabelId outer, LabelId back, Scalar c) {
        for (auto& [cs, cc] : L.coaction(back, m)) {
            int parity = 0;
            for (size_t i = 0; i < cs.size(); ++i)
                for (size_t j = i + 1; j < cs.size(); ++j) parity += (std::popcount(cs[i]) - 1) * degs[j];
            emit(outer, cs, f.mul(c, f.mul(f.from_int(cc), f.sign(parity))));
        }
    };
    int r = static_cast<int>(degs.size());
    if (commutative) {
        int64_t fact = 1;
        for (int k = 2; k <= r; ++k) fact *= k;
        Scalar c = f.div(a, f.from_int(fact));
        for (const Perm& g : all_perms(r)) cut(L.unit(r), L.intern(PermTuple{{g}}), c);
        return;
    }
    int sumdeg = 0;
    for (int d : degs) sumdeg += d;
    int d = L.degree(pi);
    for (int i = 0; i <= d; ++i) cut(L.front(pi, i), L.back(pi, i), f.mul(a, f.sign((d - i) * sumdeg)));
}

uint32_t subface_mask(uint32_t sigma, uint32_t relative) {
    uint32_t out = 0;
    int k = 0;
    for (int v = 0; v < 32; ++v) {
        if (!(sigma >> v & 1)) continue;
        if (relative >> k & 1) out |= 1u << v;
        ++k;
    }
    return out;
}

Lin<Id> f_sharp(FreeAlgebra& src, const Lin<Id>& value, int n, uint32_t mask, FramedAlgebra& dst) {
    const Field& f = dst.field();
    int m = std::popcount(mask) - 1;
    Accum<Id> acc(f);
    FreeAlgebra& D = dst.algebra();
    for (auto& [mono, a] : value) {
        const Mono mo = src.mono(mono);
        std::vector<int> degs;
        for (Id b : mo.args) degs.push_back(src.gen_degree(b));
        distribute_faces(f, mo.label, degs, m, src.commutative(), a, [&](LabelId outer, const MaskTuple& cs, Scalar c) {
            std::vector<Lin<Id>> elems;
            for (size_t k = 0; k < cs.size(); ++k) elems.push_back(dst.element(mo.args[k], n, subface_mask(mask, cs[k])));
            std::vector<const Lin<Id>*> ptrs;
            for (auto& e : elems) ptrs.push_back(&e);
            D.act_into(acc, outer, ptrs, c);
        });
    }
    return acc.take();
}

Lin<Id> frame_map(FramedAlgebra& src, const std::function<Lin<Id>(Id)>& f, FreeAlgebra& target, FramedAlgebra& dst,
                  const Lin<Id>& x) {
    std::map<Id, Lin<Id>> cache;
    auto img = [&](Id g) -> const Lin<Id>& {
        auto it = cache.find(g);
        if (it != cache.end()) return it->second;
        FramedGen fg = src.gen(g);
        return cache.emplace(g, f_sharp(target, f(fg.base), fg.n, fg.mask, dst)).first->second;
    };
    return extend_morphism(src.algebra(), dst.algebra(), img, x);
}

Lin<Id> frame_structure_map(FramedAlgebra& alg, const MonotoneMap& u, const Lin<Id>& x) {
    if (!u.valid()) throw std::invalid_argument("invalid monotone map");
    std::map<Id, Lin<Id>> cache;
    auto img = [&](Id g) -> const Lin<Id>& {
        auto it = cache.find(g);
        if (it != cache.end()) return it->second;
        FramedGen fg = alg.gen(g);
        if (fg.n != u.source) throw std::invalid_argument("structure map applied over the wrong simplex");
        Lin<Id> out;
        auto face = pushforward_face(u, SimplexFace::from_mask(fg.n, fg.mask));
        if (face) out = alg.element(fg.base, u.target, face->mask());
        return cache.emplace(g, std::move(out)).first->second;
    };
    return extend_morphism(alg.algebra(), alg.algebra(), img, x);
}

// ---- dg-level adjunction ----------------------------------------------------

ChainTransposedMap transpose(const Field& f, const FiniteChainComplex& K, const CochainValuedMap& m) {
    ChainTransposedMap t;
    t.n = m.n;
    for (auto& [k, deg] : K.module.basis) {
        for (int p = 0; p <= m.n; ++p)
            for (const SimplexFace& c : face_basis(m.n, p)) {
                DgElement e;
                e.degree = deg + p;
                auto it = m.images.find(k);
                if (it != m.images.end())
                    for (auto& [bs, coeff] : it->second) {
                        CochainElement beta;
                        beta.ambient = m.n;
                        beta.degree = static_cast<int>(bs.second.size()) - 1;
                        beta.terms[bs.second] = coeff;
                        Scalar v = evaluate_cochain(f, beta, c);
                        if (!f.is_zero(v)) e.add(f, bs.first, v);
                    }
                t.images[{k, c.vertices}] = e;
            }
    }
    return t;
}

CochainValuedMap transpose_back(const Field& f, const FiniteChainComplex& K, const FiniteChainComplex&,
                                const ChainTransposedMap& t) {
    CochainValuedMap m;
    m.n = t.n;
    for (auto& [k, deg] : K.module.basis) {
        (void)deg;
        auto& row = m.images[k];
        for (int p = 0; p <= t.n; ++p)
            for (const SimplexFace& c : face_basis(t.n, p)) {
                auto it = t.images.find({k, c.vertices});
                if (it == t.images.end()) continue;
                // dual basis element c^* pairs to one with c
                for (auto& [b, coeff] : it->second.terms) row[{b, c.vertices}] = f.add(row[{b, c.vertices}], coeff);
            }
        for (auto it = row.begin(); it != row.end();)
            it = f.is_zero(it->second) ? row.erase(it) : std::next(it);
    }
    return m;
}

namespace {

void clean(const Field& f, CochainValuedMap& m) {
    for (auto& [k, row] : m.images)
        for (auto it = row.begin(); it != row.end();)
            it = f.is_zero(it->second) ? row.erase(it) : std::next(it);
    for (auto it = m.images.begin(); it != m.images.end();) it = it->second.empty() ? m.images.erase(it) : std::next(it);
}

DgElement diff_of(const FiniteChainComplex& C, const std::string& b) {
    auto it = C.differential.find(b);
    return it == C.differential.end() ? DgElement{} : it->second;
}

}  // namespace

AdjointVerdict adjoint_roundtrip(const Field& f, const FiniteChainComplex& K, const FiniteChainComplex& B,
                                 const CochainValuedMap& m) {
    AdjointVerdict v;
    ChainTransposedMap t = transpose(f, K, m);
    CochainValuedMap back = transpose_back(f, K, B, t);
    CochainValuedMap orig = m;
    clean(f, orig);
    clean(f, back);
    v.roundtrip = back.images == orig.images;
    if (!v.roundtrip) v.detail = "transpose does not return to the original map";

    // D f = d∘f - f∘d on K → B ⊗ N^*(Δ^n) (f of degree 0)
    CochainValuedMap Df;
    Df.n = m.n;
    for (auto& [k, deg] : K.module.basis) {
        (void)deg;
        auto& row = Df.images[k];
        auto it = m.images.find(k);
        if (it != m.images.end())
            for (auto& [bs, coeff] : it->second) {
                for (auto& [b2, c2] : diff_of(B, bs.first).terms)
                    row[{b2, bs.second}] = f.add(row[{b2, bs.second}], f.mul(coeff, c2));
                CochainElement beta;
                beta.ambient = m.n;
                beta.degree = static_cast<int>(bs.second.size()) - 1;
                beta.terms[bs.second] = f.one();
                Scalar s = f.sign(B.module.degree_of(bs.first));
                for (auto& [face, c3] : cochain_differential(f, beta).terms)
                    row[{bs.first, face}] = f.add(row[{bs.first, face}], f.mul(f.mul(coeff, s), c3));
            }
        for (auto& [k2, c] : diff_of(K, k).terms) {
            auto jt = m.images.find(k2);
            if (jt == m.images.end()) continue;
            for (auto& [bs, coeff] : jt->second) row[bs] = f.sub(row[bs], f.mul(c, coeff));
        }
    }
    clean(f, Df);
    ChainTransposedMap lhs = transpose(f, K, Df);

    // D g = d∘g - g∘d on K ⊗ N_*(Δ^n) → B
    bool same = true;
    for (auto& [key, val] : t.images) {
        (void)val;
        const std::string& k = key.first;
        SimplexFace c{m.n, key.second};
        DgElement e;
        for (auto& [b, coeff] : t.images.at(key).terms)
            for (auto& [b2, c2] : diff_of(B, b).terms) e.add(f, b2, f.mul(coeff, c2));
        for (auto& [k2, c2] : diff_of(K, k).terms)
            for (auto& [b, coeff] : t.images.at({k2, key.second}).terms) e.add(f, b, f.neg(f.mul(c2, coeff)));
        Scalar s = f.neg(f.sign(K.module.degree_of(k)));
        for (auto& [face, c3] : boundary_terms(c))
            for (auto& [b, coeff] : t.images.at({k, face.vertices}).terms) e.add(f, b, f.mul(f.mul(s, f.from_int(c3)), coeff));
        if (!(e.terms == lhs.images.at(key).terms)) {
            same = false;
            if (v.detail.empty()) v.detail = "Hom differential mismatch at " + k + " ⊗ " + c.name();
        }
    }
    v.differential = same;
    return v;
}

}  // namespace eres
