#pragma once

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "eres/free_algebra.hpp"
#include "eres/simplicial.hpp"

namespace eres {

// Framed generator b ⊗ σ, σ a face of Δ^n given by a vertex mask.
struct FramedGen {
    Id base;
    int n;
    uint32_t mask;
};

// Ε(K ⊗ N_*(Δ^n)) over all n at once: generators are framed generators whose
// bases are the generators of K.
class FramedAlgebra {
public:
    using DegreeFn = std::function<int(Id)>;
    using NameFn = std::function<std::string(Id)>;

    FramedAlgebra(const Field& f, DegreeFn base_degree, NameFn base_name, bool commutative = false);

    Id framed(Id base, int n, uint32_t mask);
    const FramedGen& gen(Id g) const { return gens_[g]; }
    int degree(Id g) const;
    std::string gen_name(Id g) const;
    size_t gen_count() const { return gens_.size(); }
    FreeAlgebra& algebra() { return *alg_; }
    const Field& field() const { return f_; }
    Lin<Id> element(Id base, int n, uint32_t mask) { return alg_->gen_element(framed(base, n, mask)); }

    // δ(b ⊗ σ) = δb ⊗ σ + (-1)^{|b|} b ⊗ ∂σ, extended as a derivation.
    Lin<Id> differential(const Lin<Id>& x, const std::function<Lin<Id>(Id)>& base_diff);

    std::string element_name(const Lin<Id>& x);

private:
    Field f_;
    DegreeFn base_degree_;
    NameFn base_name_;
    std::deque<FramedGen> gens_;
    std::map<std::tuple<Id, int, uint32_t>, Id> index_;
    std::unique_ptr<FreeAlgebra> alg_;
};

// Δ_*ρ_* for π ∈ E(r) on arguments of the given degrees over an m-simplex:
// emits (outer label, face masks relative to [m], coefficient) with the
// interchange signs of moving the face factors past the arguments. In the
// commutative case e_r is lifted to the symmetrization of E(r)_0.
using FaceEmit = std::function<void(LabelId, const MaskTuple&, Scalar)>;
void distribute_faces(const Field& f, LabelId pi, const std::vector<int>& degs, int m, bool commutative, Scalar a,
                      const FaceEmit& emit);

// Sub-face of σ picked by a mask relative to the vertices of σ.
uint32_t subface_mask(uint32_t sigma, uint32_t relative);

// f^♯(b ⊗ σ) where value = f(b) ∈ Ε(L): split labels by the coproduct, let the
// back factor coact on σ and distribute the face factors onto the arguments.
Lin<Id> f_sharp(FreeAlgebra& src, const Lin<Id>& value, int n, uint32_t mask, FramedAlgebra& dst);

// φ_f ⊗ Δ^n on an element of the framed algebra over K; f gives the images of
// the generators of K in Ε(L) (the algebra `target` of dst's bases).
Lin<Id> frame_map(FramedAlgebra& src, const std::function<Lin<Id>(Id)>& f, FreeAlgebra& target, FramedAlgebra& dst,
                  const Lin<Id>& x);

// u_*: A ⊗ Δ^k → A ⊗ Δ^n for u: [k] → [n], pushforward on the faces.
Lin<Id> frame_structure_map(FramedAlgebra& alg, const MonotoneMap& u, const Lin<Id>& x);

// ---- the framing adjunction at the dg level -----------------------------------

// A dg-module map f: K → B ⊗ N^*(Δ^n), stored as images b ⊗ σ^* of K's basis.
struct CochainValuedMap {
    int n = 0;
    // basis name of K -> (basis name of B, face of Δ^n) -> coefficient
    std::map<std::string, std::map<std::pair<std::string, std::vector<int>>, Scalar>> images;
};
// Its transpose K ⊗ N_*(Δ^n) → B, keyed by "k ⊗ [face]".
struct ChainTransposedMap {
    int n = 0;
    std::map<std::pair<std::string, std::vector<int>>, DgElement> images;
};

ChainTransposedMap transpose(const Field& f, const FiniteChainComplex& K, const CochainValuedMap& m);
CochainValuedMap transpose_back(const Field& f, const FiniteChainComplex& K, const FiniteChainComplex& B,
                                const ChainTransposedMap& t);

struct AdjointVerdict {
    bool roundtrip = false;     // transpose_back(transpose(f)) == f
    bool differential = false;  // the transpose commutes with the Hom differentials
    std::string detail;
    bool ok() const { return roundtrip && differential; }
};
AdjointVerdict adjoint_roundtrip(const Field& f, const FiniteChainComplex& K, const FiniteChainComplex& B,
                                 const CochainValuedMap& m);

}  // namespace eres
