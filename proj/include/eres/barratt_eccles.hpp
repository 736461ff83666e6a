#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "eres/linear.hpp"
#include "eres/simplicial.hpp"

namespace eres {

using Perm = std::vector<int>;  // word (w(1),...,w(r)), values 1..r

Perm perm_identity(int r);
Perm perm_inverse(const Perm& w);
Perm perm_compose_i(const Perm& w, int i, const Perm& v);  // block substitution at value i
std::vector<Perm> all_perms(int r);                          // lexicographic
std::string perm_name(const Perm& w);

struct PermTuple {
    std::vector<Perm> perms;

    int arity() const { return perms.empty() ? 0 : static_cast<int>(perms[0].size()); }
    int degree() const { return static_cast<int>(perms.size()) - 1; }
    bool valid() const;  // same arity, permutations, adjacent distinct
    std::string name() const;
    auto operator<=>(const PermTuple&) const = default;

    static PermTuple unit(int r) { return {{perm_identity(r)}}; }
};

struct Surjection {
    std::vector<int> seq;  // values 1..r, length r+d

    int arity() const;
    int degree() const { return static_cast<int>(seq.size()) - arity(); }
    bool valid() const;
    std::string name() const;
    auto operator<=>(const Surjection&) const = default;
};

using OperadElement = std::map<PermTuple, Scalar>;
using SurjElement = std::map<Surjection, Scalar>;
using ChainTensor = std::vector<SimplexFace>;  // r-fold tensor of faces
using ChainTensorElement = std::map<ChainTensor, Scalar>;

// ---- explicit operations on basis elements ------------------------------------

std::vector<PermTuple> be_basis(int r, int d);
// orbit representatives: first entry the identity
std::vector<PermTuple> be_orbit_basis(int r, int d);
OperadElement be_boundary(const Field& f, const PermTuple& x);
PermTuple sigma_act(const PermTuple& x, const Perm& g);
OperadElement be_compose_i(const Field& f, const OperadElement& x, int i, const OperadElement& y);
std::vector<std::pair<PermTuple, PermTuple>> be_coproduct(const PermTuple& x);
SurjElement table_reduction(const Field& f, const PermTuple& x);
SurjElement surjection_boundary(const Field& f, const Surjection& u);
ChainTensorElement interval_cut_action(const Field& f, const Surjection& u, const SimplexFace& c);
ChainTensorElement be_coaction(const Field& f, const OperadElement& x, const SimplexFace& c);
int be_augmentation(const PermTuple& x);

OperadElement operad_boundary(const Field& f, const OperadElement& x);
ChainTensorElement tensor_boundary(const Field& f, const ChainTensorElement& t);

// ---- interned engine -----------------------------------------------------------

using LabelId = uint32_t;
using SignedLabels = std::vector<std::pair<LabelId, int>>;  // coefficients ±1 (or multiplicities)

// Face tuple relative to a simplex [0..m]: one vertex bitmask per slot.
using MaskTuple = std::vector<uint32_t>;

// Process-wide interning of Barratt–Eccles basis elements with cached
// structure maps. Not thread safe.
class Labels {
public:
    static Labels& get();

    LabelId intern(const PermTuple& x);
    const PermTuple& tuple(LabelId id) const { return data_[id].tuple; }
    int arity(LabelId id) const { return data_[id].arity; }
    int degree(LabelId id) const { return data_[id].degree; }
    const std::string& name(LabelId id);
    LabelId unit(int r);

    // Canonical representative x·w0^{-1} where w0 is the first entry of x.
    LabelId canonical(LabelId id);
    const Perm& first(LabelId id) const { return data_[id].tuple.perms[0]; }
    bool is_canonical(LabelId id);

    const SignedLabels& boundary(LabelId id);
    const SignedLabels& compose(LabelId x, int i, LabelId y);
    // γ(π; ν_1..ν_r) = (..((π ∘_r ν_r) ∘_{r-1} ν_{r-1}) ..) ∘_1 ν_1 (no argument signs)
    const SignedLabels& gamma(LabelId pi, const std::vector<LabelId>& nus);
    LabelId front(LabelId x, int i);  // (x_0..x_i)
    LabelId back(LabelId x, int i);   // (x_i..x_d)
    // ρ(x ⊗ [0..m]) as slot masks with integer coefficients.
    const std::vector<std::pair<MaskTuple, int>>& coaction(LabelId x, int m);

    size_t size() const { return data_.size(); }

private:
    struct Entry {
        PermTuple tuple;
        int arity = 0, degree = 0;
        std::string name;
        int64_t canon = -1;
        bool has_boundary = false;
        SignedLabels bd;
    };
    std::deque<Entry> data_;
    std::map<PermTuple, LabelId> index_;
    std::unordered_map<uint64_t, SignedLabels> compose_cache_;
    std::map<std::vector<LabelId>, SignedLabels> gamma_cache_;
    std::map<std::pair<LabelId, int>, std::vector<std::pair<MaskTuple, int>>> coaction_cache_;
    std::vector<int64_t> unit_;
};

}  // namespace eres
