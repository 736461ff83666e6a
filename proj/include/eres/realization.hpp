#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "eres/cotriple.hpp"
#include "eres/framing.hpp"
#include "eres/report.hpp"

namespace eres {

enum class OperadMode { E, EUnitary, Com };

struct ModeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OperadMode parse_mode(const std::string& s);
std::string mode_name(OperadMode m);

// Quasi-free model (Ε(N_*C_•(A)), D) on the degree window [1, max_degree].
// Generators are normalized trees ξ of level n, model degree |ξ| + n.
class QuasiFreeModel {
public:
    QuasiFreeModel(AlgebraModel& A, OperadMode mode, int max_degree);

    OperadMode mode() const { return mode_; }
    bool commutative() const { return mode_ == OperadMode::Com; }
    int max_degree() const { return max_degree_; }
    const Field& field() const { return A_.field(); }
    AlgebraModel& algebra() { return A_; }
    Resolution& resolution() { return *res_; }
    FreeAlgebra& free() { return *free_; }

    // sorted by (degree, level, tree expression)
    const std::vector<TreeId>& generators() const { return gens_; }
    int gen_degree(TreeId t) const { return res_->degree(t) + res_->level(t); }
    std::string gen_name(TreeId t) const;
    int max_level() const { return max_level_; }

    // ψ(ξ ⊗ [σ]) for the face σ of Δ^n given by a vertex mask
    const Lin<Id>& psi(TreeId t, uint32_t mask);
    // ∂[ξ]: the reduction of ξ ⊗ d_0[i_n]
    Lin<Id> twisting(TreeId t);
    // [δξ] + Σ_{i≥1} faces + ∂, on generators
    const Lin<Id>& differential(TreeId t);
    // D on arbitrary elements (derivation)
    Lin<Id> differential_of(const Lin<Id>& x);
    Lin<Id> differential_mono(Id m);

    // model monomials of degree d (d <= max_degree)
    const std::vector<Id>& basis_in(int d);
    // generators g with D²g != 0
    std::vector<TreeId> dd_failures();
    // H_d for 1 <= d <= validUpTo (validUpTo < max_degree)
    std::vector<std::pair<int, int64_t>> homology(int validUpTo);

    // ε: model → A on an element; level ≥ 1 generators go to 0
    Lin<Id> augmentation(const Lin<Id>& x);

    std::string element_name(const Lin<Id>& x);
    std::string dump();

private:
    AlgebraModel& A_;
    OperadMode mode_;
    int max_degree_;
    int max_level_ = 0;
    std::unique_ptr<Resolution> res_;
    std::unique_ptr<FreeAlgebra> free_;
    std::vector<TreeId> gens_;
    std::unordered_map<TreeId, int> gen_index_;
    std::unordered_map<uint64_t, Lin<Id>> psi_cache_;
    std::unordered_map<TreeId, Lin<Id>> diff_cache_;
    std::unordered_map<Id, Lin<Id>> mono_diff_cache_;
    std::map<int, std::vector<Id>> basis_cache_;
};

struct HomologyRow {
    int degree;
    int64_t model, target;
    bool ok() const { return model == target; }
};
struct HomologyReport {
    std::vector<HomologyRow> rows;
    int valid_up_to = 0;
    std::vector<std::string> notes;
    bool ok() const;
    std::string format() const;
};

// Homology of the model against H_*(A) through degree D-1.
HomologyReport verify_resolution(const AlgebraPresentation& p, OperadMode mode, int max_degree);

// ε∘D = d_A∘ε on every model basis element of the window.
CheckReport model_augmentation(QuasiFreeModel& M);

// ⊕_{n≤N} Ε(C_n ⊗ N_*(Δ^n)) modulo the coend relations, degree-wise.
class CoendSkeleton {
public:
    CoendSkeleton(Resolution& res, int N, int max_degree);

    int skeleton() const { return N_; }
    int max_degree() const { return max_degree_; }
    FramedAlgebra& framed() { return *framed_; }
    const std::vector<Id>& generators() const { return gens_; }  // framed generator ids
    const std::vector<Lin<Id>>& relations() const { return relations_; }
    int relation_degree(size_t i) const { return relation_degrees_[i]; }

    const std::vector<Id>& basis_in(int d);
    bool in_ideal(const Lin<Id>& x, int d);
    int64_t ideal_rank(int d);
    int64_t quotient_dim(int d) { return static_cast<int64_t>(basis_in(d).size()) - ideal_rank(d); }
    // δ(ξ ⊗ σ) = δξ ⊗ σ + (-1)^{|ξ|} ξ ⊗ ∂σ
    Lin<Id> differential(const Lin<Id>& x);

private:
    RowSpan& ideal(int d);

    Resolution& res_;
    int N_, max_degree_;
    std::unique_ptr<FramedAlgebra> framed_;
    std::vector<Id> gens_;
    std::vector<Lin<Id>> relations_;
    std::vector<int> relation_degrees_;
    std::map<int, std::vector<Id>> basis_cache_;
    std::map<int, std::unique_ptr<RowSpan>> ideal_cache_;
};

// φ and ψ between the model and the N-skeleton of the coend on degrees ≤ D.
CheckReport compare_model_coend(const AlgebraPresentation& p, int N, int max_degree);

// ε_! of the E-model against the natively built com model (characteristic 0).
CheckReport com_pushforward(const AlgebraPresentation& p, int max_degree);

// dim Res^{E+}_n(A_+) = dim Res^E_n(A) + unit line, per level n ≤ max_level and degree ≤ D.
CheckReport unitize_check(const AlgebraPresentation& p, int max_level, int max_degree);

}  // namespace eres
