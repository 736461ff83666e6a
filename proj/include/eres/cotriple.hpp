#pragma once

#include <deque>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "eres/free_algebra.hpp"
#include "eres/simplicial.hpp"

namespace eres {

using TreeId = uint32_t;

// Level tree: level 0 trees are basis elements of A; a level n tree is a
// canonical monomial of Ε(C_{n-1}) (root = level 1).
struct TreeNode {
    int level = 0;
    int degree = 0;
    Id leaf = 0;           // level 0: basis element of A
    Id mono = 0;           // level >= 1: monomial id in the node algebra
    uint32_t branching = 0;  // bit l-1 set when level l has a vertex of arity >= 2
};

struct LatchingRow {
    int level, degree;
    int64_t dim_c, dim_l, dim_n;
    bool ok() const { return dim_l + dim_n == dim_c; }
};

// The cotriple resolution Res_n(A) = Ε(C_n(A)) with its simplicial structure.
// In commutative mode the trees carry Com labels and Ε is replaced by Sym.
class Resolution {
public:
    Resolution(AlgebraModel& A, bool commutative = false);

    AlgebraModel& algebra() { return A_; }
    const Field& field() const { return A_.field(); }
    bool commutative() const { return com_; }

    TreeId leaf(Id a);
    TreeId from_node_mono(Id m);  // node monomial -> tree
    // ±tree for a (label; children) pair, canonicalized (coefficient 0 if it vanishes)
    std::pair<TreeId, Scalar> node(LabelId label, const std::vector<TreeId>& children);

    const TreeNode& tree(TreeId t) const { return trees_[t]; }
    int level(TreeId t) const { return trees_[t].level; }
    int degree(TreeId t) const { return trees_[t].degree; }
    LabelId label(TreeId t) const;
    const std::vector<TreeId>& children(TreeId t) const;
    bool normalized(TreeId t) const;
    std::string name(TreeId t) const;
    size_t tree_count() const { return trees_.size(); }

    // internal differential of C_n(A)
    const Lin<TreeId>& tree_differential(TreeId t);
    // face d_j on generators, 1 <= j <= level: values in C_{n-1}
    const Lin<TreeId>& tree_face(TreeId t, int j);
    std::pair<TreeId, Scalar> tree_degeneracy(TreeId t, int j);  // 0 <= j <= level

    // canonical basis of C_n(A) with tree degree <= max_degree
    std::vector<TreeId> tree_basis(int n, int max_degree);
    std::vector<TreeId> normalized_tree_basis(int n, int max_degree);

    // Res algebra: Ε(trees) with tree degrees.
    FreeAlgebra& res() { return *res_; }
    int res_level(Id m) const;
    Lin<Id> res_face(int j, const Lin<Id>& x);
    Lin<Id> res_degeneracy(int j, const Lin<Id>& x);
    // u^*: Res_n -> Res_k for u: [k] -> [n]
    Lin<Id> res_operator(const MonotoneMap& u, const Lin<Id>& x);
    Lin<Id> res_internal_differential(const Lin<Id>& x);
    // σ^*(t) for the face σ of Δ^n given by a vertex mask (cached)
    const Lin<Id>& sigma_star(TreeId t, uint32_t mask);
    // Res_0 = Ε(A) -> A
    Lin<Id> augmentation(const Lin<Id>& x);

    std::vector<LatchingRow> latching_report(int n, int max_degree);

private:
    TreeId add_tree(TreeNode node);
    const Lin<Id>& lifted_differential(TreeId t);  // δt as weight-one elements of nodes_

    AlgebraModel& A_;
    bool com_;
    std::deque<TreeNode> trees_;
    std::unordered_map<Id, TreeId> leaf_index_;
    std::unordered_map<Id, TreeId> mono_index_;
    std::unique_ptr<FreeAlgebra> nodes_;  // generators: trees
    std::unique_ptr<FreeAlgebra> res_;    // generators: trees
    std::unordered_map<TreeId, Lin<TreeId>> diff_cache_;
    std::unordered_map<TreeId, Lin<Id>> lifted_cache_;
    std::unordered_map<TreeId, Lin<Id>> res_lifted_cache_;
    std::unordered_map<uint64_t, Lin<TreeId>> face_cache_;
    std::unordered_map<uint64_t, std::pair<TreeId, Scalar>> degeneracy_cache_;
    std::unordered_map<uint64_t, Lin<Id>> sigma_cache_;
    std::map<std::pair<int, int>, std::vector<TreeId>> basis_cache_;
};

}  // namespace eres
