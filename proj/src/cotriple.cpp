#include "eres/cotriple.hpp"

#include <algorithm>
#include <stdexcept>

namespace eres {

Resolution::Resolution(AlgebraModel& A, bool commutative) : A_(A), com_(commutative) {
    auto deg = [this](Id t) { return trees_[t].degree; };
    auto nm = [this](Id t) { return name(t); };
    nodes_ = std::make_unique<FreeAlgebra>(A_.field(), deg, nm, com_);
    res_ = std::make_unique<FreeAlgebra>(A_.field(), deg, nm, com_);
}

TreeId Resolution::add_tree(TreeNode node) {
    trees_.push_back(node);
    return static_cast<TreeId>(trees_.size() - 1);
}

TreeId Resolution::leaf(Id a) {
    auto it = leaf_index_.find(a);
    if (it != leaf_index_.end()) return it->second;
    TreeNode n;
    n.level = 0;
    n.degree = A_.degree(a);
    n.leaf = a;
    TreeId t = add_tree(n);
    leaf_index_.emplace(a, t);
    return t;
}

TreeId Resolution::from_node_mono(Id m) {
    auto it = mono_index_.find(m);
    if (it != mono_index_.end()) return it->second;
    const Mono& mo = nodes_->mono(m);
    TreeNode n;
    n.level = trees_[mo.args[0]].level + 1;
    n.degree = mo.degree;
    n.mono = m;
    uint32_t below = 0;
    for (Id c : mo.args) {
        if (trees_[c].level != n.level - 1) throw std::logic_error("tree children on mixed levels");
        below |= trees_[c].branching;
    }
    n.branching = (mo.args.size() >= 2 ? 1u : 0u) | (below << 1);
    TreeId t = add_tree(n);
    mono_index_.emplace(m, t);
    return t;
}

std::pair<TreeId, Scalar> Resolution::node(LabelId label, const std::vector<TreeId>& children) {
    auto [m, s] = nodes_->canonical(label, children);
    if (field().is_zero(s)) return {0, s};
    return {from_node_mono(m), s};
}

LabelId Resolution::label(TreeId t) const { return nodes_->mono(trees_[t].mono).label; }

const std::vector<TreeId>& Resolution::children(TreeId t) const { return nodes_->mono(trees_[t].mono).args; }

bool Resolution::normalized(TreeId t) const {
    const TreeNode& n = trees_[t];
    return n.branching == (n.level == 0 ? 0u : (1u << n.level) - 1);
}

std::string Resolution::name(TreeId t) const {
    const TreeNode& n = trees_[t];
    if (n.level == 0) return A_.name(n.leaf);
    const Mono& mo = nodes_->mono(n.mono);
    std::string s = Labels::get().name(mo.label) + "[";
    for (size_t k = 0; k < mo.args.size(); ++k) {
        if (k) s += ",";
        s += name(mo.args[k]);
    }
    return s + "]";
}

const Lin<Id>& Resolution::lifted_differential(TreeId t) {
    auto it = lifted_cache_.find(t);
    if (it != lifted_cache_.end()) return it->second;
    Lin<Id> out;
    for (auto& [u, c] : tree_differential(t)) out.emplace_back(nodes_->generator(u), c);
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return lifted_cache_.emplace(t, std::move(out)).first->second;
}

const Lin<TreeId>& Resolution::tree_differential(TreeId t) {
    auto it = diff_cache_.find(t);
    if (it != diff_cache_.end()) return it->second;
    const Field& f = field();
    Accum<TreeId> acc(f);
    if (trees_[t].level == 0) {
        for (auto& [b, c] : A_.diff(trees_[t].leaf)) acc.add(leaf(b), c);
    } else {
        for (Id c : children(t)) lifted_differential(c);
        Lin<Id> d = nodes_->differential(trees_[t].mono, [this](Id c) -> const Lin<Id>& { return lifted_differential(c); });
        for (auto& [m, c] : d) acc.add(from_node_mono(m), c);
    }
    return diff_cache_.emplace(t, acc.take()).first->second;
}

const Lin<TreeId>& Resolution::tree_face(TreeId t, int j) {
    uint64_t key = (static_cast<uint64_t>(t) << 8) | static_cast<uint64_t>(j);
    auto it = face_cache_.find(key);
    if (it != face_cache_.end()) return it->second;
    const Field& f = field();
    int n = trees_[t].level;
    if (j < 1 || j > n) throw std::out_of_range("tree face index out of range");
    Accum<TreeId> acc(f);
    const Mono mo = nodes_->mono(trees_[t].mono);
    if (j == 1 && n == 1) {
        std::vector<Id> leaves;
        for (TreeId c : mo.args) leaves.push_back(trees_[c].leaf);
        for (auto& [a, c] : A_.act(mo.label, leaves)) acc.add(leaf(a), c);
    } else if (j == 1) {
        std::vector<Id> child_monos;
        for (TreeId c : mo.args) child_monos.push_back(trees_[c].mono);
        Accum<Id> macc(f);
        nodes_->act_monos_into(macc, mo.label, child_monos, f.one());
        for (auto& [m, c] : macc.take()) acc.add(from_node_mono(m), c);
    } else {
        std::vector<Lin<TreeId>> faces;
        for (TreeId c : mo.args) faces.push_back(tree_face(c, j - 1));
        for (auto& fc : faces)
            if (fc.empty()) return face_cache_.emplace(key, Lin<TreeId>{}).first->second;
        size_t r = faces.size();
        std::vector<size_t> idx(r, 0);
        std::vector<TreeId> kids(r);
        while (true) {
            Scalar c = f.one();
            for (size_t k = 0; k < r; ++k) {
                kids[k] = faces[k][idx[k]].first;
                c = f.mul(c, faces[k][idx[k]].second);
            }
            auto [u, s] = node(mo.label, kids);
            acc.add(u, f.mul(c, s));
            size_t k = r;
            bool done = true;
            while (k > 0) {
                --k;
                if (++idx[k] < faces[k].size()) {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
            if (done) break;
        }
    }
    return face_cache_.emplace(key, acc.take()).first->second;
}

std::pair<TreeId, Scalar> Resolution::tree_degeneracy(TreeId t, int j) {
    uint64_t key = (static_cast<uint64_t>(t) << 8) | static_cast<uint64_t>(j);
    auto it = degeneracy_cache_.find(key);
    if (it != degeneracy_cache_.end()) return it->second;
    int n = trees_[t].level;
    if (j < 0 || j > n) throw std::out_of_range("degeneracy index out of range");
    std::pair<TreeId, Scalar> out;
    if (j == 0) {
        out = node(Labels::get().unit(1), {t});
    } else {
        const Mono mo = nodes_->mono(trees_[t].mono);
        Scalar c = field().one();
        std::vector<TreeId> kids;
        for (TreeId ch : mo.args) {
            auto [u, s] = tree_degeneracy(ch, j - 1);
            kids.push_back(u);
            c = field().mul(c, s);
        }
        auto [u, s] = node(mo.label, kids);
        out = {u, field().mul(c, s)};
    }
    degeneracy_cache_.emplace(key, out);
    return out;
}

std::vector<TreeId> Resolution::tree_basis(int n, int max_degree) {
    auto key = std::make_pair(n, max_degree);
    auto it = basis_cache_.find(key);
    if (it != basis_cache_.end()) return it->second;
    std::vector<TreeId> out;
    if (n == 0) {
        for (Id a : A_.basis_up_to(max_degree)) out.push_back(leaf(a));
    } else {
        std::vector<TreeId> below = tree_basis(n - 1, max_degree);
        for (int d = 1; d <= max_degree; ++d)
            for (Id m : nodes_->basis_window(below, d)) out.push_back(from_node_mono(m));
    }
    basis_cache_.emplace(key, out);
    return out;
}

std::vector<TreeId> Resolution::normalized_tree_basis(int n, int max_degree) {
    std::vector<TreeId> out;
    for (TreeId t : tree_basis(n, max_degree))
        if (normalized(t)) out.push_back(t);
    return out;
}

int Resolution::res_level(Id m) const { return trees_[res_->mono(m).args[0]].level; }

Lin<Id> Resolution::res_face(int j, const Lin<Id>& x) {
    const Field& f = field();
    Accum<Id> acc(f);
    for (auto& [m, c] : x) {
        const Mono mo = res_->mono(m);
        std::vector<Lin<Id>> imgs;
        imgs.reserve(mo.args.size());
        for (TreeId t : mo.args) {
            if (trees_[t].level < 1) throw std::out_of_range("face of a level-0 element");
            if (j == 0) {
                const Mono& tm = nodes_->mono(trees_[t].mono);
                imgs.push_back({{res_->intern(tm.label, tm.args), f.one()}});
            } else {
                Lin<Id> img;
                for (auto& [u, cu] : tree_face(t, j)) img.emplace_back(res_->generator(u), cu);
                std::sort(img.begin(), img.end(), [](auto& a, auto& b) { return a.first < b.first; });
                imgs.push_back(std::move(img));
            }
        }
        std::vector<const Lin<Id>*> ptrs;
        for (auto& v : imgs) ptrs.push_back(&v);
        res_->act_into(acc, mo.label, ptrs, c);
    }
    return acc.take();
}

Lin<Id> Resolution::res_degeneracy(int j, const Lin<Id>& x) {
    const Field& f = field();
    Accum<Id> acc(f);
    for (auto& [m, c] : x) {
        const Mono mo = res_->mono(m);
        std::vector<Lin<Id>> imgs;
        for (TreeId t : mo.args) {
            auto [u, s] = tree_degeneracy(t, j);
            if (f.is_zero(s))
                imgs.push_back({});
            else
                imgs.push_back({{res_->generator(u), s}});
        }
        std::vector<const Lin<Id>*> ptrs;
        for (auto& v : imgs) ptrs.push_back(&v);
        res_->act_into(acc, mo.label, ptrs, c);
    }
    return acc.take();
}

Lin<Id> Resolution::res_operator(const MonotoneMap& u, const Lin<Id>& x) {
    if (!u.valid()) throw std::invalid_argument("invalid monotone map");
    Lin<Id> cur = x;
    // injective part: faces for the vertices of [n] missed by u, largest first
    std::vector<bool> hit(u.target + 1, false);
    for (int v : u.values) hit[v] = true;
    for (int j = u.target; j >= 0; --j)
        if (!hit[j]) cur = res_face(j, cur);
    // surjective part: degeneracies at repeated positions, ascending
    for (int j = 0; j < u.source; ++j)
        if (u.values[j] == u.values[j + 1]) cur = res_degeneracy(j, cur);
    return cur;
}

Lin<Id> Resolution::res_internal_differential(const Lin<Id>& x) {
    Accum<Id> acc(field());
    auto gd = [this](Id t) -> const Lin<Id>& {
        auto it = res_lifted_cache_.find(t);
        if (it != res_lifted_cache_.end()) return it->second;
        Lin<Id> out;
        for (auto& [u, c] : tree_differential(t)) out.emplace_back(res_->generator(u), c);
        std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
        return res_lifted_cache_.emplace(t, std::move(out)).first->second;
    };
    for (auto& [m, c] : x) {
        for (TreeId t : res_->mono(m).args) gd(t);
        acc.add(res_->differential(m, gd), c);
    }
    return acc.take();
}

const Lin<Id>& Resolution::sigma_star(TreeId t, uint32_t mask) {
    uint64_t key = (static_cast<uint64_t>(t) << 16) | mask;
    auto it = sigma_cache_.find(key);
    if (it != sigma_cache_.end()) return it->second;
    int n = trees_[t].level;
    Lin<Id> cur = res_->gen_element(t);
    for (int j = n; j >= 0; --j)
        if (!(mask >> j & 1)) cur = res_face(j, cur);
    return sigma_cache_.emplace(key, std::move(cur)).first->second;
}

Lin<Id> Resolution::augmentation(const Lin<Id>& x) {
    Accum<Id> acc(field());
    for (auto& [m, c] : x) {
        const Mono mo = res_->mono(m);
        std::vector<Id> leaves;
        for (TreeId t : mo.args) {
            if (trees_[t].level != 0) throw std::invalid_argument("augmentation is defined on Res_0 only");
            leaves.push_back(trees_[t].leaf);
        }
        acc.add(A_.act(mo.label, leaves), c);
    }
    return acc.take();
}

std::vector<LatchingRow> Resolution::latching_report(int n, int max_degree) {
    const Field& f = field();
    std::vector<LatchingRow> rows;
    std::vector<TreeId> cn = tree_basis(n, max_degree);
    std::vector<TreeId> below = n > 0 ? tree_basis(n - 1, max_degree) : std::vector<TreeId>{};
    for (int d = 1; d <= max_degree; ++d) {
        LatchingRow row{n, d, 0, 0, 0};
        std::unordered_map<TreeId, uint32_t> col;
        for (TreeId t : cn)
            if (degree(t) == d) {
                col.emplace(t, static_cast<uint32_t>(col.size()));
                ++row.dim_c;
                if (normalized(t)) ++row.dim_n;
            }
        RowSpan span(f);
        for (TreeId t : below) {
            if (degree(t) != d) continue;
            for (int j = 0; j < n; ++j) {
                auto [u, s] = tree_degeneracy(t, j);
                if (f.is_zero(s)) continue;
                auto it = col.find(u);
                if (it == col.end()) throw std::logic_error("degeneracy image outside the tree basis");
                span.insert({{it->second, s}});
            }
        }
        row.dim_l = span.rank();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace eres
