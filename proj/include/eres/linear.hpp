#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eres/coeff.hpp"

namespace eres {

// Linear combination, sorted by key, no zero coefficients.
template <class K>
using Lin = std::vector<std::pair<K, Scalar>>;

template <class K, class Hash = std::hash<K>>
class Accum {
public:
    explicit Accum(const Field& f) : f_(&f) {}
    void add(const K& k, Scalar c) {
        if (f_->is_zero(c)) return;
        auto [it, fresh] = m_.try_emplace(k, c);
        if (!fresh) it->second = f_->add(it->second, c);
    }
    void add(const Lin<K>& v, Scalar c) {
        for (auto& [k, a] : v) add(k, f_->mul(a, c));
    }
    bool empty() const { return m_.empty(); }
    Lin<K> take() {
        Lin<K> out;
        out.reserve(m_.size());
        for (auto& [k, c] : m_)
            if (!f_->is_zero(c)) out.emplace_back(k, c);
        std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
        m_.clear();
        return out;
    }

private:
    const Field* f_;
    std::unordered_map<K, Scalar, Hash> m_;
};

template <class K>
Lin<K> lin_scale(const Field& f, const Lin<K>& v, Scalar c) {
    Lin<K> out;
    if (f.is_zero(c)) return out;
    out.reserve(v.size());
    for (auto& [k, a] : v) out.emplace_back(k, f.mul(a, c));
    return out;
}

template <class K>
Lin<K> lin_add(const Field& f, const Lin<K>& a, const Lin<K>& b, Scalar cb) {
    Lin<K> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Scalar c = f.mul(b[j].second, cb);
            if (!f.is_zero(c)) out.emplace_back(b[j].first, c);
            ++j;
        } else {
            Scalar c = f.add(a[i].second, f.mul(b[j].second, cb));
            if (!f.is_zero(c)) out.emplace_back(a[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

// ---- named-basis plumbing -------------------------------------------------

struct DgElement {
    int degree = 0;
    std::map<std::string, Scalar> terms;

    bool zero() const { return terms.empty(); }
    bool operator==(const DgElement& o) const { return terms == o.terms && (zero() || degree == o.degree); }
    void add(const Field& f, const std::string& name, Scalar c);
    std::string format(const Field& f) const;
};

struct GradedModule {
    std::vector<std::pair<std::string, int>> basis;
    int lo = 0, hi = 0;

    // Throws on duplicate names or degrees outside [lo, hi].
    void validate() const;
    int degree_of(const std::string& name) const;
    std::vector<std::string> in_degree(int d) const;
};

// Basis-wise tensor product; names joined by " ⊗ ". With swap the factors are
// exchanged and the Koszul sign (-1)^{|u||v|} applied.
DgElement tensor_elements(const Field& f, const DgElement& u, const DgElement& v, bool swap);

using LinearRule = std::map<std::string, DgElement>;
// Throws std::out_of_range naming the missing basis element.
DgElement apply_rule(const Field& f, const LinearRule& rule, const DgElement& e, int target_degree);

struct FiniteChainComplex {
    GradedModule module;
    LinearRule differential;  // missing entries mean 0

    // Basis elements (strictly inside the window) on which d∘d != 0.
    std::vector<std::string> dd_failures(const Field& f) const;
};

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Homology dimensions in degrees [module.lo, validUpTo].
std::vector<std::pair<int, int64_t>> homology_dims(const Field& f, const FiniteChainComplex& c, int validUpTo);

// ---- elimination ------------------------------------------------------------

using SparseRow = std::vector<std::pair<uint32_t, Scalar>>;

// Rank of the matrix whose rows are given (columns < ncols). Dense or sparse
// elimination by size; rationals go through GMP.
int64_t matrix_rank(const Field& f, const std::vector<SparseRow>& rows, uint32_t ncols);
int64_t matrix_rank_dense(const Field& f, const std::vector<SparseRow>& rows, uint32_t ncols);
int64_t matrix_rank_sparse(const Field& f, const std::vector<SparseRow>& rows, uint32_t ncols);

// Reduces rows to echelon form; reports whether `probe` lies in the row span.
class RowSpan {
public:
    explicit RowSpan(const Field& f) : f_(f) {}
    // Returns true if the row was independent (and was added).
    bool insert(SparseRow row);
    bool contains(SparseRow row) const;
    int64_t rank() const { return static_cast<int64_t>(pivots_.size()); }

private:
    SparseRow reduce(SparseRow row) const;
    Field f_;
    std::map<uint32_t, SparseRow> pivots_;  // pivot column -> row with leading 1
};

}  // namespace eres
