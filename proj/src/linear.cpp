#include "eres/linear.hpp"

#include <gmpxx.h>

#include <set>
#include <sstream>
#include <stdexcept>

namespace eres {

void DgElement::add(const Field& f, const std::string& name, Scalar c) {
    auto it = terms.find(name);
    if (it == terms.end()) {
        if (!f.is_zero(c)) terms.emplace(name, c);
        return;
    }
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) terms.erase(it);
}

std::string DgElement::format(const Field& f) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [name, c] : terms) {
        std::string s = f.format(c);
        bool negative = s[0] == '-';
        if (negative) s = s.substr(1);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        if (s != "1") os << s << "*";
        os << name;
        first = false;
    }
    return os.str();
}

void GradedModule::validate() const {
    std::set<std::string> seen;
    for (auto& [name, d] : basis) {
        if (!seen.insert(name).second) throw std::invalid_argument("duplicate basis name " + name);
        if (d < lo || d > hi)
            throw std::invalid_argument("basis element " + name + " of degree " + std::to_string(d) +
                                        " outside window [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
    }
}

int GradedModule::degree_of(const std::string& name) const {
    for (auto& [n, d] : basis)
        if (n == name) return d;
    throw std::out_of_range("unknown basis element " + name);
}

std::vector<std::string> GradedModule::in_degree(int d) const {
    std::vector<std::string> out;
    for (auto& [n, dd] : basis)
        if (dd == d) out.push_back(n);
    std::sort(out.begin(), out.end());
    return out;
}

DgElement tensor_elements(const Field& f, const DgElement& u, const DgElement& v, bool swap) {
    DgElement out;
    out.degree = u.degree + v.degree;
    Scalar s = f.sign(swap ? (u.degree * v.degree) & 1 : 0);
    for (auto& [a, ca] : u.terms)
        for (auto& [b, cb] : v.terms) {
            std::string name = swap ? b + " ⊗ " + a : a + " ⊗ " + b;
            out.add(f, name, f.mul(s, f.mul(ca, cb)));
        }
    return out;
}

DgElement apply_rule(const Field& f, const LinearRule& rule, const DgElement& e, int target_degree) {
    DgElement out;
    out.degree = target_degree;
    for (auto& [name, c] : e.terms) {
        auto it = rule.find(name);
        if (it == rule.end()) throw std::out_of_range("rule undefined on basis element " + name);
        for (auto& [n2, c2] : it->second.terms) out.add(f, n2, f.mul(c, c2));
    }
    return out;
}

std::vector<std::string> FiniteChainComplex::dd_failures(const Field& f) const {
    std::vector<std::string> bad;
    LinearRule full = differential;
    for (auto& [name, d] : module.basis)
        if (!full.count(name)) full[name] = DgElement{d - 1, {}};
    for (auto& [name, d] : module.basis) {
        if (d - 2 < module.lo) continue;
        DgElement once = full.at(name);
        DgElement twice = apply_rule(f, full, once, d - 2);
        if (!twice.zero()) bad.push_back(name);
    }
    return bad;
}

std::vector<std::pair<int, int64_t>> homology_dims(const Field& f, const FiniteChainComplex& c, int validUpTo) {
    if (validUpTo + 1 > c.module.hi)
        throw TruncationError("homology requested up to degree " + std::to_string(validUpTo) +
                              " but the window ends at " + std::to_string(c.module.hi) +
                              "; boundaries from degree " + std::to_string(validUpTo + 1) + " are needed");
    // rank of d: C_k -> C_{k-1}
    auto rank_in = [&](int k) -> int64_t {
        auto src = c.module.in_degree(k);
        auto dst = c.module.in_degree(k - 1);
        std::map<std::string, uint32_t> col;
        for (auto& n : dst) col.emplace(n, static_cast<uint32_t>(col.size()));
        std::vector<SparseRow> rows;
        for (auto& n : src) {
            auto it = c.differential.find(n);
            if (it == c.differential.end()) continue;
            SparseRow r;
            for (auto& [m, s] : it->second.terms) {
                auto jt = col.find(m);
                if (jt == col.end())
                    throw std::invalid_argument("differential of " + n + " leaves the window via " + m);
                r.emplace_back(jt->second, s);
            }
            std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
            rows.push_back(std::move(r));
        }
        return matrix_rank(f, rows, static_cast<uint32_t>(dst.size()));
    };
    std::vector<std::pair<int, int64_t>> out;
    for (int d = c.module.lo; d <= validUpTo; ++d) {
        int64_t dim = static_cast<int64_t>(c.module.in_degree(d).size());
        int64_t out_rank = d > c.module.lo ? rank_in(d) : 0;
        int64_t in_rank = rank_in(d + 1);
        out.emplace_back(d, dim - out_rank - in_rank);
    }
    return out;
}

// ---- elimination ------------------------------------------------------------

namespace {

constexpr uint64_t kDenseLimit = 1u << 22;  // entries

int64_t rank_dense_f2(const std::vector<SparseRow>& rows, uint32_t ncols) {
    size_t words = (ncols + 63) / 64;
    std::vector<std::vector<uint64_t>> m;
    m.reserve(rows.size());
    for (auto& r : rows) {
        std::vector<uint64_t> bits(words, 0);
        for (auto& [c, v] : r)
            if (v.num & 1) bits[c / 64] ^= uint64_t{1} << (c % 64);
        m.push_back(std::move(bits));
    }
    int64_t rank = 0;
    size_t row = 0;
    for (uint32_t col = 0; col < ncols && row < m.size(); ++col) {
        size_t w = col / 64;
        uint64_t bit = uint64_t{1} << (col % 64);
        size_t piv = row;
        while (piv < m.size() && !(m[piv][w] & bit)) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        for (size_t i = row + 1; i < m.size(); ++i)
            if (m[i][w] & bit)
                for (size_t k = w; k < words; ++k) m[i][k] ^= m[row][k];
        ++row;
        ++rank;
    }
    return rank;
}

int64_t rank_dense_fp(const Field& f, const std::vector<SparseRow>& rows, uint32_t ncols) {
    uint64_t p = f.characteristic();
    std::vector<std::vector<uint64_t>> m(rows.size(), std::vector<uint64_t>(ncols, 0));
    for (size_t i = 0; i < rows.size(); ++i)
        for (auto& [c, v] : rows[i]) m[i][c] = static_cast<uint64_t>(v.num);
    int64_t rank = 0;
    size_t row = 0;
    for (uint32_t col = 0; col < ncols && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        uint64_t inv = static_cast<uint64_t>(f.inv({static_cast<int64_t>(m[row][col]), 1}).num);
        for (uint32_t k = col; k < ncols; ++k) m[row][k] = m[row][k] * inv % p;
        for (size_t i = row + 1; i < m.size(); ++i) {
            uint64_t factor = m[i][col];
            if (!factor) continue;
            for (uint32_t k = col; k < ncols; ++k) m[i][k] = (m[i][k] + (p - factor) * m[row][k]) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

int64_t rank_sparse_q(const std::vector<SparseRow>& rows) {
    using QRow = std::vector<std::pair<uint32_t, mpq_class>>;
    std::map<uint32_t, QRow> pivots;
    for (auto& r : rows) {
        QRow row;
        for (auto& [c, v] : r) row.emplace_back(c, mpq_class(v.num, v.den));
        for (auto& [c, v] : row) v.canonicalize();
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                mpq_class inv = 1 / row.front().second;
                for (auto& [c, v] : row) v *= inv;
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            mpq_class factor = row.front().second;
            QRow next;
            const QRow& p = it->second;
            size_t i = 0, j = 0;
            while (i < row.size() || j < p.size()) {
                if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
                    next.push_back(row[i++]);
                } else if (i == row.size() || p[j].first < row[i].first) {
                    next.emplace_back(p[j].first, -factor * p[j].second);
                    ++j;
                } else {
                    mpq_class v = row[i].second - factor * p[j].second;
                    if (v != 0) next.emplace_back(row[i].first, v);
                    ++i;
                    ++j;
                }
            }
            row = std::move(next);
        }
    }
    return static_cast<int64_t>(pivots.size());
}

}  // namespace

SparseRow RowSpan::reduce(SparseRow row) const {
    SparseRow acc;
    // Eliminate leading entries repeatedly.
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            acc.push_back(row.front());
            row.erase(row.begin());
            continue;
        }
        Scalar factor = f_.neg(row.front().second);
        row = lin_add(f_, row, it->second, factor);
    }
    return acc;
}

bool RowSpan::insert(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Scalar inv = f_.inv(row.front().second);
    for (auto& [c, v] : row) v = f_.mul(v, inv);
    uint32_t col = row.front().first;
    pivots_.emplace(col, std::move(row));
    return true;
}

bool RowSpan::contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

int64_t matrix_rank_dense(const Field& f, const std::vector<SparseRow>& rows, uint32_t ncols) {
    if (f.rational()) return rank_sparse_q(rows);
    if (f.characteristic() == 2) return rank_dense_f2(rows, ncols);
    return rank_dense_fp(f, rows, ncols);
}

int64_t matrix_rank_sparse(const Field& f, const std::vector<SparseRow>& rows, uint32_t ncols) {
    (void)ncols;
    if (f.rational()) return rank_sparse_q(rows);
    RowSpan span(f);
    for (auto& r : rows) span.insert(r);
    return span.rank();
}

int64_t matrix_rank(const Field& f, const std::vector<SparseRow>& rows, uint32_t ncols) {
    if (rows.empty() || ncols == 0) return 0;
    uint64_t entries = static_cast<uint64_t>(rows.size()) * ncols;
    if (!f.rational() && entries <= kDenseLimit) return matrix_rank_dense(f, rows, ncols);
    return matrix_rank_sparse(f, rows, ncols);
}

}  // namespace eres
