#include "eres/simplicial.hpp"

#include <stdexcept>

namespace eres {

uint32_t SimplexFace::mask() const {
    uint32_t m = 0;
    for (int v : vertices) m |= 1u << v;
    return m;
}

std::string SimplexFace::name() const {
    std::string s = "[";
    bool wide = ambient >= 10;
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (wide && i) s += ",";
        s += std::to_string(vertices[i]);
    }
    return s + "]";
}

SimplexFace SimplexFace::full(int n) {
    SimplexFace s{n, {}};
    for (int i = 0; i <= n; ++i) s.vertices.push_back(i);
    return s;
}

SimplexFace SimplexFace::from_mask(int ambient, uint32_t mask) {
    SimplexFace s{ambient, {}};
    for (int i = 0; i <= ambient; ++i)
        if (mask >> i & 1) s.vertices.push_back(i);
    return s;
}

bool MonotoneMap::valid() const {
    if (static_cast<int>(values.size()) != source + 1) return false;
    for (int i = 0; i <= source; ++i) {
        if (values[i] < 0 || values[i] > target) return false;
        if (i && values[i] < values[i - 1]) return false;
    }
    return true;
}

bool MonotoneMap::injective() const {
    for (int i = 1; i <= source; ++i)
        if (values[i] == values[i - 1]) return false;
    return true;
}

bool MonotoneMap::surjective() const {
    if (values.front() != 0 || values.back() != target) return false;
    for (int i = 1; i <= source; ++i)
        if (values[i] > values[i - 1] + 1) return false;
    return true;
}

MonotoneMap MonotoneMap::identity(int n) {
    MonotoneMap u{n, n, {}};
    for (int i = 0; i <= n; ++i) u.values.push_back(i);
    return u;
}

MonotoneMap MonotoneMap::coface(int n, int i) {
    MonotoneMap u{n - 1, n, {}};
    for (int v = 0; v < n; ++v) u.values.push_back(v < i ? v : v + 1);
    return u;
}

MonotoneMap MonotoneMap::codegeneracy(int n, int j) {
    MonotoneMap u{n + 1, n, {}};
    for (int v = 0; v <= n + 1; ++v) u.values.push_back(v <= j ? v : v - 1);
    return u;
}

MonotoneMap MonotoneMap::compose(const MonotoneMap& a, const MonotoneMap& b) {
    if (b.target != a.source) throw std::invalid_argument("monotone maps not composable");
    MonotoneMap u{b.source, a.target, {}};
    for (int v : b.values) u.values.push_back(a.values[v]);
    return u;
}

std::vector<MonotoneMap> MonotoneMap::all(int k, int n) {
    std::vector<MonotoneMap> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo) -> void {
        if (static_cast<int>(cur.size()) == k + 1) {
            out.push_back({k, n, cur});
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<SimplexFace> face_basis(int n, int m) {
    std::vector<SimplexFace> out;
    if (m < 0 || m > n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == m + 1) {
            out.push_back({n, cur});
            return;
        }
        for (int v = next; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::pair<SimplexFace, int>> boundary_terms(const SimplexFace& s) {
    std::vector<std::pair<SimplexFace, int>> out;
    if (s.dim() < 1) return out;
    for (size_t i = 0; i < s.vertices.size(); ++i) {
        SimplexFace t{s.ambient, s.vertices};
        t.vertices.erase(t.vertices.begin() + static_cast<long>(i));
        out.emplace_back(std::move(t), (i & 1) ? -1 : 1);
    }
    return out;
}

DgElement boundary(const Field& f, const SimplexFace& s) {
    DgElement e;
    e.degree = s.dim() - 1;
    for (auto& [t, sg] : boundary_terms(s)) e.add(f, t.name(), f.from_int(sg));
    return e;
}

std::optional<SimplexFace> pushforward_face(const MonotoneMap& u, const SimplexFace& s) {
    SimplexFace t{u.target, {}};
    for (int v : s.vertices) {
        int w = u.values.at(v);
        if (!t.vertices.empty() && t.vertices.back() == w) return std::nullopt;
        t.vertices.push_back(w);
    }
    return t;
}

DgElement pushforward(const Field& f, const MonotoneMap& u, const SimplexFace& s) {
    DgElement e;
    e.degree = s.dim();
    if (auto t = pushforward_face(u, s)) e.add(f, t->name(), f.one());
    return e;
}

std::vector<std::pair<SimplexFace, SimplexFace>> aw_terms(const SimplexFace& s) {
    std::vector<std::pair<SimplexFace, SimplexFace>> out;
    for (size_t i = 0; i < s.vertices.size(); ++i) {
        SimplexFace front{s.ambient, {s.vertices.begin(), s.vertices.begin() + static_cast<long>(i) + 1}};
        SimplexFace back{s.ambient, {s.vertices.begin() + static_cast<long>(i), s.vertices.end()}};
        out.emplace_back(std::move(front), std::move(back));
    }
    return out;
}

DgElement aw_diagonal(const Field& f, const SimplexFace& s) {
    DgElement e;
    e.degree = s.dim();
    for (auto& [a, b] : aw_terms(s)) e.add(f, a.name() + " ⊗ " + b.name(), f.one());
    return e;
}

CochainElement cochain_differential(const Field& f, const CochainElement& a) {
    CochainElement out{a.ambient, a.degree + 1, {}};
    Scalar sg = f.sign(a.degree + 1);
    for (auto& tau : face_basis(a.ambient, a.degree + 1)) {
        Scalar acc = f.zero();
        for (auto& [sigma, s] : boundary_terms(tau)) {
            auto it = a.terms.find(sigma.vertices);
            if (it != a.terms.end()) acc = f.add(acc, f.mul(it->second, f.from_int(s)));
        }
        acc = f.mul(acc, sg);
        if (!f.is_zero(acc)) out.terms.emplace(tau.vertices, acc);
    }
    return out;
}

Scalar evaluate_cochain(const Field& f, const CochainElement& a, const SimplexFace& c) {
    if (c.dim() != a.degree) return f.zero();
    auto it = a.terms.find(c.vertices);
    return it == a.terms.end() ? f.zero() : it->second;
}

DgElement trace_pairing(const Field& f, int n) {
    DgElement e;
    e.degree = 0;
    for (int m = 0; m <= n; ++m)
        for (auto& s : face_basis(n, m)) e.add(f, s.name() + " ⊗ " + s.name() + "*", f.one());
    return e;
}

}  // namespace eres
