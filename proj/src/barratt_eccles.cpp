#include "eres/barratt_eccles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eres {

Perm perm_identity(int r) {
    Perm w(r);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

Perm perm_inverse(const Perm& w) {
    Perm v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v[w[i] - 1] = static_cast<int>(i) + 1;
    return v;
}

Perm perm_compose_i(const Perm& w, int i, const Perm& v) {
    int s = static_cast<int>(v.size());
    Perm out;
    out.reserve(w.size() + v.size() - 1);
    for (int a : w) {
        if (a == i)
            for (int b : v) out.push_back(b + i - 1);
        else
            out.push_back(a > i ? a + s - 1 : a);
    }
    return out;
}

std::vector<Perm> all_perms(int r) {
    std::vector<Perm> out;
    Perm w = perm_identity(r);
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::string perm_name(const Perm& w) {
    std::string s;
    bool wide = w.size() >= 10;
    for (size_t i = 0; i < w.size(); ++i) {
        if (wide && i) s += ".";
        s += std::to_string(w[i]);
    }
    return s;
}

bool PermTuple::valid() const {
    if (perms.empty()) return false;
    int r = arity();
    if (r < 1) return false;
    for (size_t k = 0; k < perms.size(); ++k) {
        auto& w = perms[k];
        if (static_cast<int>(w.size()) != r) return false;
        std::vector<bool> seen(r + 1, false);
        for (int a : w) {
            if (a < 1 || a > r || seen[a]) return false;
            seen[a] = true;
        }
        if (k && perms[k] == perms[k - 1]) return false;
    }
    return true;
}

std::string PermTuple::name() const {
    std::string s = "(";
    for (size_t k = 0; k < perms.size(); ++k) {
        if (k) s += ",";
        s += perm_name(perms[k]);
    }
    return s + ")";
}

int Surjection::arity() const { return seq.empty() ? 0 : *std::max_element(seq.begin(), seq.end()); }

bool Surjection::valid() const {
    int r = arity();
    std::vector<bool> seen(r + 1, false);
    for (size_t k = 0; k < seq.size(); ++k) {
        if (seq[k] < 1) return false;
        seen[seq[k]] = true;
        if (k && seq[k] == seq[k - 1]) return false;
    }
    for (int v = 1; v <= r; ++v)
        if (!seen[v]) return false;
    return true;
}

std::string Surjection::name() const {
    std::string s = "(";
    for (size_t k = 0; k < seq.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(seq[k]);
    }
    return s + ")";
}

namespace {

void add_to(const Field& f, OperadElement& e, const PermTuple& x, Scalar c) {
    if (f.is_zero(c)) return;
    auto [it, fresh] = e.try_emplace(x, c);
    if (!fresh) {
        it->second = f.add(it->second, c);
        if (f.is_zero(it->second)) e.erase(it);
    }
}

template <class M, class K>
void add_map(const Field& f, M& e, const K& x, Scalar c) {
    if (f.is_zero(c)) return;
    auto [it, fresh] = e.try_emplace(x, c);
    if (!fresh) {
        it->second = f.add(it->second, c);
        if (f.is_zero(it->second)) e.erase(it);
    }
}

bool has_adjacent_repeat(const std::vector<Perm>& t) {
    for (size_t k = 1; k < t.size(); ++k)
        if (t[k] == t[k - 1]) return true;
    return false;
}

// Table reduction: all terms carry coefficient +1.
std::vector<std::vector<int>> tr_sequences(const PermTuple& x) {
    int d = x.degree(), r = x.arity();
    std::vector<std::vector<int>> out;
    std::vector<int> comp(d + 1, 1);
    // enumerate compositions r_0+..+r_d = r+d with r_i >= 1
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == d) {
            comp[d] = remaining;
            if (remaining < 1) return;
            std::vector<bool> finished(r + 1, false);
            std::vector<int> seq;
            for (int k = 0; k <= d; ++k) {
                std::vector<int> row;
                for (int v : x.perms[k])
                    if (!finished[v]) row.push_back(v);
                if (k < d) {
                    if (comp[k] > static_cast<int>(row.size())) return;
                    for (int a = 0; a < comp[k]; ++a) {
                        seq.push_back(row[a]);
                        if (a + 1 < comp[k]) finished[row[a]] = true;
                    }
                } else {
                    if (comp[k] != static_cast<int>(row.size())) return;
                    seq.insert(seq.end(), row.begin(), row.end());
                }
            }
            for (size_t a = 1; a < seq.size(); ++a)
                if (seq[a] == seq[a - 1]) return;
            out.push_back(std::move(seq));
            return;
        }
        for (int v = 1; v <= remaining - (d - i); ++v) {
            comp[i] = v;
            self(self, i + 1, remaining - v);
        }
    };
    rec(rec, 0, r + d);
    return out;
}

int koszul_parity(const std::vector<int>& degs, const std::vector<int>& order) {
    int s = 0;
    for (size_t a = 0; a < order.size(); ++a)
        for (size_t b = a + 1; b < order.size(); ++b)
            if (order[a] > order[b]) s += degs[order[a]] * degs[order[b]];
    return s & 1;
}

// Interval cuts of [0..m] along u; slot contents as position masks.
std::vector<std::pair<MaskTuple, int>> interval_cut_masks(const std::vector<int>& u, int m) {
    int s = static_cast<int>(u.size());
    int r = *std::max_element(u.begin(), u.end());
    std::vector<int> last(r + 1, -1);
    for (int j = 0; j < s; ++j) last[u[j]] = j;
    std::vector<int> order(s);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return u[a] < u[b]; });

    std::map<MaskTuple, int> acc;
    std::vector<int> ns(s + 1, 0);
    ns[s] = m;
    auto rec = [&](auto&& self, int j, int lo) -> void {
        if (j == s) {
            MaskTuple slots(r, 0);
            std::vector<int> count(r, 0);
            for (int k = 0; k < s; ++k) {
                int slot = u[k] - 1;
                for (int v = ns[k]; v <= ns[k + 1]; ++v) {
                    if (slots[slot] >> v & 1) return;  // repeated vertex: degenerate
                    slots[slot] |= 1u << v;
                }
            }
            std::vector<int> degs(s);
            int extra = 0;
            for (int k = 0; k < s; ++k) {
                bool final_occ = last[u[k]] == k;
                degs[k] = ns[k + 1] - ns[k] + (final_occ ? 0 : 1);
                if (!final_occ) extra += ns[k + 1];
            }
            int parity = (koszul_parity(degs, order) + extra) & 1;
            acc[slots] += parity ? -1 : 1;
            return;
        }
        for (int v = lo; v <= m; ++v) {
            ns[j] = v;
            self(self, j + 1, v);
        }
    };
    rec(rec, 1, 0);
    std::vector<std::pair<MaskTuple, int>> out;
    for (auto& [k, c] : acc)
        if (c) out.emplace_back(k, c);
    return out;
}

ChainTensor masks_to_faces(const MaskTuple& t, const SimplexFace& c) {
    ChainTensor out;
    out.reserve(t.size());
    for (uint32_t mask : t) {
        SimplexFace s{c.ambient, {}};
        for (size_t v = 0; v < c.vertices.size(); ++v)
            if (mask >> v & 1) s.vertices.push_back(c.vertices[v]);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::vector<PermTuple> be_basis(int r, int d) {
    std::vector<PermTuple> out;
    if (r < 1 || d < 0) return out;
    auto P = all_perms(r);
    std::vector<Perm> cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == d + 1) {
            out.push_back({cur});
            return;
        }
        for (auto& p : P) {
            if (!cur.empty() && cur.back() == p) continue;
            cur.push_back(p);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::vector<PermTuple> be_orbit_basis(int r, int d) {
    std::vector<PermTuple> out;
    if (r < 1 || d < 0) return out;
    auto P = all_perms(r);
    std::vector<Perm> cur{perm_identity(r)};
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == d + 1) {
            out.push_back({cur});
            return;
        }
        for (auto& p : P) {
            if (cur.back() == p) continue;
            cur.push_back(p);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

OperadElement be_boundary(const Field& f, const PermTuple& x) {
    OperadElement out;
    if (x.degree() < 1) return out;
    for (size_t i = 0; i < x.perms.size(); ++i) {
        PermTuple y = x;
        y.perms.erase(y.perms.begin() + static_cast<long>(i));
        if (has_adjacent_repeat(y.perms)) continue;
        add_to(f, out, y, f.sign(static_cast<int>(i)));
    }
    return out;
}

PermTuple sigma_act(const PermTuple& x, const Perm& g) {
    PermTuple y = x;
    for (auto& w : y.perms)
        for (auto& a : w) a = g[a - 1];
    return y;
}

OperadElement be_compose_i(const Field& f, const OperadElement& X, int i, const OperadElement& Y) {
    OperadElement out;
    for (auto& [x, cx] : X)
        for (auto& [y, cy] : Y) {
            if (i < 1 || i > x.arity()) throw std::out_of_range("composition slot out of range");
            Scalar c = f.mul(cx, cy);
            int p = x.degree(), q = y.degree();
            // lattice paths: choose positions of the p x-steps among p+q steps
            std::vector<int> steps(p + q, 0);
            std::fill(steps.begin(), steps.begin() + p, 1);
            std::sort(steps.begin(), steps.end());
            do {
                int a = 0, b = 0, ys_before = 0, parity = 0;
                PermTuple z;
                z.perms.push_back(perm_compose_i(x.perms[0], i, y.perms[0]));
                for (int t : steps) {
                    if (t) {
                        ++a;
                        parity += ys_before;
                    } else {
                        ++b;
                        ++ys_before;
                    }
                    z.perms.push_back(perm_compose_i(x.perms[a], i, y.perms[b]));
                }
                if (has_adjacent_repeat(z.perms)) continue;
                add_to(f, out, z, f.mul(c, f.sign(parity)));
            } while (std::next_permutation(steps.begin(), steps.end()));
        }
    return out;
}

std::vector<std::pair<PermTuple, PermTuple>> be_coproduct(const PermTuple& x) {
    std::vector<std::pair<PermTuple, PermTuple>> out;
    for (size_t i = 0; i < x.perms.size(); ++i) {
        PermTuple a{{x.perms.begin(), x.perms.begin() + static_cast<long>(i) + 1}};
        PermTuple b{{x.perms.begin() + static_cast<long>(i), x.perms.end()}};
        out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

SurjElement table_reduction(const Field& f, const PermTuple& x) {
    SurjElement out;
    for (auto& seq : tr_sequences(x)) add_map(f, out, Surjection{seq}, f.one());
    return out;
}

SurjElement surjection_boundary(const Field& f, const Surjection& u) {
    SurjElement out;
    int s = static_cast<int>(u.seq.size());
    int r = u.arity();
    std::vector<int> last(r + 1, -1);
    for (int j = 0; j < s; ++j) last[u.seq[j]] = j;
    auto caesuras_before = [&](int k) {
        int c = 0;
        for (int j = 0; j < k; ++j)
            if (last[u.seq[j]] != j) ++c;
        return c;
    };
    for (int k = 0; k < s; ++k) {
        Surjection v = u;
        v.seq.erase(v.seq.begin() + k);
        if (!v.valid() || v.arity() != r) continue;
        int parity;
        if (last[u.seq[k]] != k) {
            parity = caesuras_before(k);
        } else {
            int p = k - 1;
            while (p >= 0 && u.seq[p] != u.seq[k]) --p;
            if (p < 0) continue;
            parity = 1 + caesuras_before(p);
        }
        add_map(f, out, v, f.sign(parity));
    }
    return out;
}

ChainTensorElement interval_cut_action(const Field& f, const Surjection& u, const SimplexFace& c) {
    ChainTensorElement out;
    for (auto& [masks, k] : interval_cut_masks(u.seq, c.dim()))
        add_map(f, out, masks_to_faces(masks, c), f.from_int(k));
    return out;
}

ChainTensorElement be_coaction(const Field& f, const OperadElement& x, const SimplexFace& c) {
    ChainTensorElement out;
    for (auto& [t, ct] : x)
        for (auto& [u, cu] : table_reduction(f, t))
            for (auto& [faces, cf] : interval_cut_action(f, u, c)) add_map(f, out, faces, f.mul(ct, f.mul(cu, cf)));
    return out;
}

int be_augmentation(const PermTuple& x) { return x.degree() == 0 ? 1 : 0; }

OperadElement operad_boundary(const Field& f, const OperadElement& x) {
    OperadElement out;
    for (auto& [t, c] : x)
        for (auto& [u, cu] : be_boundary(f, t)) add_to(f, out, u, f.mul(c, cu));
    return out;
}

ChainTensorElement tensor_boundary(const Field& f, const ChainTensorElement& t) {
    ChainTensorElement out;
    for (auto& [faces, c] : t) {
        int parity = 0;
        for (size_t k = 0; k < faces.size(); ++k) {
            for (auto& [g, s] : boundary_terms(faces[k])) {
                ChainTensor u = faces;
                u[k] = g;
                add_map(f, out, u, f.mul(c, f.from_int(parity & 1 ? -s : s)));
            }
            parity += faces[k].dim();
        }
    }
    return out;
}

// ---- Labels ------------------------------------------------------------------------

Labels& Labels::get() {
    static Labels instance;
    return instance;
}

LabelId Labels::intern(const PermTuple& x) {
    auto it = index_.find(x);
    if (it != index_.end()) return it->second;
    LabelId id = static_cast<LabelId>(data_.size());
    Entry e;
    e.tuple = x;
    e.arity = x.arity();
    e.degree = x.degree();
    data_.push_back(std::move(e));
    index_.emplace(x, id);
    return id;
}

const std::string& Labels::name(LabelId id) {
    auto& e = data_[id];
    if (e.name.empty()) e.name = e.tuple.name();
    return e.name;
}

LabelId Labels::unit(int r) {
    if (static_cast<int>(unit_.size()) <= r) unit_.resize(r + 1, -1);
    if (unit_[r] < 0) unit_[r] = intern(PermTuple::unit(r));
    return static_cast<LabelId>(unit_[r]);
}

LabelId Labels::canonical(LabelId id) {
    if (data_[id].canon >= 0) return static_cast<LabelId>(data_[id].canon);
    Perm h = perm_inverse(data_[id].tuple.perms[0]);
    PermTuple c = sigma_act(data_[id].tuple, h);
    LabelId cid = intern(c);
    data_[id].canon = cid;
    return cid;
}

bool Labels::is_canonical(LabelId id) { return canonical(id) == id; }

const SignedLabels& Labels::boundary(LabelId id) {
    if (!data_[id].has_boundary) {
        PermTuple x = data_[id].tuple;
        SignedLabels out;
        if (x.degree() >= 1) {
            for (size_t i = 0; i < x.perms.size(); ++i) {
                PermTuple y = x;
                y.perms.erase(y.perms.begin() + static_cast<long>(i));
                if (has_adjacent_repeat(y.perms)) continue;
                out.emplace_back(intern(y), (i & 1) ? -1 : 1);
            }
        }
        data_[id].bd = std::move(out);
        data_[id].has_boundary = true;
    }
    return data_[id].bd;
}

const SignedLabels& Labels::compose(LabelId x, int i, LabelId y) {
    uint64_t key = (static_cast<uint64_t>(x) << 36) | (static_cast<uint64_t>(i) << 30) | y;
    auto it = compose_cache_.find(key);
    if (it != compose_cache_.end()) return it->second;
    Field z(0);
    OperadElement r = be_compose_i(z, {{tuple(x), z.one()}}, i, {{tuple(y), z.one()}});
    SignedLabels out;
    for (auto& [t, c] : r) out.emplace_back(intern(t), static_cast<int>(c.num));
    return compose_cache_.emplace(key, std::move(out)).first->second;
}

const SignedLabels& Labels::gamma(LabelId pi, const std::vector<LabelId>& nus) {
    std::vector<LabelId> key;
    key.reserve(nus.size() + 1);
    key.push_back(pi);
    key.insert(key.end(), nus.begin(), nus.end());
    auto it = gamma_cache_.find(key);
    if (it != gamma_cache_.end()) return it->second;
    std::map<LabelId, int> cur{{pi, 1}};
    for (int j = static_cast<int>(nus.size()); j >= 1; --j) {
        LabelId nu = nus[j - 1];
        if (arity(nu) == 1) continue;  // unit
        std::map<LabelId, int> next;
        for (auto& [l, c] : cur)
            for (auto& [l2, c2] : compose(l, j, nu)) next[l2] += c * c2;
        cur.clear();
        for (auto& [l, c] : next)
            if (c) cur.emplace(l, c);
    }
    SignedLabels out(cur.begin(), cur.end());
    return gamma_cache_.emplace(std::move(key), std::move(out)).first->second;
}

LabelId Labels::front(LabelId x, int i) {
    auto& p = data_[x].tuple.perms;
    return intern(PermTuple{{p.begin(), p.begin() + i + 1}});
}

LabelId Labels::back(LabelId x, int i) {
    auto& p = data_[x].tuple.perms;
    return intern(PermTuple{{p.begin() + i, p.end()}});
}

const std::vector<std::pair<MaskTuple, int>>& Labels::coaction(LabelId x, int m) {
    auto key = std::make_pair(x, m);
    auto it = coaction_cache_.find(key);
    if (it != coaction_cache_.end()) return it->second;
    std::map<MaskTuple, int> acc;
    for (auto& seq : tr_sequences(data_[x].tuple))
        for (auto& [masks, c] : interval_cut_masks(seq, m)) acc[masks] += c;
    std::vector<std::pair<MaskTuple, int>> out;
    for (auto& [k, c] : acc)
        if (c) out.emplace_back(k, c);
    return coaction_cache_.emplace(key, std::move(out)).first->second;
}

}  // namespace eres
