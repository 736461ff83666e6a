#include "eres/free_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace eres {

int koszul_parity_of(const std::vector<int>& degs, const std::vector<int>& order) {
    int s = 0;
    for (size_t a = 0; a < order.size(); ++a) {
        if (!(degs[order[a]] & 1)) continue;
        for (size_t b = a + 1; b < order.size(); ++b)
            if (order[a] > order[b]) s += degs[order[b]] & 1;
    }
    return s & 1;
}

FreeAlgebra::FreeAlgebra(const Field& f, DegreeFn gen_degree, NameFn gen_name, bool commutative)
    : f_(f), com_(commutative), gen_degree_(std::move(gen_degree)), gen_name_(std::move(gen_name)) {
    if (com_ && f_.characteristic() == 2)
        throw std::invalid_argument("symmetric algebras are only supported in odd or zero characteristic");
}

Id FreeAlgebra::intern(LabelId label, const std::vector<Id>& args) {
    std::vector<uint32_t> key;
    key.reserve(args.size() + 1);
    key.push_back(label);
    key.insert(key.end(), args.begin(), args.end());
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    Labels& L = Labels::get();
    int deg = L.degree(label);
    for (Id a : args) deg += gen_degree_(a);
    Id id = static_cast<Id>(monos_.size());
    monos_.push_back(Mono{label, args, deg});
    index_.emplace(std::move(key), id);
    return id;
}

std::pair<Id, Scalar> FreeAlgebra::canonical(LabelId label, const std::vector<Id>& args) {
    Labels& L = Labels::get();
    if (com_) {
        if (L.degree(label) > 0) return {0, f_.zero()};
        size_t r = args.size();
        std::vector<int> order(r), degs(r);
        for (size_t k = 0; k < r; ++k) {
            order[k] = static_cast<int>(k);
            degs[k] = gen_degree_(args[k]);
        }
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return args[a] < args[b]; });
        std::vector<Id> nargs(r);
        for (size_t k = 0; k < r; ++k) nargs[k] = args[order[k]];
        for (size_t k = 1; k < r; ++k)
            if (nargs[k] == nargs[k - 1] && (degs[order[k]] & 1)) return {0, f_.zero()};
        int parity = koszul_parity_of(degs, order);
        return {intern(L.unit(static_cast<int>(r)), nargs), f_.sign(parity)};
    }
    if (L.is_canonical(label)) return {intern(label, args), f_.one()};
    const Perm& w0 = L.first(label);
    size_t r = args.size();
    std::vector<int> order(r), degs(r);
    std::vector<Id> nargs(r);
    for (size_t k = 0; k < r; ++k) {
        order[k] = w0[k] - 1;
        nargs[k] = args[order[k]];
        degs[k] = gen_degree_(args[k]);
    }
    int parity = koszul_parity_of(degs, order);
    return {intern(L.canonical(label), nargs), f_.sign(parity)};
}

Id FreeAlgebra::generator(Id g) {
    auto it = gen_index_.find(g);
    if (it != gen_index_.end()) return it->second;
    Id m = intern(Labels::get().unit(1), {g});
    gen_index_.emplace(g, m);
    return m;
}

void FreeAlgebra::act_monos_into(Accum<Id>& out, LabelId pi, const std::vector<Id>& ms, Scalar c) {
    Labels& L = Labels::get();
    std::vector<LabelId> nus;
    nus.reserve(ms.size());
    std::vector<Id> args;
    int parity = 0, pre = 0;
    for (Id m : ms) {
        const Mono& mo = monos_[m];
        nus.push_back(mo.label);
        parity += L.degree(mo.label) * pre;
        pre += mo.degree;
        args.insert(args.end(), mo.args.begin(), mo.args.end());
    }
    Scalar base = f_.mul(c, f_.sign(parity));
    const SignedLabels& composed = L.gamma(pi, nus);
    for (auto& [lab, k] : composed) {
        auto [id, s] = canonical(lab, args);
        out.add(id, f_.mul(base, f_.mul(s, f_.from_int(k))));
    }
}

void FreeAlgebra::act_into(Accum<Id>& out, LabelId pi, const std::vector<const Lin<Id>*>& elems, Scalar c) {
    size_t r = elems.size();
    for (auto* e : elems)
        if (e->empty()) return;
    std::vector<size_t> idx(r, 0);
    std::vector<Id> ms(r);
    while (true) {
        Scalar coeff = c;
        for (size_t j = 0; j < r; ++j) {
            ms[j] = (*elems[j])[idx[j]].first;
            coeff = f_.mul(coeff, (*elems[j])[idx[j]].second);
        }
        act_monos_into(out, pi, ms, coeff);
        size_t j = r;
        while (j > 0) {
            --j;
            if (++idx[j] < elems[j]->size()) break;
            idx[j] = 0;
            if (j == 0) return;
        }
        if (r == 0) return;
    }
}

Lin<Id> FreeAlgebra::act(LabelId pi, const std::vector<const Lin<Id>*>& elems) {
    Accum<Id> acc(f_);
    act_into(acc, pi, elems, f_.one());
    return acc.take();
}

Lin<Id> FreeAlgebra::differential(Id m, const std::function<const Lin<Id>&(Id)>& gen_diff) {
    Labels& L = Labels::get();
    Accum<Id> acc(f_);
    Mono mo = monos_[m];
    for (auto& [lab, s] : SignedLabels(L.boundary(mo.label))) {
        auto [id, cs] = canonical(lab, mo.args);
        acc.add(id, f_.mul(cs, f_.from_int(s)));
    }
    int pre = L.degree(mo.label);
    std::vector<Lin<Id>> gens;
    gens.reserve(mo.args.size());
    for (Id a : mo.args) gens.push_back(gen_element(a));
    for (size_t k = 0; k < mo.args.size(); ++k) {
        const Lin<Id>& dk = gen_diff(mo.args[k]);
        if (!dk.empty()) {
            std::vector<const Lin<Id>*> elems;
            for (size_t j = 0; j < mo.args.size(); ++j) elems.push_back(j == k ? &dk : &gens[j]);
            act_into(acc, mo.label, elems, f_.sign(pre));
        }
        pre += gen_degree_(mo.args[k]);
    }
    return acc.take();
}

std::vector<Id> FreeAlgebra::basis_window(const std::vector<Id>& gens, int d) {
    for (Id g : gens)
        if (gen_degree_(g) < 1)
            throw std::invalid_argument("finiteness policy: generator " + (gen_name_ ? gen_name_(g) : std::to_string(g)) +
                                        " has degree " + std::to_string(gen_degree_(g)) + " < 1");
    std::vector<Id> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Id> out;
    Labels& L = Labels::get();
    for (int r = 1; r <= d; ++r) {
        for (int e = 0; e + r <= d; ++e) {
            auto labels = be_orbit_basis(r, e);
            if (com_) {
                if (e > 0) continue;
                labels = {PermTuple::unit(r)};
            }
            if (labels.empty()) continue;
            std::vector<LabelId> lids;
            for (auto& t : labels) lids.push_back(L.intern(t));
            std::vector<Id> cur;
            auto rec = [&](auto&& self, int budget) -> void {
                if (static_cast<int>(cur.size()) == r) {
                    if (budget != 0) return;
                    if (com_) {
                        for (size_t k = 1; k < cur.size(); ++k)
                            if (cur[k] == cur[k - 1] && (gen_degree_(cur[k]) & 1)) return;
                    }
                    for (LabelId l : lids) out.push_back(intern(l, cur));
                    return;
                }
                int left = r - static_cast<int>(cur.size()) - 1;
                for (Id g : sorted) {
                    if (com_ && !cur.empty() && g < cur.back()) continue;
                    int dg = gen_degree_(g);
                    if (budget - dg < left) continue;
                    cur.push_back(g);
                    self(self, budget - dg);
                    cur.pop_back();
                }
            };
            rec(rec, d - e);
        }
    }
    return out;
}

std::string FreeAlgebra::name(Id m) const {
    const Mono& mo = monos_[m];
    std::string s = Labels::get().name(mo.label) + "[";
    for (size_t k = 0; k < mo.args.size(); ++k) {
        if (k) s += ",";
        s += gen_name_ ? gen_name_(mo.args[k]) : "k" + std::to_string(mo.args[k]);
    }
    return s + "]";
}

CanonicalForm canonical_form(const PermTuple& label, const std::vector<std::pair<std::string, int>>& args) {
    if (static_cast<int>(args.size()) != label.arity())
        throw std::invalid_argument("arity does not match argument count");
    const Perm& w0 = label.perms[0];
    CanonicalForm out;
    out.label = sigma_act(label, perm_inverse(w0));
    std::vector<int> order, degs;
    for (auto& a : args) degs.push_back(a.second);
    for (int v : w0) {
        order.push_back(v - 1);
        out.args.push_back(args[v - 1].first);
    }
    out.sign = koszul_parity_of(degs, order) ? -1 : 1;
    return out;
}

std::map<int, Lin<Id>> weight_decompose(const FreeAlgebra& A, const Lin<Id>& e) {
    std::map<int, Lin<Id>> out;
    for (auto& t : e) out[A.weight(t.first)].push_back(t);
    return out;
}

Lin<Id> extend_morphism(FreeAlgebra& src, FreeAlgebra& dst, const std::function<const Lin<Id>&(Id)>& f,
                        const Lin<Id>& e) {
    Accum<Id> acc(dst.field());
    for (auto& [m, c] : e) {
        const Mono mo = src.mono(m);
        std::vector<const Lin<Id>*> elems;
        for (Id a : mo.args) elems.push_back(&f(a));
        dst.act_into(acc, mo.label, elems, c);
    }
    return acc.take();
}

// ---- presentations --------------------------------------------------------------------

int AlgebraPresentation::index(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].first == name) return static_cast<int>(i);
    return -1;
}

int AlgebraPresentation::degree(const std::string& name) const {
    int i = index(name);
    if (i < 0) throw PresentationError("unknown generator " + name);
    return generators[i].second;
}

DgElement AlgebraPresentation::product(const std::string& a, const std::string& b) const {
    int da = degree(a), db = degree(b);
    auto it = products.find({a, b});
    if (it != products.end()) return it->second;
    auto jt = products.find({b, a});
    DgElement out;
    out.degree = da + db;
    if (jt != products.end())
        for (auto& [n, c] : jt->second.terms) out.add(field, n, field.mul(c, field.sign(da * db)));
    return out;
}

DgElement AlgebraPresentation::diff(const std::string& a) const {
    auto it = differential.find(a);
    if (it != differential.end()) return it->second;
    return DgElement{degree(a) - 1, {}};
}

namespace {

DgElement mul_elements(const AlgebraPresentation& A, const DgElement& u, const DgElement& v) {
    DgElement out;
    out.degree = u.degree + v.degree;
    for (auto& [a, ca] : u.terms)
        for (auto& [b, cb] : v.terms)
            for (auto& [c, cc] : A.product(a, b).terms) out.add(A.field, c, A.field.mul(cc, A.field.mul(ca, cb)));
    return out;
}

DgElement diff_element(const AlgebraPresentation& A, const DgElement& u) {
    DgElement out;
    out.degree = u.degree - 1;
    for (auto& [a, ca] : u.terms)
        for (auto& [b, cb] : A.diff(a).terms) out.add(A.field, b, A.field.mul(ca, cb));
    return out;
}

DgElement single(const AlgebraPresentation& A, const std::string& a) {
    DgElement e;
    e.degree = A.degree(a);
    e.add(A.field, a, A.field.one());
    return e;
}

DgElement add_elements(const Field& f, DgElement a, const DgElement& b, Scalar cb) {
    for (auto& [n, c] : b.terms) a.add(f, n, f.mul(c, cb));
    return a;
}

}  // namespace

void AlgebraPresentation::validate() const {
    const Field& f = field;
    std::set<std::string> seen;
    for (auto& [n, d] : generators) {
        if (!seen.insert(n).second) throw PresentationError("duplicate generator " + n);
        if (d < 1)
            throw PresentationError("finiteness policy: generator " + n + " has degree " + std::to_string(d) +
                                    "; generators must have degree >= 1");
    }
    auto check_terms = [&](const DgElement& e, int want, const std::string& what) {
        for (auto& [n, c] : e.terms) {
            if (index(n) < 0) throw PresentationError(what + " mentions unknown generator " + n);
            if (degree(n) != want)
                throw PresentationError("degree additivity: " + what + " has term " + n + " of degree " +
                                        std::to_string(degree(n)) + ", expected " + std::to_string(want));
        }
    };
    if (kind == AlgebraKind::Free && !products.empty())
        throw PresentationError("free algebras take no product table");
    for (auto& [ab, e] : products) {
        if (index(ab.first) < 0 || index(ab.second) < 0)
            throw PresentationError("product of unknown generators " + ab.first + "*" + ab.second);
        check_terms(e, degree(ab.first) + degree(ab.second), "product " + ab.first + "*" + ab.second);
        auto rev = products.find({ab.second, ab.first});
        int sg = degree(ab.first) * degree(ab.second);
        if (ab.first == ab.second && (sg & 1) && f.characteristic() != 2 && !e.zero())
            throw PresentationError("graded commutativity: square of odd generator " + ab.first + " must vanish");
        if (rev != products.end()) {
            DgElement diffe = add_elements(f, e, rev->second, f.neg(f.sign(sg)));
            if (!diffe.zero())
                throw PresentationError("graded commutativity: " + ab.first + "*" + ab.second +
                                        " disagrees with the reversed product");
        }
    }
    for (auto& [g, e] : differential) {
        if (index(g) < 0) throw PresentationError("differential of unknown generator " + g);
        check_terms(e, degree(g) - 1, "differential of " + g);
    }
    for (auto& [g, d] : generators) {
        DgElement dd = diff_element(*this, diff(g));
        if (!dd.zero()) throw PresentationError("d^2 = 0 fails on " + g);
    }
    if (kind == AlgebraKind::Free) return;
    for (auto& [a, da] : generators)
        for (auto& [b, db] : generators) {
            // Leibniz: d(ab) = d(a)b + (-1)^{|a|} a d(b)
            DgElement lhs = diff_element(*this, product(a, b));
            DgElement rhs = mul_elements(*this, diff(a), single(*this, b));
            rhs = add_elements(f, rhs, mul_elements(*this, single(*this, a), diff(b)), f.sign(da));
            if (!(add_elements(f, lhs, rhs, f.neg(f.one())).zero()))
                throw PresentationError("Leibniz rule fails on " + a + "*" + b);
            for (auto& [c, dc] : generators) {
                DgElement l = mul_elements(*this, product(a, b), single(*this, c));
                DgElement r = mul_elements(*this, single(*this, a), product(b, c));
                if (!(add_elements(f, l, r, f.neg(f.one())).zero()))
                    throw PresentationError("associativity fails on " + a + "*" + b + "*" + c);
            }
        }
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool valid_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

int64_t parse_int(const std::string& s, int line) {
    if (s.empty()) throw PresentationError("line " + std::to_string(line) + ": missing number");
    size_t pos = 0;
    int64_t v;
    try {
        v = std::stoll(s, &pos);
    } catch (...) {
        throw PresentationError("line " + std::to_string(line) + ": bad number '" + s + "'");
    }
    if (pos != s.size()) throw PresentationError("line " + std::to_string(line) + ": bad number '" + s + "'");
    return v;
}

DgElement parse_lincomb(const Field& f, const std::string& text, int line) {
    DgElement e;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "0") return e;
    if (s.empty()) throw PresentationError("line " + std::to_string(line) + ": empty linear combination");
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            throw PresentationError("line " + std::to_string(line) + ": expected + or -");
        }
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        i = j;
        std::string coeff = "1", name = term;
        size_t star = term.find('*');
        if (star != std::string::npos) {
            coeff = term.substr(0, star);
            name = term.substr(star + 1);
        }
        if (!valid_name(name))
            throw PresentationError("line " + std::to_string(line) + ": bad generator name '" + name + "'");
        Scalar c;
        size_t slash = coeff.find('/');
        if (slash != std::string::npos) {
            int64_t q = parse_int(coeff.substr(slash + 1), line);
            if (q == 0) throw PresentationError("line " + std::to_string(line) + ": zero denominator");
            try {
                c = f.from_frac(parse_int(coeff.substr(0, slash), line), q);
            } catch (const std::invalid_argument& ex) {
                throw PresentationError("line " + std::to_string(line) + ": " + ex.what());
            }
        } else {
            c = f.from_int(parse_int(coeff, line));
        }
        e.add(f, name, f.mul(c, f.from_int(sign)));
    }
    return e;
}

}  // namespace

AlgebraPresentation parse_presentation(const std::string& text, std::optional<uint32_t> field_override) {
    AlgebraPresentation A;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::optional<uint32_t> field;
    bool kind_seen = false;
    struct Pending {
        int line;
        std::string kind, a, b, rhs;
    };
    std::vector<Pending> pending;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string l = trim(raw);
        if (l.empty()) continue;
        std::istringstream ls(l);
        std::string kw;
        ls >> kw;
        auto fail = [&](const std::string& msg) { throw PresentationError("line " + std::to_string(line) + ": " + msg); };
        if (kw == "field") {
            std::string v, extra;
            ls >> v >> extra;
            if (!extra.empty()) fail("trailing input after field");
            int64_t p = parse_int(v, line);
            if (p < 0 || (p != 0 && !is_prime(static_cast<uint64_t>(p)))) fail("field must be 0 or a prime");
            field = static_cast<uint32_t>(p);
        } else if (kw == "algebra") {
            std::string v, extra;
            ls >> v >> extra;
            if (!extra.empty()) fail("trailing input after algebra kind");
            if (v == "commutative")
                A.kind = AlgebraKind::Commutative;
            else if (v == "free")
                A.kind = AlgebraKind::Free;
            else
                fail("algebra kind must be commutative or free");
            kind_seen = true;
        } else if (kw == "generator") {
            std::string n, d, extra;
            ls >> n >> d >> extra;
            if (!valid_name(n)) fail("bad generator name '" + n + "'");
            if (!extra.empty()) fail("trailing input after generator");
            A.generators.emplace_back(n, static_cast<int>(parse_int(d, line)));
        } else if (kw == "product" || kw == "differential") {
            auto eq = l.find('=');
            if (eq == std::string::npos) fail("missing '='");
            std::istringstream lhs(l.substr(0, eq));
            std::string k2, a, b, extra;
            lhs >> k2 >> a;
            if (kw == "product") lhs >> b;
            lhs >> extra;
            if (!valid_name(a) || (kw == "product" && !valid_name(b))) fail("bad left-hand side");
            if (!extra.empty()) fail("trailing input before '='");
            pending.push_back({line, kw, a, b, l.substr(eq + 1)});
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    (void)kind_seen;
    if (field_override) field = *field_override;
    if (!field) throw PresentationError("missing field line");
    try {
        A.field = Field(*field);
    } catch (const std::invalid_argument& e) {
        throw PresentationError(e.what());
    }
    for (auto& p : pending) {
        DgElement e = parse_lincomb(A.field, p.rhs, p.line);
        auto deg = [&](const std::string& n) {
            int i = A.index(n);
            if (i < 0) throw PresentationError("line " + std::to_string(p.line) + ": unknown generator " + n);
            return A.generators[i].second;
        };
        if (p.kind == "product") {
            e.degree = deg(p.a) + deg(p.b);
            if (A.products.count({p.a, p.b}))
                throw PresentationError("line " + std::to_string(p.line) + ": duplicate product");
            A.products[{p.a, p.b}] = e;
        } else {
            e.degree = deg(p.a) - 1;
            if (A.differential.count(p.a))
                throw PresentationError("line " + std::to_string(p.line) + ": duplicate differential");
            A.differential[p.a] = e;
        }
    }
    A.validate();
    return A;
}

DgElement evaluate_action(const AlgebraPresentation& A, const PermTuple& x, const std::vector<DgElement>& args) {
    if (static_cast<int>(args.size()) != x.arity()) throw std::invalid_argument("arity mismatch");
    if (A.kind == AlgebraKind::Free) {
        if (x.arity() >= 2)
            throw UnsupportedStructure("operad action on a free-kind presentation at weight >= 2");
        return args[0];
    }
    int deg = x.degree();
    for (auto& a : args) deg += a.degree;
    if (be_augmentation(x) == 0) return DgElement{deg, {}};
    // ε(x) = 1: the iterated product a_1...a_r (graded commutativity absorbs
    // the relabelling by the first permutation).
    DgElement cur = args[0];
    for (size_t k = 1; k < args.size(); ++k) cur = mul_elements(A, cur, args[k]);
    cur.degree = deg;
    return cur;
}

// ---- AlgebraModel -----------------------------------------------------------------------

AlgebraModel::AlgebraModel(const AlgebraPresentation& p, int max_degree) : p_(p), max_degree_(max_degree) {
    by_degree_.assign(std::max(max_degree_, 0) + 1, {});
    const Field& f = p_.field;
    size_t k = p_.generators.size();
    if (p_.kind == AlgebraKind::Commutative) {
        for (size_t i = 0; i < k; ++i)
            if (p_.generators[i].second <= max_degree_) by_degree_[p_.generators[i].second].push_back(static_cast<Id>(i));
        table_.assign(k, std::vector<Lin<Id>>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                Accum<Id> acc(f);
                for (auto& [n, c] : p_.product(p_.generators[i].first, p_.generators[j].first).terms)
                    acc.add(static_cast<Id>(p_.index(n)), c);
                table_[i][j] = acc.take();
            }
        for (size_t i = 0; i < k; ++i) {
            Accum<Id> acc(f);
            for (auto& [n, c] : p_.diff(p_.generators[i].first).terms) acc.add(static_cast<Id>(p_.index(n)), c);
            gen_diffs_.push_back(acc.take());
        }
        return;
    }
    auto gens = std::make_shared<std::vector<std::pair<std::string, int>>>(p_.generators);
    free_ = std::make_unique<FreeAlgebra>(
        f, [gens](Id g) { return (*gens)[g].second; }, [gens](Id g) { return (*gens)[g].first; });
    std::vector<Id> gids;
    for (size_t i = 0; i < k; ++i) gids.push_back(static_cast<Id>(i));
    for (size_t i = 0; i < k; ++i) {
        Accum<Id> acc(f);
        for (auto& [n, c] : p_.diff(p_.generators[i].first).terms) acc.add(free_->generator(static_cast<Id>(p_.index(n))), c);
        gen_diffs_.push_back(acc.take());
    }
    for (int d = 1; d <= max_degree_; ++d) {
        by_degree_[d] = free_->basis_window(gids, d);
        std::sort(by_degree_[d].begin(), by_degree_[d].end());
    }
}

int AlgebraModel::degree(Id a) const {
    if (free_) return free_->degree(a);
    return p_.generators[a].second;
}

std::string AlgebraModel::name(Id a) const {
    if (free_) return free_->name(a);
    return p_.generators[a].first;
}

std::vector<Id> AlgebraModel::basis_up_to(int d) const {
    std::vector<Id> out;
    for (int k = 0; k <= std::min(d, max_degree_); ++k) out.insert(out.end(), by_degree_[k].begin(), by_degree_[k].end());
    return out;
}

Lin<Id> AlgebraModel::act(LabelId x, const std::vector<Id>& args) {
    const Field& f = p_.field;
    Labels& L = Labels::get();
    if (free_) {
        Accum<Id> acc(f);
        free_->act_monos_into(acc, x, args, f.one());
        return acc.take();
    }
    if (L.degree(x) > 0) return {};
    Lin<Id> cur{{args[0], f.one()}};
    for (size_t k = 1; k < args.size(); ++k) {
        Accum<Id> acc(f);
        for (auto& [a, c] : cur)
            for (auto& [b, cb] : table_[a][args[k]]) acc.add(b, f.mul(c, cb));
        cur = acc.take();
        if (cur.empty()) break;
    }
    return cur;
}

const Lin<Id>& AlgebraModel::diff(Id a) {
    if (!free_) return gen_diffs_[a];
    auto it = free_diffs_.find(a);
    if (it != free_diffs_.end()) return it->second;
    Lin<Id> d = free_->differential(a, [this](Id g) -> const Lin<Id>& { return gen_diffs_[g]; });
    return free_diffs_.emplace(a, std::move(d)).first->second;
}

std::vector<std::pair<int, int64_t>> AlgebraModel::homology(int validUpTo) {
    if (validUpTo + 1 > max_degree_)
        throw TruncationError("algebra window too small for homology up to degree " + std::to_string(validUpTo));
    auto rank_from = [&](int d) -> int64_t {
        if (d < 1 || d > max_degree_) return 0;
        std::unordered_map<Id, uint32_t> col;
        for (Id b : by_degree_[d - 1]) col.emplace(b, static_cast<uint32_t>(col.size()));
        std::vector<SparseRow> rows;
        for (Id a : by_degree_[d]) {
            SparseRow r;
            for (auto& [b, c] : diff(a)) r.emplace_back(col.at(b), c);
            std::sort(r.begin(), r.end(), [](auto& x, auto& y) { return x.first < y.first; });
            rows.push_back(std::move(r));
        }
        return matrix_rank(p_.field, rows, static_cast<uint32_t>(col.size()));
    };
    std::vector<std::pair<int, int64_t>> out;
    for (int d = 1; d <= validUpTo; ++d)
        out.emplace_back(d, static_cast<int64_t>(by_degree_[d].size()) - rank_from(d) - rank_from(d + 1));
    return out;
}

}  // namespace eres
