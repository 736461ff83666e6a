#include "eres/realization.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <functional>
#include <optional>
#include <set>
#include <tuple>

namespace eres {

OperadMode parse_mode(const std::string& s) {
    if (s == "e") return OperadMode::E;
    if (s == "e-unitary") return OperadMode::EUnitary;
    if (s == "com") return OperadMode::Com;
    throw ModeError("unknown operad mode '" + s + "' (expected e, e-unitary or com)");
}

std::string mode_name(OperadMode m) {
    switch (m) {
        case OperadMode::E: return "e";
        case OperadMode::EUnitary: return "e-unitary";
        case OperadMode::Com: return "com";
    }
    return "?";
}

QuasiFreeModel::QuasiFreeModel(AlgebraModel& A, OperadMode mode, int max_degree)
    : A_(A), mode_(mode), max_degree_(max_degree) {
    if (max_degree < 1) throw std::invalid_argument("max degree must be at least 1");
    if (max_degree > A.max_degree()) throw std::invalid_argument("model window exceeds the algebra window");
    if (mode == OperadMode::Com) {
        if (!A.field().rational()) throw ModeError("com mode requires a field of characteristic zero");
        if (A.free_kind()) throw UnsupportedStructure("com mode needs a commutative presentation");
    }
    if (mode == OperadMode::EUnitary && A.presentation().is_zero())
        throw DegenerateInput("the unitary identification needs A != 0");
    res_ = std::make_unique<Resolution>(A_, commutative());
    free_ = std::make_unique<FreeAlgebra>(
        A_.field(), [this](Id t) { return gen_degree(t); }, [this](Id t) { return gen_name(t); }, commutative());

    for (int n = 0; 2 * n + 1 <= max_degree_ || n == 0; ++n) {
        bool any = false;
        for (TreeId t : res_->normalized_tree_basis(n, max_degree_ - n)) {
            gens_.push_back(t);
            any = true;
        }
        if (any) max_level_ = n;
    }
    std::vector<std::tuple<int, int, std::string, TreeId>> keyed;
    for (TreeId t : gens_) keyed.emplace_back(gen_degree(t), res_->level(t), res_->name(t), t);
    std::sort(keyed.begin(), keyed.end());
    gens_.clear();
    for (auto& k : keyed) {
        gen_index_.emplace(std::get<3>(k), static_cast<int>(gens_.size()) + 1);
        gens_.push_back(std::get<3>(k));
    }
}

std::string QuasiFreeModel::gen_name(TreeId t) const {
    auto it = gen_index_.find(t);
    if (it != gen_index_.end()) return "g" + std::to_string(it->second);
    return "[" + res_->name(t) + "]";
}

const Lin<Id>& QuasiFreeModel::psi(TreeId t, uint32_t mask) {
    uint64_t key = (static_cast<uint64_t>(t) << 16) | mask;
    auto it = psi_cache_.find(key);
    if (it != psi_cache_.end()) return it->second;
    const Field& f = field();
    int n = res_->level(t);
    uint32_t full = (1u << (n + 1)) - 1;
    if ((mask & ~full) || mask == 0) throw std::invalid_argument("face mask outside the simplex");
    if (mask == full) {
        Lin<Id> out;
        if (res_->normalized(t)) out = free_->gen_element(t);
        return psi_cache_.emplace(key, std::move(out)).first->second;
    }
    int m = std::popcount(mask) - 1;
    Lin<Id> X = res_->sigma_star(t, mask);
    FreeAlgebra& R = res_->res();
    Accum<Id> acc(f);
    for (auto& [mono, a] : X) {
        const Mono mo = R.mono(mono);
        std::vector<int> degs;
        for (TreeId e : mo.args) degs.push_back(res_->degree(e));
        distribute_faces(f, mo.label, degs, m, commutative(), a, [&](LabelId outer, const MaskTuple& cs, Scalar c) {
            std::vector<const Lin<Id>*> vals;
            for (size_t k = 0; k < cs.size(); ++k) {
                const Lin<Id>& v = psi(mo.args[k], cs[k]);
                if (v.empty()) return;
                vals.push_back(&v);
            }
            free_->act_into(acc, outer, vals, c);
        });
    }
    return psi_cache_.emplace(key, acc.take()).first->second;
}

Lin<Id> QuasiFreeModel::twisting(TreeId t) {
    int n = res_->level(t);
    if (n == 0) return {};
    uint32_t full = (1u << (n + 1)) - 1;
    return lin_scale(field(), psi(t, full & ~1u), field().sign(res_->degree(t)));
}

const Lin<Id>& QuasiFreeModel::differential(TreeId t) {
    auto it = diff_cache_.find(t);
    if (it != diff_cache_.end()) return it->second;
    const Field& f = field();
    Accum<Id> acc(f);
    for (auto& [u, c] : res_->tree_differential(t))
        if (res_->normalized(u)) acc.add(free_->generator(u), c);
    int n = res_->level(t);
    if (n > 0) {
        uint32_t full = (1u << (n + 1)) - 1;
        Scalar s = f.sign(res_->degree(t));
        for (int i = 0; i <= n; ++i) acc.add(psi(t, full & ~(1u << i)), f.mul(s, f.sign(i)));
    }
    return diff_cache_.emplace(t, acc.take()).first->second;
}

Lin<Id> QuasiFreeModel::differential_mono(Id m) {
    auto it = mono_diff_cache_.find(m);
    if (it != mono_diff_cache_.end()) return it->second;
    for (TreeId t : free_->mono(m).args) differential(t);
    Lin<Id> out = free_->differential(m, [this](Id t) -> const Lin<Id>& { return differential(t); });
    return mono_diff_cache_.emplace(m, std::move(out)).first->second;
}

Lin<Id> QuasiFreeModel::differential_of(const Lin<Id>& x) {
    Accum<Id> acc(field());
    for (auto& [m, c] : x) acc.add(differential_mono(m), c);
    return acc.take();
}

const std::vector<Id>& QuasiFreeModel::basis_in(int d) {
    auto it = basis_cache_.find(d);
    if (it != basis_cache_.end()) return it->second;
    if (d > max_degree_) throw TruncationError("degree " + std::to_string(d) + " outside the model window");
    std::vector<Id> out;
    if (d >= 1) out = free_->basis_window(gens_, d);
    return basis_cache_.emplace(d, std::move(out)).first->second;
}

std::vector<TreeId> QuasiFreeModel::dd_failures() {
    std::vector<TreeId> bad;
    for (TreeId g : gens_)
        if (!differential_of(differential(g)).empty()) bad.push_back(g);
    return bad;
}

std::vector<std::pair<int, int64_t>> QuasiFreeModel::homology(int validUpTo) {
    if (validUpTo >= max_degree_)
        throw TruncationError("homology is valid only below the window top " + std::to_string(max_degree_));
    std::vector<int64_t> rank(validUpTo + 2, 0);
    for (int d = 2; d <= validUpTo + 1; ++d) {
        const std::vector<Id>& src = basis_in(d);
        std::unordered_map<Id, uint32_t> col;
        for (Id m : basis_in(d - 1)) col.emplace(m, static_cast<uint32_t>(col.size()));
        std::vector<SparseRow> rows;
        rows.reserve(src.size());
        for (Id m : src) {
            SparseRow row;
            for (auto& [k, c] : differential_mono(m)) {
                auto ci = col.find(k);
                if (ci == col.end()) throw InvariantError("differential leaves the degree basis at " + free_->name(m));
                row.emplace_back(ci->second, c);
            }
            std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
        }
        rank[d] = matrix_rank(field(), rows, static_cast<uint32_t>(col.size()));
    }
    std::vector<std::pair<int, int64_t>> out;
    for (int d = 1; d <= validUpTo; ++d)
        out.emplace_back(d, static_cast<int64_t>(basis_in(d).size()) - rank[d] - rank[d + 1]);
    return out;
}

Lin<Id> QuasiFreeModel::augmentation(const Lin<Id>& x) {
    Accum<Id> acc(field());
    for (auto& [m, c] : x) {
        const Mono& mo = free_->mono(m);
        std::vector<Id> leaves;
        bool zero = false;
        for (TreeId t : mo.args) {
            if (res_->level(t) != 0) zero = true;
            else leaves.push_back(res_->tree(t).leaf);
        }
        if (!zero) acc.add(A_.act(mo.label, leaves), c);
    }
    return acc.take();
}

std::string QuasiFreeModel::element_name(const Lin<Id>& x) {
    DgElement e;
    for (auto& [m, c] : x) e.add(field(), free_->name(m), c);
    return e.format(field());
}

std::string QuasiFreeModel::dump() {
    std::ostringstream os;
    for (TreeId g : gens_)
        os << gen_name(g) << " level=" << res_->level(g) << " degree=" << gen_degree(g) << " tree=" << res_->name(g)
           << "\n";
    for (TreeId g : gens_) os << "d " << gen_name(g) << " = " << element_name(differential(g)) << "\n";
    return os.str();
}

bool HomologyReport::ok() const {
    for (auto& r : rows)
        if (!r.ok()) return false;
    return !rows.empty();
}

std::string HomologyReport::format() const {
    std::ostringstream os;
    for (auto& r : rows)
        os << "H_" << r.degree << " model=" << r.model << " target=" << r.target << " " << (r.ok() ? "OK" : "FAIL")
           << "\n";
    for (auto& n : notes) os << "# " << n << "\n";
    return os.str();
}

HomologyReport verify_resolution(const AlgebraPresentation& p, OperadMode mode, int max_degree) {
    AlgebraModel A(p, max_degree);
    QuasiFreeModel M(A, mode, max_degree);
    HomologyReport rep;
    rep.valid_up_to = max_degree - 1;
    if (mode == OperadMode::EUnitary) rep.rows.push_back({0, 1, 1});
    auto model = M.homology(max_degree - 1);
    auto target = A.homology(max_degree - 1);
    for (size_t k = 0; k < model.size(); ++k) rep.rows.push_back({model[k].first, model[k].second, target[k].second});
    rep.notes.push_back("mode " + mode_name(mode) + ", window D=" + std::to_string(max_degree) +
                        ", homology valid through degree " + std::to_string(max_degree - 1));
    if (mode == OperadMode::EUnitary) rep.notes.push_back("degree 0 row is the adjoined unit line of A_+");
    return rep;
}

}  // namespace eres

namespace eres {

CheckReport model_augmentation(QuasiFreeModel& M) {
    CheckReport rep;
    AlgebraModel& A = M.algebra();
    const Field& f = M.field();
    bool chain = true;
    for (int d = 1; d <= M.max_degree(); ++d)
        for (Id m : M.basis_in(d)) {
            Lin<Id> lhs = M.augmentation(M.differential_of({{m, f.one()}}));
            Accum<Id> acc(f);
            for (auto& [a, c] : M.augmentation({{m, f.one()}})) acc.add(A.diff(a), c);
            if (lhs != acc.take()) {
                chain = false;
                rep.fail("augmentation chain map", M.free().name(m));
            }
        }
    rep.check("augmentation commutes with the differentials", chain);
    return rep;
}

// ---- skeletal coend ---------------------------------------------------------------

CoendSkeleton::CoendSkeleton(Resolution& res, int N, int max_degree) : res_(res), N_(N), max_degree_(max_degree) {
    if (N < 0) throw std::invalid_argument("skeletal dimension must be non-negative");
    framed_ = std::make_unique<FramedAlgebra>(
        res_.field(), [this](Id t) { return res_.degree(t); }, [this](Id t) { return res_.name(t); });
    for (int n = 0; n <= N_; ++n)
        for (TreeId t : res_.tree_basis(n, max_degree_))
            for (uint32_t mask = 1; mask < (1u << (n + 1)); ++mask)
                if (res_.degree(t) + std::popcount(mask) - 1 <= max_degree_) gens_.push_back(framed_->framed(t, n, mask));
    size_t count = framed_->gen_count();
    FreeAlgebra& R = res_.res();
    for (int n = 0; n <= N_; ++n)
        for (int k = 0; k <= N_; ++k)
            for (const MonotoneMap& u : MonotoneMap::all(k, n)) {
                if (k == n && u == MonotoneMap::identity(n)) continue;
                for (TreeId t : res_.tree_basis(n, max_degree_)) {
                    Lin<Id> img = res_.res_operator(u, R.gen_element(t));
                    for (uint32_t mask = 1; mask < (1u << (k + 1)); ++mask) {
                        int deg = res_.degree(t) + std::popcount(mask) - 1;
                        if (deg > max_degree_) continue;
                        Lin<Id> rel = f_sharp(R, img, k, mask, *framed_);
                        rel = lin_scale(res_.field(), rel, res_.field().neg(res_.field().one()));
                        if (auto face = pushforward_face(u, SimplexFace::from_mask(k, mask)))
                            rel = lin_add(res_.field(), rel, framed_->element(t, n, face->mask()), res_.field().one());
                        if (rel.empty()) continue;
                        relations_.push_back(std::move(rel));
                        relation_degrees_.push_back(deg);
                    }
                }
            }
    if (framed_->gen_count() != count) throw InvariantError("coend relations leave the framed generator window");
}

const std::vector<Id>& CoendSkeleton::basis_in(int d) {
    auto it = basis_cache_.find(d);
    if (it != basis_cache_.end()) return it->second;
    std::vector<Id> out;
    if (d >= 1 && d <= max_degree_) out = framed_->algebra().basis_window(gens_, d);
    return basis_cache_.emplace(d, std::move(out)).first->second;
}

namespace {

SparseRow to_row(const Lin<Id>& x) {
    SparseRow r(x.begin(), x.end());
    return r;
}

// Ordered tuples of generators with the given total degree.
void ordered_tuples(const std::map<int, std::vector<Id>>& by_degree, int count, int total, std::vector<Id>& cur,
                    const std::function<void(const std::vector<Id>&)>& emit) {
    if (count == 0) {
        if (total == 0) emit(cur);
        return;
    }
    for (auto& [d, gs] : by_degree) {
        if (d > total - (count - 1)) break;
        for (Id g : gs) {
            cur.push_back(g);
            ordered_tuples(by_degree, count - 1, total - d, cur, emit);
            cur.pop_back();
        }
    }
}

}  // namespace

RowSpan& CoendSkeleton::ideal(int d) {
    auto it = ideal_cache_.find(d);
    if (it != ideal_cache_.end()) return *it->second;
    const Field& f = res_.field();
    auto span = std::make_unique<RowSpan>(f);
    FreeAlgebra& F = framed_->algebra();
    Labels& L = Labels::get();
    std::map<int, std::vector<Id>> by_degree;
    for (Id g : gens_) by_degree[framed_->degree(g)].push_back(F.generator(g));
    for (size_t i = 0; i < relations_.size(); ++i) {
        int e = relation_degrees_[i];
        if (e > d) continue;
        if (e == d) {
            span->insert(to_row(relations_[i]));
            continue;
        }
        // π(R, g_2, ..., g_r) over all labels π (R in the first slot covers every slot by equivariance)
        for (int r = 2; r <= 1 + (d - e); ++r)
            for (int ep = 0; ep <= d - e - (r - 1); ++ep) {
                std::vector<LabelId> labels;
                for (const PermTuple& x : be_basis(r, ep)) labels.push_back(L.intern(x));
                std::vector<Id> cur;
                ordered_tuples(by_degree, r - 1, d - e - ep, cur, [&](const std::vector<Id>& args) {
                    std::vector<Lin<Id>> elems;
                    for (Id m : args) elems.push_back({{m, f.one()}});
                    std::vector<const Lin<Id>*> ptrs{&relations_[i]};
                    for (auto& el : elems) ptrs.push_back(&el);
                    for (LabelId pi : labels) span->insert(to_row(F.act(pi, ptrs)));
                });
            }
    }
    return *ideal_cache_.emplace(d, std::move(span)).first->second;
}

bool CoendSkeleton::in_ideal(const Lin<Id>& x, int d) {
    if (x.empty()) return true;
    if (d < 1 || d > max_degree_) return false;
    return ideal(d).contains(to_row(x));
}

int64_t CoendSkeleton::ideal_rank(int d) {
    if (d < 1 || d > max_degree_) return 0;
    return ideal(d).rank();
}

Lin<Id> CoendSkeleton::differential(const Lin<Id>& x) {
    return framed_->differential(x, [this](Id t) { return res_.tree_differential(t); });
}

CheckReport compare_model_coend(const AlgebraPresentation& p, int N, int max_degree) {
    CheckReport rep;
    AlgebraModel A(p, max_degree);
    QuasiFreeModel M(A, OperadMode::E, max_degree);
    CoendSkeleton C(M.resolution(), N, max_degree);
    FreeAlgebra& F = C.framed().algebra();
    FreeAlgebra& MF = M.free();
    const Field& f = M.field();
    Resolution& R = M.resolution();

    std::map<Id, Lin<Id>> psi_gen, phi_gen;
    auto psi = [&](const Lin<Id>& x) {
        return extend_morphism(F, MF, [&](Id g) -> const Lin<Id>& {
            auto it = psi_gen.find(g);
            if (it != psi_gen.end()) return it->second;
            const FramedGen& fg = C.framed().gen(g);
            return psi_gen.emplace(g, M.psi(fg.base, fg.mask)).first->second;
        }, x);
    };
    auto phi = [&](const Lin<Id>& x) {
        return extend_morphism(MF, F, [&](Id t) -> const Lin<Id>& {
            auto it = phi_gen.find(t);
            if (it != phi_gen.end()) return it->second;
            int n = R.level(t);
            return phi_gen.emplace(t, C.framed().element(t, n, (1u << (n + 1)) - 1)).first->second;
        }, x);
    };

    bool dims = true;
    for (int d = 1; d <= max_degree; ++d) {
        int64_t q = C.quotient_dim(d), m = static_cast<int64_t>(M.basis_in(d).size());
        rep.rows.push_back("degree " + std::to_string(d) + ": free=" + std::to_string(C.basis_in(d).size()) +
                           " relations=" + std::to_string(C.ideal_rank(d)) + " coend=" + std::to_string(q) +
                           " model=" + std::to_string(m));
        if (q != m) {
            dims = false;
            rep.fail("dimension agreement", "degree " + std::to_string(d));
        }
    }
    rep.check("dimensions of coend skeleton and model agree", dims);

    bool kills = true;
    for (size_t i = 0; i < C.relations().size(); ++i)
        if (!psi(C.relations()[i]).empty()) {
            kills = false;
            rep.fail("psi vanishes on relations", C.framed().element_name(C.relations()[i]));
        }
    rep.check("psi vanishes on the coend relations", kills);

    bool closed = true;
    for (size_t i = 0; i < C.relations().size(); ++i) {
        Lin<Id> dr = C.differential(C.relations()[i]);
        if (!C.in_ideal(dr, C.relation_degree(i) - 1)) {
            closed = false;
            rep.fail("relations closed under the differential", C.framed().element_name(C.relations()[i]));
        }
    }
    rep.check("relation span is closed under the differential", closed);

    bool psiphi = true;
    for (int d = 1; d <= max_degree; ++d)
        for (Id m : M.basis_in(d)) {
            Lin<Id> x{{m, f.one()}};
            if (psi(phi(x)) != x) {
                psiphi = false;
                rep.fail("psi phi = id", MF.name(m));
            }
        }
    rep.check("psi phi = id on the model", psiphi);

    bool phipsi = true;
    for (int d = 1; d <= max_degree; ++d)
        for (Id m : C.basis_in(d)) {
            Lin<Id> x{{m, f.one()}};
            Lin<Id> diff = lin_add(f, phi(psi(x)), x, f.neg(f.one()));
            if (!C.in_ideal(diff, d)) {
                phipsi = false;
                rep.fail("phi psi = id modulo relations", F.name(m));
            }
        }
    rep.check("phi psi = id on the coend skeleton", phipsi);

    bool chain = true;
    for (Id g : C.generators()) {
        Lin<Id> x = F.gen_element(g);
        if (psi(C.differential(x)) != M.differential_of(psi(x))) {
            chain = false;
            rep.fail("psi chain map", C.framed().gen_name(g));
        }
    }
    rep.check("psi commutes with the differentials", chain);
    return rep;
}

// ---- commutative pushforward ---------------------------------------------------------

CheckReport com_pushforward(const AlgebraPresentation& p, int max_degree) {
    if (!p.field.rational()) throw ModeError("the commutative pushforward needs characteristic zero");
    CheckReport rep;
    AlgebraModel A(p, max_degree);
    QuasiFreeModel E(A, OperadMode::E, max_degree);
    QuasiFreeModel C(A, OperadMode::Com, max_degree);
    Resolution& RE = E.resolution();
    Resolution& RC = C.resolution();
    const Field& f = A.field();
    Labels& L = Labels::get();

    std::unordered_map<TreeId, std::pair<TreeId, Scalar>> tree_cache;
    std::function<std::pair<TreeId, Scalar>(TreeId)> push_tree = [&](TreeId t) -> std::pair<TreeId, Scalar> {
        auto it = tree_cache.find(t);
        if (it != tree_cache.end()) return it->second;
        std::pair<TreeId, Scalar> out{0, f.zero()};
        if (RE.level(t) == 0) {
            out = {RC.leaf(RE.tree(t).leaf), f.one()};
        } else if (L.degree(RE.label(t)) == 0) {
            Scalar c = f.one();
            std::vector<TreeId> kids;
            for (TreeId ch : RE.children(t)) {
                auto [u, s] = push_tree(ch);
                c = f.mul(c, s);
                kids.push_back(u);
            }
            if (!f.is_zero(c)) {
                auto [u, s] = RC.node(L.unit(static_cast<int>(kids.size())), kids);
                out = {u, f.mul(c, s)};
            }
        }
        tree_cache.emplace(t, out);
        return out;
    };
    std::map<Id, Lin<Id>> gen_img;
    auto push = [&](const Lin<Id>& x) {
        Accum<Id> acc(f);
        for (auto& [m, c] : x) {
            const Mono mo = E.free().mono(m);
            if (L.degree(mo.label) > 0) continue;
            std::vector<const Lin<Id>*> elems;
            for (TreeId t : mo.args) {
                auto it = gen_img.find(t);
                if (it == gen_img.end()) {
                    auto [u, s] = push_tree(t);
                    Lin<Id> v;
                    if (!f.is_zero(s)) v = lin_scale(f, C.free().gen_element(u), s);
                    it = gen_img.emplace(t, std::move(v)).first;
                }
                elems.push_back(&it->second);
            }
            C.free().act_into(acc, L.unit(static_cast<int>(mo.args.size())), elems, c);
        }
        return acc.take();
    };

    std::set<TreeId> native(C.generators().begin(), C.generators().end());
    std::map<int, std::set<TreeId>> hit;
    bool gens_ok = true;
    for (TreeId g : E.generators()) {
        auto [u, s] = push_tree(g);
        if (f.is_zero(s)) continue;
        if (!native.count(u)) {
            gens_ok = false;
            rep.fail("generator image is a native com generator", E.gen_name(g) + " tree=" + RE.name(g));
            continue;
        }
        hit[C.gen_degree(u)].insert(u);
    }
    rep.check("pushed-forward generators are native com generators", gens_ok);

    bool dims = true;
    for (int d = 1; d <= max_degree; ++d) {
        int64_t ne = 0, nc = 0;
        for (TreeId g : E.generators()) ne += E.gen_degree(g) == d;
        for (TreeId g : C.generators()) nc += C.gen_degree(g) == d;
        int64_t nh = hit.count(d) ? static_cast<int64_t>(hit[d].size()) : 0;
        rep.rows.push_back("degree " + std::to_string(d) + ": e-generators=" + std::to_string(ne) +
                           " pushed-forward=" + std::to_string(nh) + " com-generators=" + std::to_string(nc));
        if (nh != nc) {
            dims = false;
            rep.fail("generator dimensions", "degree " + std::to_string(d));
        }
    }
    rep.check("pushed-forward generators span the com model per degree", dims);

    bool tables = true;
    for (TreeId g : E.generators()) {
        Lin<Id> lhs = push(E.differential(g));
        Lin<Id> rhs = C.differential_of(push(E.free().gen_element(g)));
        if (lhs != rhs) {
            tables = false;
            rep.fail("differential tables agree", E.gen_name(g) + " tree=" + RE.name(g));
        }
    }
    rep.check("pushed-forward differential equals the com differential", tables);
    return rep;
}

// ---- unitary identification ------------------------------------------------------------

namespace {

// Monomials of Ε_+(k·u ⊕ K) in one degree with at most max_u copies of the
// degree-0 generator u (encoded as -1); arity 0 is the unit.
struct UnitaryMono {
    LabelId label;  // unused for arity 0
    std::vector<int64_t> args;
    bool operator<(const UnitaryMono& o) const { return std::tie(label, args) < std::tie(o.label, o.args); }
};

std::vector<UnitaryMono> unitary_window(const std::vector<std::pair<int64_t, int>>& K, int d, int max_u) {
    Labels& L = Labels::get();
    std::vector<UnitaryMono> out;
    if (d == 0) out.push_back({L.intern(PermTuple{{Perm{}}}), {}});
    std::map<int, std::vector<int64_t>> by_degree;
    std::map<int64_t, int> degree_of;
    for (auto& [b, deg] : K) {
        by_degree[deg].push_back(b);
        degree_of[b] = deg;
    }
    for (int cu = 0; cu <= max_u; ++cu)
        for (int k = 0; k <= d; ++k) {
            int r = cu + k;
            if (r == 0) continue;
            // ordered K-tuples of length k, then positions of the u's, then labels
            std::vector<std::vector<int64_t>> tuples;
            std::vector<int64_t> cur;
            std::function<void(int, int)> rec = [&](int left, int budget) {
                if (left == 0) {
                    tuples.push_back(cur);
                    return;
                }
                for (auto& [deg, bs] : by_degree) {
                    if (deg > budget) break;
                    for (int64_t b : bs) {
                        cur.push_back(b);
                        rec(left - 1, budget - deg);
                        cur.pop_back();
                    }
                }
            };
            rec(k, d);
            for (auto& tup : tuples) {
                int sum = 0;
                for (int64_t b : tup) sum += degree_of[b];
                int e = d - sum;
                auto labels = be_orbit_basis(r, e);
                if (labels.empty()) continue;
                std::vector<bool> sel(r, false);
                std::fill(sel.begin(), sel.begin() + cu, true);
                std::sort(sel.begin(), sel.end());
                do {
                    std::vector<int64_t> args;
                    size_t j = 0;
                    for (int s = 0; s < r; ++s) args.push_back(sel[s] ? -1 : tup[j++]);
                    for (auto& x : labels) out.push_back({L.intern(x), args});
                } while (std::next_permutation(sel.begin(), sel.end()));
            }
        }
    return out;
}

// Plug the unit into input p: delete p from every permutation.
std::optional<UnitaryMono> plug_unit(const UnitaryMono& m, size_t p) {
    Labels& L = Labels::get();
    const PermTuple& x = L.tuple(m.label);
    PermTuple y;
    for (const Perm& w : x.perms) {
        Perm v;
        for (int a : w)
            if (a != static_cast<int>(p) + 1) v.push_back(a > static_cast<int>(p) + 1 ? a - 1 : a);
        if (!y.perms.empty() && y.perms.back() == v) return std::nullopt;
        y.perms.push_back(v);
    }
    UnitaryMono out{L.intern(y), m.args};
    out.args.erase(out.args.begin() + static_cast<long>(p));
    return out;
}

}  // namespace

CheckReport unitize_check(const AlgebraPresentation& p, int max_level, int max_degree) {
    if (p.is_zero()) throw DegenerateInput("the unitary identification needs A != 0");
    CheckReport rep;
    AlgebraModel A(p, max_degree);
    Resolution R(A);
    const Field& f = A.field();
    bool all = true;
    for (int n = 0; n <= max_level; ++n) {
        std::vector<TreeId> K = R.tree_basis(n, max_degree);
        std::vector<std::pair<int64_t, int>> Kd;
        for (TreeId t : K) Kd.emplace_back(t, R.degree(t));
        for (int d = 0; d <= max_degree; ++d) {
            int64_t route_a = (d == 0 ? 1 : 0) + (d >= 1 ? static_cast<int64_t>(R.res().basis_window(K, d).size()) : 0);
            std::vector<UnitaryMono> win = unitary_window(Kd, d, 2);
            std::map<UnitaryMono, uint32_t> col;
            for (auto& m : win) col.emplace(m, static_cast<uint32_t>(col.size()));
            RowSpan span(f);
            bool closed = true;
            for (auto& m : win)
                for (size_t q = 0; q < m.args.size(); ++q) {
                    if (m.args[q] != -1) continue;
                    SparseRow row{{col.at(m), f.one()}};
                    if (auto y = plug_unit(m, q)) {
                        auto it = col.find(*y);
                        if (it == col.end()) {
                            closed = false;
                            continue;
                        }
                        row.emplace_back(it->second, f.neg(f.one()));
                        std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
                    }
                    span.insert(row);
                }
            int64_t route_b = static_cast<int64_t>(col.size()) - span.rank();
            bool ok = closed && route_a == route_b;
            rep.rows.push_back("level " + std::to_string(n) + " degree " + std::to_string(d) +
                               ": Res_n(A)+unit=" + std::to_string(route_a) + " Res+_n(A+)=" + std::to_string(route_b) +
                               (ok ? " OK" : " FAIL"));
            if (!ok) {
                all = false;
                rep.fail("unitary identification", "level " + std::to_string(n) + " degree " + std::to_string(d));
            }
        }
    }
    rep.check("Res+(A+) = Res(A)+ on the window", all);
    return rep;
}

}  // namespace eres
