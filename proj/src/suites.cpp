#include "eres/suites.hpp"

#include <bit>
#include <random>

namespace eres {

namespace {

OperadElement single(const Field& f, const PermTuple& x) { return {{x, f.one()}}; }

OperadElement act_element(const Field& f, const OperadElement& x, const Perm& g) {
    OperadElement out;
    for (auto& [t, c] : x) {
        Scalar& v = out[sigma_act(t, g)];
        v = f.add(v, c);
    }
    for (auto it = out.begin(); it != out.end();) it = f.is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

OperadElement add_elements(const Field& f, OperadElement a, const OperadElement& b, Scalar cb) {
    for (auto& [t, c] : b) {
        Scalar& v = a[t];
        v = f.add(v, f.mul(c, cb));
    }
    for (auto it = a.begin(); it != a.end();) it = f.is_zero(it->second) ? a.erase(it) : std::next(it);
    return a;
}

// (x·g) ∘_i y = (x ∘_j y)·G with j = g^{-1}(i): G relabels the values of the composite.
Perm left_block(const Perm& g, int i, int s) {
    int r = static_cast<int>(g.size());
    int j = 0;
    for (int a = 1; a <= r; ++a)
        if (g[a - 1] == i) j = a;
    auto shift = [&](int v) { return v > i ? v + s - 1 : v; };
    Perm G(r + s - 1);
    for (int a = 1; a <= r + s - 1; ++a) {
        if (a < j)
            G[a - 1] = shift(g[a - 1]);
        else if (a < j + s)
            G[a - 1] = i + (a - j);
        else
            G[a - 1] = shift(g[a - s]);
    }
    return G;
}

int inverse_at(const Perm& g, int i) {
    for (size_t a = 0; a < g.size(); ++a)
        if (g[a] == i) return static_cast<int>(a) + 1;
    return 0;
}

}  // namespace

CheckReport operad_axiom_suite(const Field& f, int max_arity, int max_degree) {
    CheckReport rep;
    std::string tag = " (char " + std::to_string(f.characteristic()) + ")";
    size_t count = 0;

    bool dd = true;
    for (int r = 1; r <= max_arity; ++r)
        for (int d = 0; d <= max_degree; ++d)
            for (const PermTuple& x : be_basis(r, d)) {
                ++count;
                if (!operad_boundary(f, operad_boundary(f, single(f, x))).empty()) {
                    dd = false;
                    rep.fail("boundary squares to zero", x.name());
                }
            }
    rep.check("d^2 = 0 on " + std::to_string(count) + " basis elements" + tag, dd);

    bool unit = true;
    OperadElement e1 = single(f, PermTuple::unit(1));
    for (int r = 1; r <= max_arity; ++r)
        for (int d = 0; d <= max_degree; ++d)
            for (const PermTuple& x : be_basis(r, d)) {
                OperadElement X = single(f, x);
                if (be_compose_i(f, e1, 1, X) != X) {
                    unit = false;
                    rep.fail("left unit", x.name());
                }
                for (int i = 1; i <= r; ++i)
                    if (be_compose_i(f, X, i, e1) != X) {
                        unit = false;
                        rep.fail("right unit", x.name() + " at slot " + std::to_string(i));
                    }
            }
    rep.check("unit axioms" + tag, unit);

    bool equi = true, leibniz = true;
    for (int r = 2; r <= max_arity; ++r)
        for (int s = 2; r + s - 1 <= max_arity; ++s)
            for (int p = 0; p <= max_degree; ++p)
                for (int q = 0; p + q <= max_degree; ++q)
                    for (const PermTuple& x : be_basis(r, p))
                        for (const PermTuple& y : be_basis(s, q)) {
                            OperadElement X = single(f, x), Y = single(f, y);
                            for (int i = 1; i <= r; ++i) {
                                OperadElement xy = be_compose_i(f, X, i, Y);
                                std::string where = x.name() + " o_" + std::to_string(i) + " " + y.name();
                                OperadElement lhs = operad_boundary(f, xy);
                                OperadElement rhs = add_elements(f, be_compose_i(f, operad_boundary(f, X), i, Y),
                                                                 be_compose_i(f, X, i, operad_boundary(f, Y)), f.sign(p));
                                if (lhs != rhs) {
                                    leibniz = false;
                                    rep.fail("Leibniz rule", where);
                                }
                                for (const Perm& tau : all_perms(s)) {
                                    OperadElement a = be_compose_i(f, X, i, act_element(f, Y, tau));
                                    OperadElement b = act_element(f, xy, perm_compose_i(perm_identity(r), i, tau));
                                    if (a != b) {
                                        equi = false;
                                        rep.fail("equivariance in the inner operation", where + " by " + perm_name(tau));
                                    }
                                }
                                for (const Perm& g : all_perms(r)) {
                                    int j = inverse_at(g, i);
                                    OperadElement a = be_compose_i(f, act_element(f, X, g), i, Y);
                                    OperadElement b = act_element(f, be_compose_i(f, X, j, Y), left_block(g, i, s));
                                    if (a != b) {
                                        equi = false;
                                        rep.fail("equivariance in the outer operation", where + " by " + perm_name(g));
                                    }
                                }
                            }
                        }
    rep.check("Leibniz rule for partial composition" + tag, leibniz);
    rep.check("equivariance of partial composition" + tag, equi);

    bool assoc = true;
    size_t triples = 0;
    for (int r = 2; r <= max_arity; ++r)
        for (int s = 2; r + s - 1 <= max_arity; ++s)
            for (int t = 2; r + s + t - 2 <= max_arity; ++t)
                for (int p = 0; p <= max_degree; ++p)
                    for (int q = 0; p + q <= max_degree; ++q)
                        for (int u = 0; p + q + u <= max_degree; ++u)
                            for (const PermTuple& x : be_basis(r, p))
                                for (const PermTuple& y : be_basis(s, q))
                                    for (const PermTuple& z : be_basis(t, u)) {
                                        ++triples;
                                        OperadElement X = single(f, x), Y = single(f, y), Z = single(f, z);
                                        std::string who = x.name() + ", " + y.name() + ", " + z.name();
                                        for (int i = 1; i <= r; ++i) {
                                            OperadElement xy = be_compose_i(f, X, i, Y);
                                            for (int j = 1; j <= s; ++j)
                                                if (be_compose_i(f, xy, i + j - 1, Z) != be_compose_i(f, X, i, be_compose_i(f, Y, j, Z))) {
                                                    assoc = false;
                                                    rep.fail("sequential associativity", who);
                                                }
                                            for (int k = i + 1; k <= r; ++k) {
                                                OperadElement lhs = be_compose_i(f, xy, k + s - 1, Z);
                                                OperadElement rhs = be_compose_i(f, be_compose_i(f, X, k, Z), i, Y);
                                                if (lhs != add_elements(f, {}, rhs, f.sign(q * u))) {
                                                    assoc = false;
                                                    rep.fail("parallel associativity", who);
                                                }
                                            }
                                        }
                                    }
    rep.check("o_i-associativity on " + std::to_string(triples) + " triples" + tag, assoc);
    return rep;
}

namespace {

ChainTensorElement add_tensors(const Field& f, ChainTensorElement a, const ChainTensorElement& b, Scalar cb) {
    for (auto& [t, c] : b) {
        Scalar& v = a[t];
        v = f.add(v, f.mul(c, cb));
    }
    for (auto it = a.begin(); it != a.end();) it = f.is_zero(it->second) ? a.erase(it) : std::next(it);
    return a;
}

}  // namespace

CheckReport coaction_suite(const Field& f, int max_dim, int max_arity, int max_degree) {
    CheckReport rep;
    std::string tag = " (char " + std::to_string(f.characteristic()) + ")";
    std::vector<SimplexFace> faces;
    for (int m = 0; m <= max_dim; ++m)
        for (const SimplexFace& c : face_basis(max_dim, m)) faces.push_back(c);

    bool unit = true, aw = true;
    for (const SimplexFace& c : faces) {
        if (be_coaction(f, single(f, PermTuple::unit(1)), c) != ChainTensorElement{{{c}, f.one()}}) {
            unit = false;
            rep.fail("unary coaction is the identity", c.name());
        }
        ChainTensorElement diag, swapped;
        for (auto& [a, b] : aw_terms(c)) {
            diag[{a, b}] = f.one();
            swapped[{b, a}] = f.sign(a.dim() * b.dim());
        }
        if (be_coaction(f, single(f, PermTuple::unit(2)), c) != diag ||
            be_coaction(f, single(f, PermTuple{{{2, 1}}}), c) != swapped) {
            aw = false;
            rep.fail("arity-2 degree-0 coaction is the Alexander-Whitney diagonal", c.name());
        }
    }
    rep.check("unit coaction" + tag, unit);
    rep.check("Alexander-Whitney diagonal in arity 2" + tag, aw);

    bool chain = true;
    size_t count = 0;
    for (int r = 1; r <= max_arity; ++r)
        for (int d = 0; d <= max_degree; ++d)
            for (const PermTuple& x : be_basis(r, d))
                for (const SimplexFace& c : faces) {
                    ++count;
                    OperadElement X = single(f, x);
                    ChainTensorElement lhs = tensor_boundary(f, be_coaction(f, X, c));
                    ChainTensorElement rhs = be_coaction(f, operad_boundary(f, X), c);
                    for (auto& [g, s] : boundary_terms(c))
                        rhs = add_tensors(f, rhs, be_coaction(f, X, g), f.mul(f.sign(d), f.from_int(s)));
                    if (lhs != rhs) {
                        chain = false;
                        rep.fail("coaction chain map", x.name() + " on " + c.name());
                    }
                }
    rep.check("coaction is a chain map on " + std::to_string(count) + " pairs" + tag, chain);

    bool compat = true;
    count = 0;
    for (int r = 2; r <= max_arity; ++r)
        for (int s = 2; r + s - 1 <= max_arity; ++s)
            for (int p = 0; p <= max_degree; ++p)
                for (int q = 0; p + q <= max_degree; ++q)
                    for (const PermTuple& x : be_basis(r, p))
                        for (const PermTuple& y : be_basis(s, q))
                            for (const SimplexFace& c : faces)
                                for (int i = 1; i <= r; ++i) {
                                    ++count;
                                    OperadElement X = single(f, x), Y = single(f, y);
                                    ChainTensorElement lhs = be_coaction(f, be_compose_i(f, X, i, Y), c);
                                    ChainTensorElement rhs;
                                    for (auto& [t, a] : be_coaction(f, X, c)) {
                                        int pre = 0;
                                        for (int k = 0; k < i - 1; ++k) pre += t[k].dim();
                                        for (auto& [inner, b] : be_coaction(f, Y, t[i - 1])) {
                                            ChainTensor z(t.begin(), t.begin() + (i - 1));
                                            z.insert(z.end(), inner.begin(), inner.end());
                                            z.insert(z.end(), t.begin() + i, t.end());
                                            Scalar& v = rhs[z];
                                            v = f.add(v, f.mul(f.mul(a, b), f.sign(p * q + q * pre)));
                                        }
                                    }
                                    rhs = add_tensors(f, {}, rhs, f.one());
                                    if (lhs != rhs) {
                                        compat = false;
                                        rep.fail("operad compatibility of the coaction",
                                                 x.name() + " o_" + std::to_string(i) + " " + y.name() + " on " + c.name());
                                    }
                                }
    rep.check("coaction is compatible with o_i on " + std::to_string(count) + " cases" + tag, compat);
    return rep;
}

CheckReport simplicial_suite(Resolution& R, int max_level, int max_degree) {
    CheckReport rep;
    FreeAlgebra& F = R.res();
    bool ids = true;
    auto expect = [&](const Lin<Id>& a, const Lin<Id>& b, const std::string& rule, TreeId t) {
        if (a != b) {
            ids = false;
            rep.fail(rule, R.name(t));
        }
    };
    for (int n = 0; n <= max_level; ++n)
        for (TreeId t : R.tree_basis(n, max_degree)) {
            Lin<Id> x = F.gen_element(t);
            std::vector<Lin<Id>> face(n + 1), deg(n + 1);
            if (n >= 1)
                for (int i = 0; i <= n; ++i) face[i] = R.res_face(i, x);
            for (int j = 0; j <= n; ++j) deg[j] = R.res_degeneracy(j, x);
            // d_i d_j = d_{j-1} d_i (i < j)
            if (n >= 2)
                for (int j = 1; j <= n; ++j)
                    for (int i = 0; i < j; ++i)
                        expect(R.res_face(i, face[j]), R.res_face(j - 1, face[i]), "d_i d_j = d_{j-1} d_i", t);
            // s_i s_j = s_{j+1} s_i (i <= j)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    expect(R.res_degeneracy(i, deg[j]), R.res_degeneracy(j + 1, deg[i]), "s_i s_j = s_{j+1} s_i", t);
            // d_i s_j
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    Lin<Id> lhs = R.res_face(i, deg[j]);
                    if (i == j || i == j + 1)
                        expect(lhs, x, "d_j s_j = d_{j+1} s_j = id", t);
                    else if (n >= 1 && i < j)
                        expect(lhs, R.res_degeneracy(j - 1, face[i]), "d_i s_j = s_{j-1} d_i", t);
                    else if (n >= 1)
                        expect(lhs, R.res_degeneracy(j, face[i - 1]), "d_i s_j = s_j d_{i-1}", t);
                }
            if (n == 1) expect(R.augmentation(face[0]), R.augmentation(face[1]), "augmentation coequalizes d_0, d_1", t);
        }
    rep.check("simplicial identities on Res_n, n <= " + std::to_string(max_level), ids);

    bool preserve = true;
    size_t witnesses = 0;
    for (int n = 0; n <= max_level; ++n)
        for (TreeId t : R.tree_basis(n, max_degree)) {
            Lin<Id> x = F.gen_element(t);
            auto weight_one = [&](const Lin<Id>& v) {
                for (auto& [m, c] : v)
                    if (F.weight(m) != 1) return false;
                return true;
            };
            for (int i = 1; i <= n; ++i)
                if (!weight_one(R.res_face(i, x))) {
                    preserve = false;
                    rep.fail("face d_" + std::to_string(i) + " preserves generators", R.name(t));
                }
            for (int j = 0; j <= n; ++j)
                if (!weight_one(R.res_degeneracy(j, x))) {
                    preserve = false;
                    rep.fail("degeneracy s_" + std::to_string(j) + " preserves generators", R.name(t));
                }
            if (n >= 1 && !weight_one(R.res_face(0, x))) ++witnesses;
        }
    rep.check("faces d_i (i >= 1) and degeneracies send generators to generators", preserve);
    rep.check("d_0 leaves the generators (" + std::to_string(witnesses) + " witnesses)", witnesses > 0);

    bool split = true;
    for (int n = 0; n <= max_level; ++n)
        for (const LatchingRow& row : R.latching_report(n, max_degree)) {
            rep.rows.push_back("level " + std::to_string(n) + " degree " + std::to_string(row.degree) +
                               ": L=" + std::to_string(row.dim_l) + " N=" + std::to_string(row.dim_n) +
                               " C=" + std::to_string(row.dim_c) + (row.ok() ? " OK" : " FAIL"));
            if (!row.ok()) {
                split = false;
                rep.fail("latching decomposition", "level " + std::to_string(n) + " degree " + std::to_string(row.degree));
            }
        }
    rep.check("dim L_n + dim N_n = dim C_n", split);
    return rep;
}

namespace {

FiniteChainComplex operad_complex(const Field& f, int arity, int max_degree) {
    FiniteChainComplex C;
    C.module.lo = 0;
    C.module.hi = max_degree;
    for (int d = 0; d <= max_degree; ++d)
        for (const PermTuple& x : be_basis(arity, d)) {
            C.module.basis.emplace_back(x.name(), d);
            DgElement e;
            e.degree = d - 1;
            for (auto& [y, c] : be_boundary(f, x)) e.add(f, y.name(), c);
            if (!e.zero()) C.differential[x.name()] = e;
        }
    return C;
}

}  // namespace

CheckReport framing_suite(const Field& f, int samples, uint32_t seed) {
    CheckReport rep;
    std::string tag = " (char " + std::to_string(f.characteristic()) + ")";
    const int maxdeg = 4;
    AlgebraPresentation p = parse_presentation("field " + std::to_string(f.characteristic()) +
                                               "\nalgebra commutative\ngenerator x 1\n");
    AlgebraModel A(p, maxdeg);
    Resolution R(A);
    FramedAlgebra FA(
        f, [&](Id t) { return R.degree(t); }, [&](Id t) { return R.name(t); });
    auto base_diff = [&](Id t) { return R.tree_differential(t); };

    // framed generators over Δ^m, m <= 2, bases of levels <= 2, degree <= maxdeg
    auto framed_gens = [&](int level, int m) {
        std::vector<Id> out;
        for (TreeId t : R.tree_basis(level, maxdeg))
            for (uint32_t mask = 1; mask < (1u << (m + 1)); ++mask)
                if (R.degree(t) + std::popcount(mask) - 1 <= maxdeg) out.push_back(FA.framed(t, m, mask));
        return out;
    };

    // cosimplicial identities of A ⊗ Δ^• (structure maps u_*)
    bool cosimp = true, chain_u = true;
    size_t checked = 0;
    auto apply = [&](const MonotoneMap& u, const Lin<Id>& x) { return frame_structure_map(FA, u, x); };
    auto same = [&](const Lin<Id>& a, const Lin<Id>& b, const std::string& rule, Id g) {
        ++checked;
        if (a != b) {
            cosimp = false;
            rep.fail(rule, FA.gen_name(g));
        }
    };
    for (int m = 0; m <= 2; ++m)
        for (Id g : framed_gens(1, m)) {
            Lin<Id> x = FA.algebra().gen_element(g);
            // d^j d^i = d^i d^{j-1} (i < j), x over Δ^{n-1}
            int n = m + 1;
            for (int j = 1; j <= n + 1; ++j)
                for (int i = 0; i < j; ++i)
                    same(apply(MonotoneMap::coface(n + 1, j), apply(MonotoneMap::coface(n, i), x)),
                         apply(MonotoneMap::coface(n + 1, i), apply(MonotoneMap::coface(n, j - 1), x)),
                         "d^j d^i = d^i d^{j-1}", g);
            // s^j s^i = s^i s^{j+1} (i <= j), x over Δ^{n+2}
            n = m - 2;
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    same(apply(MonotoneMap::codegeneracy(n, j), apply(MonotoneMap::codegeneracy(n + 1, i), x)),
                         apply(MonotoneMap::codegeneracy(n, i), apply(MonotoneMap::codegeneracy(n + 1, j + 1), x)),
                         "s^j s^i = s^i s^{j+1}", g);
            // s^j d^i, x over Δ^n
            n = m;
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    Lin<Id> lhs = apply(MonotoneMap::codegeneracy(n, j), apply(MonotoneMap::coface(n + 1, i), x));
                    Lin<Id> rhs;
                    if (i < j)
                        rhs = apply(MonotoneMap::coface(n, i), apply(MonotoneMap::codegeneracy(n - 1, j - 1), x));
                    else if (i == j || i == j + 1)
                        rhs = x;
                    else
                        rhs = apply(MonotoneMap::coface(n, i - 1), apply(MonotoneMap::codegeneracy(n - 1, j), x));
                    same(lhs, rhs, "s^j d^i identities", g);
                }
            for (int k = 0; k <= 2; ++k)
                for (const MonotoneMap& u : MonotoneMap::all(m, k)) {
                    if (FA.differential(apply(u, x), base_diff) != apply(u, FA.differential(x, base_diff))) {
                        chain_u = false;
                        rep.fail("structure map commutes with the differential", FA.gen_name(g));
                    }
                    for (int l = 0; l <= 2; ++l)
                        for (const MonotoneMap& v : MonotoneMap::all(k, l))
                            same(apply(v, apply(u, x)), apply(MonotoneMap::compose(v, u), x), "(v u)_* = v_* u_*", g);
                }
        }
    rep.check("cosimplicial identities of A⊗Δ^• on " + std::to_string(checked) + " cases" + tag, cosimp);
    rep.check("structure maps are chain maps" + tag, chain_u);

    // f^♯ for the simplicial operators f = u^*: C_n -> Ε(C_k) of Res
    bool chain_f = true, natural = true, functorial = true;
    size_t fchecked = 0;
    auto op = [&](const MonotoneMap& u) {
        return [&R, u](Id t) { return R.res_operator(u, R.res().gen_element(t)); };
    };
    for (int n = 0; n <= 2; ++n)
        for (int k = 0; k <= 2; ++k)
            for (const MonotoneMap& u : MonotoneMap::all(k, n)) {
                auto fu = op(u);
                for (int m = 0; m <= 2; ++m)
                    for (Id g : framed_gens(n, m)) {
                        ++fchecked;
                        Lin<Id> x = FA.algebra().gen_element(g);
                        Lin<Id> y = frame_map(FA, fu, R.res(), FA, x);
                        if (FA.differential(y, base_diff) != frame_map(FA, fu, R.res(), FA, FA.differential(x, base_diff))) {
                            chain_f = false;
                            rep.fail("f# is a chain map", FA.gen_name(g) + " under " + std::to_string(k) + "->" + std::to_string(n));
                        }
                        for (int l = 0; l <= 2; ++l)
                            for (const MonotoneMap& w : MonotoneMap::all(m, l))
                                if (frame_structure_map(FA, w, y) != frame_map(FA, fu, R.res(), FA, frame_structure_map(FA, w, x))) {
                                    natural = false;
                                    rep.fail("f# is natural in the simplex", FA.gen_name(g));
                                }
                        // (u∘v)^* = v^* u^*
                        for (int j = 0; j <= 2; ++j)
                            for (const MonotoneMap& v : MonotoneMap::all(j, k)) {
                                Lin<Id> lhs = frame_map(FA, op(MonotoneMap::compose(u, v)), R.res(), FA, x);
                                Lin<Id> rhs = frame_map(FA, op(v), R.res(), FA, y);
                                if (lhs != rhs) {
                                    functorial = false;
                                    rep.fail("frame_map preserves composition", FA.gen_name(g));
                                }
                            }
                        if (k == n && u == MonotoneMap::identity(n) && y != x) {
                            functorial = false;
                            rep.fail("frame_map preserves identities", FA.gen_name(g));
                        }
                    }
            }
    rep.check("f# is a chain map on " + std::to_string(fchecked) + " framed generators" + tag, chain_f);
    rep.check("f# commutes with the cosimplicial structure" + tag, natural);
    rep.check("frame_map preserves identities and composition" + tag, functorial);

    // adjunction at the dg level on sampled maps K -> B ⊗ N^*(Δ^n)
    FiniteChainComplex K = operad_complex(f, 2, 3), B = operad_complex(f, 3, 3 + 2);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-2, 2);
    int passed = 0;
    for (int s = 0; s < samples; ++s) {
        CochainValuedMap mp;
        mp.n = s % 3;
        for (auto& [k, dk] : K.module.basis)
            for (int q = 0; q <= mp.n; ++q)
                for (const SimplexFace& c : face_basis(mp.n, q)) {
                    auto targets = B.module.in_degree(dk + q);
                    for (int pick = 0; pick < 2 && !targets.empty(); ++pick) {
                        const std::string& b = targets[rng() % targets.size()];
                        Scalar v = f.from_int(coef(rng));
                        if (f.is_zero(v)) continue;
                        Scalar& slot = mp.images[k][{b, c.vertices}];
                        slot = f.add(slot, v);
                    }
                }
        AdjointVerdict v = adjoint_roundtrip(f, K, B, mp);
        if (v.ok())
            ++passed;
        else
            rep.fail("adjoint roundtrip", "sample " + std::to_string(s) + " over Δ^" + std::to_string(mp.n) + ": " + v.detail);
    }
    rep.check("adjoint roundtrip on " + std::to_string(passed) + "/" + std::to_string(samples) + " sampled maps" + tag,
              passed == samples);
    return rep;
}

}  // namespace eres
