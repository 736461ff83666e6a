#pragma once

#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eres/barratt_eccles.hpp"
#include "eres/linear.hpp"

namespace eres {

using Id = uint32_t;

// Canonical monomial π(a_1,...,a_r): label first entry is the identity.
struct Mono {
    LabelId label;
    std::vector<Id> args;
    int degree;
};

struct VecHash {
    size_t operator()(const std::vector<uint32_t>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
            h ^= h >> 29;
        }
        return static_cast<size_t>(h);
    }
};

// Free Barratt–Eccles algebra Ε(K) on a generator set given by a degree
// callback. Monomials are interned; ids are stable for the table's lifetime.
class FreeAlgebra {
public:
    using DegreeFn = std::function<int(Id)>;
    using NameFn = std::function<std::string(Id)>;

    FreeAlgebra(const Field& f, DegreeFn gen_degree, NameFn gen_name = nullptr, bool commutative = false);

    // Commutative mode: the symmetric algebra on the generators (labels are the
    // identities of E(r)_0 standing for Com(r), arguments sorted by id).
    bool commutative() const { return com_; }

    const Field& field() const { return f_; }
    const Mono& mono(Id m) const { return monos_[m]; }
    int degree(Id m) const { return monos_[m].degree; }
    int weight(Id m) const { return static_cast<int>(monos_[m].args.size()); }
    int gen_degree(Id g) const { return gen_degree_(g); }
    size_t size() const { return monos_.size(); }

    // Interns an already canonical monomial.
    Id intern(LabelId label, const std::vector<Id>& args);
    // (L; args) -> ± canonical monomial (coefficient 0 when it vanishes)
    std::pair<Id, Scalar> canonical(LabelId label, const std::vector<Id>& args);
    Id generator(Id g);  // weight-one monomial (e_1; g)
    Lin<Id> gen_element(Id g) { return {{generator(g), f_.one()}}; }

    // π acting on free elements (multilinear), result canonicalized.
    void act_into(Accum<Id>& out, LabelId pi, const std::vector<const Lin<Id>*>& elems, Scalar c);
    Lin<Id> act(LabelId pi, const std::vector<const Lin<Id>*>& elems);
    // π acting on monomials of this algebra.
    void act_monos_into(Accum<Id>& out, LabelId pi, const std::vector<Id>& monos, Scalar c);

    // Free differential: internal δ on labels plus derivation with the given
    // generator differential (values in this algebra).
    Lin<Id> differential(Id m, const std::function<const Lin<Id>&(Id)>& gen_diff);

    // All canonical monomials of total degree d. Generators must have degree >= 1.
    std::vector<Id> basis_window(const std::vector<Id>& gens, int d);

    std::string name(Id m) const;

private:
    Field f_;
    bool com_ = false;
    DegreeFn gen_degree_;
    NameFn gen_name_;
    std::deque<Mono> monos_;
    std::unordered_map<std::vector<uint32_t>, Id, VecHash> index_;
    std::unordered_map<Id, Id> gen_index_;
};

// Koszul parity of arranging items of the given degrees in `order`.
int koszul_parity_of(const std::vector<int>& degs, const std::vector<int>& order);

// canonical_form on explicit data: returns the canonical label and the
// reordered argument list with the Koszul sign.
struct CanonicalForm {
    PermTuple label;
    std::vector<std::string> args;
    int sign;
};
CanonicalForm canonical_form(const PermTuple& label, const std::vector<std::pair<std::string, int>>& args);

// Splits an element of a free algebra by weight.
std::map<int, Lin<Id>> weight_decompose(const FreeAlgebra& A, const Lin<Id>& e);

// φ_f on an element of `src`: f maps generators of src to elements of `dst`.
Lin<Id> extend_morphism(FreeAlgebra& src, FreeAlgebra& dst, const std::function<const Lin<Id>&(Id)>& f,
                        const Lin<Id>& e);

// ---- presentations -----------------------------------------------------------------

enum class AlgebraKind { Commutative, Free };

struct PresentationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedStructure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlgebraPresentation {
    Field field{2};
    AlgebraKind kind = AlgebraKind::Commutative;
    std::vector<std::pair<std::string, int>> generators;
    // product of the ordered pair as written; the reversed order follows by graded commutativity
    std::map<std::pair<std::string, std::string>, DgElement> products;
    std::map<std::string, DgElement> differential;

    int index(const std::string& name) const;  // -1 if absent
    int degree(const std::string& name) const;
    // Product of two generators (commutative kind), both orders looked up.
    DgElement product(const std::string& a, const std::string& b) const;
    DgElement diff(const std::string& a) const;
    // Throws PresentationError naming the violated rule.
    void validate() const;
    bool is_zero() const { return generators.empty(); }
};

// Syntax errors carry the line number.
AlgebraPresentation parse_presentation(const std::string& text, std::optional<uint32_t> field_override = {});

// ε(x)·(iterated product) for commutative presentations.
DgElement evaluate_action(const AlgebraPresentation& A, const PermTuple& x, const std::vector<DgElement>& args);

// Presented algebra as a windowed basis with operad action; level 0 of the
// cotriple resolution. For the free kind the basis is the Ε(K) window.
class AlgebraModel {
public:
    AlgebraModel(const AlgebraPresentation& p, int max_degree);

    const AlgebraPresentation& presentation() const { return p_; }
    const Field& field() const { return p_.field; }
    bool free_kind() const { return p_.kind == AlgebraKind::Free; }
    int max_degree() const { return max_degree_; }
    int degree(Id a) const;
    std::string name(Id a) const;
    std::vector<Id> basis_in(int d) const { return d >= 0 && d <= max_degree_ ? by_degree_[d] : std::vector<Id>{}; }
    std::vector<Id> basis_up_to(int d) const;

    // x(a_1,...,a_r) in A.
    Lin<Id> act(LabelId x, const std::vector<Id>& args);
    const Lin<Id>& diff(Id a);
    // H_d(A) for 1 <= d <= validUpTo (needs validUpTo < max_degree)
    std::vector<std::pair<int, int64_t>> homology(int validUpTo);

    FreeAlgebra* free_algebra() { return free_.get(); }

private:
    AlgebraPresentation p_;
    int max_degree_;
    std::vector<std::vector<Id>> by_degree_;
    std::vector<Lin<Id>> gen_diffs_;            // on generators (as elements of A)
    std::vector<std::vector<Lin<Id>>> table_;   // commutative kind: products of basis pairs
    std::unique_ptr<FreeAlgebra> free_;         // free kind: basis ids are monomial ids
    std::unordered_map<Id, Lin<Id>> free_diffs_;
};

}  // namespace eres
