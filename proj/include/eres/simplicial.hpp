#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eres/linear.hpp"

namespace eres {

// Non-degenerate simplex of Δ^n given by its strictly increasing vertex list.
struct SimplexFace {
    int ambient = 0;
    std::vector<int> vertices;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    uint32_t mask() const;
    std::string name() const;
    auto operator<=>(const SimplexFace&) const = default;

    static SimplexFace full(int n);
    static SimplexFace from_mask(int ambient, uint32_t mask);
};

// Weakly increasing map [k] -> [n].
struct MonotoneMap {
    int source = 0;  // k
    int target = 0;  // n
    std::vector<int> values;

    bool valid() const;
    bool injective() const;
    bool surjective() const;
    int operator()(int v) const { return values[v]; }
    bool operator==(const MonotoneMap&) const = default;

    static MonotoneMap identity(int n);
    static MonotoneMap coface(int n, int i);        // [n-1] -> [n], skips i
    static MonotoneMap codegeneracy(int n, int j);  // [n+1] -> [n], hits j twice
    // (a ∘ b)(v) = a(b(v))
    static MonotoneMap compose(const MonotoneMap& a, const MonotoneMap& b);
    static std::vector<MonotoneMap> all(int k, int n);
};

std::vector<SimplexFace> face_basis(int n, int m);

std::vector<std::pair<SimplexFace, int>> boundary_terms(const SimplexFace& s);
DgElement boundary(const Field& f, const SimplexFace& s);

// Image face if u is injective on the vertices of s, otherwise nothing.
std::optional<SimplexFace> pushforward_face(const MonotoneMap& u, const SimplexFace& s);
DgElement pushforward(const Field& f, const MonotoneMap& u, const SimplexFace& s);

std::vector<std::pair<SimplexFace, SimplexFace>> aw_terms(const SimplexFace& s);
DgElement aw_diagonal(const Field& f, const SimplexFace& s);

// Cochains: dual basis σ* sits in homological degree -dim σ.
struct CochainElement {
    int ambient = 0;
    int degree = 0;  // upper degree p
    std::map<std::vector<int>, Scalar> terms;
};

// δ(σ*) = (-1)^{p+1} Σ_τ [∂τ : σ] τ*, the sign making the trace element a cycle.
CochainElement cochain_differential(const Field& f, const CochainElement& a);
Scalar evaluate_cochain(const Field& f, const CochainElement& a, const SimplexFace& c);

// Σ_σ σ ⊗ σ* over all faces of Δ^n; names "σ ⊗ σ*".
DgElement trace_pairing(const Field& f, int n);

}  // namespace eres
