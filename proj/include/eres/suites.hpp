#pragma once

#include "eres/realization.hpp"
#include "eres/report.hpp"

namespace eres {

// ∂² = 0, units, equivariance, ∘_i-associativity and the Leibniz rule on
// E(r)_d for r ≤ max_arity (composites included), d ≤ max_degree.
CheckReport operad_axiom_suite(const Field& f, int max_arity, int max_degree);

// Coaction on N_*(Δ^n): unit, Alexander–Whitney in arity 2, chain-map and
// operad-compatibility identities.
CheckReport coaction_suite(const Field& f, int max_dim, int max_arity, int max_degree);

// Simplicial identities of Res_•(A) on tree bases of level ≤ max_level, the
// behaviour of faces and degeneracies on generators, and the latching split.
CheckReport simplicial_suite(Resolution& R, int max_level, int max_degree);

// Cosimplicial identities of A ⊗ Δ^•, f^♯ as a chain map natural in Δ,
// functoriality of frame_map, and adjoint roundtrips on sampled maps.
CheckReport framing_suite(const Field& f, int samples, uint32_t seed);

}  // namespace eres
