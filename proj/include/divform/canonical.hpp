#pragma once

#include "divform/operator_nf.hpp"

#include <map>
#include <string>
#include <utility>

namespace divform {

enum class op_class { self, skew };

// Symmetric tensor with matrix entries, stored one component per
// multi-index (partials commute, so the counts vector is the canonical
// representative of an index tuple class).
using tensor_map = std::map<multi_index, matrix_poly>;

// The canonical divergence form: lists of symmetric tensors S₍ᵢ₎ (order
// 2i, flanked by i derivatives on each side) and A₍ᵢ₎ (order 2i+1, the
// odd blocks ∇ⁱ(∇_cA + A∇_c)∇ⁱ).
struct canonical_form {
    op_class cls = op_class::self;
    int dim = 1;
    int rank = 1;
    std::map<int, tensor_map> s_list;
    std::map<int, tensor_map> a_list;

    bool operator==(const canonical_form&) const = default;
};

// Σᵢ ∇ⁱS₍ᵢ₎∇ⁱ + Σᵢ ∇ⁱ(∇_cA₍ᵢ₎ + A₍ᵢ₎∇_c)∇ⁱ in normal form.
operator_nf expand_canonical(const canonical_form& c);

// Single blocks; expand_canonical sums these, and the peeling loop
// subtracts them one at a time.
operator_nf expand_s_block(int dim, int rank, int i, const tensor_map& tensor);
operator_nf expand_a_block(int dim, int rank, int i, const tensor_map& tensor);

// Peel the canonical form off a verified self-/skew-adjoint operator.
// Throws "not self-adjoint" / "not skew-adjoint" when the class check
// fails and "symmetry violation" if a top symbol breaks C = ε(−1)^k Cᵀ.
canonical_form extract_canonical(const operator_nf& L, op_class cls);

// (extract(L₊, self), extract(L₋, skew))
std::pair<canonical_form, canonical_form> canonical_pair(const operator_nf& L);

// L − mult(apply(L, 1)); rank 1 only
operator_nf strip_constant_part(const operator_nf& L);

// Q^{ab} with L = Σ_{ab} ∂_a ∘ Q^{ab} ∘ ∂_b, stored on sorted pairs a ≤ b.
struct divergence_factor {
    int dim = 1;
    int rank = 1;
    std::map<std::pair<int, int>, operator_nf> q;

    bool operator==(const divergence_factor&) const = default;
};

// Requires rank 1, self-adjoint, apply(L,1) = 0 and order ≥ 2.
divergence_factor factor_divergence(const operator_nf& L);

// Σ_{ab} ∂_a ∘ Q^{ab} ∘ ∂_b, for checking the factorization
operator_nf expand_divergence(const divergence_factor& f);

std::string to_string(const canonical_form& c, const session& s);
canonical_form parse_canonical(const session& s, std::string_view text);

std::string to_string(const divergence_factor& f, const session& s);

} // namespace divform
