#pragma once

#include "divform/operator_nf.hpp"
#include "divform/trig_poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace divform {

// One trig polynomial per coefficient-symbol component (symbol id plus
// concrete slot tuple). Drawn reproducibly from a seed.
struct assignment {
    std::map<std::pair<int, std::vector<int>>, trig_poly> values;
};

struct assignment_params {
    int max_freq = 3;      // max |component| of drawn frequency vectors
    int denom_bound = 16;  // coefficient denominators in [1, bound]
    int harmonics = 2;     // harmonics per drawn polynomial
};

// Concrete operator with trig-polynomial coefficients.
class concrete_operator {
  public:
    concrete_operator(int dim, int rank) : dim_(dim), rank_(rank) {}

    int dim() const { return dim_; }
    int rank() const { return rank_; }

    void add_coefficient(const multi_index& a, std::vector<trig_poly> entries);

    std::vector<trig_poly> apply(const std::vector<trig_poly>& f) const;
    trig_poly apply(const trig_poly& f) const; // rank 1

  private:
    int dim_;
    int rank_;
    std::map<multi_index, std::vector<trig_poly>, alpha_order> coeffs_; // row-major N×N
};

// Random trig polynomial; exact rational coefficients, bounded
// frequencies.
trig_poly random_trig_poly(int dim, const assignment_params& p, rng& r);

// Every symbol component used by any of the given operators gets a value.
assignment draw_assignment(const session& s, const std::vector<const operator_nf*>& ops,
                           const assignment_params& p, rng& r);

// Substitutes each jet variable by the exact derivative of its assigned
// trig polynomial. Throws "coordinate symbols unsupported on torus" and
// "unassigned symbol: NAME".
concrete_operator instantiate(const session& s, const operator_nf& L, const assignment& a);

struct trial_result {
    int trial = 0;
    rational delta; // must be exactly 0
    bool ok() const { return delta == 0; }
};

struct adjoint_report {
    std::uint64_t seed = 0;
    std::vector<trial_result> trials;
    bool passed() const {
        for (const auto& t : trials)
            if (!t.ok())
                return false;
        return true;
    }
};

// Checks ∫⟨σ, Lτ⟩ = ∫⟨A σ, τ⟩ over random assignments and sections.
// Passing A = formal adjoint of L verifies the defining identity; other
// candidates (e.g. deliberately corrupted adjoints) let tests confirm the
// oracle detects violations. Trials are pure functions of (seed, index);
// with use_parallel they run under OpenMP, and the report is identical to
// the serial one.
adjoint_report check_pair_identity(const session& s, const operator_nf& L,
                                   const operator_nf& A, int trials, std::uint64_t seed,
                                   const assignment_params& p, bool use_parallel = true);

adjoint_report check_adjoint_identity(const session& s, const operator_nf& L, int trials,
                                      std::uint64_t seed, const assignment_params& p,
                                      bool use_parallel = true);

std::string format_report(const adjoint_report& r);

} // namespace divform
