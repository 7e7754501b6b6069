#ifndef ANTIMAGIC_CN_SEARCH_HPP
#define ANTIMAGIC_CN_SEARCH_HPP

#include "antimagic/polynomial.hpp"
#include "antimagic/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace antimagic {

enum class ConstraintKind { pairwise_distinct_label, sum_collision, forbidden_value, signed_collision };

std::string to_string(ConstraintKind kind);

/// One linear factor of a constraint polynomial: the assignment is rejected
/// when sum_j coeff_j * x_{var_j} + constant == 0.
struct LinearConstraint {
    std::vector<std::pair<std::size_t, long>> terms;
    Rational constant;
    ConstraintKind kind = ConstraintKind::sum_collision;

    Rational evaluate(const std::vector<Rational>& assignment) const;
    bool satisfied(const std::vector<Rational>& assignment) const { return evaluate(assignment) != 0; }
    /// Largest variable index referenced; the constraint can be checked once
    /// this variable is assigned.
    std::size_t last_variable() const;
};

/// A product of linear factors over k variables together with candidate sets
/// T_i. `required_sizes[i]` is t_i + 1 for the certified monomial, which the
/// candidate sets must meet for the existence guarantee to apply.
class ConstraintSystem {
public:
    explicit ConstraintSystem(std::size_t variables = 0)
        : candidates_(variables), required_sizes_(variables, 0) {}

    std::size_t variable_count() const { return candidates_.size(); }

    void set_candidates(std::size_t var, std::vector<Rational> values, std::size_t required_size);
    const std::vector<Rational>& candidates(std::size_t var) const { return candidates_.at(var); }
    std::size_t required_size(std::size_t var) const { return required_sizes_.at(var); }
    /// Every candidate set meets its required size.
    bool sizes_meet_requirement() const;

    void add(LinearConstraint c);
    /// x_a - x_b (coefficient pair (1, -1)) shorthand.
    void add_distinct(std::size_t a, std::size_t b, ConstraintKind kind = ConstraintKind::pairwise_distinct_label);
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

    /// True when no factor vanishes at the (complete) assignment.
    bool satisfied_by(const std::vector<Rational>& assignment) const;

private:
    std::vector<std::vector<Rational>> candidates_;
    std::vector<std::size_t> required_sizes_;
    std::vector<LinearConstraint> constraints_;
};

struct SearchOptions {
    std::uint64_t budget = 10'000'000;
    /// Keep searching past the budget until the product is exhausted.
    bool exhaustive_fallback = false;
};

struct SearchOutcome {
    std::optional<std::vector<Rational>> assignment;
    std::uint64_t nodes_explored = 0;
    bool exhausted = false;        // the whole product was enumerated
    bool budget_exceeded = false;  // stopped at the budget without an answer
};

/// Depth-first search over T_0 x ... x T_{k-1}, values tried in candidate
/// order, each factor checked as soon as its last variable is fixed.
SearchOutcome solve_constraints(const ConstraintSystem& cs, const SearchOptions& options = {});

/// The product of all factors as a polynomial in the k variables. Throws
/// ContractError when a constant term is not an integer.
Polynomial constraint_polynomial(const ConstraintSystem& cs);

/// The product of the homogeneous linear parts of all factors, i.e. the
/// top-degree part of constraint_polynomial (defined for any constants).
Polynomial top_degree_polynomial(const ConstraintSystem& cs);

/// First `required_size` entries of a preference-ordered list. Throws
/// InfeasibleInstance naming `what` when the list is too short.
std::vector<Rational> pick_candidate_sets(const std::vector<Rational>& list, std::size_t required_size,
                                          const std::string& what = "list");

} // namespace antimagic

#endif
