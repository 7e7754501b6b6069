#include "antimagic/cn_search.hpp"

#include "antimagic/errors.hpp"

#include <algorithm>

namespace antimagic {

std::string to_string(ConstraintKind kind) {
    switch (kind) {
    case ConstraintKind::pairwise_distinct_label: return "pairwise-distinct-label";
    case ConstraintKind::sum_collision: return "sum-collision";
    case ConstraintKind::forbidden_value: return "forbidden-value";
    case ConstraintKind::signed_collision: return "signed-collision";
    }
    return "unknown";
}

Rational LinearConstraint::evaluate(const std::vector<Rational>& assignment) const {
    Rational value = constant;
    for (const auto& [var, coeff] : terms) value += assignment[var] * coeff;
    return value;
}

std::size_t LinearConstraint::last_variable() const {
    std::size_t last = 0;
    for (const auto& [var, coeff] : terms) last = std::max(last, var);
    return last;
}

void ConstraintSystem::set_candidates(std::size_t var, std::vector<Rational> values, std::size_t required_size) {
    candidates_.at(var) = std::move(values);
    required_sizes_.at(var) = required_size;
}

bool ConstraintSystem::sizes_meet_requirement() const {
    for (std::size_t i = 0; i < candidates_.size(); ++i)
        if (candidates_[i].size() < required_sizes_[i]) return false;
    return true;
}

void ConstraintSystem::add(LinearConstraint c) {
    if (c.terms.empty()) throw ContractError("constraint references no variable");
    for (const auto& [var, coeff] : c.terms)
        if (var >= variable_count()) throw ContractError("constraint references undeclared variable");
    constraints_.push_back(std::move(c));
}

void ConstraintSystem::add_distinct(std::size_t a, std::size_t b, ConstraintKind kind) {
    add(LinearConstraint{{{a, 1}, {b, -1}}, 0, kind});
}

bool ConstraintSystem::satisfied_by(const std::vector<Rational>& assignment) const {
    if (assignment.size() != variable_count()) return false;
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const LinearConstraint& c) { return c.satisfied(assignment); });
}

SearchOutcome solve_constraints(const ConstraintSystem& cs, const SearchOptions& options) {
    SearchOutcome out;
    const std::size_t k = cs.variable_count();
    if (k == 0) {
        out.assignment = std::vector<Rational>{};
        out.exhausted = true;
        return out;
    }
    std::vector<std::vector<const LinearConstraint*>> due(k);
    for (const auto& c : cs.constraints()) due[c.last_variable()].push_back(&c);

    std::vector<Rational> assignment(k);
    std::vector<std::size_t> cursor(k, 0);
    std::size_t depth = 0;
    while (true) {
        if (cursor[depth] == cs.candidates(depth).size()) {
            // Candidates at this level used up: backtrack.
            if (depth == 0) {
                out.exhausted = true;
                return out;
            }
            cursor[depth] = 0;
            --depth;
            continue;
        }
        if (out.nodes_explored >= options.budget && !options.exhaustive_fallback) {
            out.budget_exceeded = true;
            return out;
        }
        ++out.nodes_explored;
        assignment[depth] = cs.candidates(depth)[cursor[depth]++];
        const bool ok = std::all_of(due[depth].begin(), due[depth].end(),
                                    [&](const LinearConstraint* c) { return c->satisfied(assignment); });
        if (!ok) continue;
        if (depth + 1 == k) {
            out.assignment = assignment;
            return out;
        }
        ++depth;
    }
}

namespace {

Polynomial factor(std::size_t arity, const LinearConstraint& c, bool with_constant) {
    std::vector<long> coefficients(arity + 1, 0);
    for (const auto& [var, coeff] : c.terms) coefficients[var] += coeff;
    if (with_constant) {
        if (!is_integer(c.constant)) throw ContractError("constraint constant " + to_string(c.constant) + " is not an integer");
        if (!c.constant.get_num().fits_slong_p()) throw ContractError("constraint constant out of range");
        coefficients[arity] = c.constant.get_num().get_si();
    }
    return Polynomial::linear(coefficients);
}

Polynomial product(const ConstraintSystem& cs, bool with_constant) {
    Polynomial out = Polynomial::constant(cs.variable_count(), 1);
    for (const auto& c : cs.constraints()) out *= factor(cs.variable_count(), c, with_constant);
    return out;
}

} // namespace

Polynomial constraint_polynomial(const ConstraintSystem& cs) { return product(cs, true); }

Polynomial top_degree_polynomial(const ConstraintSystem& cs) { return product(cs, false); }

std::vector<Rational> pick_candidate_sets(const std::vector<Rational>& list, std::size_t required_size,
                                          const std::string& what) {
    if (list.size() < required_size)
        throw InfeasibleInstance(what + " has " + std::to_string(list.size()) + " usable values, " +
                                 std::to_string(required_size) + " required");
    return {list.begin(), list.begin() + static_cast<std::ptrdiff_t>(required_size)};
}

} // namespace antimagic
