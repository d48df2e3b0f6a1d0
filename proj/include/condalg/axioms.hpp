#pragma once

// Soundness harness: instantiate the equational axioms of each system with
// every substitution drawn from a term pool and decide each instance under a
// chosen congruence.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "condalg/budget.hpp"
#include "condalg/congruence.hpp"

namespace condalg {

enum class AxiomSystem : std::uint8_t { CP, CPrp, CPcr, CPmem, CPs, CPst };

std::string axiom_system_name(AxiomSystem system);
/// Accepts the names returned by axiom_system_name. Throws Error otherwise.
AxiomSystem parse_axiom_system(std::string_view text);
/// The congruence whose completeness the system captures. Static systems
/// take sigma from the argument.
CongruenceKind matching_congruence(AxiomSystem system, const Sigma &sigma);
/// Position of the matching congruence in the chain (0 for CP, 4 for CPs/CPst).
int axiom_system_rank(AxiomSystem system);

struct AxiomScheme {
    std::string name;
    std::vector<std::string> variables;
    /// Schemes with a fixed atom are instantiated with every pool atom.
    bool has_atom_parameter = false;
};

/// The axioms and derived laws of `system`, including the base CP axioms.
std::vector<AxiomScheme> axiom_schemes(AxiomSystem system);

struct AxiomInstanceReport {
    enum class Verdict : std::uint8_t { Holds, Fails, BudgetExceeded };

    std::string axiom_name;
    /// Variable bindings in scheme order; the atom parameter, if any, is bound
    /// to `a` as an atom term.
    std::vector<std::pair<std::string, Term>> substitution;
    std::optional<Term> lhs;
    std::optional<Term> rhs;
    Verdict verdict = Verdict::Holds;
    std::string detail;

    bool holds() const noexcept { return verdict == Verdict::Holds; }
};

struct AxiomCheckOptions {
    /// Maximum number of instances per axiom. An axiom whose cross product is
    /// larger yields a single BudgetExceeded report and is skipped.
    std::uint64_t max_instances_per_axiom = 1'000'000;
    NodeBudget node_budget{};
};

/// One report per instance. Instances that exceed the node budget are reported
/// as BudgetExceeded rather than thrown. For static kinds the laws that mention
/// an atom sequence use the kind's sigma; otherwise the pool alphabet in
/// sorted order.
std::vector<AxiomInstanceReport> check_axioms(AxiomSystem system, const std::vector<Term> &pool,
                                              const CongruenceKind &kind,
                                              const AxiomCheckOptions &options = {});

} // namespace condalg
