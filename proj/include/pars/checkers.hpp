#pragma once

// Confluence checkers. Every verdict is exact: Holds and Fails carry
// replayable evidence, Unknown means a search bound ran out.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pars/dist.hpp"
#include "pars/pars.hpp"
#include "pars/tree.hpp"

namespace pars {

enum class Verdict { Holds, Fails, Unknown };

std::string to_string(Verdict v);

/// A closed peak: left ↠ᵏ meet ᵏ↞ right.
struct JoinWitness {
    ElementId root;
    PointDist left;
    PointDist right;
    CanonicalDist meet;
    std::size_t steps = 0;
};

struct Counterexample {
    std::optional<ElementId> root;
    PointDist left;
    PointDist right;
    /// check_sn: an element cycle, first element repeated at the end.
    std::vector<ElementId> cycle;
    /// check_utd: two maximal trees with non-equivalent supports.
    std::vector<CompTree> trees;
    /// Farkas multipliers or separating-invariant weights, labelled.
    std::vector<std::pair<std::string, Rational>> certificate;
    std::string explanation;
};

struct CheckVerdict {
    Verdict verdict = Verdict::Unknown;
    std::string summary;
    std::vector<JoinWitness> witnesses;
    std::optional<Counterexample> counterexample;
    /// check_utd: the support every maximal tree shares.
    std::optional<CanonicalDist> common_support;
    /// Peaks, trees or rules examined.
    std::size_t checked = 0;

    bool holds() const { return verdict == Verdict::Holds; }
    bool fails() const { return verdict == Verdict::Fails; }
};

/// One step of parallel evolution modulo ≈ on each side; exact, never Unknown
/// for finite successor lists.
CheckVerdict joinable_one_step(const Pars& p, const PointDist& e, const PointDist& f);

/// Multi-step join search (k = 1, 2, 4, … up to `bound` steps per side).
/// Fails only with a certificate: a separating invariant, or LP
/// infeasibility once k covers the height of an acyclic closure.
CheckVerdict joinable_within(const Pars& p, const PointDist& e, const PointDist& f, std::size_t bound);

/// Every pair E ↤ a ↦ F is joinable in one step modulo ≈ on each side.
CheckVerdict check_diamond(const FinitePars& p);

struct SemiLimits {
    std::size_t bound = 32;
    std::size_t max_peaks = 2000;
};

/// For each a ↦ E and each [(1,a)] ⇒* F (within the bound), E and F join.
CheckVerdict check_semi_confluence(const FinitePars& p, const SemiLimits& limits);

/// Proper one-step peaks from Dirac distributions join within `bound`.
CheckVerdict check_local_confluence(const FinitePars& p, std::size_t bound);

/// No element cycle, i.e. no infinite chain of proper evolutions.
CheckVerdict check_sn(const FinitePars& p);

/// SN and LC certify CR. Unknown when SN fails or LC is undecided.
CheckVerdict check_newman(const FinitePars& p, std::size_t bound);

/// All maximal trees at `root` have ≈ supports.
CheckVerdict check_utd(const Pars& p, const ElementId& root, const TreeLimits& limits);

/// Every a ↦₁ D is matched by [(1,a)] ↠₂* D' ≈ D. Throws
/// std::invalid_argument when p1 mentions elements p2 does not.
CheckVerdict check_simulates(const FinitePars& p1, const FinitePars& p2, std::size_t bound);

}  // namespace pars
