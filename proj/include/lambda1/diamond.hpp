#pragma once

#include "lambda1/term.hpp"
#include "pars/checkers.hpp"

namespace pars::lambda1 {

/// For every pair D ↤ m ↦ E, looks for one parallel step of each side
/// (D ⇒ C, E ⇒ C′) with C ≈ C′. Holds with one witness per pair, Fails
/// with the first pair that has no meet. Throws std::invalid_argument on
/// an ill-formed term.
CheckVerdict check_llin_diamond(const Term& m);

}  // namespace pars::lambda1
