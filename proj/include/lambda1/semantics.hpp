#pragma once

#include <utility>
#include <vector>

#include "lambda1/term.hpp"
#include "pars/dist.hpp"
#include "pars/pars.hpp"

namespace pars::lambda1 {

/// A normalised distribution over terms, in point order.
using TermDist = std::vector<std::pair<Weight, Term>>;

/// Every D with m ↦ D, one per applicable rule instance: the redex rules
/// (β, β!, ⊕) at the root first, then the congruence rules left to right.
/// Thunks never reduce; β! needs a thunk argument. Throws
/// std::invalid_argument for ill-formed input.
std::vector<TermDist> step_successors(const Term& m);

/// Canonical element id: the printed α-normal form.
ElementId encode(const Term& m);
/// Inverse of encode (up to α). Throws ParseError on a foreign id.
Term decode(const ElementId& id);

PointDist to_point_dist(const TermDist& d);

/// The calculus as a lazily generated PARS over encoded terms.
class LambdaPars final : public Pars {
public:
    std::vector<NormalDist> successors(const ElementId& a) const override;
};

}  // namespace pars::lambda1
