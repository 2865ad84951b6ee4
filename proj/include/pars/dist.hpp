#pragma once

// Finitely-supported list distributions, the Flip/Join/Split equivalence
// steps, and the canonical (per-element total weight) form that decides ≈.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pars/weight.hpp"

namespace pars {

class DistError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Opaque, totally ordered element identifier. For finite systems this is
/// the element's name; for λ₁ it is the canonical printed term.
class ElementId {
public:
    ElementId() = default;
    ElementId(std::string name) : name_(std::move(name)) {}  // NOLINT(google-explicit-constructor)
    ElementId(const char* name) : name_(name) {}             // NOLINT(google-explicit-constructor)

    const std::string& str() const { return name_; }

    friend bool operator==(const ElementId&, const ElementId&) = default;
    friend auto operator<=>(const ElementId&, const ElementId&) = default;

private:
    std::string name_;
};

struct Point {
    Weight weight;
    ElementId element;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Ordered list of strictly positive (weight, element) points.
/// Duplicates and arbitrary order are allowed.
class PointDist {
public:
    PointDist() = default;
    PointDist(std::vector<Point> points);  // NOLINT(google-explicit-constructor)
    PointDist(std::initializer_list<Point> points) : PointDist(std::vector<Point>(points)) {}

    static PointDist dirac(ElementId e) { return PointDist({Point{Weight(1), std::move(e)}}); }

    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const Point& operator[](std::size_t i) const { return points_.at(i); }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    /// Exact list equality (order and multiplicity matter).
    friend bool operator==(const PointDist&, const PointDist&) = default;

private:
    std::vector<Point> points_;
};

/// A PointDist whose total weight is exactly 1.
class NormalDist {
public:
    /// Throws DistError if the total weight is not 1.
    explicit NormalDist(PointDist d);
    NormalDist(std::initializer_list<Point> points) : NormalDist(PointDist(points)) {}

    const PointDist& dist() const { return dist_; }
    operator const PointDist&() const { return dist_; }  // NOLINT(google-explicit-constructor)
    std::size_t size() const { return dist_.size(); }
    auto begin() const { return dist_.begin(); }
    auto end() const { return dist_.end(); }

    friend bool operator==(const NormalDist&, const NormalDist&) = default;

private:
    PointDist dist_;
};

/// Element → strictly positive total weight, keyed in ElementId order.
using CanonicalDist = std::map<ElementId, Weight>;

enum class EquivRule { Flip, Join, Split };

struct EquivStep {
    EquivRule rule;
    std::size_t position = 0;
    /// Split only: the two parts, both positive, summing to the split point.
    std::optional<std::pair<Weight, Weight>> split;
};

Weight total_weight(const PointDist& d);
Weight total_weight(const CanonicalDist& d);

/// Multiplies every weight by `alpha`. Throws DistError when alpha is 0.
PointDist scale(const Weight& alpha, const PointDist& d);

PointDist concat(const PointDist& d1, const PointDist& d2);

/// Applies one Flip/Join/Split at `s.position`. Throws DistError on a bad
/// position or violated rule precondition.
PointDist apply_equiv_step(const PointDist& d, const EquivStep& s);

CanonicalDist canonicalize(const PointDist& d);

/// d1 ≈ d2, decided exactly.
bool equiv(const PointDist& d1, const PointDist& d2);

/// Converts a canonical form back to a list, in ElementId order.
PointDist to_point_dist(const CanonicalDist& c);

/// L1 distance. Both inputs must have total weight 1 (DistError otherwise).
Weight distance(const CanonicalDist& d1, const CanonicalDist& d2);

/// Total weight on points whose element is not terminal.
Weight liveness(const PointDist& d, const std::function<bool(const ElementId&)>& is_terminal);

/// Pointwise α·c1 + β·c2.
CanonicalDist combine(const Weight& alpha, const CanonicalDist& c1, const Weight& beta, const CanonicalDist& c2);

std::string to_string(const PointDist& d);
std::string to_string(const CanonicalDist& d);

}  // namespace pars

template <>
struct std::hash<pars::ElementId> {
    std::size_t operator()(const pars::ElementId& e) const noexcept { return std::hash<std::string>{}(e.str()); }
};
