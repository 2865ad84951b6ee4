#include "pars/dist.hpp"

#include <sstream>

namespace pars {

PointDist::PointDist(std::vector<Point> points) : points_(std::move(points)) {
    for (const auto& p : points_)
        if (!p.weight.is_positive())
            throw DistError("point weights must be strictly positive (element " + p.element.str() + ")");
}

NormalDist::NormalDist(PointDist d) : dist_(std::move(d)) {
    if (total_weight(dist_) != Weight(1))
        throw DistError("distribution " + to_string(dist_) + " has weight " + total_weight(dist_).str() + ", not 1");
}

Weight total_weight(const PointDist& d) {
    Weight sum;
    for (const auto& p : d) sum += p.weight;
    return sum;
}

Weight total_weight(const CanonicalDist& d) {
    Weight sum;
    for (const auto& [e, w] : d) sum += w;
    return sum;
}

PointDist scale(const Weight& alpha, const PointDist& d) {
    if (alpha.is_zero()) throw DistError("cannot scale a distribution by 0");
    std::vector<Point> out;
    out.reserve(d.size());
    for (const auto& p : d) out.push_back({alpha * p.weight, p.element});
    return PointDist(std::move(out));
}

PointDist concat(const PointDist& d1, const PointDist& d2) {
    std::vector<Point> out(d1.begin(), d1.end());
    out.insert(out.end(), d2.begin(), d2.end());
    return PointDist(std::move(out));
}

PointDist apply_equiv_step(const PointDist& d, const EquivStep& s) {
    std::vector<Point> pts = d.points();
    const std::size_t i = s.position;
    switch (s.rule) {
        case EquivRule::Flip:
            if (i + 1 >= pts.size()) throw DistError("Flip needs two points at position " + std::to_string(i));
            std::swap(pts[i], pts[i + 1]);
            break;
        case EquivRule::Join:
            if (i + 1 >= pts.size()) throw DistError("Join needs two points at position " + std::to_string(i));
            if (pts[i].element != pts[i + 1].element) throw DistError("Join needs equal elements");
            pts[i].weight += pts[i + 1].weight;
            pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            break;
        case EquivRule::Split: {
            if (i >= pts.size()) throw DistError("Split position out of range");
            if (!s.split) throw DistError("Split needs two part weights");
            const auto& [p, q] = *s.split;
            if (!p.is_positive() || !q.is_positive()) throw DistError("Split parts must be positive");
            if (p + q != pts[i].weight) throw DistError("Split parts must sum to the point weight");
            Point second{q, pts[i].element};
            pts[i].weight = p;
            pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(second));
            break;
        }
    }
    return PointDist(std::move(pts));
}

CanonicalDist canonicalize(const PointDist& d) {
    CanonicalDist c;
    for (const auto& p : d) c[p.element] += p.weight;
    return c;
}

bool equiv(const PointDist& d1, const PointDist& d2) { return canonicalize(d1) == canonicalize(d2); }

PointDist to_point_dist(const CanonicalDist& c) {
    std::vector<Point> out;
    out.reserve(c.size());
    for (const auto& [e, w] : c) out.push_back({w, e});
    return PointDist(std::move(out));
}

Weight distance(const CanonicalDist& d1, const CanonicalDist& d2) {
    if (total_weight(d1) != Weight(1) || total_weight(d2) != Weight(1))
        throw DistError("distance requires normalised distributions");
    Weight sum;
    auto it1 = d1.begin();
    auto it2 = d2.begin();
    while (it1 != d1.end() || it2 != d2.end()) {
        if (it2 == d2.end() || (it1 != d1.end() && it1->first < it2->first)) {
            sum += it1->second;
            ++it1;
        } else if (it1 == d1.end() || it2->first < it1->first) {
            sum += it2->second;
            ++it2;
        } else {
            sum += abs_diff(it1->second, it2->second);
            ++it1;
            ++it2;
        }
    }
    return sum;
}

Weight liveness(const PointDist& d, const std::function<bool(const ElementId&)>& is_terminal) {
    Weight sum;
    for (const auto& p : d)
        if (!is_terminal(p.element)) sum += p.weight;
    return sum;
}

CanonicalDist combine(const Weight& alpha, const CanonicalDist& c1, const Weight& beta, const CanonicalDist& c2) {
    CanonicalDist out;
    if (alpha.is_positive())
        for (const auto& [e, w] : c1) out[e] += alpha * w;
    if (beta.is_positive())
        for (const auto& [e, w] : c2) out[e] += beta * w;
    return out;
}

std::string to_string(const PointDist& d) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& p : d) {
        if (!first) os << ", ";
        first = false;
        os << '(' << p.weight.str() << ", " << p.element.str() << ')';
    }
    os << ']';
    return os.str();
}

std::string to_string(const CanonicalDist& d) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [e, w] : d) {
        if (!first) os << ", ";
        first = false;
        os << e.str() << ": " << w.str();
    }
    os << '}';
    return os.str();
}

}  // namespace pars
