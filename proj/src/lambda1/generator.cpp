#include "lambda1/generator.hpp"

#include <limits>
#include <optional>
#include <random>

namespace pars::lambda1 {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n), by rejection so results do not depend on the
    /// standard library's distribution implementation.
    std::size_t below(std::size_t n) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % n;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return static_cast<std::size_t>(x % n);
    }

    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool percent(unsigned p) { return below(100) < p; }

private:
    std::mt19937_64 engine_;
};

struct Binder {
    std::string name;
    bool affine;
    bool used;
};

class Generator {
public:
    Generator(std::uint64_t seed, const GenConfig& config) : rng_(seed), cfg_(config) {}

    Term gen(std::size_t size) {
        if (size <= 1) return leaf();
        if (size == 2) {
            switch (rng_.below(3)) {
                case 0: return lambda(false, 1);
                case 1: return lambda(true, 1);
                default: return thunk(1);
            }
        }
        if (size >= 4 && rng_.percent(cfg_.redex_bias)) return redex(size);
        switch (rng_.below(6)) {
            case 0: {
                std::size_t k = rng_.between(1, size - 2);
                Term f = gen(k);
                return Term::app(f, gen(size - 1 - k));
            }
            case 1:
            case 5: {
                std::size_t k = rng_.between(1, size - 2);
                Weight p = probability();
                Term l = gen(k);
                return Term::choice(p, l, gen(size - 1 - k));
            }
            case 2: return lambda(false, size - 1);
            case 3: return lambda(true, size - 1);
            default: return thunk(size - 1);
        }
    }

private:
    Term leaf() {
        std::vector<std::size_t> bound;
        for (std::size_t i = 0; i < scope_.size(); ++i)
            if (!scope_[i].affine || (!scope_[i].used && thunk_depth_ == 0)) bound.push_back(i);
        if (!bound.empty() && rng_.percent(70)) {
            Binder& b = scope_[bound[rng_.below(bound.size())]];
            if (b.affine) b.used = true;
            return Term::var(b.name);
        }
        return Term::var(cfg_.free_vars[rng_.below(cfg_.free_vars.size())]);
    }

    Term lambda(bool banged, std::size_t body_size) {
        std::string name = "x" + std::to_string(counter_++);
        scope_.push_back({name, !banged, false});
        Term body = gen(body_size);
        scope_.pop_back();
        return banged ? Term::bang_lam(name, body) : Term::lam(name, body);
    }

    Term thunk(std::size_t body_size) {
        ++thunk_depth_;
        Term body = gen(body_size);
        --thunk_depth_;
        return Term::bang(body);
    }

    /// (\x. M) N, or (\!x. M) !N when there is room for the thunk.
    Term redex(std::size_t size) {
        bool banged = size >= 5 && rng_.percent(50);
        std::size_t arg_size = banged ? rng_.between(2, size - 3) : rng_.between(1, size - 3);
        std::size_t fun_size = size - 1 - arg_size;
        Term f = lambda(banged, fun_size - 1);
        Term a = banged ? thunk(arg_size - 1) : gen(arg_size);
        return Term::app(f, a);
    }

    Weight probability() {
        long d = static_cast<long>(rng_.between(2, cfg_.max_denominator));
        long k = static_cast<long>(rng_.between(1, static_cast<std::size_t>(d - 1)));
        return Weight(k, d);
    }

    Rng rng_;
    const GenConfig& cfg_;
    std::vector<Binder> scope_;
    std::size_t thunk_depth_ = 0;
    std::size_t counter_ = 0;
};

/// Replaces the `target`-th variable occurrence outside thunks by `hole`.
std::optional<Term> plug(const Term& m, std::size_t& target, const std::string& hole, bool in_thunk) {
    switch (m.kind()) {
        case Kind::Var:
            if (in_thunk) return std::nullopt;
            if (target-- == 0) return Term::var(hole);
            return std::nullopt;
        case Kind::Bang: {
            auto b = plug(m.body(), target, hole, true);
            return b ? std::optional<Term>(Term::bang(*b)) : std::nullopt;
        }
        case Kind::Lam:
        case Kind::BangLam: {
            auto b = plug(m.body(), target, hole, in_thunk);
            if (!b) return std::nullopt;
            return m.kind() == Kind::Lam ? Term::lam(m.name(), *b) : Term::bang_lam(m.name(), *b);
        }
        case Kind::App:
        case Kind::Choice: {
            if (auto l = plug(m.left(), target, hole, in_thunk))
                return m.kind() == Kind::App ? Term::app(*l, m.right()) : Term::choice(m.prob(), *l, m.right());
            if (auto r = plug(m.right(), target, hole, in_thunk))
                return m.kind() == Kind::App ? Term::app(m.left(), *r) : Term::choice(m.prob(), m.left(), *r);
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::size_t open_leaves(const Term& m, bool in_thunk) {
    switch (m.kind()) {
        case Kind::Var: return in_thunk ? 0 : 1;
        case Kind::Bang: return open_leaves(m.body(), true);
        case Kind::Lam:
        case Kind::BangLam: return open_leaves(m.body(), in_thunk);
        case Kind::App:
        case Kind::Choice: return open_leaves(m.left(), in_thunk) + open_leaves(m.right(), in_thunk);
    }
    return 0;
}

}  // namespace

Term gen_term(std::uint64_t seed, std::size_t size_budget, const GenConfig& config) {
    Generator g(seed, config);
    Rng sizes(seed ^ 0x9e3779b97f4a7c15ULL);
    std::size_t budget = std::max<std::size_t>(size_budget, 1);
    return g.gen(sizes.between((budget + 1) / 2, budget));
}

Term gen_linear_context(std::uint64_t seed, std::size_t size_budget, const std::string& hole,
                        const GenConfig& config) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Term m = gen_term(seed + attempt * 0x100000001b3ULL, size_budget, config);
        if (free_vars(m).contains(hole)) continue;
        std::size_t n = open_leaves(m, false);
        if (n == 0) continue;
        std::size_t target = Rng(seed + attempt).below(n);
        auto plugged = plug(m, target, hole, false);
        if (plugged && well_formed(*plugged)) return *plugged;
    }
}

std::uint64_t corpus_seed(std::uint64_t seed, std::size_t i) {
    // splitmix64 step over (seed, i)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace pars::lambda1
