#pragma once

// Terms of the affine probabilistic λ-calculus:
//   M, N ::= x | M N | \x. M | \!x. M | !M | M +{p} N

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "pars/weight.hpp"

namespace pars::lambda1 {

enum class Kind { Var, App, Lam, BangLam, Bang, Choice };

class Term {
public:
    static Term var(std::string name);
    static Term app(Term fun, Term arg);
    static Term lam(std::string binder, Term body);
    static Term bang_lam(std::string binder, Term body);
    static Term bang(Term body);
    /// Throws WeightError unless 0 < p < 1.
    static Term choice(Weight p, Term left, Term right);

    Kind kind() const;
    /// Variable name, or binder of Lam/BangLam.
    const std::string& name() const;
    /// App: function; Lam/BangLam/Bang: body; Choice: left branch.
    const Term& left() const;
    /// App: argument; Choice: right branch.
    const Term& right() const;
    const Term& body() const { return left(); }
    const Weight& prob() const;

    bool is_abstraction() const { return kind() == Kind::Lam || kind() == Kind::BangLam; }

    /// Number of constructors.
    std::size_t size() const;

    /// Structural equality (binder names matter; see alpha_equal).
    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Term::Node {
    Kind kind;
    std::string name;
    Weight prob;
    std::optional<Term> left;
    std::optional<Term> right;
};

inline Kind Term::kind() const { return node_->kind; }
inline const std::string& Term::name() const { return node_->name; }
inline const Term& Term::left() const { return *node_->left; }
inline const Term& Term::right() const { return *node_->right; }
inline const Weight& Term::prob() const { return node_->prob; }

/// Free occurrences of x in m.
std::size_t count_free(const std::string& x, const Term& m);

std::set<std::string> free_vars(const Term& m);

/// Why `m` is not well-formed, or std::nullopt when it is. A λ-bound
/// variable must occur free at most once in its body and never inside a
/// thunk; λ!-bound variables are unrestricted.
std::optional<std::string> ill_formedness(const Term& m);

inline bool well_formed(const Term& m) { return !ill_formedness(m).has_value(); }

/// Capture-avoiding m[n/x]; clashing binders get primed names.
Term subst(const Term& m, const std::string& x, const Term& n);

/// Renames every binder to a name determined by its depth, so α-equivalent
/// terms become structurally equal.
Term alpha_normalize(const Term& m);

bool alpha_equal(const Term& a, const Term& b);

}  // namespace pars::lambda1
