#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chaos/numbers.hpp"

namespace chaos {

/// A term built from the six constructors of partial computable functions:
/// projection, zero, successor, composition, primitive recursion and
/// minimization. A term of arity p denotes a partial function N^p → N.
///
/// Terms are immutable and share subterms. Every factory checks the arity
/// constraints of its constructor and throws IllFormed on violation, so a
/// RecFn value is always well formed.
class RecFn {
public:
    enum class Kind { proj, zero, succ, comp, primrec, mu };

    /// x1..xp ↦ xi, with 1 ≤ i ≤ p.
    static RecFn proj(std::size_t p, std::size_t i);
    /// x1..xp ↦ 0, for any p ≥ 0.
    static RecFn zero(std::size_t p);
    /// x ↦ x + 1.
    static RecFn succ();
    /// x ↦ f(g1(x), ..., gq(x)); needs q = arity(f) ≥ 1 and a common arity
    /// for the gs.
    static RecFn comp(RecFn f, std::vector<RecFn> gs);
    /// h(x, 0) = f(x), h(x, y+1) = g(x, y, h(x, y)); needs
    /// arity(g) = arity(f) + 2.
    static RecFn primrec(RecFn f, RecFn g);
    /// x ↦ least y with f(x, y) = 0, every earlier f(x, z) defined and
    /// nonzero; needs arity(f) ≥ 1.
    static RecFn mu(RecFn f);

    Kind kind() const noexcept;
    std::size_t arity() const noexcept;
    /// Index of a projection (1-based); 0 for other kinds.
    std::size_t index() const noexcept;
    /// Immediate subterms in constructor order: comp → f, g1..gq;
    /// primrec → f, g; mu → f.
    std::span<const RecFn> children() const noexcept;

    /// Program-file text for this term.
    std::string str() const;

    friend bool operator==(const RecFn& a, const RecFn& b);

private:
    struct Node;
    explicit RecFn(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Arity of a term; the p with the denotation in C_p.
inline std::size_t arity(const RecFn& e) { return e.arity(); }

/// Evaluation ran out of budget. Says nothing about true divergence.
struct Diverged {
    Natural fuel_spent;
    friend bool operator==(const Diverged&, const Diverged&) = default;
};

using EvalOutcome = std::variant<Natural, Diverged>;

inline bool is_value(const EvalOutcome& o) { return std::holds_alternative<Natural>(o); }

/// Evaluates `e` at `args`, charging one fuel unit per constructor
/// application. Throws ArityMismatch when args.size() != arity(e).
EvalOutcome eval(const RecFn& e, std::span<const Natural> args, const Natural& fuel);
EvalOutcome eval(const RecFn& e, std::initializer_list<Natural> args, const Natural& fuel);

using ConjugateOutcome = std::variant<Rational, Diverged>;

/// Runs `e` on canonical codes of rational arguments and decodes the result.
/// Throws NotACode when the result is not a canonical code.
ConjugateOutcome conjugate_eval(const RecFn& e, std::span<const Rational> args, const Natural& fuel);
ConjugateOutcome conjugate_eval(const RecFn& e, std::initializer_list<Rational> args, const Natural& fuel);

/// Parses program text:
///   proj p i | zero p | succ | (comp F G1 ... Gq) | (primrec F G) | (mu F)
/// Whitespace-insensitive, '#' starts a comment to end of line. Atomic terms
/// may also be parenthesized. Throws ParseError on bad syntax and IllFormed
/// on arity violations.
RecFn parse_program(std::string_view text);

/// Reads and parses a program file. Throws ParseError when unreadable.
RecFn load_program(const std::string& path);

}  // namespace chaos
