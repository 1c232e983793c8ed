#include "chaos/murec.hpp"

#include <limits>
#include <optional>

#include "chaos/encoding.hpp"
#include "chaos/errors.hpp"

namespace chaos {

struct RecFn::Node {
    Kind kind;
    std::size_t arity;
    std::size_t index;
    std::vector<RecFn> children;
};

RecFn RecFn::proj(std::size_t p, std::size_t i) {
    if (i < 1 || i > p) {
        throw IllFormed("proj " + std::to_string(p) + " " + std::to_string(i) + ": index must satisfy 1 <= i <= p");
    }
    return RecFn(std::make_shared<const Node>(Node{Kind::proj, p, i, {}}));
}

RecFn RecFn::zero(std::size_t p) {
    return RecFn(std::make_shared<const Node>(Node{Kind::zero, p, 0, {}}));
}

RecFn RecFn::succ() {
    static const RecFn s(std::make_shared<const Node>(Node{Kind::succ, 1, 0, {}}));
    return s;
}

RecFn RecFn::comp(RecFn f, std::vector<RecFn> gs) {
    if (gs.empty()) {
        throw IllFormed("comp: needs at least one inner function");
    }
    if (f.arity() != gs.size()) {
        throw IllFormed("comp: outer function has arity " + std::to_string(f.arity()) + " but " +
                        std::to_string(gs.size()) + " inner functions were given");
    }
    const std::size_t p = gs.front().arity();
    for (const RecFn& g : gs) {
        if (g.arity() != p) {
            throw IllFormed("comp: inner functions disagree on arity");
        }
    }
    std::vector<RecFn> kids;
    kids.reserve(gs.size() + 1);
    kids.push_back(std::move(f));
    for (RecFn& g : gs) {
        kids.push_back(std::move(g));
    }
    return RecFn(std::make_shared<const Node>(Node{Kind::comp, p, 0, std::move(kids)}));
}

RecFn RecFn::primrec(RecFn f, RecFn g) {
    if (g.arity() != f.arity() + 2) {
        throw IllFormed("primrec: step function must have arity " + std::to_string(f.arity() + 2) + ", has " +
                        std::to_string(g.arity()));
    }
    const std::size_t p = f.arity() + 1;
    return RecFn(std::make_shared<const Node>(Node{Kind::primrec, p, 0, {std::move(f), std::move(g)}}));
}

RecFn RecFn::mu(RecFn f) {
    if (f.arity() < 1) {
        throw IllFormed("mu: body must have arity at least 1");
    }
    const std::size_t p = f.arity() - 1;
    return RecFn(std::make_shared<const Node>(Node{Kind::mu, p, 0, {std::move(f)}}));
}

RecFn::Kind RecFn::kind() const noexcept { return node_->kind; }
std::size_t RecFn::arity() const noexcept { return node_->arity; }
std::size_t RecFn::index() const noexcept { return node_->index; }
std::span<const RecFn> RecFn::children() const noexcept { return node_->children; }

std::string RecFn::str() const {
    switch (kind()) {
    case Kind::proj:
        return "proj " + std::to_string(arity()) + " " + std::to_string(index());
    case Kind::zero:
        return "zero " + std::to_string(arity());
    case Kind::succ:
        return "succ";
    case Kind::comp:
    case Kind::primrec:
    case Kind::mu: {
        std::string out = kind() == Kind::comp ? "(comp" : kind() == Kind::primrec ? "(primrec" : "(mu";
        for (const RecFn& c : children()) {
            out += ' ';
            out += c.str();
        }
        out += ')';
        return out;
    }
    }
    return {};
}

bool operator==(const RecFn& a, const RecFn& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.kind() != b.kind() || a.arity() != b.arity() || a.index() != b.index()) {
        return false;
    }
    const auto ca = a.children();
    const auto cb = b.children();
    return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

namespace {

class Evaluator {
public:
    explicit Evaluator(std::uint64_t fuel) : remaining_(fuel) {}

    // nullopt: the budget ran out.
    std::optional<Natural> run(const RecFn& e, std::span<const Natural> args) {
        if (!charge()) {
            return std::nullopt;
        }
        switch (e.kind()) {
        case RecFn::Kind::proj:
            return args[e.index() - 1];
        case RecFn::Kind::zero:
            return Natural{};
        case RecFn::Kind::succ:
            return args[0] + Natural(1);
        case RecFn::Kind::comp:
            return run_comp(e, args);
        case RecFn::Kind::primrec:
            return run_primrec(e, args);
        case RecFn::Kind::mu:
            return run_mu(e, args);
        }
        return std::nullopt;
    }

private:
    bool charge() {
        if (remaining_ == 0) {
            return false;
        }
        --remaining_;
        return true;
    }

    std::optional<Natural> run_comp(const RecFn& e, std::span<const Natural> args) {
        const auto kids = e.children();
        std::vector<Natural> inner;
        inner.reserve(kids.size() - 1);
        for (std::size_t k = 1; k < kids.size(); ++k) {
            auto v = run(kids[k], args);
            if (!v) {
                return std::nullopt;
            }
            inner.push_back(std::move(*v));
        }
        return run(kids[0], inner);
    }

    std::optional<Natural> run_primrec(const RecFn& e, std::span<const Natural> args) {
        const auto kids = e.children();
        const std::size_t p = args.size() - 1;
        const Natural& y = args[p];
        auto acc = run(kids[0], args.first(p));
        if (!acc) {
            return std::nullopt;
        }
        std::vector<Natural> step(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(p));
        step.emplace_back();
        step.emplace_back();
        for (Natural k; k < y; k += Natural(1)) {
            if (!charge()) {
                return std::nullopt;
            }
            step[p] = k;
            step[p + 1] = std::move(*acc);
            acc = run(kids[1], step);
            if (!acc) {
                return std::nullopt;
            }
        }
        return acc;
    }

    std::optional<Natural> run_mu(const RecFn& e, std::span<const Natural> args) {
        const RecFn& body = e.children()[0];
        std::vector<Natural> probe(args.begin(), args.end());
        probe.emplace_back();
        for (Natural y;; y += Natural(1)) {
            if (!charge()) {
                return std::nullopt;
            }
            probe.back() = y;
            auto v = run(body, probe);
            if (!v) {
                return std::nullopt;
            }
            if (v->is_zero()) {
                return y;
            }
        }
    }

    std::uint64_t remaining_;
};

}  // namespace

EvalOutcome eval(const RecFn& e, std::span<const Natural> args, const Natural& fuel) {
    if (args.size() != e.arity()) {
        throw ArityMismatch("term of arity " + std::to_string(e.arity()) + " applied to " +
                            std::to_string(args.size()) + " arguments");
    }
    const std::uint64_t budget = fuel.fits_u64() ? fuel.to_u64() : std::numeric_limits<std::uint64_t>::max();
    Evaluator ev(budget);
    if (auto v = ev.run(e, args)) {
        return std::move(*v);
    }
    return Diverged{fuel};
}

EvalOutcome eval(const RecFn& e, std::initializer_list<Natural> args, const Natural& fuel) {
    return eval(e, std::span<const Natural>(args.begin(), args.size()), fuel);
}

ConjugateOutcome conjugate_eval(const RecFn& e, std::span<const Rational> args, const Natural& fuel) {
    std::vector<Natural> codes;
    codes.reserve(args.size());
    for (const Rational& r : args) {
        codes.push_back(encode_rational(r));
    }
    EvalOutcome out = eval(e, codes, fuel);
    if (auto* d = std::get_if<Diverged>(&out)) {
        return *d;
    }
    return decode_rational(std::get<Natural>(out));
}

ConjugateOutcome conjugate_eval(const RecFn& e, std::initializer_list<Rational> args, const Natural& fuel) {
    return conjugate_eval(e, std::span<const Rational>(args.begin(), args.size()), fuel);
}

}  // namespace chaos
