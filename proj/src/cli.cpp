#include "chaos/cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chaos/baker.hpp"
#include "chaos/discrete.hpp"
#include "chaos/encoding.hpp"
#include "chaos/errors.hpp"
#include "chaos/limit.hpp"
#include "chaos/measured.hpp"
#include "chaos/murec.hpp"
#include "chaos/realfn.hpp"
#include "chaos/selfcheck.hpp"

namespace chaos::cli {

int exit_code(Status s) {
    switch (s) {
    case Status::ok:
        return 0;
    case Status::usage_error:
        return 1;
    case Status::domain_error:
        return 2;
    case Status::diverged:
        return 3;
    case Status::not_a_code:
        return 4;
    }
    return 1;
}

const char* to_string(Status s) {
    switch (s) {
    case Status::ok:
        return "ok";
    case Status::usage_error:
        return "usage_error";
    case Status::domain_error:
        return "domain_error";
    case Status::diverged:
        return "diverged";
    case Status::not_a_code:
        return "not_a_code";
    }
    return "usage_error";
}

const std::string* Document::get(const std::string& key) const {
    for (const auto& [k, v] : fields) {
        if (k == key) {
            return &v;
        }
    }
    return nullptr;
}

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::string fuel = "1000000";
    std::string format = "text";
    std::optional<unsigned> decimals;
};

std::string u64(std::uint64_t v) {
    return std::to_string(v);
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

std::string readout_list(const SuccessorSet& s) {
    std::vector<std::string> parts;
    for (std::uint64_t k : s.members) {
        parts.push_back(Readout{s.d, k}.str());
    }
    return join(parts, ",");
}

void add_decimal(Document& doc, const Globals& g, const std::string& key, const Rational& v) {
    if (g.decimals) {
        doc.set(key + "_decimal", to_decimal(v, *g.decimals));
    }
}

// Splits "a,b,c" (empty text gives no items).
std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

class Dispatcher {
public:
    Dispatcher() {
        app_.description(
            "Exact computations on the baker map and its discrete and measured variants: each command relates an "
            "initial state to a later one, or certifies a property of that relation.");
        app_.require_subcommand(1);
        app_.add_option("--seed", g_.seed, "seed for every sampled check (default 0)");
        app_.add_option("--fuel", g_.fuel, "evaluation budget for mu-recursive terms (default 1000000)");
        app_.add_option("--format", g_.format, "text (key=value lines) or structured (JSON)")
            ->check(CLI::IsMember({"text", "structured"}));
        app_.add_option("--decimals", g_.decimals, "append truncated decimal expansions with k digits");

        add_encoding_commands();
        add_murec_command();
        add_baker_commands();
        add_grid_commands();
        add_measured_commands();
        add_limit_command();
        add_check_command();
    }

    CommandResult run(const std::vector<std::string>& argv) {
        CommandResult result;
        std::vector<std::string> storage{"chaosctl"};
        storage.insert(storage.end(), argv.begin(), argv.end());
        std::vector<const char*> raw;
        for (const std::string& s : storage) {
            raw.push_back(s.c_str());
        }
        try {
            app_.parse(static_cast<int>(raw.size()), raw.data());
        } catch (const CLI::CallForHelp&) {
            result.message = help_text();
            return result;
        } catch (const CLI::CallForAllHelp&) {
            result.message = app_.help("", CLI::AppFormatMode::All);
            return result;
        } catch (const CLI::ParseError& e) {
            result.status = Status::usage_error;
            result.payload.set("error", e.what());
            return result;
        }
        result.format = g_.format == "structured" ? Format::structured : Format::text;

        try {
            result.payload = action_();
            if (const std::string* s = result.payload.get("outcome"); s && *s == "diverged") {
                result.status = Status::diverged;
            }
            if (const std::string* s = result.payload.get("failed"); s && *s != "0") {
                result.status = Status::domain_error;
            }
        } catch (const NotACode& e) {
            fail(result, Status::not_a_code, e.what());
        } catch (const DomainError& e) {
            fail(result, Status::domain_error, e.what());
        } catch (const InvalidState& e) {
            fail(result, Status::domain_error, e.what());
        } catch (const Error& e) {
            // ParseError, IllFormed, ArityMismatch: the input was malformed.
            fail(result, Status::usage_error, e.what());
        } catch (const std::exception& e) {
            fail(result, Status::usage_error, e.what());
        }
        return result;
    }

private:
    void fail(CommandResult& r, Status s, const std::string& msg) {
        r.status = s;
        r.payload = Document{};
        r.payload.set("command", command_);
        r.payload.set("error", msg);
    }

    std::string help_text() {
        for (CLI::App* sub : app_.get_subcommands()) {
            return sub->help();
        }
        return app_.help();
    }

    CLI::App* sub(const std::string& name, const std::string& what, std::function<Document()> act) {
        CLI::App* s = app_.add_subcommand(name, what);
        s->fallthrough();
        s->callback([this, name, act = std::move(act)] {
            command_ = name;
            action_ = [name, act] {
                Document d;
                d.set("command", name);
                Document body = act();
                d.fields.insert(d.fields.end(), body.fields.begin(), body.fields.end());
                d.tables = std::move(body.tables);
                return d;
            };
        });
        return s;
    }

    Natural fuel() const { return Natural::parse(g_.fuel); }

    void add_encoding_commands() {
        auto* enc = sub("encode", "encode a rational as a natural number", [this] {
            const Rational r = Rational::parse(s_.rational);
            const EncodingId e = parse_encoding(s_.encoding);
            Document d;
            d.set("rational", r.str());
            d.set("encoding", std::string(chaos::to_string(e)));
            d.set("code", encode_rational(r, e).str());
            return d;
        });
        enc->add_option("--rational", s_.rational, "rational as [-]num[/den]")->required();
        enc->add_option("--encoding", s_.encoding, "canonical or alternative");

        auto* dec = sub("decode", "decode a natural number into a rational", [this] {
            const Natural c = Natural::parse(s_.code);
            const EncodingId e = parse_encoding(s_.encoding);
            const Rational r = decode_rational(c, e);
            Document d;
            d.set("code", c.str());
            d.set("encoding", std::string(chaos::to_string(e)));
            d.set("rational", r.str());
            add_decimal(d, g_, "rational", r);
            return d;
        });
        dec->add_option("--code", s_.code, "natural number code")->required();
        dec->add_option("--encoding", s_.encoding, "canonical or alternative");

        auto* tr = sub("translate", "re-encode a code under another encoding", [this] {
            const Natural c = Natural::parse(s_.code);
            const EncodingId from = parse_encoding(s_.from);
            const EncodingId to = parse_encoding(s_.to);
            const Natural out = translate(c, from, to);
            Document d;
            d.set("code", c.str());
            d.set("from", std::string(chaos::to_string(from)));
            d.set("to", std::string(chaos::to_string(to)));
            d.set("rational", decode_rational(c, from).str());
            d.set("translated", out.str());
            return d;
        });
        tr->add_option("--code", s_.code, "natural number code")->required();
        tr->add_option("--from", s_.from, "source encoding")->required();
        tr->add_option("--to", s_.to, "target encoding")->required();
    }

    void add_murec_command() {
        auto* ev = sub("murec-eval", "evaluate a mu-recursive program", [this] {
            const RecFn e = !s_.program.empty() ? load_program(s_.program) : parse_program(s_.term);
            const std::vector<std::string> items = split_list(s_.args);
            const Natural budget = fuel();
            Document d;
            d.set("term", e.str());
            d.set("arity", u64(e.arity()));
            d.set("fuel", budget.str());
            d.set("args", join(items, ","));
            if (s_.over_rationals) {
                std::vector<Rational> args;
                for (const std::string& a : items) {
                    args.push_back(Rational::parse(a));
                }
                d.set("domain", "rational");
                const ConjugateOutcome out = conjugate_eval(e, args, budget);
                if (const auto* div = std::get_if<Diverged>(&out)) {
                    d.set("outcome", "diverged");
                    d.set("fuel_spent", div->fuel_spent.str());
                } else {
                    d.set("outcome", "value");
                    d.set("value", std::get<Rational>(out).str());
                }
                return d;
            }
            std::vector<Natural> args;
            for (const std::string& a : items) {
                args.push_back(Natural::parse(a));
            }
            d.set("domain", "natural");
            const EvalOutcome out = eval(e, args, budget);
            if (const auto* div = std::get_if<Diverged>(&out)) {
                d.set("outcome", "diverged");
                d.set("fuel_spent", div->fuel_spent.str());
            } else {
                d.set("outcome", "value");
                d.set("value", std::get<Natural>(out).str());
            }
            return d;
        });
        auto* src = ev->add_option_group("source");
        src->add_option("--program", s_.program, "program file");
        src->add_option("--term", s_.term, "program text");
        src->require_option(1);
        ev->add_option("--args", s_.args, "comma-separated arguments");
        ev->add_flag("--rational", s_.over_rationals, "arguments are rationals, run on their canonical codes");
    }

    void add_baker_commands() {
        auto* step = sub("baker-step", "one step of the baker map", [this] {
            const Rational x = Rational::parse(s_.x);
            const Rational y = baker_step(x);
            Document d;
            d.set("x", x.str());
            d.set("value", y.str());
            add_decimal(d, g_, "value", y);
            return d;
        });
        step->add_option("--x", s_.x, "position in [0, 1]")->required();

        auto* orbit = sub("baker-orbit", "orbit rows (k, b^k(x)) for k = 0..n", [this] {
            const Rational x = Rational::parse(s_.x);
            const unsigned digits = g_.decimals.value_or(6);
            Document d;
            d.set("x", x.str());
            d.set("n", u64(s_.n));
            Table t{"orbit", {"k", "value", "decimal"}, {}};
            Rational y = x;
            for (std::uint64_t k = 0; k <= s_.n; ++k) {
                if (k > 0) {
                    y = baker_step(y);
                }
                t.rows.push_back({u64(k), y.str(), to_decimal(y, digits)});
            }
            d.tables.push_back(std::move(t));
            return d;
        });
        orbit->add_option("--x", s_.x, "initial position in [0, 1]")->required();
        orbit->add_option("--n", s_.n, "number of steps")->required();

        auto* approx = sub("baker-approx", "evaluate b^n through its computable-real form", [this] {
            const Rational x = Rational::parse(s_.x);
            const Rational eps = Rational::parse(s_.eps);
            const CRealFn f = baker_creal_fn(s_.n);
            if (eps <= Rational(0)) {
                throw DomainError("accuracy must be positive");
            }
            const Rational value = apply(f, from_rational(x), eps);
            Document d;
            d.set("x", x.str());
            d.set("n", u64(s_.n));
            d.set("eps", eps.str());
            d.set("eta", f.eta(eps).str());
            d.set("value", value.str());
            add_decimal(d, g_, "value", value);
            return d;
        });
        approx->add_option("--x", s_.x, "position in [0, 1]")->required();
        approx->add_option("--n", s_.n, "number of steps")->required();
        approx->add_option("--eps", s_.eps, "output accuracy (positive rational)")->required();

        auto* sens = sub("sensitivity", "close starting points whose orbits reach prescribed targets", [this] {
            const SensitivityWitness w =
                sensitivity_witness(Rational::parse(s_.eta), Rational::parse(s_.a), Rational::parse(s_.ap));
            Document d;
            d.set("eta", w.eta.str());
            d.set("a", w.a.str());
            d.set("ap", w.ap.str());
            d.set("n", u64(w.n));
            d.set("x0", w.x0.str());
            d.set("x0p", w.x0p.str());
            d.set("initial_distance", abs(w.x0 - w.x0p).str());
            d.set("final", baker_iter(w.x0, w.n).str());
            d.set("finalp", baker_iter(w.x0p, w.n).str());
            d.set("final_distance", abs(baker_iter(w.x0, w.n) - baker_iter(w.x0p, w.n)).str());
            d.set("verified", verify(w) ? "true" : "false");
            return d;
        });
        sens->add_option("--eta", s_.eta, "closeness bound (positive rational)")->required();
        sens->add_option("--a", s_.a, "first target in [0, 1]")->required();
        sens->add_option("--ap", s_.ap, "second target in [0, 1]")->required();
    }

    void add_grid_commands() {
        auto* sim = sub("grid-sim", "orbit of a grid state and its cycle", [this] {
            const GridState s{s_.N, s_.i};
            const GridCycle c = find_cycle(s);
            Document d;
            d.set("N", u64(s.N));
            d.set("i", u64(s.i));
            d.set("n", u64(s_.n));
            d.set("final", u64(grid_iter(s, s_.n).i));
            d.set("cycle_entry", u64(c.entry));
            d.set("cycle_length", u64(c.length));
            d.set("eta", min_separation_eta(s.N).str());
            Table t{"orbit", {"step", "index", "position"}, {}};
            GridState cur = s;
            for (std::uint64_t k = 0; k <= s_.n; ++k) {
                if (k > 0) {
                    cur = grid_step(cur);
                }
                std::vector<std::string> row{u64(k), u64(cur.i), cur.position().str()};
                if (g_.decimals) {
                    row.push_back(to_decimal(cur.position(), *g_.decimals));
                }
                t.rows.push_back(std::move(row));
            }
            if (g_.decimals) {
                t.columns.emplace_back("decimal");
            }
            d.tables.push_back(std::move(t));
            return d;
        });
        sim->add_option("--N", s_.N, "grid resolution")->required();
        sim->add_option("--i", s_.i, "starting index in [0, N]")->required();
        sim->add_option("--n", s_.n, "number of steps")->required();

        auto* table = sub("grid-table", "complete transition table of the grid map", [this] {
            Document d;
            d.set("N", u64(s_.N));
            d.set("eta", min_separation_eta(s_.N).str());
            Table t{"transitions", {"index", "next"}, {}};
            for (const auto& [i, j] : grid_table(s_.N)) {
                t.rows.push_back({u64(i), u64(j)});
            }
            d.tables.push_back(std::move(t));
            return d;
        });
        table->add_option("--N", s_.N, "grid resolution")->required();
    }

    void add_measured_commands() {
        auto* succ = sub("measured-succ", "readouts that may follow a readout", [this] {
            const Readout m = parse_readout(s_.readout, s_.d);
            Document d;
            d.set("d", u64(m.d));
            d.set("readout", m.str());
            d.set("successors", readout_list(successors(m)));
            Table t{"witnesses", {"successor", "position"}, {}};
            for (const SuccessorWitness& w : successor_witnesses(m)) {
                t.rows.push_back({Readout{m.d, w.k}.str(), w.x.str()});
            }
            d.tables.push_back(std::move(t));
            return d;
        });
        succ->add_option("--d", s_.d, "number of digits")->required();
        succ->add_option("--readout", s_.readout, "readout text with exactly d digits")->required();

        auto* reach = sub("measured-reach", "readouts reachable in exactly n steps", [this] {
            const Readout m = parse_readout(s_.readout, s_.d);
            const SuccessorSet s = reach_n(m, s_.n);
            Document d;
            d.set("d", u64(m.d));
            d.set("readout", m.str());
            d.set("n", u64(s_.n));
            d.set("count", u64(s.members.size()));
            d.set("reachable", readout_list(s));
            return d;
        });
        reach->add_option("--d", s_.d, "number of digits")->required();
        reach->add_option("--readout", s_.readout, "readout text with exactly d digits")->required();
        reach->add_option("--n", s_.n, "number of steps")->required();
    }

    void add_limit_command() {
        auto* lim = sub("limit-demo", "discontinuous limit map of x -> x^2", [this] {
            const Rational x = Rational::parse(s_.limit_x);
            const Rational threshold = Rational::parse(s_.threshold);
            const Rational eps = Rational::parse(s_.limit_eps);
            const unsigned digits = g_.decimals.value_or(12);
            Document d;
            d.set("x", x.str());
            d.set("limit", limit_state(x).str());
            d.set("threshold", threshold.str());
            const auto first = first_below(x, threshold, s_.max_n);
            d.set("first_below", first ? u64(*first) : "none");

            Table w{"witnesses", {"eta", "x", "xp", "gap"}, {}};
            Rational eta(1);
            for (unsigned j = 1; j <= s_.depth; ++j) {
                eta = eta * Rational(1, 10);
                const LimitWitness lw = discontinuity_witness(eta);
                w.rows.push_back({lw.eta.str(), lw.x.str(), lw.xp.str(), lw.gap.str()});
            }
            d.tables.push_back(std::move(w));

            Table conv{"convergence", {"n", "exact", "approx"}, {}};
            for (std::uint64_t n = 0; n <= s_.max_n; ++n) {
                // Exact states are listed only while they stay short.
                const Enclosure e = diss_iter_bounds(x, n, 64);
                const std::string exact = e.exact && e.lo.str().size() <= 40 ? e.lo.str() : "~";
                conv.rows.push_back({u64(n), exact, to_decimal(diss_iter_approx(x, n, eps), digits)});
            }
            d.set("eps", eps.str());
            d.tables.push_back(std::move(conv));
            return d;
        });
        lim->add_option("--x", s_.limit_x, "starting position in [0, 1] (default 9/10)");
        lim->add_option("--threshold", s_.threshold, "convergence threshold (default 1/1000)");
        lim->add_option("--eps", s_.limit_eps, "accuracy of the convergence table (default 1/10^12)");
        lim->add_option("--max-n", s_.max_n, "last date in the convergence table (default 10)");
        lim->add_option("--depth", s_.depth, "witnesses for eta = 10^-1 .. 10^-depth (default 6)");
    }

    void add_check_command() {
        sub("check", "run every module's property suite", [this] {
            Document d;
            Table t{"properties", {"module", "property", "result", "detail"}, {}};
            std::uint64_t failed = 0;
            const auto results = run_self_check(g_.seed);
            for (const PropertyResult& r : results) {
                failed += r.passed ? 0 : 1;
                t.rows.push_back({r.module, r.property, r.passed ? "pass" : "fail", r.detail});
            }
            d.set("seed", u64(g_.seed));
            d.set("properties", u64(results.size()));
            d.set("failed", u64(failed));
            d.tables.push_back(std::move(t));
            return d;
        });
    }

    struct Settings {
        std::string rational;
        std::string encoding = "canonical";
        std::string code;
        std::string from;
        std::string to;
        std::string program;
        std::string term;
        std::string args;
        bool over_rationals = false;
        std::string x;
        std::string eps;
        std::string eta;
        std::string a;
        std::string ap;
        std::uint64_t n = 0;
        std::uint64_t N = 1;
        std::uint64_t i = 0;
        unsigned d = 3;
        std::string readout;
        std::string limit_x = "9/10";
        std::string threshold = "1/1000";
        std::string limit_eps = "1/1000000000000";
        std::uint64_t max_n = 10;
        unsigned depth = 6;
    };

    CLI::App app_{"chaosctl"};
    Globals g_;
    Settings s_;
    std::string command_;
    std::function<Document()> action_;
};

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
    Dispatcher dispatcher;
    return dispatcher.run(argv);
}

std::string render(const CommandResult& r) {
    if (!r.message.empty()) {
        return r.message;
    }
    if (r.format == Format::structured) {
        nlohmann::ordered_json doc;
        doc["status"] = to_string(r.status);
        for (const auto& [k, v] : r.payload.fields) {
            doc[k] = v;
        }
        if (!r.payload.tables.empty()) {
            auto& tables = doc["tables"] = nlohmann::ordered_json::array();
            for (const Table& t : r.payload.tables) {
                tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
            }
        }
        return doc.dump(2) + "\n";
    }
    std::string out = std::string("status=") + to_string(r.status) + "\n";
    for (const auto& [k, v] : r.payload.fields) {
        out += k + "=" + v + "\n";
    }
    for (const Table& t : r.payload.tables) {
        out += "table=" + t.name + "\n";
        out += "columns=" + join(t.columns, ",") + "\n";
        for (const auto& row : t.rows) {
            out += join(row, "\t") + "\n";
        }
    }
    return out;
}

}  // namespace chaos::cli
