#include "trainyard/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "trainyard/counts.hpp"
#include "trainyard/error.hpp"
#include "trainyard/expansion.hpp"
#include "trainyard/json_io.hpp"
#include "trainyard/rodset.hpp"
#include "trainyard/series.hpp"
#include "trainyard/structure.hpp"

namespace trainyard::cli {

namespace {

constexpr const char* grammar =
    "rod set literal:  \"[\" term (\",\" term)* \"]\"   term := \"-\"? length (\"^\" count)?   e.g. \"[1,-2^3]\"";

struct Config {
    Length horizon = 64;
    std::string format = "text";
    std::size_t cap = default_enumeration_cap;

    bool json() const { return format == "json"; }
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

// A rod-set argument is a literal, or "@path" naming a file with one literal
// per line ('#' starts a comment line).
std::vector<RodSet> rodsets_arg(const std::string& arg) {
    if (arg.empty() || arg.front() != '@') return {parse_rodset(arg)};
    std::ifstream in(arg.substr(1));
    if (!in) throw DomainError("cannot read rod set file '" + arg.substr(1) + "'");
    std::vector<RodSet> out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        out.push_back(parse_rodset(line));
    }
    if (out.empty()) throw DomainError("rod set file '" + arg.substr(1) + "' has no literals");
    return out;
}

RodSet rodset_arg(const std::string& arg) {
    auto all = rodsets_arg(arg);
    if (all.size() != 1) throw DomainError("expected a single rod set in '" + arg + "'");
    return all.front();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

Integer integer_arg(const std::string& s) {
    Integer v;
    if (s.empty() || v.set_str(s.front() == '+' ? s.substr(1) : s, 10) != 0)
        throw ParseError("expected an integer, got '" + s + "'", 0);
    return v;
}

int sign_arg(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1" || s == "plus") return 1;
    if (s == "-" || s == "-1" || s == "minus") return -1;
    throw ParseError("expected a sign (+ or -), got '" + s + "'", 0);
}

std::string join(const std::vector<Integer>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i].get_str();
    }
    return out;
}

std::string describe_source(const RodSource& src) {
    if (const auto* r = src.finite()) return format_rodset(*r);
    if (const auto* a = std::get_if<ArithmeticRods>(&src.variant()))
        return "arith(" + std::to_string(a->first) + "," + std::to_string(a->step) + "," + (a->sign > 0 ? "+" : "-") + ")";
    if (const auto* t = std::get_if<TrainsOfRods>(&src.variant()))
        return std::string("trains(") + (t->sign > 0 ? "" : "-") + format_rodset(t->base) + ")";
    return "counts(" + join(std::get<ExplicitCounts>(src.variant()).values) + ")";
}

std::string verdict_text(const Finiteness& f) {
    switch (f.kind) {
        case Finiteness::Kind::finite: return "finite";
        case Finiteness::Kind::infinite: return "infinite";
        case Finiteness::Kind::undecided: break;
    }
    return "undecided(trailing_zeros=" + std::to_string(f.trailing_zeros) + ")";
}

std::string expansion_text(const Expansion& e) {
    return "R=" + describe_source(e.r) + " Q=" + describe_source(e.q) + " S=" + describe_source(e.s) +
           " r_finite=" + verdict_text(e.r_finite) + " q_finite=" + verdict_text(e.q_finite) +
           " identity=" + (e.identity_checked ? "ok" : "unchecked");
}

void print_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// Options shared by commands that accept a literal, --arith or --trains.
struct SourceArgs {
    std::string literal;
    std::string arith;
    std::string trains;

    void attach(CLI::App* cmd, const std::string& name) {
        auto* lit = cmd->add_option(name, literal, "rod set literal or @file");
        auto* ar = cmd->add_option("--arith", arith, "arithmetic rods: first,step,sign");
        auto* tr = cmd->add_option("--trains", trains, "rods of Trains(RODSET)");
        lit->excludes(ar)->excludes(tr);
        ar->excludes(tr);
    }

    std::vector<RodSource> sources() const {
        if (!arith.empty()) {
            const auto parts = split(arith, ',');
            if (parts.size() != 3) throw ParseError("--arith expects first,step,sign", 0);
            return {ArithmeticRods{integer_arg(parts[0]).get_si(), integer_arg(parts[1]).get_si(), sign_arg(parts[2])}};
        }
        if (!trains.empty()) {
            const bool negative = trains.front() == '-';
            return {TrainsOfRods{rodset_arg(negative ? trains.substr(1) : trains), negative ? -1 : 1}};
        }
        if (literal.empty()) throw ParseError("missing rod set", 0);
        std::vector<RodSource> out;
        for (auto& r : rodsets_arg(literal)) out.emplace_back(std::move(r));
        return out;
    }
};

class Driver {
public:
    Driver(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args) {
        CLI::App app{"Exact rod-set algebra: train counts, expansions, duality, periodicity and scans", "trainyard"};
        app.fallthrough();
        app.require_subcommand(1);
        app.add_option("-n,--horizon", cfg_.horizon, "sequence horizon")
            ->envname("TRAINYARD_HORIZON")
            ->check(CLI::PositiveNumber);
        app.add_option("--format", cfg_.format, "output format")
            ->envname("TRAINYARD_FORMAT")
            ->check(CLI::IsMember({"text", "json"}));
        app.add_option("--cap", cfg_.cap, "enumeration cap")->check(CLI::PositiveNumber);
        app.footer(grammar);

        register_commands(app);

        std::vector<const char*> argv{"trainyard"};
        for (const auto& a : args) argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e, out_, err_);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e, out_, err_);
        } catch (const CLI::ParseError& e) {
            app.exit(e, out_, err_);
            return 2;
        }

        try {
            action_();
        } catch (const ParseError& e) {
            err_ << "usage error: " << e.what() << '\n' << grammar << '\n';
            return 2;
        } catch (const DomainError& e) {
            err_ << "error: " << e.what() << '\n';
            return 1;
        } catch (const nlohmann::json::exception& e) {
            err_ << "error: " << e.what() << '\n';
            return 1;
        }
        catch (const std::logic_error& e) {
            err_ << "internal error: " << e.what() << '\n';
            return 1;
        }
        return 0;
    }

private:
    void on(CLI::App* cmd, std::function<void()> fn) {
        cmd->callback([this, fn = std::move(fn)] { action_ = fn; });
    }

    void register_commands(CLI::App& app) {
        // counts
        {
            auto* cmd = app.add_subcommand("counts", "net train counts F(0..N)");
            cmd->fallthrough();
            auto src = std::make_shared<SourceArgs>();
            src->attach(cmd, "rodset");
            on(cmd, [this, src] {
                for (const auto& s : src->sources()) emit_seq(train_counts(s, cfg_.horizon));
            });
        }
        // discrep
        {
            auto* cmd = app.add_subcommand("discrep", "discrepancies D(1..N, R, S)");
            auto r = std::make_shared<std::string>();
            auto s = std::make_shared<std::string>();
            cmd->add_option("R", *r)->required();
            cmd->add_option("S", *s)->required();
            on(cmd, [this, r, s] { emit_seq(discrepancies(rodset_arg(*r), rodset_arg(*s), cfg_.horizon)); });
        }
        // expand
        {
            auto* cmd = app.add_subcommand("expand", "S from R and Q");
            auto r = std::make_shared<std::string>();
            auto q = std::make_shared<std::string>();
            cmd->add_option("R", *r)->required();
            cmd->add_option("Q", *q)->required();
            on(cmd, [this, r, q] { emit(expand(rodset_arg(*r), rodset_arg(*q), cfg_.horizon)); });
        }
        // solveq
        {
            auto* cmd = app.add_subcommand("solveq", "Q from R and S, with finiteness verdict");
            auto r = std::make_shared<std::string>();
            auto s = std::make_shared<std::string>();
            cmd->add_option("R", *r)->required();
            cmd->add_option("S", *s)->required();
            on(cmd, [this, r, s] { emit(solve_q(rodset_arg(*r), rodset_arg(*s), cfg_.horizon)); });
        }
        // solver
        {
            auto* cmd = app.add_subcommand("solver", "R from Q and S");
            auto q = std::make_shared<std::string>();
            auto s = std::make_shared<std::string>();
            cmd->add_option("Q", *q)->required();
            cmd->add_option("S", *s)->required();
            on(cmd, [this, q, s] { emit(solve_r(rodset_arg(*q), rodset_arg(*s), cfg_.horizon)); });
        }
        // dual
        {
            auto* cmd = app.add_subcommand("dual", "dual rod set Q* = rods(Trains(anti Q))");
            auto src = std::make_shared<SourceArgs>();
            src->attach(cmd, "Q");
            on(cmd, [this, src] {
                for (const auto& q : src->sources()) {
                    const auto d = dual(q, cfg_.horizon);
                    if (cfg_.json())
                        print_json(out_, {{"Q", to_json(q)}, {"dual", to_json(d.dual)}, {"finite", d.finiteness.is_finite()}});
                    else
                        out_ << "Q*=" << describe_source(d.dual) << ' ' << verdict_text(d.finiteness) << '\n';
                }
            });
        }
        // compose
        {
            auto* cmd = app.add_subcommand("compose", "Q_PR u Q_RS u Q_PR Q_RS");
            auto a = std::make_shared<std::string>();
            auto b = std::make_shared<std::string>();
            cmd->add_option("Q1", *a)->required();
            cmd->add_option("Q2", *b)->required();
            on(cmd, [this, a, b] {
                const auto q = compose(rodset_arg(*a), rodset_arg(*b));
                if (cfg_.json())
                    print_json(out_, to_json(RodSource(q)));
                else
                    out_ << format_rodset(q) << '\n';
            });
        }
        // fromseq
        {
            auto* cmd = app.add_subcommand("fromseq", "rod set whose train counts start with v0,v1,...");
            auto seq = std::make_shared<std::string>();
            cmd->add_option("values", *seq, "comma-separated, v0 = 1")->required();
            on(cmd, [this, seq] {
                CountSeq f{0, {}};
                for (const auto& v : split(*seq, ',')) f.values.push_back(integer_arg(v));
                const auto c = rodset_from_counts(f, f.last_index());
                if (cfg_.json()) {
                    print_json(out_, {{"counts", to_json(c)}, {"rods", format_rodset(rodset_from_prefix(c))}});
                } else {
                    out_ << "counts=" << join(c.values) << " rods=" << format_rodset(rodset_from_prefix(c))
                         << " through=" << c.last_index() << '\n';
                }
            });
        }
        // period
        {
            auto* cmd = app.add_subcommand("period", "exact periodicity via cyclotomic factors");
            auto r = std::make_shared<std::string>();
            cmd->add_option("R", *r)->required();
            on(cmd, [this, r] {
                for (const auto& rods : rodsets_arg(*r)) {
                    const auto p = detect_period(rods);
                    if (cfg_.json()) {
                        print_json(out_, to_json(p));
                        continue;
                    }
                    std::string factors;
                    for (std::size_t i = 0; i < p.cyclotomic_factors.size(); ++i)
                        factors += (i ? "," : "") + std::to_string(p.cyclotomic_factors[i]);
                    if (p.periodic)
                        out_ << "periodic p=" << p.least_period << " factors=" << factors
                             << " Q=" << format_rodset(p.q_to_period);
                    else
                        out_ << "not periodic factors=" << factors;
                    out_ << " window=" << (p.window_confirmed ? "confirmed" : "DISAGREES") << '\n';
                }
            });
        }
        // scan1
        {
            auto* cmd = app.add_subcommand("scan1", "1-expansions of R up to a length bound");
            auto r = std::make_shared<std::string>();
            auto bound = std::make_shared<Length>(16);
            cmd->add_option("R", *r)->required();
            cmd->add_option("-b,--bound", *bound, "length bound")->check(CLI::PositiveNumber);
            on(cmd, [this, r, bound] {
                for (const auto& rods : rodsets_arg(*r)) {
                    const auto hits = scan_one_expansions(rods, *bound);
                    if (cfg_.json()) {
                        print_json(out_, to_json(hits));
                        continue;
                    }
                    for (const auto& h : hits)
                        out_ << "a=" << h.a << " mult=" << h.multiplicity << " S=" << format_rodset(h.s)
                             << " Q=" << format_rodset(h.q) << '\n';
                }
            });
        }
        // scan2
        {
            auto* cmd = app.add_subcommand("scan2", "2-expansions of R up to a length bound");
            auto r = std::make_shared<std::string>();
            auto bound = std::make_shared<Length>(16);
            auto trivial = std::make_shared<bool>(false);
            cmd->add_option("R", *r)->required();
            cmd->add_option("-b,--bound", *bound, "length bound")->check(CLI::Range(Length{2}, Length{1} << 20));
            cmd->add_flag("--trivial", *trivial, "also report R itself when it has two lengths");
            on(cmd, [this, r, bound, trivial] {
                for (const auto& rods : rodsets_arg(*r)) {
                    const auto hits = scan_two_expansions(rods, *bound, {.include_trivial = *trivial});
                    if (cfg_.json()) {
                        print_json(out_, to_json(hits));
                        continue;
                    }
                    for (const auto& h : hits) emit_hit(h);
                }
            });
        }
        // lucas
        {
            auto* cmd = app.add_subcommand("lucas", "divisibility checks for the Lucas rod set [(+-1)^s,2^t]");
            auto args = std::make_shared<std::vector<std::string>>();
            cmd->add_option("params", *args, "s t sign")->expected(3)->required();
            on(cmd, [this, args] {
                const auto report = lucas_check(lucas_params(*args), cfg_.horizon);
                if (cfg_.json()) {
                    print_json(out_, to_json(report));
                } else if (report.pass) {
                    out_ << "pass counts=" << join(report.counts.values) << '\n';
                } else {
                    out_ << "fail " << *report.counterexample << '\n';
                }
            });
        }
        // lucas-shapes
        {
            auto* cmd = app.add_subcommand("lucas-shapes", "verified 2-expansions of a Lucas rod set");
            auto args = std::make_shared<std::vector<std::string>>();
            auto kind = std::make_shared<std::string>("adjacent");
            auto from = std::make_shared<Length>(1);
            auto to = std::make_shared<Length>(4);
            auto d = std::make_shared<Length>(3);
            auto kmax = std::make_shared<Length>(1);
            cmd->add_option("params", *args, "s t sign")->expected(3)->required();
            cmd->add_option("--kind", *kind)->check(CLI::IsMember({"adjacent", "skip", "multiple"}));
            cmd->add_option("--from", *from, "first a (adjacent, skip)");
            cmd->add_option("--to", *to, "last a (adjacent, skip)");
            cmd->add_option("--d", *d, "length step (multiple)");
            cmd->add_option("--kmax", *kmax, "largest k (multiple)");
            on(cmd, [=, this] {
                ShapeFamily family;
                if (*kind == "adjacent")
                    family = AdjacentShapes{*from, *to};
                else if (*kind == "skip")
                    family = SkipShapes{*from, *to};
                else
                    family = MultipleShapes{*d, *kmax};
                const auto hits = lucas_two_shapes(lucas_params(*args), family);
                if (cfg_.json()) {
                    print_json(out_, to_json(hits));
                    return;
                }
                for (const auto& h : hits) emit_hit(h);
            });
        }
        // borwein
        {
            auto* cmd = app.add_subcommand("borwein", "trinomial expansions of [1,-2] and [-1,-2]");
            auto bound = std::make_shared<Length>(30);
            cmd->add_option("-b,--bound", *bound, "length bound")->check(CLI::Range(Length{2}, Length{1} << 16));
            on(cmd, [this, bound] {
                const auto table = borwein_classify(*bound);
                if (cfg_.json()) {
                    print_json(out_, to_json(table));
                    return;
                }
                auto dump = [this](const char* label, const auto& m) {
                    for (const auto& [cls, pairs] : m) {
                        out_ << label << ' ' << cls << ':';
                        for (const auto& p : pairs)
                            out_ << ' ' << format_rodset(RodSet{RodTerm{p.a, p.sign_a}, RodTerm{p.b, p.sign_b}});
                        out_ << '\n';
                    }
                };
                dump("[1,-2]", table.hits_1_anti2);
                dump("[-1,-2]", table.hits_anti1_anti2);
                out_ << "scan_agrees=" << (table.scan_agrees ? "true" : "false") << '\n';
            });
        }
        // enumerate
        {
            auto* cmd = app.add_subcommand("enumerate", "brute-force train enumeration");
            auto r = std::make_shared<std::string>();
            auto n = std::make_shared<Length>(0);
            auto list = std::make_shared<bool>(false);
            cmd->add_option("R", *r)->required();
            cmd->add_option("length", *n)->required()->check(CLI::NonNegativeNumber);
            cmd->add_flag("--list", *list, "print every train");
            on(cmd, [this, r, n, list] {
                const auto e = enumerate_trains(rodset_arg(*r), *n, cfg_.cap);
                if (cfg_.json()) {
                    Json j{{"net", integer_to_json(e.net)}, {"total", e.trains.size()}};
                    if (*list) {
                        Json trains = Json::array();
                        for (const auto& t : e.trains) trains.push_back(train_text(t));
                        j["trains"] = std::move(trains);
                    }
                    print_json(out_, j);
                    return;
                }
                if (*list)
                    for (const auto& t : e.trains) out_ << train_text(t) << '\n';
                out_ << "net=" << e.net << " total=" << e.trains.size() << '\n';
            });
        }
        // binom
        {
            auto* cmd = app.add_subcommand("binom", "binomial diagonal sum for a two-rod set");
            auto r = std::make_shared<std::string>();
            auto n = std::make_shared<Length>(0);
            cmd->add_option("R", *r)->required();
            cmd->add_option("length", *n)->required()->check(CLI::NonNegativeNumber);
            on(cmd, [this, r, n] {
                // Two unit terms are taken as a rod pair even when they share a
                // length, so "[1,1]" and "[1,-1]" work.
                const auto terms = parse_rod_terms(*r);
                Integer value;
                if (terms.size() == 2 && abs(terms[0].count) == 1 && abs(terms[1].count) == 1)
                    value = binomial_count(Rod{terms[0].length, sgn(terms[0].count)},
                                           Rod{terms[1].length, sgn(terms[1].count)}, *n);
                else
                    value = binomial_count(RodSet(terms), *n);
                if (cfg_.json())
                    print_json(out_, {{"value", integer_to_json(value)}});
                else
                    out_ << value << '\n';
            });
        }
        // poly
        {
            auto* cmd = app.add_subcommand("poly", "exact polynomial product or quotient");
            auto op = std::make_shared<std::string>();
            auto p1 = std::make_shared<std::string>();
            auto p2 = std::make_shared<std::string>();
            cmd->add_option("op", *op)->required()->check(CLI::IsMember({"mul", "div"}));
            cmd->add_option("P1", *p1)->required();
            cmd->add_option("P2", *p2)->required();
            on(cmd, [this, op, p1, p2] {
                const Poly a = parse_poly(*p1);
                const Poly b = parse_poly(*p2);
                std::optional<Poly> result = *op == "mul" ? std::optional<Poly>(a * b) : poly_divexact(a, b);
                if (cfg_.json()) {
                    Json coeffs = Json::array();
                    if (result)
                        for (const auto& c : result->coefficients()) coeffs.push_back(integer_to_json(c));
                    print_json(out_, {{"divisible", result.has_value()},
                                      {"poly", result ? Json(format_poly(*result)) : Json(nullptr)},
                                      {"coefficients", result ? coeffs : Json(nullptr)}});
                } else {
                    out_ << (result ? format_poly(*result) : std::string("indivisible")) << '\n';
                }
            });
        }
        // cyclo
        {
            auto* cmd = app.add_subcommand("cyclo", "d-th cyclotomic polynomial");
            auto d = std::make_shared<Length>(1);
            cmd->add_option("d", *d)->required()->check(CLI::Range(Length{1}, Length{1} << 16));
            on(cmd, [this, d] {
                const Poly& p = cyclotomic(*d);
                if (cfg_.json()) {
                    Json coeffs = Json::array();
                    for (const auto& c : p.coefficients()) coeffs.push_back(integer_to_json(c));
                    print_json(out_, {{"d", *d}, {"poly", format_poly(p)}, {"coefficients", coeffs}});
                } else {
                    out_ << format_poly(p) << '\n';
                }
            });
        }
        // describe
        {
            auto* cmd = app.add_subcommand("describe", "shape, multiplicities and summary of a rod set");
            auto r = std::make_shared<std::string>();
            cmd->add_option("R", *r)->required();
            on(cmd, [this, r] {
                for (const auto& rods : rodsets_arg(*r)) {
                    const auto d = describe(rods);
                    std::string shape, mults;
                    for (std::size_t i = 0; i < d.shape.size(); ++i) {
                        shape += (i ? "," : "") + std::to_string(d.shape[i]);
                        mults += (i ? "," : "") + d.multiplicities[i].get_str();
                    }
                    if (cfg_.json()) {
                        Json m = Json::array();
                        for (const auto& v : d.multiplicities) m.push_back(integer_to_json(v));
                        print_json(out_, {{"rods", format_rodset(rods)},
                                          {"shape", d.shape},
                                          {"multiplicities", m},
                                          {"min", d.min ? Json(*d.min) : Json(nullptr)},
                                          {"max", d.max ? Json(*d.max) : Json(nullptr)},
                                          {"size", integer_to_json(d.size)},
                                          {"primitive", d.primitive},
                                          {"positive", d.positive}});
                        continue;
                    }
                    out_ << "rods=" << format_rodset(rods) << " shape=<" << shape << "> multiplicities=" << mults
                         << " min=" << (d.min ? std::to_string(*d.min) : "none")
                         << " max=" << (d.max ? std::to_string(*d.max) : "none") << " size=" << d.size
                         << " primitive=" << (d.primitive ? "true" : "false")
                         << " positive=" << (d.positive ? "true" : "false") << '\n';
                }
            });
        }
    }

    static LucasParams lucas_params(const std::vector<std::string>& args) {
        return {integer_arg(args.at(0)), integer_arg(args.at(1)), sign_arg(args.at(2))};
    }

    static std::string train_text(const Train& t) {
        if (t.rods.empty()) return "()";
        std::string out;
        for (std::size_t i = 0; i < t.rods.size(); ++i) {
            const auto& r = t.rods[i];
            if (i) out += '.';
            if (r.sign < 0) out += '-';
            out += std::to_string(r.length) + "#" + std::to_string(r.color);
        }
        return out;
    }

    void emit_seq(const CountSeq& seq) {
        if (cfg_.json())
            print_json(out_, to_json(seq));
        else
            out_ << join(seq.values) << '\n';
    }

    void emit(const Expansion& e) {
        if (cfg_.json())
            print_json(out_, to_json(e));
        else
            out_ << expansion_text(e) << '\n';
    }

    void emit_hit(const ScalingHit& h) {
        out_ << "a=" << h.a << " b=" << h.b << " alpha=" << h.alpha << " S=" << format_rodset(h.s)
             << " Q=" << format_rodset(h.q) << '\n';
    }

    std::ostream& out_;
    std::ostream& err_;
    Config cfg_;
    std::function<void()> action_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return Driver(out, err).run(args);
}

}  // namespace trainyard::cli
