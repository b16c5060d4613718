// numero — exact numerosity calculator for the three ground models.
//
// Subcommands: eval, prob, compare, estimate, oracle. Reports are
// line-oriented "key: value" text; --json emits the same keys as one JSON
// object per invocation. Exit codes: 0 success, 1 domain error, 2 usage or
// parse error. Identical invocations produce byte-identical stdout.

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "numero/dsl.hpp"
#include "numero/errors.hpp"
#include "numero/estimate.hpp"
#include "numero/event.hpp"
#include "numero/measures.hpp"
#include "numero/navalue.hpp"
#include "numero/numerosity.hpp"
#include "numero/properties.hpp"
#include "numero/rational.hpp"

namespace {

using numero::CoinEvent;
using numero::DivResult;
using numero::Event;
using numero::Model;
using numero::NAValue;

constexpr std::size_t kOracleCases = 500;

// Usage-level failures discovered after flag parsing (e.g. a missing --spec
// for the finite model); mapped to exit code 2 like CLI11's own errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered key/value report that renders either as text lines or as a single
// JSON object with the same keys.
class Report {
public:
    explicit Report(bool as_json) : json_(as_json) {}

    void text(const std::string& key, const std::string& value) {
        lines_.emplace_back(key, value);
        doc_[key] = value;
    }
    void count(const std::string& key, std::uint64_t value) {
        lines_.emplace_back(key, std::to_string(value));
        doc_[key] = value;
    }
    void yesno(const std::string& key, bool value) {
        lines_.emplace_back(key, value ? "yes" : "no");
        doc_[key] = value;
    }
    void passfail(const std::string& key, bool value) {
        lines_.emplace_back(key, value ? "pass" : "fail");
        doc_[key] = value;
    }
    void real(const std::string& key, double value) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", value);
        lines_.emplace_back(key, buf);
        doc_[key] = value;
    }

    void print(std::ostream& os) const {
        if (json_) {
            os << doc_.dump() << '\n';
            return;
        }
        for (const auto& [key, value] : lines_) os << key << ": " << value << '\n';
    }

private:
    bool json_;
    std::vector<std::pair<std::string, std::string>> lines_;
    nlohmann::ordered_json doc_ = nlohmann::ordered_json::object();
};

struct Session {
    Model model = Model::coin;
    numero::FiniteSpacePtr space;                        // finite model only
    std::optional<numero::FiniteMeasureSpace> measure;   // finite model only
    numero::NumerosityContext ctx;
    std::uint64_t seed = 0;
    std::uint64_t samples = 10000;
    std::uint32_t horizon = 64;
    bool json = false;
};

Model parse_model(const std::string& name) {
    if (name == "coin") return Model::coin;
    if (name == "interval") return Model::interval;
    if (name == "finite") return Model::finite;
    throw UsageError("unknown model: " + name);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw numero::DomainError("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Session make_session(const std::string& model_name, const std::string& spec_path, int order,
                     std::uint64_t seed, std::uint64_t samples, std::uint32_t horizon,
                     bool json) {
    Session s;
    s.model = parse_model(model_name);
    s.seed = seed;
    s.samples = samples;
    s.horizon = horizon;
    s.json = json;
    switch (s.model) {
    case Model::coin:
        s.ctx = numero::NumerosityContext::coin(order);
        break;
    case Model::interval:
        s.ctx = numero::NumerosityContext::interval(order);
        break;
    case Model::finite:
        if (spec_path.empty())
            throw UsageError("the finite model needs --spec PATH (universe/gen/mu lines)");
        s.measure = numero::parse_finite_spec(read_file(spec_path));
        s.space = s.measure->space();
        s.ctx = numero::NumerosityContext::finite(s.space, order);
        break;
    }
    return s;
}

const CoinEvent& as_coin(const Event& e) { return std::get<CoinEvent>(e); }

void append_probability(Report& report, const DivResult& p) {
    report.text("P", p.value.to_string());
    report.yesno("exact", p.exact);
    report.text("st", p.value.standard_part().to_string());
}

int cmd_eval(const Session& s, const std::string& expr) {
    Event e = numero::parse_to_event(expr, s.model, s.space);
    Report report(s.json);
    report.text("model", std::string(numero::model_name(s.model)));
    report.text("event", numero::render(e));
    report.text("n", numero::numerosity(s.ctx, e).to_string());
    if (s.model == Model::coin) append_probability(report, numero::probability(s.ctx, as_coin(e)));
    report.print(std::cout);
    return 0;
}

int cmd_prob(const Session& s, const std::string& expr, const std::optional<std::string>& given) {
    if (s.model != Model::coin)
        throw numero::DomainError("probability reports need the coin model");
    Event e = numero::parse_to_event(expr, s.model, s.space);
    Report report(s.json);
    report.text("model", std::string(numero::model_name(s.model)));
    report.text("event", numero::render(e));
    DivResult p;
    if (given.has_value()) {
        Event f = numero::parse_to_event(*given, s.model, s.space);
        report.text("given", numero::render(f));
        p = numero::conditional(s.ctx, as_coin(e), as_coin(f));
    } else {
        p = numero::probability(s.ctx, as_coin(e));
    }
    append_probability(report, p);
    report.print(std::cout);
    return 0;
}

int cmd_compare(const Session& s, const std::string& lhs_expr, const std::string& rhs_expr) {
    Event lhs = numero::parse_to_event(lhs_expr, s.model, s.space);
    Event rhs = numero::parse_to_event(rhs_expr, s.model, s.space);
    NAValue n_lhs = numero::numerosity(s.ctx, lhs);
    NAValue n_rhs = numero::numerosity(s.ctx, rhs);
    Report report(s.json);
    report.text("model", std::string(numero::model_name(s.model)));
    report.text("lhs", numero::render(lhs));
    report.text("rhs", numero::render(rhs));
    report.yesno("equal", numero::event_is_equal(lhs, rhs));
    report.yesno("lhs_subset_of_rhs", numero::event_is_subset(lhs, rhs));
    report.yesno("rhs_subset_of_lhs", numero::event_is_subset(rhs, lhs));
    report.yesno("disjoint", numero::event_is_empty(numero::event_intersect(lhs, rhs)));
    report.text("n_lhs", n_lhs.to_string());
    report.text("n_rhs", n_rhs.to_string());
    auto order = n_lhs <=> n_rhs;
    report.text("order", order < 0 ? "less" : order > 0 ? "greater" : "equal");
    report.print(std::cout);
    return 0;
}

int cmd_estimate(const Session& s, const std::string& expr) {
    if (s.model != Model::coin) throw numero::DomainError("estimate needs the coin model");
    Event e = numero::parse_to_event(expr, s.model, s.space);
    numero::EstimateConfig config{s.seed, s.samples, s.horizon};
    numero::EstimateReport result = numero::estimate_probability(as_coin(e), config);
    Report report(s.json);
    report.text("model", std::string(numero::model_name(s.model)));
    report.text("event", numero::render(e));
    report.count("seed", s.seed);
    report.count("samples", result.samples);
    report.count("horizon", result.horizon);
    report.text("frequency", numero::rational_to_string(result.frequency));
    report.text("st", numero::rational_to_string(result.exact_probability));
    report.text("gap", numero::rational_to_string(result.gap));
    report.yesno("within_3sigma", result.within_three_sigma);
    report.real("half_width", result.half_width);
    report.print(std::cout);
    return 0;
}

int cmd_oracle(const Session& s) {
    Report report(s.json);
    report.text("model", std::string(numero::model_name(s.model)));
    bool ok = true;
    if (s.model == Model::finite) {
        numero::FiniteOracleReport oracle = numero::finite_oracle(*s.measure);
        report.count("universe", oracle.universe_size);
        report.count("algebra", oracle.algebra_size);
        report.count("caratheodory", oracle.caratheodory_size);
        report.text("beta", oracle.beta);
        report.passfail("additivity", oracle.additivity);
        report.passfail("monotonicity", oracle.monotonicity);
        report.passfail("outer_regularity", oracle.outer_regularity);
        report.passfail("inner_leq_outer", oracle.inner_leq_outer);
        report.passfail("sigma_subadditivity", oracle.sigma_subadditivity);
        report.passfail("caratheodory_closed", oracle.caratheodory_closed);
        report.yesno("equality_on_algebra", oracle.equality_on_algebra);
        ok = oracle.all_passed();
    }
    for (const auto& property : numero::run_property_suite(s.model, s.seed, kOracleCases)) {
        report.passfail(property.name, property.passed);
        ok = ok && property.passed;
    }
    report.passfail("all", ok);
    report.print(std::cout);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact numerosity calculator for coin-toss, interval, and finite models"};
    app.require_subcommand(1);

    // CLI11's stock PositiveNumber validates through double and reports a
    // double range on failure; integer flags deserve an integer message.
    const CLI::Validator positive_integer(
        [](std::string& value) -> std::string {
            errno = 0;
            char* end = nullptr;
            const long long parsed = std::strtoll(value.c_str(), &end, 10);
            if (errno != 0 || end == value.c_str() || *end != '\0' || parsed <= 0) {
                return "must be a positive integer, got '" + value + "'";
            }
            return std::string{};
        },
        "POSITIVE");

    std::string model_name = "coin";
    app.add_option("--model", model_name, "Ground model: coin, interval, or finite")
        ->check(CLI::IsMember({"coin", "interval", "finite"}));
    int order = numero::kDefaultTruncationOrder;
    app.add_option("--order", order, "Series truncation order for inexact division")
        ->check(positive_integer);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for estimation and oracle suites");
    std::uint64_t samples = 10000;
    app.add_option("--samples", samples, "Monte-Carlo sample count")
        ->check(positive_integer);
    std::uint32_t horizon = 64;
    app.add_option("--horizon", horizon, "Highest coin index drawn per sample");
    std::string spec_path;
    app.add_option("--spec", spec_path, "Finite-model spec file (universe/gen/mu lines)")
        ->check(CLI::ExistingFile);
    bool json = false;
    app.add_flag("--json", json, "Emit the report as one JSON object");

    auto* eval_cmd = app.add_subcommand("eval", "Numerosity (and coin probability) of an event");
    eval_cmd->fallthrough();
    std::string eval_expr;
    eval_cmd->add_option("expr", eval_expr, "Event expression")->required();

    auto* prob_cmd = app.add_subcommand("prob", "Exact probability, optionally conditional");
    prob_cmd->fallthrough();
    std::string prob_expr;
    prob_cmd->add_option("expr", prob_expr, "Event expression")->required();
    std::string given_expr;
    CLI::Option* given_opt = prob_cmd->add_option("--given", given_expr, "Conditioning event");

    auto* compare_cmd = app.add_subcommand("compare", "Set relations and numerosity order");
    compare_cmd->fallthrough();
    std::string compare_lhs, compare_rhs;
    compare_cmd->add_option("lhs", compare_lhs, "Left event expression")->required();
    compare_cmd->add_option("rhs", compare_rhs, "Right event expression")->required();

    auto* estimate_cmd = app.add_subcommand("estimate", "Monte-Carlo estimate of st(P(E))");
    estimate_cmd->fallthrough();
    std::string estimate_expr;
    estimate_cmd->add_option("expr", estimate_expr, "Coin event expression")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Run measure and property suites");
    oracle_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Session session = make_session(model_name, spec_path, order, seed, samples, horizon, json);
        if (eval_cmd->parsed()) return cmd_eval(session, eval_expr);
        if (prob_cmd->parsed()) {
            std::optional<std::string> given;
            if (given_opt->count() > 0) given = given_expr;
            return cmd_prob(session, prob_expr, given);
        }
        if (compare_cmd->parsed()) return cmd_compare(session, compare_lhs, compare_rhs);
        if (estimate_cmd->parsed()) return cmd_estimate(session, estimate_expr);
        if (oracle_cmd->parsed()) return cmd_oracle(session);
        throw UsageError("no subcommand selected");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const numero::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const numero::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
