#include "orbitlr/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "orbitlr/error.hpp"
#include "orbitlr/hall.hpp"
#include "orbitlr/lr.hpp"
#include "orbitlr/orbit.hpp"
#include "orbitlr/tableaux.hpp"

namespace orbitlr::cli {

json CommandResult::to_json() const {
    json j{{"command", command}, {"inputs", inputs}, {"payload", payload}};
    if (verdict)
        j["verdict"] = std::string(to_string(*verdict));
    return j;
}

int exit_code(const CommandResult& result) {
    if (!result.verdict)
        return kExitOk;
    switch (*result.verdict) {
    case Verdict::Pass: return kExitOk;
    case Verdict::Inconclusive: return kExitInconclusive;
    case Verdict::Fail: return kExitFail;
    }
    return kExitFail;
}

std::uint64_t budget_from_env() {
    const char* raw = std::getenv("ORBITLR_BUDGET");
    if (raw == nullptr || *raw == '\0')
        return kDefaultBudget;
    std::uint64_t value = 0;
    const std::string text(raw);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
        throw Error(ErrorKind::InvalidArgument, "ORBITLR_BUDGET must be a positive integer, got '" + text + "'");
    return value;
}

namespace {

std::string join(const std::vector<Partition>& items) {
    std::string out;
    for (const auto& p : items) {
        if (!out.empty())
            out += ' ';
        out += p.to_string();
    }
    return out.empty() ? "(none)" : out;
}

/// Renders a tableau with '.' in the inner cells.
std::string draw(const SkewTableau& t) {
    std::ostringstream out;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out << "  ";
        for (int c = 0; c < t.shape.row_begin(r); ++c)
            out << ". ";
        for (int v : t.rows[r])
            out << v << ' ';
        out << '\n';
    }
    return out.str();
}

std::vector<Partition> parse_blocks(const std::string& text) {
    std::vector<Partition> blocks;
    std::size_t start = 0;
    while (true) {
        const auto end = text.find(';', start);
        blocks.push_back(Partition::parse(std::string_view(text).substr(start, end - start)));
        if (end == std::string::npos)
            break;
        start = end + 1;
    }
    return blocks;
}

struct Options {
    bool json_output = false;
    std::string alpha, beta, gamma, outer, inner, content, blocks, dot_file;
    std::uint64_t q = 0;
    std::uint64_t exhaustive = 0;
    std::uint64_t random_p = 0;
    std::uint64_t samples = 2000;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
};

CommandResult run_lr(const Options& o, std::ostream& table) {
    const auto alpha = Partition::parse(o.alpha);
    const auto beta = Partition::parse(o.beta);
    CommandResult result{"lr", json{{"alpha", alpha}, {"beta", beta}}, {}, std::nullopt};
    if (!o.gamma.empty()) {
        const auto gamma = Partition::parse(o.gamma);
        result.inputs["gamma"] = gamma;
        const auto c = lr_coeff(alpha, beta, gamma);
        result.payload = json{{"coefficient", c}};
        table << "c^" << gamma.to_string() << "_{" << alpha.to_string() << "," << beta.to_string() << "} = " << c
              << '\n';
    } else {
        const auto expansion = lr_expand_product(alpha, beta);
        result.payload = expansion;
        table << "s" << alpha.to_string() << " * s" << beta.to_string() << " =\n";
        for (auto it = expansion.terms().rbegin(); it != expansion.terms().rend(); ++it)
            table << "  " << std::setw(4) << it->second << "  " << it->first.to_string() << '\n';
    }
    return result;
}

CommandResult run_poset(const Options& o, std::ostream& table) {
    const auto alpha = Partition::parse(o.alpha);
    const auto beta = Partition::parse(o.beta);
    const auto poset = orbit_poset(alpha, beta);
    CommandResult result{"poset", json{{"alpha", alpha}, {"beta", beta}}, poset, std::nullopt};
    if (!o.dot_file.empty()) {
        std::ofstream file(o.dot_file);
        if (!file)
            throw Error(ErrorKind::InvalidArgument, "cannot write " + o.dot_file);
        file << to_dot(poset);
        result.inputs["dot"] = o.dot_file;
    }
    table << "orbits in G.(O_{" << alpha.to_string() << "," << beta.to_string() << "} + n)\n";
    table << "  " << std::left << std::setw(20) << "gamma" << std::right << std::setw(6) << "c" << std::setw(12)
          << "fiber dim" << '\n';
    for (const auto& gamma : poset.nodes)
        table << "  " << std::left << std::setw(20) << gamma.to_string() << std::right << std::setw(6)
              << lr_coeff(alpha, beta, gamma) << std::setw(12) << fiber_dim(alpha, beta, gamma) << '\n';
    table << "covers:\n";
    for (const auto& c : poset.covers)
        table << "  " << c.low.to_string() << " < " << c.high.to_string() << '\n';
    table << "excluded: " << join(poset.excluded) << '\n';
    return result;
}

CommandResult run_chain(const Options& o, std::ostream& table) {
    const auto blocks = parse_blocks(o.blocks);
    const auto gamma = Partition::parse(o.gamma);
    const auto value = chain_coeff(blocks, gamma);
    CommandResult result{"chain", json{{"blocks", blocks}, {"gamma", gamma}}, json{{"coefficient", value}},
                         std::nullopt};
    table << "N^" << gamma.to_string() << "_{" << join(blocks) << "} = " << value << '\n';
    return result;
}

CommandResult run_dims(const Options& o, std::ostream& table) {
    const auto alpha = Partition::parse(o.alpha);
    const auto beta = Partition::parse(o.beta);
    const auto gamma = Partition::parse(o.gamma);
    const auto c = lr_coeff(alpha, beta, gamma);
    const auto conj = fiber_dim_conj(alpha, beta, gamma);
    json fiber = nullptr;
    if (c > 0)
        fiber = fiber_dim(alpha, beta, gamma);
    const json orbits{{"alpha", dim_orbit(alpha, alpha.weight())},
                      {"beta", dim_orbit(beta, beta.weight())},
                      {"gamma", dim_orbit(gamma, gamma.weight())}};
    CommandResult result{"dims",
                         json{{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}},
                         json{{"coefficient", c}, {"fiber_dim", fiber}, {"fiber_dim_conj", conj}, {"dim_orbit", orbits}},
                         std::nullopt};
    table << "c              " << c << '\n';
    table << "fiber_dim      " << (c > 0 ? std::to_string(fiber.get<std::int64_t>()) : "empty fiber") << '\n';
    table << "fiber_dim_conj " << conj << '\n';
    table << "dim_orbit      " << alpha.to_string() << ": " << orbits["alpha"] << "  " << beta.to_string() << ": "
          << orbits["beta"] << "  " << gamma.to_string() << ": " << orbits["gamma"] << '\n';
    return result;
}

CommandResult run_hall(const Options& o, std::ostream& table) {
    const auto alpha = Partition::parse(o.alpha);
    const auto beta = Partition::parse(o.beta);
    const auto gamma = Partition::parse(o.gamma);
    const auto budget = o.budget ? o.budget : budget_from_env();
    CommandResult result{"hall", json{{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}}, {}, std::nullopt};
    if (o.q != 0) {
        const auto count = hall_number(alpha, beta, gamma, o.q, budget);
        result.inputs["q"] = o.q;
        result.payload = json{{"hall_number", count}};
        table << "G^" << gamma.to_string() << "_{" << alpha.to_string() << "," << beta.to_string() << "}(" << o.q
              << ") = " << count << '\n';
    } else {
        const auto poly = hall_polynomial(alpha, beta, gamma, budget);
        result.payload = poly;
        table << "G^" << gamma.to_string() << "_{" << alpha.to_string() << "," << beta.to_string()
              << "}(q) = " << poly.to_string() << '\n';
    }
    return result;
}

CommandResult run_verify(const Options& o, std::ostream& table) {
    const auto alpha = Partition::parse(o.alpha);
    const auto beta = Partition::parse(o.beta);
    std::vector<Strategy> strategies;
    if (o.exhaustive != 0)
        strategies.emplace_back(ExhaustiveStrategy{o.exhaustive});
    if (o.random_p != 0)
        strategies.emplace_back(RandomStrategy{o.random_p, o.samples, o.seed});
    const auto cap = o.budget ? o.budget : budget_from_env();
    const auto report = reachable_types(alpha, beta, strategies, cap);
    CommandResult result{"verify", json{{"alpha", alpha}, {"beta", beta}, {"strategies", strategies}}, report,
                         report.verdict()};
    table << "verdict:    " << to_string(report.verdict()) << '\n';
    for (const auto& s : strategies)
        table << "strategy:   " << describe(s) << '\n';
    table << "observed:   " << join(report.observed) << '\n';
    table << "allowed:    " << join(report.allowed) << '\n';
    table << "missing:    " << join(report.missing) << '\n';
    table << "violations: " << join(report.violations) << '\n';
    return result;
}

CommandResult run_tableaux(const Options& o, std::ostream& table) {
    const auto outer = Partition::parse(o.outer);
    const auto inner = Partition::parse(o.inner);
    const auto content = Partition::parse(o.content);
    const auto found = lr_tableaux(SkewShape(outer, inner), content);
    CommandResult result{"tableaux", json{{"outer", outer}, {"inner", inner}, {"content", content}}, found,
                         std::nullopt};
    table << found.size() << " LR tableaux of shape " << outer.to_string() << "/" << inner.to_string()
          << " and content " << content.to_string() << '\n';
    for (std::size_t i = 0; i < found.size(); ++i)
        table << "#" << i + 1 << '\n' << draw(found[i]);
    return result;
}

bool is_usage_error(ErrorKind kind) {
    return kind != ErrorKind::NonIntegralInterpolation && kind != ErrorKind::InconsistentInterpolation &&
           kind != ErrorKind::NotNilpotent;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Littlewood-Richardson coefficients and nilpotent orbits of GL(n)", "orbitlr"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json_output, "Emit machine-readable JSON");
    app.add_option("--budget", o.budget, "Enumeration cap (overrides ORBITLR_BUDGET)");

    auto* lr = app.add_subcommand("lr", "One LR coefficient, or the whole product expansion");
    lr->add_option("--alpha", o.alpha)->required();
    lr->add_option("--beta", o.beta)->required();
    lr->add_option("--gamma", o.gamma);

    auto* poset = app.add_subcommand("poset", "Orbits meeting G.(O_{alpha,beta} + n) and their closure order");
    poset->add_option("--alpha", o.alpha)->required();
    poset->add_option("--beta", o.beta)->required();
    poset->add_option("--dot", o.dot_file, "Write a Graphviz file");

    auto* chain = app.add_subcommand("chain", "Multi-block coefficient N^gamma_{A1,...,Ar}");
    chain->add_option("--blocks", o.blocks, "Blocks separated by ';', e.g. 2,1;1")->required();
    chain->add_option("--gamma", o.gamma)->required();

    auto* dims = app.add_subcommand("dims", "Fiber and orbit dimensions");
    dims->add_option("--alpha", o.alpha)->required();
    dims->add_option("--beta", o.beta)->required();
    dims->add_option("--gamma", o.gamma)->required();

    auto* hall = app.add_subcommand("hall", "Hall number at q, or the interpolated Hall polynomial");
    hall->add_option("--alpha", o.alpha)->required();
    hall->add_option("--beta", o.beta)->required();
    hall->add_option("--gamma", o.gamma)->required();
    hall->add_option("--q", o.q, "Prime field size");

    auto* verify = app.add_subcommand("verify", "Jordan-type census over J_{alpha,beta} + n");
    verify->add_option("--alpha", o.alpha)->required();
    verify->add_option("--beta", o.beta)->required();
    auto* exhaustive = verify->add_option("--exhaustive", o.exhaustive, "Enumerate every block over F_Q");
    auto* random = verify->add_option("--random", o.random_p, "Sample blocks over F_P");
    auto* samples = verify->add_option("--samples", o.samples, "Number of random samples (default 2000)");
    auto* seed = verify->add_option("--seed", o.seed, "Seed for the random stream");
    samples->needs(random);
    seed->needs(random);
    random->needs(seed);
    (void)exhaustive;

    auto* tableaux = app.add_subcommand("tableaux", "List LR tableaux");
    tableaux->add_option("--outer", o.outer)->required();
    tableaux->add_option("--inner", o.inner)->required();
    tableaux->add_option("--content", o.content)->required();

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "orbitlr: " << e.what() << '\n';
        return kExitUsage;
    }

    if (verify->parsed() && o.exhaustive == 0 && o.random_p == 0) {
        err << "orbitlr: verify needs --exhaustive Q and/or --random P --seed S\n";
        return kExitUsage;
    }

    std::ostringstream table;
    try {
        CommandResult result;
        if (lr->parsed())
            result = run_lr(o, table);
        else if (poset->parsed())
            result = run_poset(o, table);
        else if (chain->parsed())
            result = run_chain(o, table);
        else if (dims->parsed())
            result = run_dims(o, table);
        else if (hall->parsed())
            result = run_hall(o, table);
        else if (verify->parsed())
            result = run_verify(o, table);
        else
            result = run_tableaux(o, table);

        if (o.json_output)
            out << result.to_json().dump(2) << '\n';
        else
            out << table.str();
        return exit_code(result);
    } catch (const Error& e) {
        err << "orbitlr: " << e.what() << '\n';
        return is_usage_error(e.kind()) ? kExitUsage : kExitFail;
    }
}

}  // namespace orbitlr::cli
