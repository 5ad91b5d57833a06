// specht-coh: command-line front end for the specht library.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "specht/carry_lattice.hpp"
#include "specht/criteria.hpp"
#include "specht/error.hpp"
#include "specht/fp_oracle.hpp"
#include "specht/harness.hpp"
#include "specht/serialize.hpp"
#include "specht/weights.hpp"

namespace {

using namespace specht;

constexpr int exit_ok = 0;
constexpr int exit_assertion = 1;
constexpr int exit_usage = 2;
constexpr int exit_bound = 3;

std::vector<std::string> split(std::string text, char sep)
{
    for (char c : {'(', ')', '[', ']', ' '})
        std::erase(text, c);
    std::vector<std::string> out;
    if (text.empty())
        return out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, sep);)
        out.push_back(item);
    return out;
}

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what)
{
    std::vector<T> out;
    for (const auto& item : split(text, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty() || (std::is_unsigned_v<T> && v < 0))
            throw Error(ErrorKind::Parse, std::string("bad ") + what + " '" + text + "'");
        out.push_back(static_cast<T>(v));
    }
    return out;
}

Partition parse_partition(const std::string& text)
{
    return Partition(parse_list<std::uint64_t>(text, "partition"));
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_h0(const Config& cfg, std::uint64_t pv, const std::string& parts)
{
    const Prime p(pv);
    const Partition lambda = parse_partition(parts);
    const JamesReport rep = james_h0_report(lambda, p);
    if (cfg.format == OutputFormat::Json) {
        Json witness = Json::array();
        for (const auto& c : rep.checks)
            witness.push_back({{"row", c.row},
                               {"value", c.value},
                               {"modulus", c.modulus},
                               {"residue", c.residue},
                               {"satisfied", c.satisfied}});
        Json j = CohomologyResult{0, static_cast<std::uint64_t>(rep.dim), Source::Criterion, p, lambda};
        j["witness"] = witness;
        print_json(j);
        return exit_ok;
    }
    std::cout << "H^0(Sigma_" << lambda.size() << ", S^" << lambda.to_string() << ") over F_" << pv
              << ": dim " << rep.dim << '\n';
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : rep.checks)
        rows.push_back({std::to_string(c.row), std::to_string(c.value), std::to_string(c.modulus),
                        std::to_string(c.residue), std::to_string(c.modulus - 1), yes_no(c.satisfied)});
    if (!rows.empty())
        std::cout << format_table({"row", "lambda_i", "modulus", "residue", "needed", "holds"}, rows);
    for (const auto& c : rep.checks)
        if (!c.satisfied) {
            std::cout << "witness: " << c.value << " is not -1 mod " << c.modulus << '\n';
            break;
        }
    return exit_ok;
}

int cmd_h1_twopart(const Config& cfg, std::uint64_t pv, std::uint64_t a, std::uint64_t b)
{
    const Prime p(pv);
    const int psi = h1_twopart_psi(a, b, p);
    const int crit = h1_twopart_criterion(a, b, p);
    const auto psi_w = psi_witness(a - b, b, p);
    const auto cases = h1_twopart_cases(a, b, p);
    if (cfg.format == OutputFormat::Json) {
        Json j = CohomologyResult{1, static_cast<std::uint64_t>(psi), Source::Criterion, p, Partition{a, b}};
        Json w{{"psi", nullptr}, {"cases", Json::array()}};
        if (psi_w)
            w["psi"] = {{"family", psi_w->family}, {"u", psi_w->u}, {"a", psi_w->a}};
        for (const auto& c : cases)
            w["cases"].push_back({{"case", c.which}, {"u", c.u}, {"c", c.c}, {"b", c.b}});
        j["witness"] = w;
        j["criterion_dim"] = crit;
        j["agree"] = psi == crit;
        print_json(j);
    } else {
        std::cout << "H^1(Sigma_" << a + b << ", S^(" << a << "," << b << ")) over F_" << pv << '\n'
                  << "  psi route:       dim " << psi;
        if (psi_w)
            std::cout << " (family " << psi_w->family << ", u=" << psi_w->u
                      << (psi_w->family == 1 ? ", a=" + std::to_string(psi_w->a) : "") << ")";
        std::cout << "\n  criterion route: dim " << crit << '\n';
        for (const auto& c : cases) {
            if (c.which == 1)
                std::cout << "  case (i): H^0 is nonzero\n";
            else
                std::cout << "  case (ii): u=" << c.u << " c=" << c.c << " b=" << c.b << '\n';
        }
    }
    if (psi != crit) {
        std::cerr << "routes disagree\n";
        return exit_assertion;
    }
    return exit_ok;
}

int cmd_sympower(const Config& cfg, std::uint64_t pv, std::uint64_t d, std::uint64_t n, bool poset_only)
{
    const Prime p(pv);
    if (n == 0)
        n = std::max<std::uint64_t>(d, 1);
    if (poset_only) {
        const CarryPoset poset = carry_poset(d, n, p, cfg.bounds);
        if (cfg.format == OutputFormat::Dot)
            std::cout << to_dot(poset);
        else if (cfg.format == OutputFormat::Json)
            print_json(poset);
        else {
            std::vector<std::vector<std::string>> rows;
            for (std::size_t i = 0; i < poset.patterns.size(); ++i)
                rows.push_back({std::to_string(i), poset.patterns[i].to_string(), poset.factors[i].to_string(),
                                std::to_string(poset.weight_counts[i])});
            std::cout << format_table({"index", "carries", "factor", "weights"}, rows);
        }
        return exit_ok;
    }
    const SubmoduleLattice lattice = submodule_lattice(d, n, p, cfg.bounds);
    if (cfg.format == OutputFormat::Dot) {
        std::cout << to_dot(lattice);
        return exit_ok;
    }
    if (cfg.format == OutputFormat::Json) {
        print_json(lattice);
        return exit_ok;
    }
    std::cout << "H^0(" << d << ") for GL_" << n << " over F_" << pv << ": " << lattice.poset.patterns.size()
              << " composition factors, " << lattice.nodes.size() << " submodules\n";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < lattice.poset.patterns.size(); ++i)
        rows.push_back({std::to_string(i), lattice.poset.patterns[i].to_string(),
                        lattice.poset.factors[i].to_string(), std::to_string(lattice.poset.weight_counts[i])});
    std::cout << format_table({"index", "carries", "factor", "weights"}, rows) << '\n';
    rows.clear();
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
        std::string members;
        for (std::size_t m : lattice.nodes[i].members)
            members += (members.empty() ? "" : ",") + std::to_string(m);
        rows.push_back({std::to_string(i), "{" + members + "}", std::to_string(lattice.nodes[i].dimension)});
    }
    std::cout << format_table({"submodule", "patterns", "dim"}, rows);
    return exit_ok;
}

std::vector<std::string> oracle_cells(const OracleRow& r)
{
    auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
    return {std::to_string(r.p), r.lambda.to_string(), r.error.empty() ? std::to_string(r.dim) : "-",
            opt(r.h0_oracle), opt(r.h0_criterion), opt(r.h1_oracle), opt(r.h1_criterion),
            r.error.empty() ? yes_no(r.match) : "error: " + r.error};
}

int cmd_oracle(const Config& cfg, std::uint64_t pv, const std::string& parts, const std::string& degree_list,
               std::uint64_t sweep_min, std::uint64_t sweep_max)
{
    const Prime p(pv);
    std::set<int> degrees;
    for (int deg : parse_list<int>(degree_list, "degree list")) {
        if (deg != 0 && deg != 1)
            throw Error(ErrorKind::Parse, "only degrees 0 and 1 are supported");
        degrees.insert(deg);
    }
    std::vector<OracleRow> rows;
    if (sweep_max > 0) {
        rows = oracle_sweep(sweep_min, sweep_max, p, degrees, cfg.bounds, cfg.threads);
    } else {
        rows.push_back(oracle_row(parse_partition(parts), p, degrees, cfg.bounds));
        // A single partition that does not fit the bounds is an error, not a row.
        if (rows[0].error.starts_with(to_string(ErrorKind::BoundExceeded)))
            throw Error(ErrorKind::BoundExceeded, rows[0].error);
    }
    bool ok = true;
    for (const auto& r : rows)
        ok = ok && r.match;
    if (cfg.format == OutputFormat::Json) {
        for (const auto& r : rows)
            std::cout << Json(r).dump() << '\n';
    } else {
        std::vector<std::vector<std::string>> cells;
        for (const auto& r : rows)
            cells.push_back(oracle_cells(r));
        std::cout << format_table({"p", "lambda", "dim", "h0 oracle", "h0 criterion", "h1 oracle", "h1 criterion",
                                   "match"},
                                  cells);
    }
    return ok ? exit_ok : exit_assertion;
}

int cmd_steinberg(const Config& cfg, std::uint64_t pv, std::uint64_t r, const std::string& weight,
                  const std::string& lambda_text, const std::string& nu_text, std::size_t n)
{
    const Prime p(pv);
    Weight gamma;
    if (!lambda_text.empty()) {
        gamma = steinberg_offset(parse_partition(lambda_text), parse_partition(nu_text), p);
    } else {
        gamma = Weight(parse_list<std::int64_t>(weight, "weight"));
    }
    if (n == 0)
        n = gamma.rank();
    if (gamma.rank() != n)
        throw Error(ErrorKind::SizeMismatch, "weight has rank " + std::to_string(gamma.rank()));
    const bool member = steinberg_contains(gamma, p, r, n);
    const auto pair = pairings(gamma);
    if (cfg.format == OutputFormat::Json) {
        print_json({{"weight", gamma}, {"pairings", pair}, {"p", pv}, {"r", r}, {"n", n}, {"member", member}});
        return exit_ok;
    }
    std::string pairing_text;
    for (auto v : pair)
        pairing_text += (pairing_text.empty() ? "" : ",") + std::to_string(v);
    std::cout << "weight " << gamma.to_string() << "  pairings (" << pairing_text << ")\n"
              << "weight of St_" << r << " for GL_" << n << " at p=" << pv << ": " << yes_no(member) << '\n';
    return exit_ok;
}

int cmd_verify(const Config& cfg, std::vector<std::string> names, bool all, bool heavy, bool timing)
{
    if (all || names.empty())
        names = suite_names();
    bool ok = true;
    Json reports = Json::array();
    for (const auto& name : names) {
        const SuiteReport report = run_suite(name, cfg, {heavy});
        ok = ok && report.ok();
        if (cfg.format == OutputFormat::Json)
            reports.push_back(report_to_json(report, timing));
        else
            std::cout << report_to_table(report, timing);
    }
    if (cfg.format == OutputFormat::Json)
        print_json(reports.size() == 1 ? reports[0] : reports);
    return ok ? exit_ok : exit_assertion;
}

int cmd_config(const Config& cfg)
{
    if (cfg.format == OutputFormat::Json) {
        print_json(cfg.to_json());
        return exit_ok;
    }
    const Json j = cfg.to_json();
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, value] : j.at("bounds").items())
        rows.push_back({"bound." + key, value.dump()});
    rows.push_back({"format", j.at("format").get<std::string>()});
    rows.push_back({"threads", std::to_string(cfg.threads)});
    std::cout << format_table({"key", "value"}, rows);
    return exit_ok;
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::BoundExceeded:
        return exit_bound;
    case ErrorKind::RelationCheckFailed:
    case ErrorKind::FalsifiedLemma:
    case ErrorKind::Overflow:
        return exit_assertion;
    default:
        return exit_usage;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology of Specht modules over F_p: criteria, lattices, weights and a brute-force oracle"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "table";
    unsigned threads = 1;
    std::vector<std::string> bound_assignments;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "dot"}));
    app.add_option("--threads", threads, "Worker threads for sweeps (0: one per core)");
    app.add_option("--bound", bound_assignments, "Override an enumeration bound, KEY=VALUE")->take_all();

    std::uint64_t p = 0;
    std::string parts;

    auto* h0 = app.add_subcommand("h0", "dim H^0 by the row congruences");
    h0->add_option("-p,--prime", p, "Odd prime")->required();
    h0->add_option("partition", parts, "Parts, comma separated")->required();

    std::uint64_t lambda1 = 0, lambda2 = 0;
    auto* h1 = app.add_subcommand("h1-twopart", "dim H^1 for a two-part partition by both routes");
    h1->add_option("-p,--prime", p, "Odd prime")->required();
    h1->add_option("lambda1", lambda1)->required();
    h1->add_option("lambda2", lambda2)->required();

    std::uint64_t d = 0, n = 0;
    bool poset_only = false;
    auto* sym = app.add_subcommand("sympower", "Submodule lattice of the symmetric power H^0(d)");
    sym->add_option("-p,--prime", p, "Odd prime")->required();
    sym->add_option("-d,--degree", d, "Degree d")->required();
    sym->add_option("-n,--rank", n, "Number of variables (default d)");
    sym->add_flag("--poset", poset_only, "Emit the carry-pattern poset instead of the lattice");

    std::string degrees = "0,1";
    std::uint64_t sweep_min = 1, sweep_max = 0;
    auto* oracle = app.add_subcommand("oracle", "Brute-force H^0 and H^1 from the Specht representation");
    oracle->add_option("-p,--prime", p, "Odd prime")->required();
    oracle->add_option("partition", parts, "Parts, comma separated");
    oracle->add_option("--deg", degrees, "Degrees, comma separated");
    oracle->add_option("--sweep-min", sweep_min, "Smallest d of a sweep");
    oracle->add_option("--sweep", sweep_max, "Sweep every partition of d_min..N instead of one partition");

    std::uint64_t r = 1;
    std::string weight, lambda_text, nu_text;
    std::size_t rank = 0;
    auto* st = app.add_subcommand("steinberg", "Weight membership in the Steinberg module St_r");
    st->add_option("-p,--prime", p, "Odd prime")->required();
    st->add_option("-r", r, "Frobenius level r >= 1");
    st->add_option("-n,--rank", rank, "Rank n (default: the weight's length)");
    auto* w_opt = st->add_option("--weight", weight, "Coordinates, comma separated");
    auto* l_opt = st->add_option("--lambda", lambda_text, "Use lambda - nu - (p-1) rho");
    auto* nu_opt = st->add_option("--nu", nu_text, "Partition subtracted from lambda");
    l_opt->needs(nu_opt)->excludes(w_opt);
    nu_opt->needs(l_opt);

    std::vector<std::string> suites;
    bool all = false, heavy = false, timing = false;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suites", suites, "Suite names (default: all)");
    verify->add_flag("--all", all, "Run every suite");
    verify->add_flag("--heavy", heavy, "Include oracle runs beyond the desk budget");
    verify->add_flag("--timing", timing, "Include wall time in reports");

    auto* config = app.add_subcommand("config", "Show the effective configuration");
    config->add_subcommand("show", "Print bounds, format and threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        Config cfg;
        cfg.format = parse_format(format);
        cfg.threads = threads;
        for (const auto& b : bound_assignments)
            cfg.apply_bound(b);
        if (cfg.format == OutputFormat::Dot && !sym->parsed())
            throw Error(ErrorKind::Parse, "--format dot is only available for sympower");

        if (h0->parsed())
            return cmd_h0(cfg, p, parts);
        if (h1->parsed())
            return cmd_h1_twopart(cfg, p, lambda1, lambda2);
        if (sym->parsed())
            return cmd_sympower(cfg, p, d, n, poset_only);
        if (oracle->parsed()) {
            if (sweep_max == 0 && oracle->count("partition") == 0)
                throw Error(ErrorKind::Parse, "oracle needs a partition or --sweep");
            return cmd_oracle(cfg, p, parts, degrees, sweep_min, sweep_max);
        }
        if (st->parsed()) {
            if (weight.empty() && lambda_text.empty())
                throw Error(ErrorKind::Parse, "steinberg needs --weight or --lambda/--nu");
            return cmd_steinberg(cfg, p, r, weight, lambda_text, nu_text, rank);
        }
        if (verify->parsed())
            return cmd_verify(cfg, suites, all, heavy, timing);
        if (config->parsed())
            return cmd_config(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        const int code = exit_code_for(e.kind());
        if (code == exit_usage)
            std::cerr << "run with --help for usage\n";
        return code;
    }
    return exit_usage;
}
