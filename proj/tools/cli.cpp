#include "cli.hpp"

#include "frobalg/arith.hpp"
#include "frobalg/errors.hpp"
#include "frobalg/lazard.hpp"
#include "frobalg/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace frobalg::cli {

namespace {

using json = nlohmann::ordered_json;

json integer_json(const Integer& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

unsigned thread_budget()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FROBALG_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

class Stopwatch {
public:
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Writes the report to --out if given, else to out.
int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err)
{
    if (path.empty()) {
        out << text;
        return ok;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << path << "\n";
        return invalid_input;
    }
    file << text;
    return ok;
}

json params_json(const ConstructionParams& params)
{
    const Field& K = params.K();
    json j;
    j["p"] = params.p;
    j["q"] = K.cardinality();
    j["omega"] = K.to_string(params.omega);
    j["r"] = params.r;
    if (K.degree() > 1) {
        j["field"] = K.describe();
        j["modulus"] = K.modulus_string();
    }
    return j;
}

json invocation_json(const std::string& command, const ConstructionParams& params)
{
    const Field& K = params.K();
    json j;
    j["command"] = command;
    j["p"] = params.p;
    j["field"] = K.describe();
    j["q"] = K.cardinality();
    j["omega"] = K.to_string(params.omega);
    j["r"] = params.r;
    return j;
}

json checks_json(const CheckResults& checks)
{
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return arr;
}

// Parameters for --p with optional --q (prime field override) or noncoprime mode.
ParamsPtr resolve_params(unsigned p, std::optional<std::uint64_t> q, bool noncoprime)
{
    require_valid_p(p);
    if (q && noncoprime) throw InvalidParameter("--q and --noncoprime are mutually exclusive");
    if (!q) return find_parameters(p, noncoprime ? FieldMode::noncoprime : FieldMode::lazard);
    if (!is_prime(*q)) throw InvalidParameter("--q must be prime");
    if (*q % p != 1) throw InvalidParameter("--q must satisfy q = 1 mod p");
    return params_for_field(p, make_prime_field(*q));
}

struct TableRow {
    unsigned k;
    std::size_t l, i_dim, j_dim, t_dim, quot_dim;
    Integer i_bound, j_bound;
    std::optional<Integer> lower;
};

std::vector<TableRow> table_rows(const QuotientAlgebra& q)
{
    std::vector<TableRow> rows;
    for (const auto& layer : q.layers()) {
        const unsigned k = layer.degree;
        rows.push_back({k, layer.l, layer.i_layer.rank(), layer.j_layer.rank(), layer.t_layer.rank(), layer.dimension(),
                        bound_I(q.p(), k), bound_J(q.p(), k),
                        k >= 2 ? std::optional<Integer>(lower_bound(q.p(), k)) : std::nullopt});
    }
    return rows;
}

CheckResults table_checks(const QuotientAlgebra& q, const std::vector<TableRow>& rows)
{
    bool bounds = true, lower = true;
    for (const auto& r : rows) {
        if (Integer(r.i_dim) > r.i_bound || Integer(r.j_dim) > r.j_bound) bounds = false;
        if (r.lower && *r.lower > 0 && Integer(r.quot_dim) < *r.lower) lower = false;
    }
    return {
        {"bounds", bounds, "i_dim <= i_bound and j_dim <= j_bound in every row"},
        {"lower_bound", lower, "quot_dim >= lower_bound wherever lower_bound is positive"},
        {"class_cap", q.nilpotency_class() <= q.p() - 1,
         "class " + std::to_string(q.nilpotency_class()) + " <= " + std::to_string(q.p() - 1)},
    };
}

struct QuotientArgs {
    unsigned p = 0;
    std::optional<unsigned> max_degree;
    std::string format = "json";
    std::optional<std::uint64_t> q;
    bool structure_constants = false;
    bool timing = false;
    std::string out;
};

int cmd_quotient(const QuotientArgs& a, std::ostream& out, std::ostream& err)
{
    Stopwatch clock;
    if (a.structure_constants && a.format != "json") throw InvalidParameter("--structure-constants requires --format json");
    const auto params = resolve_params(a.p, a.q, false);
    QuotientOptions options;
    if (a.max_degree) {
        if (*a.max_degree < 1) throw InvalidParameter("--max-degree must be >= 1");
        options.max_degree = a.max_degree;
        options.cap_degree = a.max_degree;
    }
    QuotientAlgebra q = [&] {
        try {
            return QuotientAlgebra::build(params, options);
        } catch (const InvariantViolation& e) {
            err << "invariant violated: " << e.what() << "\n";
            throw;
        }
    }();
    const auto rows = table_rows(q);
    const auto checks = table_checks(q, rows);
    const bool passed = all_passed(checks);
    for (const auto& c : checks)
        if (!c.passed) err << "FAILED: " << c.name << ": " << c.detail << "\n";

    std::ostringstream text;
    if (a.format == "csv") {
        text << "k,l,i_dim,i_bound,j_dim,j_bound,t_dim,quot_dim,lower_bound\n";
        for (const auto& r : rows)
            text << r.k << ',' << r.l << ',' << r.i_dim << ',' << r.i_bound << ',' << r.j_dim << ',' << r.j_bound << ','
                 << r.t_dim << ',' << r.quot_dim << ',' << (r.lower ? r.lower->str() : "") << '\n';
        if (q.complete())
            text << "# class=" << q.nilpotency_class() << '\n';
        else
            text << "# class>=" << q.nilpotency_class() << '\n';
        if (a.timing) text << "# time_ms=" << static_cast<long long>(clock.ms()) << '\n';
    } else {
        json j = invocation_json("quotient", *params);
        j["max_degree"] = a.max_degree ? json(*a.max_degree) : json(nullptr);
        json table = json::array();
        for (const auto& r : rows) {
            table.push_back({{"k", r.k},
                             {"l", r.l},
                             {"i_dim", r.i_dim},
                             {"i_bound", integer_json(r.i_bound)},
                             {"j_dim", r.j_dim},
                             {"j_bound", integer_json(r.j_bound)},
                             {"t_dim", r.t_dim},
                             {"quot_dim", r.quot_dim},
                             {"lower_bound", r.lower ? integer_json(*r.lower) : json(nullptr)}});
        }
        j["rows"] = table;
        j["class"] = q.nilpotency_class();
        j["complete"] = q.complete();
        j["checks"] = checks_json(checks);
        if (a.structure_constants) {
            json reps = json::array();
            for (std::size_t i = 0; i < q.total_dimension(); ++i)
                reps.push_back({{"index", i}, {"degree", q.rep_degree(i)}, {"element", q.rep_element(i).to_string()}});
            json sc = json::array();
            for (const auto& c : q.structure_constants())
                sc.push_back({{"a", c.a}, {"b", c.b}, {"d", c.d}, {"c", q.field().to_string(c.c)}});
            j["representatives"] = reps;
            j["structure_constants"] = sc;
        }
        if (a.timing) j["timing_ms"] = static_cast<long long>(clock.ms());
        text << j.dump(2) << '\n';
    }
    const int written = emit(text.str(), a.out, out, err);
    if (written != ok) return written;
    return passed ? ok : failure;
}

struct SearchArgs {
    unsigned target = 0;
    unsigned max_p = 100;
    std::string mode = "bound";
    bool timing = false;
    std::string out;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err)
{
    Stopwatch clock;
    if (a.target < 1) throw InvalidParameter("--class must be >= 1");
    if (a.max_p < 3) throw InvalidParameter("--max-p must be >= 3");
    const SearchMode mode = a.mode == "exact" ? SearchMode::exact : SearchMode::bound;
    const auto result = search_min_prime(a.target, mode, a.max_p, mode == SearchMode::exact ? thread_budget() : 1);
    json j;
    j["command"] = "search";
    j["class"] = a.target;
    j["mode"] = a.mode;
    j["max_p"] = a.max_p;
    j["found"] = result.has_value();
    if (result) {
        j["p"] = result->p;
        j["witness_kind"] = mode == SearchMode::bound ? "lower_bound" : "class";
        j["witness"] = integer_json(result->witness);
    } else {
        j["message"] = "not found below " + std::to_string(a.max_p);
    }
    if (a.timing) j["timing_ms"] = static_cast<long long>(clock.ms());
    return emit(j.dump(2) + "\n", a.out, out, err);
}

struct VerifyArgs {
    unsigned p = 0;
    std::uint64_t seed = 0;
    unsigned trials = 1000;
    bool noncoprime = false;
    std::optional<std::uint64_t> q;
    bool timing = false;
    std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    Stopwatch clock;
    if (a.trials < 1) throw InvalidParameter("--trials must be >= 1");
    const auto params = resolve_params(a.p, a.q, a.noncoprime);
    const auto report = run_invariant_suite(params, {a.trials, a.seed, true});

    json j = invocation_json("verify", *params);
    j["seed"] = a.seed;
    j["trials"] = a.trials;
    j["noncoprime"] = a.noncoprime;
    if (report.quotient) {
        json dims = json::array();
        for (const auto& layer : report.quotient->layers()) dims.push_back(layer.dimension());
        j["dims"] = dims;
        j["class"] = report.quotient->nilpotency_class();
    }
    j["checks"] = checks_json(report.checks);
    j["notices"] = report.notices;
    j["passed"] = report.passed();
    if (a.timing) j["timing_ms"] = static_cast<long long>(clock.ms());
    for (const auto& c : report.checks)
        if (!c.passed) err << "FAILED: " << c.name << ": " << c.detail << "\n";
    const int written = emit(j.dump(2) + "\n", a.out, out, err);
    if (written != ok) return written;
    return report.passed() ? ok : failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quotients of L_p by I_p + J_p and their Lazard groups", "frobalg"};
    app.require_subcommand(1);

    unsigned params_p = 0;
    std::string params_mode = "lazard";
    auto* params_cmd = app.add_subcommand("params", "Print the construction parameters for p as JSON");
    params_cmd->add_option("--p", params_p, "Prime p >= 3")->required();
    params_cmd->add_option("--mode", params_mode, "Field choice")->check(CLI::IsMember({"lazard", "noncoprime"}));

    QuotientArgs qa;
    auto* quotient_cmd = app.add_subcommand("quotient", "Per-degree dimension table and nilpotency class");
    quotient_cmd->add_option("--p", qa.p, "Prime p >= 3")->required();
    quotient_cmd->add_option("--max-degree", qa.max_degree, "Compute exactly degrees 1..K");
    quotient_cmd->add_option("--format", qa.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    quotient_cmd->add_option("--q", qa.q, "Prime field GF(q) with q = 1 mod p");
    quotient_cmd->add_flag("--structure-constants", qa.structure_constants, "Include representatives and structure constants");
    quotient_cmd->add_flag("--timing", qa.timing, "Include wall-clock time");
    quotient_cmd->add_option("--out", qa.out, "Write the report to FILE");

    SearchArgs sa;
    auto* search_cmd = app.add_subcommand("search", "Least prime whose quotient reaches a given class");
    search_cmd->add_option("--class", sa.target, "Target class N >= 1")->required();
    search_cmd->add_option("--max-p", sa.max_p, "Search primes up to M");
    search_cmd->add_option("--mode", sa.mode, "bound: closed-form lower bound; exact: build quotients")
        ->check(CLI::IsMember({"bound", "exact"}));
    search_cmd->add_flag("--timing", sa.timing, "Include wall-clock time");
    search_cmd->add_option("--out", sa.out, "Write the report to FILE");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run the full invariant suite");
    verify_cmd->add_option("--p", va.p, "Prime p >= 3")->required();
    verify_cmd->add_option("--seed", va.seed, "Random seed");
    verify_cmd->add_option("--trials", va.trials, "Random instances per check");
    verify_cmd->add_flag("--noncoprime", va.noncoprime, "Use GF(s^e) with s | p-1 (group checks are skipped)");
    verify_cmd->add_option("--q", va.q, "Prime field GF(q) with q = 1 mod p");
    verify_cmd->add_flag("--timing", va.timing, "Include wall-clock time");
    verify_cmd->add_option("--out", va.out, "Write the report to FILE");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return invalid_input;
    }

    try {
        if (*params_cmd) {
            require_valid_p(params_p);
            const auto params = find_parameters(params_p, params_mode == "noncoprime" ? FieldMode::noncoprime : FieldMode::lazard);
            out << params_json(*params).dump() << "\n";
            return ok;
        }
        if (*quotient_cmd) return cmd_quotient(qa, out, err);
        if (*search_cmd) return cmd_search(sa, out, err);
        if (*verify_cmd) return cmd_verify(va, out, err);
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const InvariantViolation&) {
        return failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return failure;
    }
    return invalid_input;
}

} // namespace frobalg::cli
