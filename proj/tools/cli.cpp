#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "comaj/engine.hpp"
#include "comaj/identities.hpp"
#include "comaj/parallel.hpp"
#include "comaj/parse.hpp"
#include "comaj/qpoly_io.hpp"

namespace comaj::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Writes to --output when given, otherwise to the command's stdout.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback)
    {
        if (path.empty())
            return;
        file_.open(path, std::ios::binary | std::ios::trunc);
        if (!file_)
            throw UsageError("cannot open output file '" + path + "'");
        out_ = &file_;
    }
    std::ostream& stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

// Fills rows bottom to top, left to right.
StandardTableau row_reading_tableau(const Partition& shape)
{
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int part : shape.parts()) {
        std::vector<int> row;
        for (int j = 0; j < part; ++j)
            row.push_back(next++);
        rows.push_back(std::move(row));
    }
    return StandardTableau(std::move(rows));
}

std::string weight_string(const std::vector<std::int64_t>& comps)
{
    std::string s;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i > 0)
            s += '*';
        s += "q_" + std::to_string(i + 1) + "^" + std::to_string(comps[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// stat

struct StatArgs {
    std::string shape;
    std::string tableau;
    std::string perms;
    std::string format = "text";
};

int cmd_stat(const StatArgs& a, std::ostream& out)
{
    const Partition shape = parse_partition(a.shape);
    const StandardTableau T = a.tableau.empty() ? row_reading_tableau(shape) : parse_tableau(a.tableau);
    if (T.shape() != shape)
        throw UsageError("tableau " + to_string(T) + " does not have shape " + to_string(shape));
    const int n = shape.size();
    const auto perms = parse_permutation_list(a.perms);
    for (const auto& p : perms)
        if (p.size() != n)
            throw UsageError("permutation " + to_string(p) + " is not in S_" + std::to_string(n));

    const DescentSet R = des(T);
    std::vector<Permutation> steps = perms;
    steps.push_back(Permutation::identity(n));

    nlohmann::json trace = nlohmann::json::array();
    std::vector<std::int64_t> comps;
    SeqList Z = SeqList::empty(n);
    for (const auto& sigma : steps) {
        const DescentSet D = gen_des(R, Z, sigma);
        const std::int64_t c = gen_comaj(R, Z, sigma);
        Z = z_step(R, sigma, Z);
        comps.push_back(c);
        trace.push_back({{"sigma", to_string(sigma)}, {"des", to_string(D)}, {"comaj", c}, {"Z", to_string(Z)}});
    }
    // Independent recomputation through the library entry point.
    if (comaj_components(T, PermVector(n, perms)) != comps)
        throw std::logic_error("stat: trace disagrees with comaj_components");
    std::int64_t total = 0;
    for (auto c : comps)
        total += c;

    if (a.format == "json") {
        nlohmann::json j = {{"shape", to_string(shape)},
                            {"tableau", to_string(T)},
                            {"des", to_string(R)},
                            {"steps", trace},
                            {"components", comps},
                            {"weight", weight_string(comps)},
                            {"total", total}};
        out << j.dump() << '\n';
        return ok;
    }

    out << "shape " << to_string(shape) << '\n';
    out << "tableau " << to_string(T) << '\n';
    out << "des(T) " << to_string(R) << '\n';
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& s = trace[i];
        out << "step " << i + 1 << ": sigma=" << s["sigma"].get<std::string>()
            << " Des=" << s["des"].get<std::string>() << " comaj=" << s["comaj"].get<std::int64_t>() << '\n';
        out << "  Z^" << i + 1 << " = " << s["Z"].get<std::string>() << '\n';
    }
    out << "components ";
    for (std::size_t i = 0; i < comps.size(); ++i)
        out << (i ? "," : "") << comps[i];
    out << '\n';
    out << "weight " << weight_string(comps) << '\n';
    out << "total " << total << '\n';
    return ok;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateArgs {
    std::string kind;
    std::string lambda;
    std::optional<int> n;
    std::string r_set;
    int k = 1;
    std::optional<int> D;
    std::string mode = "numerator";
    bool collapse = false;
    std::string format = "json";
    std::string output;
    std::optional<unsigned> jobs;
};

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out)
{
    if (a.k < 1)
        throw UsageError("--k must be at least 1");
    int n = 0;
    Partition lambda;
    DescentSet R;
    if (a.kind == "schur") {
        if (a.lambda.empty())
            throw UsageError("evaluate schur needs --lambda");
        lambda = parse_partition(a.lambda);
        n = lambda.size();
    } else {
        if (!a.n)
            throw UsageError("evaluate fundamental needs --n");
        n = *a.n;
        if (n < 1)
            throw UsageError("--n must be at least 1");
        R = parse_descent_set(a.r_set, n);
    }
    const int bound = exact_degree_bound(n, a.k);
    const unsigned jobs = resolve_jobs(a.jobs);

    QPoly result(Truncation(a.k, 0));
    if (a.mode == "numerator") {
        if (a.D && *a.D < bound)
            throw UsageError("--D " + std::to_string(*a.D) + " is below the exact bound " + std::to_string(bound));
        result = a.kind == "schur" ? schur_comaj_formula(lambda, a.k, jobs) : fundamental_comaj_formula(R, n, a.k, jobs);
        if (a.D && *a.D > bound) {
            QPoly widened(Truncation(a.k, *a.D));
            for (const auto& [e, c] : result.terms())
                widened.add_term(e, c);
            result = std::move(widened);
        }
    } else {
        const int D = a.D.value_or(bound);
        if (D < 0)
            throw UsageError("--D must be nonnegative");
        const Truncation t(a.k, D);
        result = a.kind == "schur" ? schur_principal_jt(lambda, t) : fundamental_principal_enum(R, n, a.k, t);
    }
    if (a.collapse)
        result = collapse_to_single_variable(result);

    Sink sink(a.output, out);
    auto& os = sink.stream();
    if (a.format == "json")
        os << canonical_json(result) << '\n';
    else if (a.format == "csv")
        os << to_csv(result);
    else
        os << to_string(result) << '\n';
    return ok;
}

// ---------------------------------------------------------------------------
// multiplicity

struct MultiplicityArgs {
    int n = 0;
    int k = 0;
    std::string output;
    std::optional<unsigned> jobs;
};

int cmd_multiplicity(const MultiplicityArgs& a, std::ostream& out)
{
    if (a.n < 1 || a.k < 1)
        throw UsageError("--n and --k must be at least 1");
    const unsigned jobs = resolve_jobs(a.jobs);
    const int bound = exact_degree_bound(a.n, a.k);

    std::ostringstream table;
    table << "lambda";
    for (int d = 0; d <= bound; ++d)
        table << ",q^" << d;
    table << ",value_at_1,f_lambda\n";

    std::vector<mpz_class> graded(static_cast<std::size_t>(bound) + 1, 0);
    mpz_class dimension = 0;
    for (const auto& lambda : partitions_of(a.n)) {
        const QPoly m = harmonics_multiplicity_comaj(lambda, a.k, jobs);
        const mpz_class f = syt_count(lambda);
        table << '"' << to_string(lambda) << '"';
        for (int d = 0; d <= bound; ++d) {
            const mpz_class c = m.coeff({static_cast<std::uint32_t>(d)});
            graded[static_cast<std::size_t>(d)] += f * c;
            table << ',' << c.get_str();
        }
        const mpz_class at_one = m.coefficient_sum();
        dimension += f * at_one;
        table << ',' << at_one.get_str() << ',' << f.get_str() << '\n';
    }

    mpz_class expected = 1;
    for (int i = 0; i < a.k; ++i)
        expected *= factorial(a.n);
    table << "total";
    for (const auto& g : graded)
        table << ',' << g.get_str();
    table << ',' << dimension.get_str() << ',' << expected.get_str() << '\n';

    Sink sink(a.output, out);
    sink.stream() << table.str();
    return dimension == expected ? ok : identity_violation;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::string suite;
    int max_n = 3;
    int max_k = 2;
    std::string lambda;
    std::optional<int> k;
    std::optional<int> D;
    std::optional<int> n;
    std::optional<std::string> r_set;
    std::optional<std::string> d_set;
    std::optional<std::string> sigma;
    std::optional<int> r;
    int bound = 4;
    std::optional<int> m;
    bool timing = false;
    std::string output;
    std::optional<unsigned> jobs;
};

using Emit = std::function<void(const VerificationReport&)>;

int need(const std::optional<int>& v, const char* flag, const std::string& suite)
{
    if (!v)
        throw UsageError("verify " + suite + " needs " + flag);
    return *v;
}

void suite_finite(const VerifyArgs& a, unsigned jobs, const Emit& emit)
{
    if (!a.lambda.empty()) {
        const Partition lambda = parse_partition(a.lambda);
        const int k = need(a.k, "--k", a.suite);
        const int D = a.D.value_or(exact_degree_bound(lambda.size(), k));
        if (D < exact_degree_bound(lambda.size(), k))
            throw UsageError("--D is below the exact bound");
        emit(verify_theorem_finite(lambda, k, Truncation(k, D), jobs));
        return;
    }
    for (int n = 1; n <= a.max_n; ++n)
        for (int k = 1; k <= a.max_k; ++k)
            for (const auto& lambda : partitions_of(n))
                emit(verify_theorem_finite(lambda, k, Truncation(k, exact_degree_bound(n, k)), jobs));
}

void suite_kronecker(const VerifyArgs& a, unsigned jobs, const Emit& emit)
{
    if (!a.lambda.empty()) {
        emit(verify_theorem_kronecker(parse_partition(a.lambda), need(a.k, "--k", a.suite), jobs));
        return;
    }
    for (int n = 1; n <= a.max_n; ++n)
        for (int k = 1; k <= a.max_k; ++k)
            for (const auto& lambda : partitions_of(n))
                emit(verify_theorem_kronecker(lambda, k, jobs));
}

void suite_quasi(const VerifyArgs& a, unsigned jobs, const Emit& emit)
{
    auto one = [&](const DescentSet& R, int n, int k) {
        const int D = a.D.value_or(exact_degree_bound(n, k));
        if (D < 0)
            throw UsageError("--D must be nonnegative");
        emit(verify_quasi(R, n, k, Truncation(k, D), jobs));
    };
    if (a.n) {
        const int n = *a.n;
        if (n < 1)
            throw UsageError("--n must be at least 1");
        const int k = need(a.k, "--k", a.suite);
        if (a.r_set) {
            one(parse_descent_set(*a.r_set, n), n, k);
        } else {
            for (const auto& R : all_subsets(n))
                one(R, n, k);
        }
        return;
    }
    for (int n = 1; n <= a.max_n; ++n)
        for (int k = 1; k <= a.max_k; ++k)
            for (const auto& R : all_subsets(n))
                one(R, n, k);
}

void suite_row(const VerifyArgs& a, unsigned jobs, const Emit& emit)
{
    if (a.n) {
        emit(verify_row_case(*a.n, need(a.k, "--k", a.suite), jobs));
        return;
    }
    for (int n = 1; n <= a.max_n; ++n)
        for (int k = 1; k <= a.max_k; ++k)
            emit(verify_row_case(n, k, jobs));
}

void suite_prop41(const VerifyArgs& a, const Emit& emit)
{
    if (a.bound < 0)
        throw UsageError("--bound must be nonnegative");
    if (a.sigma) {
        const Permutation sigma = parse_permutation(*a.sigma);
        const int n = sigma.size();
        const DescentSet R = parse_descent_set(a.r_set.value_or(""), n);
        const DescentSet D = parse_descent_set(a.d_set.value_or(""), n);
        emit(verify_prop41(R, D, sigma, need(a.r, "--r", a.suite), a.bound));
        return;
    }
    if (a.n) {
        emit(verify_prop41_sweep(*a.n, need(a.r, "--r", a.suite), a.bound));
        return;
    }
    for (int n = 1; n <= a.max_n; ++n)
        for (int r = 1; r <= a.max_k; ++r)
            emit(verify_prop41_sweep(n, r, a.bound));
}

void suite_reindex(const VerifyArgs& a, unsigned jobs, const Emit& emit)
{
    if (!a.lambda.empty()) {
        emit(verify_infinite_reindex(parse_partition(a.lambda), need(a.m, "--m", a.suite), jobs));
        return;
    }
    for (int n = 1; n <= a.max_n; ++n)
        for (int m = 1; m <= a.max_k; ++m)
            for (const auto& lambda : partitions_of(n))
                emit(verify_infinite_reindex(lambda, m, jobs));
}

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    if (a.max_n < 1 || a.max_k < 1)
        throw UsageError("--max-n and --max-k must be at least 1");
    if (a.k && *a.k < 1)
        throw UsageError("--k must be at least 1");
    const unsigned jobs = resolve_jobs(a.jobs);

    Sink sink(a.output, out);
    bool all_passed = true;
    const Emit emit = [&](const VerificationReport& r) {
        all_passed = all_passed && r.passed;
        sink.stream() << to_json(r, a.timing).dump() << '\n';
    };

    const bool all = a.suite == "all";
    if (all || a.suite == "finite")
        suite_finite(a, jobs, emit);
    if (all || a.suite == "kronecker")
        suite_kronecker(a, jobs, emit);
    if (all || a.suite == "quasi")
        suite_quasi(a, jobs, emit);
    if (all || a.suite == "row")
        suite_row(a, jobs, emit);
    if (all || a.suite == "prop41")
        suite_prop41(a, emit);
    if (all || a.suite == "reindex")
        suite_reindex(a, jobs, emit);
    sink.stream().flush();
    return all_passed ? ok : identity_violation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generalized comaj statistics and exact generating-function identities", "comaj"};
    app.require_subcommand(1);

    StatArgs stat;
    auto* s = app.add_subcommand("stat", "Z-chain trace and comaj statistic of a tableau and permutation vector");
    s->add_option("--shape", stat.shape, "Partition, e.g. 4,2,1")->required();
    s->add_option("--tableau", stat.tableau, "Rows bottom to top, e.g. 1,2,4,5/3,6/7 (default: row reading)");
    s->add_option("--perms", stat.perms, "sigma^1..sigma^{k-1}, e.g. 3651274,6523417");
    s->add_option("--format", stat.format)->check(CLI::IsMember({"text", "json"}));

    EvaluateArgs ev;
    auto* e = app.add_subcommand("evaluate", "Comaj numerator or principal evaluation as a polynomial");
    e->add_option("kind", ev.kind)->required()->check(CLI::IsMember({"schur", "fundamental"}));
    e->add_option("--lambda", ev.lambda, "Partition for schur");
    e->add_option("--n", ev.n, "Size for fundamental");
    e->add_option("--r-set", ev.r_set, "Subset of {1..n-1} for fundamental, e.g. 2,5");
    e->add_option("--k", ev.k, "Number of variables");
    e->add_option("--D", ev.D, "Total-degree truncation");
    e->add_option("--mode", ev.mode, "numerator: exact comaj numerator; series: principal evaluation to degree D")
        ->check(CLI::IsMember({"numerator", "series"}));
    e->add_flag("--collapse", ev.collapse, "Set every q_i = q");
    e->add_option("--format", ev.format)->check(CLI::IsMember({"json", "csv", "text"}));
    e->add_option("--output", ev.output);
    e->add_option("--jobs", ev.jobs);

    MultiplicityArgs mu;
    auto* m = app.add_subcommand("multiplicity", "Graded multiplicities of every lambda in the k-th Kronecker power of the harmonics");
    m->add_option("--n", mu.n)->required();
    m->add_option("--k", mu.k)->required();
    m->add_option("--output", mu.output);
    m->add_option("--jobs", mu.jobs);

    VerifyArgs ve;
    auto* v = app.add_subcommand("verify", "Run identity suites; one JSON report per line");
    v->add_option("suite", ve.suite)
        ->required()
        ->check(CLI::IsMember({"finite", "kronecker", "quasi", "row", "prop41", "reindex", "all"}));
    v->add_option("--max-n", ve.max_n, "Grid bound on n");
    v->add_option("--max-k", ve.max_k, "Grid bound on k (r for prop41, m for reindex)");
    v->add_option("--lambda", ve.lambda);
    v->add_option("--k", ve.k);
    v->add_option("--D", ve.D);
    v->add_option("--n", ve.n);
    v->add_option("--r-set", ve.r_set);
    v->add_option("--d-set", ve.d_set, "Target descent set for a single prop41 instance");
    v->add_option("--sigma", ve.sigma, "Permutation for a single prop41 instance");
    v->add_option("--r", ve.r);
    v->add_option("--bound", ve.bound, "Entry/degree bound for prop41");
    v->add_option("--m", ve.m);
    v->add_flag("--timing", ve.timing, "Include elapsed_ms in reports");
    v->add_option("--output", ve.output);
    v->add_option("--jobs", ve.jobs);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex, out, err);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex, out, err);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex, out, err);
        return usage_error;
    }

    try {
        if (*s)
            return cmd_stat(stat, out);
        if (*e)
            return cmd_evaluate(ev, out);
        if (*m)
            return cmd_multiplicity(mu, out);
        return cmd_verify(ve, out);
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << '\n';
        return usage_error;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << '\n';
        return identity_violation;
    }
}

}  // namespace comaj::cli
