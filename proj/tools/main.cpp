#include <CLI11.hpp>

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "hankel/catalog.hpp"
#include "hankel/closed_form.hpp"
#include "hankel/detector.hpp"
#include "hankel/json_io.hpp"
#include "hankel/primes.hpp"
#include "hankel/recurrence.hpp"

namespace {

using namespace hankel;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSingular = 3;
constexpr int kExitNoProductForm = 4;
constexpr int kExitInconclusive = 5;

struct GlobalOpts {
    std::string format = "text";
    std::string bound;       // detector bound override, "p" decimal
    std::uint64_t budget = kDefaultFactorBudget;
    int parallel = 1;

    bool json() const { return format == "json"; }
};

struct SpecFlags {
    std::string alpha, beta, gamma, a0 = "1";

    RecurrenceSpec parse() const {
        return make_spec(Rat::parse(alpha), Rat::parse(beta), Rat::parse(gamma), Rat::parse(a0));
    }
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
    cmd->add_option("-a,--alpha", f.alpha, "alpha as p/q")->required();
    cmd->add_option("-b,--beta", f.beta, "beta as p/q")->required();
    cmd->add_option("-g,--gamma", f.gamma, "gamma as p/q (not an integer <= 0)")->required();
    cmd->add_option("--a0", f.a0, "a_0 as p/q (default 1)");
}

// ---- verify: one (n,k) grid over one spec ----------------------------------

struct VerifyCell {
    int n = 0, k = 0;
    bool agree = true;
    bool singular = false;
    std::string closed, oracle, condensation, singularity;
};

struct GridResult {
    std::vector<VerifyCell> cells;
    bool ok = true;
};

GridResult verify_grid(const RecurrenceSpec& spec, int n_max, int k_max, int parallel) {
    const SequenceWindow w = window(spec, 0, k_max + 2L * n_max - 1);
    std::vector<VerifyCell> cells(static_cast<size_t>(n_max) * (k_max + 1));
    auto run_cell = [&](size_t idx) {
        const int n = static_cast<int>(idx) / (k_max + 1) + 1;
        const int k = static_cast<int>(idx) % (k_max + 1);
        VerifyCell& c = cells[idx];
        c.n = n;
        c.k = k;
        const Rat b = det_bareiss(build_matrix(w, n, k));
        const Rat d = det_condensation(build_matrix(w, n, k));
        c.oracle = b.str();
        c.condensation = d.str();
        const EvalOutcome closed = transform(spec, n, k);
        if (!closed.ok()) {
            // closed form undefined here; record the oracle value instead
            c.singular = true;
            c.singularity = closed.why_singular().describe();
            c.agree = (b == d);
            return;
        }
        c.closed = closed.value().str();
        c.agree = (closed.value() == b) && (b == d);
    };
    if (parallel > 1) {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        const int nthreads = std::min<size_t>(parallel, cells.size());
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                    run_cell(i);
            });
        for (auto& th : pool) th.join();
    } else {
        for (size_t i = 0; i < cells.size(); ++i) run_cell(i);
    }
    GridResult r;
    r.cells = std::move(cells);
    for (const auto& c : r.cells) r.ok &= c.agree;
    return r;
}

json grid_to_json(const RecurrenceSpec& spec, int n_max, int k_max, const GridResult& g) {
    json cells = json::array();
    for (const auto& c : g.cells) {
        json jc{{"n", c.n}, {"k", c.k}, {"agree", c.agree}, {"determinant", c.oracle}};
        if (c.singular) {
            jc["singular"] = true;
            jc["singularity"] = c.singularity;
        } else {
            jc["closed_form"] = c.closed;
        }
        cells.push_back(std::move(jc));
    }
    return json{{"spec", spec_to_json(spec)},
                {"n_max", n_max},
                {"k_max", k_max},
                {"ok", g.ok},
                {"cells", std::move(cells)}};
}

void print_grid_text(const RecurrenceSpec& spec, const GridResult& g) {
    for (const auto& c : g.cells) {
        if (c.singular)
            std::cout << "n=" << c.n << " k=" << c.k << " closed form singular (" << c.singularity
                      << "), determinant = " << c.oracle << "\n";
        else if (c.agree)
            std::cout << "n=" << c.n << " k=" << c.k << " ok  d = " << c.closed << "\n";
        else
            std::cout << "n=" << c.n << " k=" << c.k << " MISMATCH closed=" << c.closed
                      << " bareiss=" << c.oracle << " condensation=" << c.condensation << "\n";
    }
    std::cout << (g.ok ? "all methods agree" : "MISMATCHES FOUND") << " ("
              << g.cells.size() << " cells, alpha=" << spec.alpha << " beta=" << spec.beta
              << " gamma=" << spec.gamma << " a0=" << spec.a0 << ")\n";
}

// small rationals with numerator in [-4,4], denominator in [1,3]
RecurrenceSpec random_spec(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    auto draw = [&] { return Rat(Int(num(rng)), Int(den(rng))); };
    const Rat alpha = draw(), beta = draw(), a0 = draw();
    Rat gamma = draw();
    while (gamma.is_integer_at_most(0)) gamma = draw();
    return make_spec(alpha, beta, gamma, a0);
}

// ---- commands ---------------------------------------------------------------

int cmd_gen(const GlobalOpts& g, const SpecFlags& flags, long count) {
    const RecurrenceSpec spec = flags.parse();
    const SequenceWindow w = window(spec, 0, count);
    if (g.json()) {
        std::cout << window_to_json(w).dump() << "\n";
    } else {
        for (size_t i = 0; i < w.terms.size(); ++i)
            std::cout << (i ? " " : "") << w.terms[i];
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_transform(const GlobalOpts& g, const SpecFlags& flags, int n, int k,
                  const std::string& method) {
    const RecurrenceSpec spec = flags.parse();
    TransformValue tv{n, k, Rat(0), Method::closed_form};
    bool fallback = false;
    std::string singularity;
    if (method == "closed" || method == "auto") {
        const EvalOutcome out = transform(spec, n, k);
        if (out.ok()) {
            tv.value = out.value();
        } else if (method == "closed") {
            std::cerr << "closed form is singular: " << out.why_singular().describe() << "\n";
            return kExitSingular;
        } else {
            singularity = out.why_singular().describe();
            tv.value = det_bareiss(build_matrix(window(spec, k, 2L * n - 1), n, k));
            tv.method = Method::bareiss;
        }
    } else if (method == "bareiss") {
        tv.value = det_bareiss(build_matrix(window(spec, k, 2L * n - 1), n, k));
        tv.method = Method::bareiss;
    } else {
        tv.value = det_condensation(build_matrix(window(spec, k, 2L * n - 1), n, k), &fallback);
        tv.method = Method::condensation;
    }
    if (g.json()) {
        json j = transform_to_json(tv);
        if (fallback) j["fallback"] = "bareiss";
        if (!singularity.empty()) j["singularity"] = singularity;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "d_" << n << "^(" << k << ") = " << tv.value << "  ["
                  << method_name(tv.method) << (fallback ? ", fell back to bareiss" : "") << "]\n";
        if (!singularity.empty())
            std::cout << "closed form singular (" << singularity << "); used bareiss\n";
    }
    return kExitOk;
}

int cmd_verify(const GlobalOpts& g, const SpecFlags& flags, bool have_spec, int n_max, int k_max,
               int random_count, std::uint64_t seed) {
    std::vector<RecurrenceSpec> specs;
    if (random_count > 0) {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < random_count; ++i) specs.push_back(random_spec(rng));
    } else if (have_spec) {
        specs.push_back(flags.parse());
    } else {
        std::cerr << "verify needs spec flags or --random COUNT\n";
        return kExitBadInput;
    }

    bool all_ok = true;
    json out = json::array();
    for (const RecurrenceSpec& spec : specs) {
        const GridResult r = verify_grid(spec, n_max, k_max, g.parallel);
        all_ok &= r.ok;
        if (g.json())
            out.push_back(grid_to_json(spec, n_max, k_max, r));
        else
            print_grid_text(spec, r);
    }
    if (g.json()) {
        json top{{"ok", all_ok}, {"grids", std::move(out)}};
        if (random_count > 0) top["seed"] = seed;
        std::cout << top.dump() << "\n";
    } else if (specs.size() > 1) {
        std::cout << (all_ok ? "ALL SPECS AGREE" : "MISMATCHES FOUND") << " (" << specs.size()
                  << " specs)\n";
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int cmd_reciprocal(const GlobalOpts& g, const SpecFlags& flags, int n, int k) {
    const RecurrenceSpec spec = flags.parse();
    if (spec.alpha.is_zero() && spec.beta.is_zero())
        throw ZeroTerm("alpha = beta = 0 makes every term after a_0 vanish");

    std::optional<RecurrenceSpec> rspec;
    if (!spec.alpha.is_zero()) rspec = reciprocal_spec(spec); // throws ZeroTerm when it applies

    const EvalOutcome out = reciprocal_transform(spec, n, k);
    TransformValue tv{n, k, Rat(0), Method::closed_form};
    if (out.ok()) {
        tv.value = out.value();
    } else {
        // fall back to the determinant of the reciprocal terms
        SequenceWindow w = window(spec, k, 2L * n - 1);
        for (Rat& t : w.terms) t = t.inv();
        tv.value = det_bareiss(build_matrix(w, n, k));
        tv.method = Method::bareiss;
    }
    if (g.json()) {
        json j{{"n", n}, {"k", k}, {"value", tv.value.str()}, {"method", method_name(tv.method)}};
        if (rspec) j["reciprocal_spec"] = spec_to_json(*rspec);
        std::cout << j.dump() << "\n";
    } else {
        if (rspec)
            std::cout << "reciprocal spec: alpha=" << rspec->alpha << " beta=" << rspec->beta
                      << " gamma=" << rspec->gamma << " a0=" << rspec->a0 << "\n";
        std::cout << "d_" << n << "^(" << k << ") of reciprocal sequence = " << tv.value << "  ["
                  << method_name(tv.method) << "]\n";
    }
    return kExitOk;
}

CatalogParams catalog_params(const std::string& lambda, const std::string& mu, int m, bool have_m) {
    CatalogParams p;
    if (!lambda.empty()) p.lambda = Rat::parse(lambda);
    if (!mu.empty()) p.mu = Rat::parse(mu);
    if (have_m) p.m = m;
    return p;
}

int cmd_catalog_list(const GlobalOpts& g) {
    if (g.json()) {
        json arr = json::array();
        for (const auto& name : entry_names()) arr.push_back(name);
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& name : entry_names()) std::cout << name << "\n";
    }
    return kExitOk;
}

int cmd_catalog_eval(const GlobalOpts& g, const std::string& name, const CatalogParams& params,
                     int n, int k) {
    const CatalogEntry e = entry(name, params);
    const EvalOutcome simp = eval_simplified(e, n, k);
    const EvalOutcome closed = transform(e.spec, n, k);
    if (g.json()) {
        json j{{"entry", e.name}, {"n", n}, {"k", k}, {"spec", spec_to_json(e.spec)}};
        j["simplified"] = simp.ok() ? json(simp.value().str())
                                    : json{{"singular", simp.why_singular().describe()}};
        j["principal"] = closed.ok() ? json(closed.value().str())
                                     : json{{"singular", closed.why_singular().describe()}};
        std::cout << j.dump() << "\n";
    } else {
        if (simp.ok())
            std::cout << "d_" << n << "^(" << k << ") = " << simp.value() << "  [catalog]\n";
        else
            std::cout << "simplified formula singular: " << simp.why_singular().describe() << "\n";
        if (closed.ok())
            std::cout << "d_" << n << "^(" << k << ") = " << closed.value() << "  [closed_form]\n";
        else
            std::cout << "closed form singular: " << closed.why_singular().describe() << "\n";
    }
    return kExitOk;
}

int cmd_catalog_verify(const GlobalOpts& g, const std::string& name, const CatalogParams& params,
                       int n_max, int k_max) {
    const CatalogEntry e = entry(name, params);
    const VerifyReport r = verify_entry(e, n_max, k_max);
    if (g.json()) {
        std::cout << verify_report_to_json(r).dump() << "\n";
    } else {
        std::cout << e.name << ": " << r.cells << " cells";
        if (r.ok()) {
            std::cout << ", all agree\n";
        } else {
            std::cout << ", " << r.mismatches.size() << " MISMATCHES\n";
            for (const auto& m : r.mismatches)
                std::cout << "  n=" << m.n << " k=" << m.k << " " << m.detail << "\n";
        }
    }
    return r.ok() ? kExitOk : kExitMismatch;
}

int cmd_detect(const GlobalOpts& g, const SpecFlags& flags, bool have_spec,
               const std::string& terms_file, int n_max, int k) {
    SequenceWindow terms;
    if (!terms_file.empty()) {
        std::ifstream in(terms_file);
        if (!in) throw ParseError("cannot open terms file '" + terms_file + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception& ex) {
            throw ParseError(std::string("bad JSON in terms file: ") + ex.what());
        }
        terms = window_from_json(j);
    } else if (have_spec) {
        terms = window(flags.parse(), 0, k + 2L * n_max - 1);
    } else {
        std::cerr << "detect needs --terms-file or spec flags\n";
        return kExitBadInput;
    }

    const Int bound = g.bound.empty() ? default_bound(n_max, k) : parse_int(g.bound);
    const std::vector<TransformValue> values = transform_sequence(terms, n_max, k);
    const DetectorVerdict verdict = analyze(values, bound, g.budget);

    if (g.json()) {
        std::cout << verdict_to_json(verdict).dump() << "\n";
    } else {
        for (const auto& r : verdict.reports) {
            std::cout << "d_" << r.n << "^(" << r.k << ") = " << r.value;
            if (r.zero) {
                std::cout << "  (zero, skipped)\n";
                continue;
            }
            std::cout << "  largest prime " << r.largest_prime
                      << (r.smooth ? "" : "  EXCEEDS BOUND") << (r.complete ? "" : "  (incomplete)")
                      << "\n";
        }
        std::cout << "verdict: " << verdict_name(verdict.verdict) << " (bound " << bound << ")\n";
    }
    switch (verdict.verdict) {
        case Verdict::product_form_plausible: return kExitOk;
        case Verdict::no_product_form_likely: return kExitNoProductForm;
        case Verdict::inconclusive: return kExitInconclusive;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Hankel transforms of sequences with a_{n+1} = (alpha + beta/(n+gamma)) a_n"};
    app.require_subcommand(1);
    app.set_config("--config", "", "config file (key=value lines)");

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--bound", g.bound, "detector smoothness bound (default 1000*(2n+k+2)^2)");
    app.add_option("--budget", g.budget, "factorization work budget per composite")
        ->capture_default_str();
    app.add_option("--parallel", g.parallel, "worker threads for grid commands")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "print a_0 .. a_{count-1}");
    SpecFlags gen_spec;
    add_spec_flags(gen, gen_spec);
    long gen_count = 10;
    gen->add_option("-c,--count", gen_count, "number of terms")->check(CLI::PositiveNumber);

    // transform
    auto* tr = app.add_subcommand("transform", "compute d_n^{(k)}");
    SpecFlags tr_spec;
    add_spec_flags(tr, tr_spec);
    int tr_n = 1, tr_k = 0;
    std::string tr_method = "auto";
    tr->add_option("-n", tr_n, "matrix order")->check(CLI::PositiveNumber)->required();
    tr->add_option("-k", tr_k, "offset")->check(CLI::NonNegativeNumber);
    tr->add_option("-m,--method", tr_method, "evaluation method")
        ->check(CLI::IsMember({"closed", "bareiss", "condensation", "auto"}));

    // verify
    auto* ver = app.add_subcommand("verify", "cross-check closed form against both determinant oracles");
    SpecFlags ver_spec;
    ver->add_option("-a,--alpha", ver_spec.alpha, "alpha as p/q");
    ver->add_option("-b,--beta", ver_spec.beta, "beta as p/q");
    ver->add_option("-g,--gamma", ver_spec.gamma, "gamma as p/q");
    ver->add_option("--a0", ver_spec.a0, "a_0 as p/q (default 1)");
    int ver_nmax = 6, ver_kmax = 4, ver_random = 0;
    std::uint64_t ver_seed = 1;
    ver->add_option("-n,--n-max", ver_nmax)->check(CLI::PositiveNumber);
    ver->add_option("-k,--k-max", ver_kmax)->check(CLI::NonNegativeNumber);
    ver->add_option("--random", ver_random, "verify COUNT random specs instead of one given spec");
    ver->add_option("--seed", ver_seed, "seed for --random");

    // catalog
    auto* cat = app.add_subcommand("catalog", "named sequences with known product formulas");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "list entry names");
    auto* cat_eval = cat->add_subcommand("eval", "evaluate simplified and principal formulas");
    auto* cat_verify = cat->add_subcommand("verify", "check simplified = closed form = determinant");
    std::string cat_name, cat_lambda, cat_mu;
    int cat_m = 0, cat_n = 1, cat_k = 0, cat_nmax = 6, cat_kmax = 4;
    for (CLI::App* sub : {cat_eval, cat_verify}) {
        sub->add_option("name", cat_name, "entry name")->required();
        sub->add_option("--lambda", cat_lambda, "lambda as p/q");
        sub->add_option("--mu", cat_mu, "mu as p/q");
    }
    auto* cat_m_opt = cat_eval->add_option("--m", cat_m, "m (nonnegative integer)");
    auto* cat_m_opt2 = cat_verify->add_option("--m", cat_m, "m (nonnegative integer)");
    cat_eval->add_option("-n", cat_n)->check(CLI::NonNegativeNumber)->required();
    cat_eval->add_option("-k", cat_k)->check(CLI::NonNegativeNumber);
    cat_verify->add_option("-n,--n-max", cat_nmax)->check(CLI::PositiveNumber);
    cat_verify->add_option("-k,--k-max", cat_kmax)->check(CLI::NonNegativeNumber);

    // reciprocal
    auto* rec = app.add_subcommand("reciprocal", "Hankel transform of the reciprocal sequence");
    SpecFlags rec_spec;
    add_spec_flags(rec, rec_spec);
    int rec_n = 1, rec_k = 0;
    rec->add_option("-n", rec_n)->check(CLI::PositiveNumber)->required();
    rec->add_option("-k", rec_k)->check(CLI::NonNegativeNumber);

    // detect
    auto* det = app.add_subcommand("detect", "factor transform values and flag huge primes");
    SpecFlags det_spec;
    det->add_option("-a,--alpha", det_spec.alpha, "alpha as p/q");
    det->add_option("-b,--beta", det_spec.beta, "beta as p/q");
    det->add_option("-g,--gamma", det_spec.gamma, "gamma as p/q");
    det->add_option("--a0", det_spec.a0, "a_0 as p/q (default 1)");
    std::string det_file;
    int det_nmax = 5, det_k = 0;
    det->add_option("--terms-file", det_file, "JSON array of \"p/q\" terms (a_0 first)");
    det->add_option("-n,--n-max", det_nmax)->check(CLI::PositiveNumber);
    det->add_option("-k", det_k)->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help, --version
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*gen) return cmd_gen(g, gen_spec, gen_count);
        if (*tr) return cmd_transform(g, tr_spec, tr_n, tr_k, tr_method);
        if (*ver) {
            const bool have_spec = !ver_spec.alpha.empty() || !ver_spec.beta.empty() ||
                                   !ver_spec.gamma.empty();
            if (have_spec && (ver_spec.alpha.empty() || ver_spec.beta.empty() || ver_spec.gamma.empty())) {
                std::cerr << "verify needs all of --alpha, --beta, --gamma\n";
                return kExitBadInput;
            }
            return cmd_verify(g, ver_spec, have_spec, ver_nmax, ver_kmax, ver_random, ver_seed);
        }
        if (*cat) {
            if (*cat_list) return cmd_catalog_list(g);
            const CatalogParams p =
                catalog_params(cat_lambda, cat_mu, cat_m, *cat_m_opt || *cat_m_opt2);
            if (*cat_eval) return cmd_catalog_eval(g, cat_name, p, cat_n, cat_k);
            return cmd_catalog_verify(g, cat_name, p, cat_nmax, cat_kmax);
        }
        if (*rec) return cmd_reciprocal(g, rec_spec, rec_n, rec_k);
        if (*det) {
            const bool have_spec = !det_spec.alpha.empty() || !det_spec.beta.empty() ||
                                   !det_spec.gamma.empty();
            return cmd_detect(g, det_spec, have_spec, det_file, det_nmax, det_k);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
