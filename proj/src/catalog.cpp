#include "hankel/catalog.hpp"

#include <algorithm>

namespace hankel {

Rat CatalogParams::kappa() const {
    if (!lambda || !mu) throw InvalidParams("kappa needs both lambda and mu");
    if (lambda->is_zero()) throw InvalidParams("kappa needs lambda != 0");
    return *mu / *lambda;
}

namespace {

int pow_sign(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

long choose2(long n) { return n * (n - 1) / 2; }

Rat rat_pow2(long e) { return Rat(2).pow(e); }

// prod_{i=1}^{n-1} (i!)^2
Rat sq_factorials(int n) {
    Rat v(1);
    for (int i = 1; i < n; ++i) v *= Rat(factorial(i) * factorial(i));
    return v;
}

EvalOutcome hilbert_formula(int n, int k) {
    if (n == 0) return EvalOutcome::of(Rat(1));
    Rat v = sq_factorials(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) v /= Rat(i + j + k - 1);
    return EvalOutcome::of(v);
}

EvalOutcome shifted_linear_formula(const Rat& lambda, const Rat& kappa, int n, int k) {
    if (n == 0) return EvalOutcome::of(Rat(1));
    Rat v = lambda.pow(-static_cast<long>(n)) * sq_factorials(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const Rat den = Rat(i + j + k - 2) + kappa;
            if (den.is_zero()) return EvalOutcome::singular({"i+j+k+kappa-2", i, j});
            v /= den;
        }
    return EvalOutcome::of(v);
}

EvalOutcome triangular_formula(int n, int k) {
    if (n == 0) return EvalOutcome::of(Rat(1));
    Rat v = rat_pow2(n) / generalized_binomial(Rat(n + k), n) * sq_factorials(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) v /= Rat(i + j + k);
    return EvalOutcome::of(v);
}

EvalOutcome inverse_factorial_formula(int n, int k) {
    if (n == 0) return EvalOutcome::of(Rat(1));
    Rat v(pow_sign(choose2(n)));
    for (int i = 0; i < n; ++i) v *= Rat(factorial(i), factorial(i + k + n - 1));
    return EvalOutcome::of(v);
}

EvalOutcome catalan_formula(int n, int k) {
    Rat v(1);
    for (int i = 1; i < k; ++i)
        for (int j = i; j < k; ++j) v *= Rat(i + j + 2 * n) / Rat(i + j);
    return EvalOutcome::of(v);
}

EvalOutcome central_binomial_formula(int n, int k) {
    if (n == 0) return EvalOutcome::of(Rat(1));
    if (k == 0) return EvalOutcome::of(rat_pow2(n - 1));
    Rat v = rat_pow2(n);
    for (int i = 1; i < k; ++i)
        for (int j = i; j < k; ++j) v *= Rat(i + j - 1 + 2 * n) / Rat(i + j - 1);
    return EvalOutcome::of(v);
}

EvalOutcome binomial_lambda_formula(const Rat& lambda, int n, int k) {
    if (n == 0) return EvalOutcome::of(Rat(1));
    Rat v(pow_sign(static_cast<long>(n) * k));
    for (int i = 1; i < n; ++i) {
        const Rat num_i = (Rat(i) - lambda - Rat(1)) * (Rat(i) + lambda);
        for (int j = i; j < n; ++j) v *= num_i / Rat((i + j - 1) * (i + j));
    }
    for (int j = 0; j < k; ++j)
        for (int i = 1; i <= n; ++i)
            v *= (Rat(i + j) - lambda - Rat(1)) / Rat(i + j + n - 1);
    return EvalOutcome::of(v);
}

EvalOutcome binomial_shifted_formula(const Rat& lambda, int m, int n, int k) {
    if (n == 0) return EvalOutcome::of(Rat(1));
    // the transform vanishes identically past order m+1, and the limiting
    // order carries only a sign
    if (n >= m + 2) return EvalOutcome::of(Rat(0));
    if (n == m + 1) return EvalOutcome::of(Rat(pow_sign(choose2(m + 1))));
    Rat v = generalized_binomial(lambda, m).pow(n);
    for (int i = 1; i < n; ++i) {
        const Rat num_i = Rat(i) * (Rat(i) + lambda) * Rat(i - 1 - m);
        const Rat d1 = Rat(i - m) + lambda;
        if (d1.is_zero()) return EvalOutcome::singular({"i+lambda-m", i});
        for (int j = i; j < n; ++j) {
            const Rat d2 = Rat(i + j - m - 1) + lambda;
            const Rat d3 = Rat(i + j - m) + lambda;
            if (d2.is_zero()) return EvalOutcome::singular({"i+j+lambda-m-1", i, j});
            if (d3.is_zero()) return EvalOutcome::singular({"i+j+lambda-m", i, j});
            v *= num_i / (d1 * d2 * d3);
        }
    }
    for (int j = 0; j < k; ++j)
        for (int i = 1; i <= n; ++i) {
            const Rat den = Rat(i + j + n - m - 1) + lambda;
            if (den.is_zero()) return EvalOutcome::singular({"i+j+n+lambda-m-1", i, j});
            v *= (Rat(i + j) + lambda) / den;
        }
    return EvalOutcome::of(v);
}

EvalOutcome reciprocal_catalan_formula(int n, int k) {
    if (n == 0) return EvalOutcome::of(Rat(1));
    Rat v = rat_pow2(-static_cast<long>(n) * (n + k - 1));
    for (int i = 1; i < n; ++i) {
        const Rat num_i = Rat(i) * Rat(i + 1) * Rat(2 * i - 5);
        for (int j = i; j < n; ++j)
            v *= num_i / Rat(Int(2 * i - 1) * (2 * (i + j) - 3) * (2 * (i + j) - 1));
    }
    for (int j = 0; j < k; ++j)
        for (int i = 1; i <= n; ++i) v *= Rat(i + j + 1) / Rat(2 * (i + j + n) - 3);
    return EvalOutcome::of(v);
}

EvalOutcome reciprocal_central_binomial_formula(int n, int k) {
    if (n == 0) return EvalOutcome::of(Rat(1));
    Rat v = rat_pow2(-static_cast<long>(n) * (n + k - 1));
    for (int i = 1; i < n; ++i) {
        const Rat num_i = Rat(static_cast<long>(i) * i) * Rat(2 * i - 3);
        for (int j = i; j < n; ++j)
            v *= num_i / Rat(Int(2 * i - 1) * (2 * (i + j) - 3) * (2 * (i + j) - 1));
    }
    for (int j = 0; j < k; ++j)
        for (int i = 1; i <= n; ++i) v *= Rat(i + j) / Rat(2 * (i + j + n) - 3);
    return EvalOutcome::of(v);
}

EvalOutcome reciprocal_binomial_lambda_formula(const Rat& lambda, int n, int k) {
    if (n == 0) return EvalOutcome::of(Rat(1));
    Rat v(pow_sign(static_cast<long>(n) * k));
    for (int i = 1; i < n; ++i) {
        const Rat num_i = Rat(static_cast<long>(i) * i) * (Rat(i) - lambda - Rat(2));
        const Rat d1 = Rat(i) - lambda - Rat(1);
        if (d1.is_zero()) return EvalOutcome::singular({"i-lambda-1", i});
        for (int j = i; j < n; ++j) {
            const Rat d2 = Rat(i + j) - lambda - Rat(2);
            const Rat d3 = Rat(i + j) - lambda - Rat(1);
            if (d2.is_zero()) return EvalOutcome::singular({"i+j-lambda-2", i, j});
            if (d3.is_zero()) return EvalOutcome::singular({"i+j-lambda-1", i, j});
            v *= num_i / (d1 * d2 * d3);
        }
    }
    for (int j = 0; j < k; ++j)
        for (int i = 1; i <= n; ++i) {
            const Rat den = Rat(i + j + n) - lambda - Rat(2);
            if (den.is_zero()) return EvalOutcome::singular({"i+j+n-lambda-2", i, j});
            v *= Rat(i + j) / den;
        }
    return EvalOutcome::of(v);
}

void require_no_params(const std::string& name, const CatalogParams& p) {
    if (p.lambda || p.mu || p.m)
        throw InvalidParams("entry '" + name + "' takes no parameters");
}

Rat require_lambda(const std::string& name, const CatalogParams& p) {
    if (!p.lambda) throw InvalidParams("entry '" + name + "' needs lambda");
    if (p.mu || p.m) throw InvalidParams("entry '" + name + "' takes only lambda");
    return *p.lambda;
}

} // namespace

const std::vector<std::string>& entry_names() {
    static const std::vector<std::string> names = {
        "hilbert",
        "shifted_linear",
        "triangular_reciprocal",
        "inverse_factorial",
        "catalan",
        "central_binomial",
        "binomial_lambda",
        "binomial_shifted",
        "reciprocal_catalan",
        "reciprocal_central_binomial",
        "reciprocal_binomial_lambda",
    };
    return names;
}

CatalogEntry entry(const std::string& name, const CatalogParams& params) {
    CatalogEntry e;
    e.name = name;
    e.params = params;

    if (name == "hilbert") {
        require_no_params(name, params);
        e.summary = "a_n = 1/(n+1), generalized Hilbert matrices";
        e.spec = make_spec(Rat(1), Rat(-1), Rat(2), Rat(1));
        e.simplified = hilbert_formula;
    } else if (name == "shifted_linear") {
        if (!params.lambda || !params.mu)
            throw InvalidParams("shifted_linear needs lambda and mu");
        if (params.m) throw InvalidParams("shifted_linear takes lambda and mu only");
        const Rat lambda = *params.lambda, mu = *params.mu;
        if (lambda.is_zero() || mu.is_zero())
            throw InvalidParams("shifted_linear needs lambda != 0 and mu != 0");
        const Rat kappa = mu / lambda;
        if (kappa.is_integer_at_most(0))
            throw InvalidParams("lambda*n + mu vanishes at n = " + (-kappa).str());
        e.summary = "a_n = 1/(lambda n + mu)";
        e.spec = make_spec(Rat(1), Rat(-1), kappa + Rat(1), mu.inv());
        e.simplified = [lambda, kappa](int n, int k) {
            return shifted_linear_formula(lambda, kappa, n, k);
        };
    } else if (name == "triangular_reciprocal") {
        require_no_params(name, params);
        e.summary = "a_n = 2/(n^2+3n+2), reciprocals of shifted triangular numbers";
        e.spec = make_spec(Rat(1), Rat(-2), Rat(3), Rat(1));
        e.simplified = triangular_formula;
    } else if (name == "inverse_factorial") {
        require_no_params(name, params);
        e.summary = "a_n = 1/n!";
        e.spec = make_spec(Rat(0), Rat(1), Rat(1), Rat(1));
        e.simplified = inverse_factorial_formula;
    } else if (name == "catalan") {
        require_no_params(name, params);
        e.summary = "Catalan numbers";
        e.spec = make_spec(Rat(4), Rat(-6), Rat(2), Rat(1));
        e.simplified = catalan_formula;
    } else if (name == "central_binomial") {
        require_no_params(name, params);
        e.summary = "even central binomial coefficients C(2n,n)";
        e.spec = make_spec(Rat(4), Rat(-2), Rat(1), Rat(1));
        e.simplified = central_binomial_formula;
    } else if (name == "binomial_lambda") {
        const Rat lambda = require_lambda(name, params);
        e.summary = "a_n = C(lambda, n)";
        e.spec = make_spec(Rat(-1), lambda + Rat(1), Rat(1), Rat(1));
        e.simplified = [lambda](int n, int k) { return binomial_lambda_formula(lambda, n, k); };
    } else if (name == "binomial_shifted") {
        if (!params.lambda || !params.m)
            throw InvalidParams("binomial_shifted needs lambda and m");
        if (params.mu) throw InvalidParams("binomial_shifted takes lambda and m only");
        const Rat lambda = *params.lambda;
        const int m = *params.m;
        if (m < 0) throw InvalidParams("binomial_shifted needs m >= 0");
        if (lambda.is_integer() && lambda < Rat(m))
            throw InvalidParams("integer lambda must satisfy lambda >= m");
        e.summary = "a_n = C(n+lambda, m)";
        e.spec = make_spec(Rat(1), Rat(m), lambda - Rat(m) + Rat(1), generalized_binomial(lambda, m));
        e.simplified = [lambda, m](int n, int k) {
            return binomial_shifted_formula(lambda, m, n, k);
        };
    } else if (name == "reciprocal_catalan") {
        require_no_params(name, params);
        e.summary = "reciprocals of Catalan numbers";
        e.spec = reciprocal_spec(entry("catalan").spec);
        e.simplified = reciprocal_catalan_formula;
    } else if (name == "reciprocal_central_binomial") {
        require_no_params(name, params);
        e.summary = "reciprocals of C(2n,n)";
        e.spec = reciprocal_spec(entry("central_binomial").spec);
        e.simplified = reciprocal_central_binomial_formula;
    } else if (name == "reciprocal_binomial_lambda") {
        const Rat lambda = require_lambda(name, params);
        if (lambda.is_nonneg_integer())
            throw InvalidParams("reciprocal_binomial_lambda needs lambda outside 0,1,2,...");
        e.summary = "a_n = 1/C(lambda, n)";
        CatalogParams base;
        base.lambda = lambda;
        e.spec = reciprocal_spec(entry("binomial_lambda", base).spec);
        e.simplified = [lambda](int n, int k) {
            return reciprocal_binomial_lambda_formula(lambda, n, k);
        };
    } else {
        throw UnknownEntry("no catalog entry named '" + name + "'");
    }
    return e;
}

EvalOutcome eval_simplified(const CatalogEntry& e, int n, int k) {
    return e.simplified(n, k);
}

VerifyReport verify_entry(const CatalogEntry& e, int n_max, int k_max) {
    VerifyReport report;
    report.name = e.name;
    report.n_max = n_max;
    report.k_max = k_max;
    const SequenceWindow w = window(e.spec, 0, k_max + 2L * n_max - 1);
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 0; k <= k_max; ++k) {
            ++report.cells;
            const Rat oracle = det_bareiss(build_matrix(w, n, k));
            const EvalOutcome simp = e.simplified(n, k);
            const EvalOutcome closed = transform(e.spec, n, k);
            if (!simp.ok()) {
                report.mismatches.push_back({n, k, "simplified singular: " + simp.why_singular().describe()});
                continue;
            }
            if (!closed.ok()) {
                report.mismatches.push_back({n, k, "closed form singular: " + closed.why_singular().describe()});
                continue;
            }
            if (simp.value() != oracle)
                report.mismatches.push_back(
                    {n, k, "simplified " + simp.value().str() + " != determinant " + oracle.str()});
            else if (closed.value() != oracle)
                report.mismatches.push_back(
                    {n, k, "closed form " + closed.value().str() + " != determinant " + oracle.str()});
        }
    }
    return report;
}

} // namespace hankel
