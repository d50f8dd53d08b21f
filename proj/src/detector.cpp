#include "hankel/detector.hpp"

#include <algorithm>

namespace hankel {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::product_form_plausible: return "product_form_plausible";
        case Verdict::no_product_form_likely: return "no_product_form_likely";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<TransformValue> transform_sequence(const SequenceWindow& terms, int n_max, int k) {
    if (!terms.covers(k, k + 2L * n_max - 2))
        throw InsufficientTerms("need terms " + std::to_string(k) + " .. " +
                                std::to_string(k + 2L * n_max - 2) + " for n_max = " +
                                std::to_string(n_max));
    std::vector<TransformValue> out;
    out.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        out.push_back({n, k, det_bareiss(build_matrix(terms, n, k)), Method::bareiss});
    return out;
}

DetectorVerdict analyze(const std::vector<TransformValue>& values, const Int& bound,
                        std::uint64_t budget) {
    DetectorVerdict dv;
    dv.bound_used = bound;
    bool any_large = false;
    bool any_incomplete = false;
    for (const TransformValue& tv : values) {
        FactorizationReport r;
        r.n = tv.n;
        r.k = tv.k;
        r.value = tv.value;
        if (tv.value.is_zero()) {
            r.zero = true;
            r.largest_prime = 0;
            dv.reports.push_back(std::move(r));
            continue;
        }
        r.num_factors = factor(abs(tv.value.num()), budget);
        r.den_factors = factor(tv.value.den(), budget);
        r.largest_prime = std::max(r.num_factors.largest_prime(), r.den_factors.largest_prime());
        r.complete = r.num_factors.complete() && r.den_factors.complete();
        r.smooth = r.largest_prime <= bound;
        any_large |= !r.smooth;
        any_incomplete |= !r.complete;
        dv.reports.push_back(std::move(r));
    }
    if (any_large)
        dv.verdict = Verdict::no_product_form_likely;
    else if (any_incomplete)
        dv.verdict = Verdict::inconclusive;
    else
        dv.verdict = Verdict::product_form_plausible;
    return dv;
}

Int default_bound(int n_max, int k) {
    const long base = 2L * n_max + k + 2;
    return Int(1000) * base * base;
}

} // namespace hankel
