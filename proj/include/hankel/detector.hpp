#pragma once

#include <string>
#include <vector>

#include "hankel/hankel_matrix.hpp"
#include "hankel/primes.hpp"
#include "hankel/recurrence.hpp"

namespace hankel {

/// Prime factorization of one transform value, with a smoothness verdict
/// relative to the bound in force.
struct FactorizationReport {
    int n = 0;
    int k = 0;
    Rat value;
    Factorization num_factors; // of |numerator|
    Factorization den_factors;
    Int largest_prime;         // 0 for values in {0, +-1}
    bool smooth = true;
    bool zero = false;         // zero values are reported but not factored
    bool complete = true;      // false when a factorization hit the work budget
};

enum class Verdict { product_form_plausible, no_product_form_likely, inconclusive };
std::string verdict_name(Verdict v);

struct DetectorVerdict {
    std::vector<FactorizationReport> reports;
    Verdict verdict = Verdict::product_form_plausible;
    Int bound_used;
};

/// d_1^{(k)} .. d_{n_max}^{(k)} by Bareiss determinants. The window must
/// cover indices k .. k+2*n_max-2.
std::vector<TransformValue> transform_sequence(const SequenceWindow& terms, int n_max, int k);

/// Factors every nonzero value and judges smoothness: a value is smooth
/// when its largest prime factor (numerator and denominator combined) is
/// <= bound. Large primes mean no closed product form is likely.
DetectorVerdict analyze(const std::vector<TransformValue>& values, const Int& bound,
                        std::uint64_t budget = kDefaultFactorBudget);

/// Default smoothness bound 1000*(2*n_max + k + 2)^2: generous for the
/// linear-in-index factors a product formula can produce at that scale.
Int default_bound(int n_max, int k);

} // namespace hankel
