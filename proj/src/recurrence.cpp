#include "hankel/recurrence.hpp"

namespace hankel {

RecurrenceSpec make_spec(const Rat& alpha, const Rat& beta, const Rat& gamma, const Rat& a0) {
    if (gamma.is_integer_at_most(0))
        throw InvalidGamma("gamma = " + gamma.str() + " is an integer <= 0; n+gamma vanishes at n = " +
                           (-gamma).str());
    return RecurrenceSpec{alpha, beta, gamma, a0};
}

namespace {

// a_{n+1}/a_n = (alpha(n+gamma)+beta)/(n+gamma)
Rat step_ratio(const RecurrenceSpec& spec, long n) {
    const Rat d = Rat(n) + spec.gamma;
    return (spec.alpha * d + spec.beta) / d;
}

} // namespace

Rat term(const RecurrenceSpec& spec, long n) {
    Rat v = spec.a0;
    for (long s = 1; s <= n; ++s) {
        const Rat d = Rat(s) + spec.gamma - Rat(1);
        v *= (spec.alpha * d + spec.beta) / d;
    }
    return v;
}

SequenceWindow window(const RecurrenceSpec& spec, long k, long count) {
    SequenceWindow w;
    w.origin = k;
    w.terms.reserve(static_cast<size_t>(count));
    if (count <= 0) return w;
    Rat v = term(spec, k);
    w.terms.push_back(v);
    for (long m = k; m + 1 < k + count; ++m) {
        v *= step_ratio(spec, m);
        w.terms.push_back(v);
    }
    return w;
}

bool has_vanishing_term(const RecurrenceSpec& spec) {
    if (spec.a0.is_zero()) return true;
    if (spec.alpha.is_zero()) return spec.beta.is_zero();
    // a_{n+1} = 0 first at the n >= 0 with alpha(n+gamma)+beta = 0
    const Rat root = -(spec.alpha * spec.gamma + spec.beta) / spec.alpha;
    return root.is_nonneg_integer();
}

RecurrenceSpec reciprocal_spec(const RecurrenceSpec& spec) {
    if (spec.alpha.is_zero())
        throw ZeroAlpha("reciprocal parameters require alpha != 0");
    if (has_vanishing_term(spec))
        throw ZeroTerm("sequence has a vanishing term; reciprocals undefined");
    return make_spec(spec.alpha.inv(),
                     -spec.beta / (spec.alpha * spec.alpha),
                     spec.gamma + spec.beta / spec.alpha,
                     spec.a0.inv());
}

} // namespace hankel
