#pragma once

#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

/// Parameters of the sequence family a_{n+1} = (alpha + beta/(n+gamma)) a_n.
/// gamma must not be an integer <= 0, so the ratio is defined for every n >= 0.
struct RecurrenceSpec {
    Rat alpha;
    Rat beta;
    Rat gamma;
    Rat a0;

    friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

RecurrenceSpec make_spec(const Rat& alpha, const Rat& beta, const Rat& gamma, const Rat& a0);

/// Consecutive terms a_origin, a_{origin+1}, ...
struct SequenceWindow {
    long origin = 0;
    std::vector<Rat> terms;

    bool covers(long first, long last) const {
        return origin <= first && first <= last &&
               origin + static_cast<long>(terms.size()) > last;
    }
    const Rat& at(long index) const { return terms.at(static_cast<size_t>(index - origin)); }
};

/// a_n by the product form a_0 * prod_{s=1}^{n} (alpha(s+gamma-1)+beta)/(s+gamma-1).
Rat term(const RecurrenceSpec& spec, long n);

/// a_k ... a_{k+count-1}; linear in count.
SequenceWindow window(const RecurrenceSpec& spec, long k, long count);

/// True iff some term of the sequence vanishes: a0 = 0, or alpha = beta = 0,
/// or (alpha != 0 and -(alpha*gamma+beta)/alpha is a nonnegative integer).
bool has_vanishing_term(const RecurrenceSpec& spec);

/// Parameters of the reciprocal sequence (1/a_n):
/// (1/alpha, -beta/alpha^2, gamma+beta/alpha, 1/a0).
RecurrenceSpec reciprocal_spec(const RecurrenceSpec& spec);

} // namespace hankel
