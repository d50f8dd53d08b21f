#pragma once

#include <string>
#include <variant>

#include "hankel/hankel_matrix.hpp"
#include "hankel/rational.hpp"
#include "hankel/recurrence.hpp"

namespace hankel {

/// A denominator factor that vanished during a closed-form evaluation:
/// the factor's symbolic shape and the index values that produced zero.
struct Singularity {
    std::string factor;
    long i = 0;
    long j = -1; // -1 when the factor has no second index

    std::string describe() const;
};

/// Closed-form result: a value, or the singularity that blocked it.
class EvalOutcome {
public:
    static EvalOutcome of(Rat v) { return EvalOutcome(std::move(v)); }
    static EvalOutcome singular(Singularity s) { return EvalOutcome(std::move(s)); }

    bool ok() const { return std::holds_alternative<Rat>(v_); }
    const Rat& value() const;
    const Singularity& why_singular() const;

private:
    explicit EvalOutcome(Rat v) : v_(std::move(v)) {}
    explicit EvalOutcome(Singularity s) : v_(std::move(s)) {}
    std::variant<Rat, Singularity> v_;
};

/// Auxiliary matrix with entries m(i,j) = prod_{s=1}^{i-1} (a(s+j)+b)/(s+j+c)
/// for 1-based i,j. Factoring the leading term out of each Hankel column
/// reduces H_n^{(k)} to a matrix of this shape.
struct AuxParams {
    Rat a;
    Rat b;
    Rat c;
    int n = 1;
};

/// Explicit entries; throws SingularDenominator when s+j+c vanishes.
SquareMatrix aux_matrix(const AuxParams& p);

/// Closed form:
///   prod_{i<n} i! [a(i-1)+ac-b]^{n-i} / prod_{i<n} [i+1+c]^i [2n-i+c]^i
EvalOutcome aux_det(const AuxParams& p);

struct AuxReduction {
    Rat coefficient;
    AuxParams reduced;
};

/// One step of the determinant recurrence: det(p) = coefficient * det(reduced),
/// with coefficient (n-1)!(ac-b)^{n-1} / prod_{i<n} (i+1+c)(i+2+c) and
/// reduced = (a, a+b, c+2, n-1). Requires n >= 2.
AuxReduction aux_det_step(const AuxParams& p);

/// The substitution connecting the Hankel problem at offset k to the
/// auxiliary matrix: (a, b, c) = (alpha, alpha*gamma + alpha*k - 2*alpha + beta,
/// gamma + k - 2).
AuxParams aux_params_for(const RecurrenceSpec& spec, int n, int k);

/// First closed form for d_n^{(k)}: the product of the window's terms times
/// the auxiliary determinant in its substituted shape.
EvalOutcome transform_term_product(const RecurrenceSpec& spec, int n, int k);

/// d_n^{(j+1)} / d_n^{(j)} = prod_{i=1}^{n} [alpha(i+j+gamma-1)+beta]/[i+j+gamma+n-2].
Rat offset_ratio(const RecurrenceSpec& spec, int n, int j);

/// d_{j+1}^{(0)} / d_j^{(0)} for the a0 = 1 normalization:
/// prod_{i=1}^{j} i[alpha(i+gamma-1)+beta][alpha(i-1)-beta] /
///                ([i+gamma-1][i+j+gamma-2][i+j+gamma-1]).
Rat order_ratio(const RecurrenceSpec& spec, int j);

/// The full closed form of the generalized Hankel transform:
///   d_n^{(k)} = a0^n * prod_{1<=i<=j<=n-1} ... * prod_{j<k} prod_{i<=n} ...
/// d_0^{(k)} = 1 by convention.
EvalOutcome transform(const RecurrenceSpec& spec, int n, int k);

/// Hankel transform of the reciprocal sequence (1/a_n), evaluated directly
/// (valid for alpha != 0 with no vanishing term, and for alpha = 0, beta != 0).
/// Throws ZeroTerm when the underlying sequence vanishes somewhere.
EvalOutcome reciprocal_transform(const RecurrenceSpec& spec, int n, int k);

} // namespace hankel
