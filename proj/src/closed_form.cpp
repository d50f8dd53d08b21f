#include "hankel/closed_form.hpp"

namespace hankel {

std::string Singularity::describe() const {
    std::string s = "factor " + factor + " vanishes at i=" + std::to_string(i);
    if (j >= 0) s += ", j=" + std::to_string(j);
    return s;
}

const Rat& EvalOutcome::value() const {
    if (!ok())
        throw SingularDenominator(std::get<Singularity>(v_).describe());
    return std::get<Rat>(v_);
}

const Singularity& EvalOutcome::why_singular() const {
    return std::get<Singularity>(v_);
}

SquareMatrix aux_matrix(const AuxParams& p) {
    SquareMatrix m(p.n);
    for (int j = 1; j <= p.n; ++j) {
        Rat v(1);
        for (int i = 1; i <= p.n; ++i) {
            m.at(i - 1, j - 1) = v;
            if (i == p.n) break;
            const Rat den = Rat(i + j) + p.c; // s = i for the step to row i+1
            if (den.is_zero())
                throw SingularDenominator("entry denominator s+j+c vanishes at s=" +
                                          std::to_string(i) + ", j=" + std::to_string(j));
            v *= (p.a * Rat(i + j) + p.b) / den;
        }
    }
    return m;
}

EvalOutcome aux_det(const AuxParams& p) {
    Rat num(1);
    for (int i = 1; i < p.n; ++i) {
        num *= Rat(factorial(i));
        num *= (p.a * Rat(i - 1) + p.a * p.c - p.b).pow(p.n - i);
    }
    Rat den(1);
    for (int i = 1; i < p.n; ++i) {
        const Rat d1 = Rat(i + 1) + p.c;
        if (d1.is_zero()) return EvalOutcome::singular({"i+1+c", i});
        const Rat d2 = Rat(2 * p.n - i) + p.c;
        if (d2.is_zero()) return EvalOutcome::singular({"2n-i+c", i});
        den *= d1.pow(i) * d2.pow(i);
    }
    return EvalOutcome::of(num / den);
}

AuxReduction aux_det_step(const AuxParams& p) {
    if (p.n < 2)
        throw Error("determinant recurrence needs n >= 2");
    Rat coeff(factorial(p.n - 1));
    coeff *= (p.a * p.c - p.b).pow(p.n - 1);
    for (int i = 1; i < p.n; ++i) {
        const Rat d1 = Rat(i + 1) + p.c;
        const Rat d2 = Rat(i + 2) + p.c;
        if (d1.is_zero() || d2.is_zero())
            throw SingularDenominator("recurrence denominator (i+1+c)(i+2+c) vanishes at i=" +
                                      std::to_string(i));
        coeff /= d1 * d2;
    }
    return AuxReduction{coeff, AuxParams{p.a, p.a + p.b, p.c + Rat(2), p.n - 1}};
}

AuxParams aux_params_for(const RecurrenceSpec& spec, int n, int k) {
    return AuxParams{spec.alpha,
                     spec.alpha * spec.gamma + spec.alpha * Rat(k) - Rat(2) * spec.alpha + spec.beta,
                     spec.gamma + Rat(k) - Rat(2), n};
}

EvalOutcome transform_term_product(const RecurrenceSpec& spec, int n, int k) {
    if (n == 0) return EvalOutcome::of(Rat(1));
    Rat v(1);
    const SequenceWindow w = window(spec, k, n);
    for (const Rat& t : w.terms) v *= t;
    for (int i = 1; i < n; ++i) {
        v *= Rat(factorial(i));
        v *= (spec.alpha * Rat(i - 1) - spec.beta).pow(n - i);
    }
    for (int i = 1; i < n; ++i) {
        const Rat d1 = Rat(i + k) + spec.gamma - Rat(1);
        if (d1.is_zero()) return EvalOutcome::singular({"i+k+gamma-1", i});
        const Rat d2 = Rat(2 * n - i + k) + spec.gamma - Rat(2);
        if (d2.is_zero()) return EvalOutcome::singular({"2n-i+k+gamma-2", i});
        v /= d1.pow(i) * d2.pow(i);
    }
    return EvalOutcome::of(v);
}

Rat offset_ratio(const RecurrenceSpec& spec, int n, int j) {
    Rat v(1);
    for (int i = 1; i <= n; ++i) {
        const Rat den = Rat(i + j + n - 2) + spec.gamma;
        if (den.is_zero())
            throw SingularDenominator("offset ratio denominator i+j+gamma+n-2 vanishes at i=" +
                                      std::to_string(i));
        v *= (spec.alpha * (Rat(i + j - 1) + spec.gamma) + spec.beta) / den;
    }
    return v;
}

Rat order_ratio(const RecurrenceSpec& spec, int j) {
    Rat v(1);
    for (int i = 1; i <= j; ++i) {
        const Rat d1 = Rat(i - 1) + spec.gamma;
        const Rat d2 = Rat(i + j - 2) + spec.gamma;
        const Rat d3 = Rat(i + j - 1) + spec.gamma;
        if (d1.is_zero() || d2.is_zero() || d3.is_zero())
            throw SingularDenominator("order ratio denominator vanishes at i=" + std::to_string(i));
        v *= Rat(i) * (spec.alpha * d1 + spec.beta) * (spec.alpha * Rat(i - 1) - spec.beta) /
             (d1 * d2 * d3);
    }
    return v;
}

EvalOutcome transform(const RecurrenceSpec& spec, int n, int k) {
    if (n == 0) return EvalOutcome::of(Rat(1));
    Rat v = spec.a0.pow(n);
    for (int i = 1; i < n; ++i) {
        const Rat gi = Rat(i - 1) + spec.gamma; // i+gamma-1
        if (gi.is_zero()) return EvalOutcome::singular({"i+gamma-1", i});
        const Rat num_i = Rat(i) * (spec.alpha * gi + spec.beta) *
                          (spec.alpha * Rat(i - 1) - spec.beta);
        for (int j = i; j < n; ++j) {
            const Rat d2 = Rat(i + j - 2) + spec.gamma;
            if (d2.is_zero()) return EvalOutcome::singular({"i+j+gamma-2", i, j});
            const Rat d3 = Rat(i + j - 1) + spec.gamma;
            if (d3.is_zero()) return EvalOutcome::singular({"i+j+gamma-1", i, j});
            v *= num_i / (gi * d2 * d3);
        }
    }
    for (int j = 0; j < k; ++j) {
        for (int i = 1; i <= n; ++i) {
            const Rat den = Rat(i + j + n - 2) + spec.gamma;
            if (den.is_zero()) return EvalOutcome::singular({"i+j+gamma+n-2", i, j});
            v *= (spec.alpha * (Rat(i + j - 1) + spec.gamma) + spec.beta) / den;
        }
    }
    return EvalOutcome::of(v);
}

EvalOutcome reciprocal_transform(const RecurrenceSpec& spec, int n, int k) {
    if (has_vanishing_term(spec))
        throw ZeroTerm("sequence has a vanishing term; reciprocal transform undefined");
    if (n == 0) return EvalOutcome::of(Rat(1));
    Rat v = spec.a0.inv().pow(n);
    for (int i = 1; i < n; ++i) {
        const Rat gi = Rat(i - 1) + spec.gamma;
        const Rat e1 = spec.alpha * gi + spec.beta;
        if (e1.is_zero()) return EvalOutcome::singular({"alpha(i+gamma-1)+beta", i});
        const Rat num_i = Rat(i) * gi * (spec.alpha * Rat(i - 1) + spec.beta);
        for (int j = i; j < n; ++j) {
            const Rat e2 = spec.alpha * (Rat(i + j - 2) + spec.gamma) + spec.beta;
            if (e2.is_zero()) return EvalOutcome::singular({"alpha(i+j+gamma-2)+beta", i, j});
            const Rat e3 = spec.alpha * (Rat(i + j - 1) + spec.gamma) + spec.beta;
            if (e3.is_zero()) return EvalOutcome::singular({"alpha(i+j+gamma-1)+beta", i, j});
            v *= num_i / (e1 * e2 * e3);
        }
    }
    for (int j = 0; j < k; ++j) {
        for (int i = 1; i <= n; ++i) {
            const Rat den = spec.alpha * (Rat(i + j + n - 2) + spec.gamma) + spec.beta;
            if (den.is_zero()) return EvalOutcome::singular({"alpha(i+j+gamma+n-2)+beta", i, j});
            v *= (Rat(i + j - 1) + spec.gamma) / den;
        }
    }
    return EvalOutcome::of(v);
}

} // namespace hankel
