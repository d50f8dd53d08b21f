#include <doctest.h>

#include <random>

#include "hankel/closed_form.hpp"
#include "support/oracles.hpp"

using namespace hankel;
using testsupport::naive_det;

namespace {

RecurrenceSpec catalan() { return make_spec(Rat(4), Rat(-6), Rat(2), Rat(1)); }
RecurrenceSpec hilbert() { return make_spec(Rat(1), Rat(-1), Rat(2), Rat(1)); }
RecurrenceSpec central_binomial() { return make_spec(Rat(4), Rat(-2), Rat(1), Rat(1)); }
RecurrenceSpec inv_factorial() { return make_spec(Rat(0), Rat(1), Rat(1), Rat(1)); }

std::vector<std::vector<Rat>> rows_of(const SquareMatrix& m) {
    std::vector<std::vector<Rat>> rows(m.size(), std::vector<Rat>(m.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

} // namespace

TEST_CASE("aux determinant closed form") {
    CHECK(aux_det({Rat(3), Rat(-5), Rat(Int(7), Int(2)), 1}).value() == Rat(1));
    CHECK(aux_det({Rat(0), Rat(0), Rat(0), 1}).value() == Rat(1));

    // frozen from the explicit 2x2 matrix [[1,1],[2/3,3/4]]
    CHECK(aux_det({Rat(1), Rat(0), Rat(1), 2}).value() == Rat(Int(1), Int(12)));

    // frozen from the explicit 3x3 brute-force determinant
    const AuxParams p3{Rat(0), Rat(1), Rat(0), 3};
    CHECK(aux_det(p3).value() == Rat(Int(-1), Int(720)));
    CHECK(naive_det(rows_of(aux_matrix(p3))) == Rat(Int(-1), Int(720)));
}

TEST_CASE("aux matrix entries") {
    const SquareMatrix m = aux_matrix({Rat(1), Rat(0), Rat(1), 2});
    CHECK(m.at(0, 0) == Rat(1));
    CHECK(m.at(0, 1) == Rat(1));
    CHECK(m.at(1, 0) == Rat(Int(2), Int(3)));
    CHECK(m.at(1, 1) == Rat(Int(3), Int(4)));
    // c = -3 kills an entry denominator (s+j+c = 0 at s=2, j=1)
    CHECK_THROWS_AS(aux_matrix({Rat(1), Rat(1), Rat(-3), 3}), SingularDenominator);
}

TEST_CASE("aux closed form equals brute force on random parameters") {
    std::mt19937_64 rng(321);
    int checked = 0;
    while (checked < 120) {
        const Rat a = testsupport::random_rat(rng), b = testsupport::random_rat(rng),
                  c = testsupport::random_rat(rng);
        for (int n = 1; n <= 5; ++n) {
            const AuxParams p{a, b, c, n};
            const EvalOutcome closed = aux_det(p);
            if (!closed.ok()) continue;
            try {
                CHECK(closed.value() == naive_det(rows_of(aux_matrix(p))));
                ++checked;
            } catch (const SingularDenominator&) {
                // entries singular although the closed form is not; skip
            }
        }
    }
}

TEST_CASE("aux determinant recurrence step") {
    const AuxReduction r = aux_det_step({Rat(1), Rat(0), Rat(1), 2});
    CHECK(r.coefficient == Rat(Int(1), Int(12)));
    CHECK(r.reduced.a == Rat(1));
    CHECK(r.reduced.b == Rat(1));
    CHECK(r.reduced.c == Rat(3));
    CHECK(r.reduced.n == 1);
    CHECK(aux_det(r.reduced).value() == Rat(1));

    // ac = b makes the coefficient vanish
    CHECK(aux_det_step({Rat(2), Rat(6), Rat(3), 2}).coefficient == Rat(0));

    CHECK_THROWS_AS(aux_det_step({Rat(1), Rat(1), Rat(-3), 3}), SingularDenominator);
    CHECK_THROWS(aux_det_step({Rat(1), Rat(1), Rat(1), 1}));
}

TEST_CASE("recurrence chain reproduces the closed form") {
    std::mt19937_64 rng(654);
    int checked = 0;
    while (checked < 60) {
        AuxParams p{testsupport::random_rat(rng), testsupport::random_rat(rng),
                    testsupport::random_rat(rng), 4};
        const EvalOutcome direct = aux_det(p);
        if (!direct.ok()) continue;
        Rat acc(1);
        bool singular = false;
        while (p.n > 1) {
            try {
                const AuxReduction r = aux_det_step(p);
                acc *= r.coefficient;
                p = r.reduced;
            } catch (const SingularDenominator&) {
                singular = true;
                break;
            }
        }
        if (singular) continue;
        CHECK(acc == direct.value()); // det at n=1 is 1
        ++checked;
    }
}

TEST_CASE("aux singularities carry their origin") {
    const EvalOutcome out = aux_det({Rat(1), Rat(1), Rat(-3), 3});
    REQUIRE_FALSE(out.ok());
    CHECK(out.why_singular().factor == "i+1+c");
    CHECK(out.why_singular().i == 2);
    CHECK_THROWS_AS(out.value(), SingularDenominator);
}

TEST_CASE("term-product form fixtures") {
    // n = 1: d_1^{(k)} = a_k
    const RecurrenceSpec g = make_spec(Rat(3), Rat(2), Rat(Int(5), Int(3)), Rat(Int(-2), Int(7)));
    for (int k = 0; k <= 5; ++k)
        CHECK(transform_term_product(g, 1, k).value() == term(g, k));

    CHECK(transform_term_product(hilbert(), 2, 0).value() == Rat(Int(1), Int(12)));
    CHECK(transform_term_product(catalan(), 3, 0).value() == Rat(1));
}

TEST_CASE("term-product form factors through the aux determinant") {
    std::mt19937_64 rng(7321);
    for (int it = 0; it < 20; ++it) {
        const RecurrenceSpec s = testsupport::random_spec(rng);
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= 3; ++k) {
                const EvalOutcome lhs = transform_term_product(s, n, k);
                const EvalOutcome det = aux_det(aux_params_for(s, n, k));
                REQUIRE(lhs.ok());
                REQUIRE(det.ok());
                Rat terms(1);
                for (const Rat& t : window(s, k, n).terms) terms *= t;
                CHECK(lhs.value() == terms * det.value());
            }
    }
}

TEST_CASE("offset ratio") {
    CHECK(offset_ratio(catalan(), 1, 0) == Rat(1)); // a_1/a_0 of Catalan
    CHECK(offset_ratio(make_spec(Rat(2), Rat(1), Rat(3), Rat(1)), 1, 0) == Rat(Int(7), Int(3)));
    // alpha*gamma + beta = 0 makes the n=1 ratio vanish
    CHECK(offset_ratio(make_spec(Rat(1), Rat(-2), Rat(2), Rat(1)), 1, 0) == Rat(0));
    // for n = 1 the ratio is always a_{j+1}/a_j when a_j != 0
    const RecurrenceSpec g = make_spec(Rat(-2), Rat(3), Rat(Int(4), Int(3)), Rat(5));
    for (int j = 0; j <= 6; ++j)
        CHECK(offset_ratio(g, 1, j) == term(g, j + 1) / term(g, j));
}

TEST_CASE("order ratio") {
    CHECK(order_ratio(catalan(), 1) == Rat(1));
    CHECK(order_ratio(hilbert(), 1) == Rat(Int(1), Int(12)));
    CHECK(order_ratio(inv_factorial(), 1) == Rat(Int(-1), Int(2)));
}

TEST_CASE("principal identity fixtures") {
    CHECK(transform(make_spec(Rat(2), Rat(1), Rat(3), Rat(1)), 1, 1).value() == Rat(Int(7), Int(3)));
    CHECK(transform(central_binomial(), 3, 0).value() == Rat(4));
    CHECK(transform(inv_factorial(), 3, 2).value() == Rat(Int(-1), Int(1036800)));
    // d_0^{(k)} = 1 by the empty-product convention
    for (int k = 0; k <= 3; ++k) CHECK(transform(catalan(), 0, k).value() == Rat(1));
}

TEST_CASE("principal equals both determinant oracles on a random grid") {
    std::mt19937_64 rng(2718);
    for (int it = 0; it < 30; ++it) {
        const RecurrenceSpec s = testsupport::random_spec(rng);
        const SequenceWindow w = window(s, 0, 5 + 2 * 6 - 1);
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k <= 5; ++k) {
                const EvalOutcome closed = transform(s, n, k);
                REQUIRE(closed.ok()); // valid gamma leaves no vanishing factor
                const HankelMatrix h = build_matrix(w, n, k);
                CHECK(closed.value() == det_bareiss(h));
                CHECK(closed.value() == det_condensation(h));
            }
    }
}

TEST_CASE("term-product and principal forms agree") {
    std::mt19937_64 rng(1618);
    for (int it = 0; it < 30; ++it) {
        const RecurrenceSpec s = testsupport::random_spec(rng);
        for (int n = 0; n <= 5; ++n)
            for (int k = 0; k <= 4; ++k)
                CHECK(transform_term_product(s, n, k).value() == transform(s, n, k).value());
    }
}

TEST_CASE("ratio recurrences advance the principal form") {
    std::mt19937_64 rng(999);
    for (int it = 0; it < 25; ++it) {
        const RecurrenceSpec s = testsupport::random_spec(rng);
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= 4; ++k)
                CHECK(transform(s, n, k + 1).value() ==
                      transform(s, n, k).value() * offset_ratio(s, n, k));
        for (int j = 1; j <= 5; ++j)
            CHECK(transform(s, j + 1, 0).value() ==
                  transform(s, j, 0).value() * s.a0 * order_ratio(s, j));
    }
}

TEST_CASE("zero propagation in the order direction") {
    // C(5,n): transform vanishes from some order on
    const RecurrenceSpec b5 = make_spec(Rat(-1), Rat(6), Rat(1), Rat(1));
    // C(n+5/2, 2)-style shifted binomial: zero for n >= m+2
    const RecurrenceSpec bs =
        make_spec(Rat(1), Rat(2), Rat(Int(3), Int(2)), generalized_binomial(Rat(Int(5), Int(2)), 2));
    for (const RecurrenceSpec& s : {b5, bs, catalan()}) {
        for (int n = 1; n <= 7; ++n)
            if (transform(s, n, 0).value().is_zero())
                CHECK(transform(s, n + 1, 0).value().is_zero());
    }
    CHECK(transform(bs, 4, 0).value() == Rat(0)); // really exercises the implication
    CHECK(transform(bs, 5, 2).value() == Rat(0));
}

TEST_CASE("reciprocal transform fixtures") {
    CHECK(reciprocal_transform(catalan(), 1, 1).value() == Rat(1));
    CHECK(reciprocal_transform(catalan(), 2, 0).value() == Rat(Int(-1), Int(2)));
    CHECK(reciprocal_transform(central_binomial(), 2, 1).value() == Rat(Int(-1), Int(360)));
}

TEST_CASE("reciprocal transform equals principal on the reciprocal spec") {
    std::mt19937_64 rng(112358);
    int done = 0;
    while (done < 20) {
        const RecurrenceSpec s = testsupport::random_spec(rng);
        if (s.alpha.is_zero() || s.a0.is_zero() || has_vanishing_term(s)) continue;
        ++done;
        const RecurrenceSpec r = reciprocal_spec(s);
        for (int n = 0; n <= 5; ++n)
            for (int k = 0; k <= 3; ++k)
                CHECK(reciprocal_transform(s, n, k).value() == transform(r, n, k).value());
    }
}

TEST_CASE("reciprocal transform at alpha = 0") {
    // reciprocals of 1/n! are n!; compare against the Hankel determinant of
    // factorials built independently
    std::vector<Rat> factorials;
    Rat f(1);
    for (int n = 0; n <= 14; ++n) {
        factorials.push_back(f);
        f *= Rat(n + 1);
    }
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 3; ++k)
            CHECK(reciprocal_transform(inv_factorial(), n, k).value() ==
                  testsupport::naive_hankel_det(factorials, n, k));
}

TEST_CASE("reciprocal transform rejects vanishing sequences") {
    CHECK_THROWS_AS(reciprocal_transform(make_spec(Rat(1), Rat(-2), Rat(2), Rat(1)), 2, 0), ZeroTerm);
    CHECK_THROWS_AS(reciprocal_transform(make_spec(Rat(0), Rat(0), Rat(1), Rat(1)), 1, 0), ZeroTerm);
    CHECK_THROWS_AS(reciprocal_transform(make_spec(Rat(2), Rat(1), Rat(1), Rat(0)), 1, 0), ZeroTerm);
}
