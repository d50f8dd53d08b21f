#include <doctest.h>

#include "hankel/catalog.hpp"
#include "support/entries.hpp"
#include "support/oracles.hpp"

using namespace hankel;
using testsupport::canonical_entry;

TEST_CASE("entry wiring") {
    const CatalogEntry cat = entry("catalan");
    CHECK(cat.spec == make_spec(Rat(4), Rat(-6), Rat(2), Rat(1)));
    const CatalogEntry hil = entry("hilbert");
    CHECK(hil.spec == make_spec(Rat(1), Rat(-1), Rat(2), Rat(1)));

    CatalogParams bs;
    bs.lambda = Rat(1);
    bs.m = 1;
    const CatalogEntry e = entry("binomial_shifted", bs);
    CHECK(e.spec == make_spec(Rat(1), Rat(1), Rat(1), Rat(1))); // a0 = C(1,1) = 1

    CHECK(entry_names().size() == 11);
    CHECK_THROWS_AS(entry("fibonacci"), UnknownEntry);
}

TEST_CASE("entry parameter validation") {
    CatalogParams p;
    p.lambda = Rat(2);
    CHECK_THROWS_AS(entry("catalan", p), InvalidParams);
    CHECK_THROWS_AS(entry("shifted_linear", p), InvalidParams); // mu missing
    CHECK_THROWS_AS(entry("binomial_shifted", p), InvalidParams); // m missing

    CatalogParams zero_mu;
    zero_mu.lambda = Rat(1);
    zero_mu.mu = Rat(0);
    CHECK_THROWS_AS(entry("shifted_linear", zero_mu), InvalidParams);

    CatalogParams vanishing; // 2n - 4 vanishes at n = 2
    vanishing.lambda = Rat(2);
    vanishing.mu = Rat(-4);
    CHECK_THROWS_AS(entry("shifted_linear", vanishing), InvalidParams);

    CatalogParams small_int_lambda; // integer lambda below m
    small_int_lambda.lambda = Rat(1);
    small_int_lambda.m = 3;
    CHECK_THROWS_AS(entry("binomial_shifted", small_int_lambda), InvalidParams);

    CatalogParams natural;
    natural.lambda = Rat(3);
    CHECK_THROWS_AS(entry("reciprocal_binomial_lambda", natural), InvalidParams);
    natural.lambda = Rat(-3);
    CHECK_NOTHROW(entry("reciprocal_binomial_lambda", natural));
}

TEST_CASE("entry terms match their defining sequences") {
    for (const CatalogEntry& e : testsupport::canonical_entries()) {
        const SequenceWindow w = window(e.spec, 0, 21);
        for (long n = 0; n <= 20; ++n) {
            Rat expect;
            if (e.name == "hilbert") expect = Rat(Int(1), Int(n + 1));
            else if (e.name == "shifted_linear") expect = Rat(Int(1), Int(2 * n + 3));
            else if (e.name == "triangular_reciprocal") expect = Rat(Int(2), Int(n * n + 3 * n + 2));
            else if (e.name == "inverse_factorial") expect = Rat(Int(1), factorial(n));
            else if (e.name == "catalan") expect = generalized_binomial(Rat(2 * n), n) / Rat(n + 1);
            else if (e.name == "central_binomial") expect = generalized_binomial(Rat(2 * n), n);
            else if (e.name == "binomial_lambda") expect = generalized_binomial(Rat(Int(1), Int(2)), n);
            else if (e.name == "binomial_shifted")
                expect = generalized_binomial(Rat(n) + Rat(Int(5), Int(2)), 2);
            else if (e.name == "reciprocal_catalan")
                expect = Rat(n + 1) / generalized_binomial(Rat(2 * n), n);
            else if (e.name == "reciprocal_central_binomial")
                expect = generalized_binomial(Rat(2 * n), n).inv();
            else
                expect = generalized_binomial(Rat(Int(1), Int(2)), n).inv();
            CHECK(w.terms[n] == expect);
        }
    }
}

TEST_CASE("simplified evaluation fixtures") {
    CHECK(eval_simplified(entry("catalan"), 5, 2).value() == Rat(6));
    CHECK(eval_simplified(entry("central_binomial"), 4, 0).value() == Rat(8));

    for (const Rat& lam : {Rat(4), Rat(Int(9), Int(2))}) {
        CatalogParams p;
        p.lambda = lam;
        p.m = 2;
        CHECK(eval_simplified(entry("binomial_shifted", p), 3, 1).value() == Rat(-1));
    }
}

TEST_CASE("verify_entry grids") {
    CHECK(verify_entry(entry("hilbert"), 5, 4).ok());
    CHECK(verify_entry(entry("triangular_reciprocal"), 4, 3).ok());
    CHECK(verify_entry(entry("inverse_factorial"), 4, 3).ok());
    for (const CatalogEntry& e : testsupport::canonical_entries()) {
        const VerifyReport r = verify_entry(e, 5, 3);
        CHECK(r.cells == 20);
        CHECK(r.ok());
        if (!r.ok())
            for (const auto& m : r.mismatches)
                MESSAGE(e.name, " n=", m.n, " k=", m.k, ": ", m.detail);
    }
}

TEST_CASE("catalan transform is 1 at offsets 0 and 1") {
    const CatalogEntry e = entry("catalan");
    for (int n = 1; n <= 12; ++n) {
        CHECK(eval_simplified(e, n, 0).value() == Rat(1));
        CHECK(eval_simplified(e, n, 1).value() == Rat(1));
    }
}

TEST_CASE("central binomial transform is 2^{n-1} at offset 0") {
    const CatalogEntry e = entry("central_binomial");
    for (int n = 1; n <= 12; ++n)
        CHECK(eval_simplified(e, n, 0).value() == Rat(2).pow(n - 1));
    // the odd central binomial connection: C(2m,m) = 2 C(2m-1,m)
    const SequenceWindow w = window(e.spec, 0, 13);
    for (long m = 1; m <= 12; ++m)
        CHECK(w.terms[m] == Rat(2) * generalized_binomial(Rat(2 * m - 1), m));
}

TEST_CASE("shifted_linear at (1,1) degenerates to hilbert") {
    CatalogParams p;
    p.lambda = Rat(1);
    p.mu = Rat(1);
    const CatalogEntry sl = entry("shifted_linear", p);
    const CatalogEntry hil = entry("hilbert");
    CHECK(sl.spec == hil.spec);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= 4; ++k)
            CHECK(eval_simplified(sl, n, k).value() == eval_simplified(hil, n, k).value());
}

TEST_CASE("binomial_lambda at integer lambda hits exact zeros") {
    CatalogParams p;
    p.lambda = Rat(5);
    const CatalogEntry e = entry("binomial_lambda", p);
    const SequenceWindow w = window(e.spec, 0, 4 + 2 * 4);
    bool saw_zero = false;
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= 3; ++k) {
            const Rat oracle = det_bareiss(build_matrix(w, n, k));
            CHECK(eval_simplified(e, n, k).value() == oracle);
            CHECK(transform(e.spec, n, k).value() == oracle);
            saw_zero |= oracle.is_zero();
        }
    // C(5,n) vanishes from n = 6 on, so large offsets produce zero transforms
    const SequenceWindow w2 = window(e.spec, 0, 30);
    CHECK(det_bareiss(build_matrix(w2, 2, 6)) == Rat(0));
    CHECK(eval_simplified(e, 2, 6).value() == Rat(0));
    CHECK(transform(e.spec, 2, 6).value() == Rat(0));
}

TEST_CASE("binomial_shifted zero block and limiting sign") {
    for (int m = 0; m <= 3; ++m) {
        for (const Rat& lam : {Rat(m + 2), Rat(m) + Rat(Int(1), Int(2))}) {
            CatalogParams p;
            p.lambda = lam;
            p.m = m;
            const CatalogEntry e = entry("binomial_shifted", p);
            const SequenceWindow w = window(e.spec, 0, (m + 4) * 2 + 3 + 1);
            for (int k = 0; k <= 3; ++k) {
                for (int n = m + 2; n <= m + 4; ++n) {
                    CHECK(eval_simplified(e, n, k).value() == Rat(0));
                    CHECK(transform(e.spec, n, k).value() == Rat(0));
                    CHECK(det_bareiss(build_matrix(w, n, k)) == Rat(0));
                }
                const Rat sign = (m + 1) * m / 2 % 2 == 0 ? Rat(1) : Rat(-1);
                CHECK(eval_simplified(e, m + 1, k).value() == sign);
                CHECK(det_bareiss(build_matrix(w, m + 1, k)) == sign);
            }
        }
    }
}

TEST_CASE("reciprocal bullets match reciprocal transform and determinants") {
    struct Bullet {
        const char* name;
        const char* base;
    };
    for (const Bullet b : {Bullet{"reciprocal_catalan", "catalan"},
                           Bullet{"reciprocal_central_binomial", "central_binomial"},
                           Bullet{"reciprocal_binomial_lambda", "binomial_lambda"}}) {
        const CatalogEntry e = canonical_entry(b.name);
        const CatalogEntry base = canonical_entry(b.base);
        const SequenceWindow w = window(e.spec, 0, 3 + 2 * 5);
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= 3; ++k) {
                const Rat oracle = det_bareiss(build_matrix(w, n, k));
                CHECK(eval_simplified(e, n, k).value() == oracle);
                CHECK(reciprocal_transform(base.spec, n, k).value() == oracle);
            }
    }
}

TEST_CASE("offset zero propagation across all entries") {
    for (const CatalogEntry& e : testsupport::canonical_entries()) {
        const SequenceWindow w = window(e.spec, 0, 7 + 2 * 6);
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k <= 6; ++k)
                if (det_bareiss(build_matrix(w, n, k)).is_zero())
                    CHECK(det_bareiss(build_matrix(w, n, k + 1)).is_zero());
    }
    // instance where the hypothesis actually fires
    CatalogParams p;
    p.lambda = Rat(3);
    const CatalogEntry e = entry("binomial_lambda", p);
    const SequenceWindow w = window(e.spec, 0, 20);
    CHECK(det_bareiss(build_matrix(w, 2, 3)).is_zero()); // C(3,n) window past the support
}
