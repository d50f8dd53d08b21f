#include "hankel/primes.hpp"

#include <algorithm>
#include <map>

namespace hankel {

Int Factorization::reconstruct() const {
    Int v = 1;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
        v *= pe;
    }
    for (const Int& c : unfactored) v *= c;
    return v;
}

Int Factorization::largest_prime() const {
    return factors.empty() ? Int(0) : factors.back().first;
}

namespace {

Int powmod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// One Miller-Rabin round; x odd, >= 5, x-1 = d * 2^s.
bool mr_round(const Int& x, const Int& witness, const Int& d, unsigned long s) {
    Int y = powmod(witness, d, x);
    if (y == 1 || y == x - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        y = (y * y) % x;
        if (y == x - 1) return true;
        if (y == 1) return false;
    }
    return false;
}

} // namespace

bool is_probable_prime(const Int& x) {
    if (x < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (x == p) return true;
        if (mpz_divisible_ui_p(x.get_mpz_t(), p)) return false;
    }

    const Int m = x - 1;
    const unsigned long s = mpz_scan1(m.get_mpz_t(), 0);
    const Int d = m >> s;

    static const Int deterministic_limit("3317044064679887385961981");
    if (x < deterministic_limit) {
        for (int w : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
            if (!mr_round(x, w, d, s)) return false;
        return true;
    }

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x9e3779b97f4a7c15ull ^ mpz_get_ui(x.get_mpz_t()));
    for (int round = 0; round < 64; ++round) {
        Int w = rng.get_z_range(x - 3) + 2; // [2, x-2]
        if (!mr_round(x, w, d, s)) return false;
    }
    return true;
}

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

void trial_divide(Int& n, std::map<Int, int>& primes) {
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++primes[Int(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    // 6k+-1 wheel
    for (unsigned long p = 7; p < kTrialLimit; p += 6) {
        for (unsigned long q : {p, p + 4}) {
            while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
                ++primes[Int(q)];
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
            }
        }
        if (mpz_cmp_ui(n.get_mpz_t(), 1) == 0) return;
        if (mpz_cmp_ui(n.get_mpz_t(), (p + 5) * (p + 5)) < 0) {
            // all candidate divisors up to sqrt(n) tried: cofactor is prime
            ++primes[n];
            n = 1;
            return;
        }
    }
}

// Pollard-Brent rho; returns a nontrivial factor of composite odd n,
// or 0 if the iteration budget runs out. `spent` accumulates work.
Int pollard_brent(const Int& n, std::uint64_t budget, std::uint64_t& spent,
                  gmp_randclass& rng) {
    while (spent < budget) {
        Int y = rng.get_z_range(n - 1) + 1;
        Int c = rng.get_z_range(n - 1) + 1;
        Int g = 1, q = 1, x, ys;
        const unsigned long batch = 128;
        unsigned long r = 1;
        while (g == 1 && spent < budget) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            spent += r;
            for (unsigned long k = 0; k < r && g == 1 && spent < budget; k += batch) {
                ys = y;
                const unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                spent += lim;
                g = gcd(q, n);
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
                ++spent;
            } while (g == 1 && spent < budget);
        }
        if (g != 1 && g != n) return g;
        // cycle degenerated; retry with fresh parameters
    }
    return 0;
}

void factor_composite(const Int& n, std::uint64_t budget, std::map<Int, int>& primes,
                      std::vector<Int>& unfactored, gmp_randclass& rng) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++primes[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r = sqrt(n);
        factor_composite(r, budget, primes, unfactored, rng);
        factor_composite(r, budget, primes, unfactored, rng);
        return;
    }
    std::uint64_t spent = 0;
    Int g = pollard_brent(n, budget, spent, rng);
    if (g == 0) {
        unfactored.push_back(n);
        return;
    }
    factor_composite(g, budget, primes, unfactored, rng);
    factor_composite(n / g, budget, primes, unfactored, rng);
}

} // namespace

Factorization factor(const Int& x, std::uint64_t budget) {
    if (x < 1)
        throw Error("factor() requires a positive integer, got " + int_str(x));
    Factorization f;
    f.value = x;
    if (x == 1) return f;

    std::map<Int, int> primes;
    Int n = x;
    trial_divide(n, primes);
    if (n != 1) {
        gmp_randclass rng(gmp_randinit_mt);
        rng.seed(0xda942042e4dd58b5ull ^ mpz_get_ui(x.get_mpz_t()));
        factor_composite(n, budget, primes, f.unfactored, rng);
    }
    f.factors.assign(primes.begin(), primes.end());
    std::sort(f.unfactored.begin(), f.unfactored.end());
    return f;
}

} // namespace hankel
