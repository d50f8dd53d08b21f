#include "hankel/hankel_matrix.hpp"

#include <utility>

namespace hankel {

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    const int n = static_cast<int>(rows.size());
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw Error("matrix rows are not square");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::bareiss: return "bareiss";
        case Method::condensation: return "condensation";
        case Method::closed_form: return "closed_form";
        case Method::catalog: return "catalog";
    }
    return "?";
}

HankelMatrix build_matrix(const SequenceWindow& w, int n, int k) {
    if (n < 1) throw Error("matrix order must be positive");
    if (k < 0) throw Error("offset must be nonnegative");
    if (!w.covers(k, k + 2 * n - 2))
        throw InsufficientTerms("window [" + std::to_string(w.origin) + ", " +
                                std::to_string(w.origin + static_cast<long>(w.terms.size()) - 1) +
                                "] does not cover indices " + std::to_string(k) + " .. " +
                                std::to_string(k + 2 * n - 2));
    HankelMatrix h{n, k, SquareMatrix(n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.entries.at(i, j) = w.at(i + j + k);
    return h;
}

Rat det_bareiss(const SquareMatrix& m) {
    const int n = m.size();
    if (n == 0) return Rat(1);
    if (n == 1) return m.at(0, 0);

    // Clear denominators with one lcm for the whole matrix, so elimination
    // stays in the integers where Bareiss division is exact.
    Int scale = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scale = lcm(scale, m.at(i, j).den());

    std::vector<Int> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& e = m.at(i, j);
            a[static_cast<size_t>(i) * n + j] = e.num() * (scale / e.den());
        }
    auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };

    int sign = 1;
    Int prev = 1;
    for (int p = 0; p < n - 1; ++p) {
        if (sgn(at(p, p)) == 0) {
            int swap_col = -1;
            for (int j = p + 1; j < n; ++j)
                if (sgn(at(p, j)) != 0) { swap_col = j; break; }
            if (swap_col < 0) return Rat(0); // zero row in the remaining block
            for (int i = 0; i < n; ++i) std::swap(at(i, p), at(i, swap_col));
            sign = -sign;
        }
        for (int i = p + 1; i < n; ++i) {
            for (int j = p + 1; j < n; ++j) {
                Int t = at(i, j) * at(p, p) - at(i, p) * at(p, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = std::move(t);
            }
            at(i, p) = 0;
        }
        prev = at(p, p);
    }

    Int det_scaled = at(n - 1, n - 1);
    if (sign < 0) det_scaled = -det_scaled;
    Int scale_n;
    mpz_pow_ui(scale_n.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(det_scaled, scale_n);
}

Rat det_condensation(const SquareMatrix& m, bool* fell_back) {
    if (fell_back) *fell_back = false;
    const int n = m.size();
    if (n == 0) return Rat(1);
    if (n == 1) return m.at(0, 0);

    // layer k holds the (k+1)x(k+1) connected minors; interior entries of the
    // previous layer are the divisors.
    SquareMatrix prev(n);
    SquareMatrix cur = m;
    for (int size = n - 1; size >= 1; --size) {
        SquareMatrix next(size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                Rat minor = cur.at(i, j) * cur.at(i + 1, j + 1) -
                            cur.at(i, j + 1) * cur.at(i + 1, j);
                if (size < n - 1) {
                    const Rat& div = prev.at(i + 1, j + 1);
                    if (div.is_zero()) {
                        if (fell_back) *fell_back = true;
                        return det_bareiss(m);
                    }
                    minor /= div;
                }
                next.at(i, j) = minor;
            }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur.at(0, 0);
}

} // namespace hankel
