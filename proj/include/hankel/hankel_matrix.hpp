#pragma once

#include <string>
#include <vector>

#include "hankel/rational.hpp"
#include "hankel/recurrence.hpp"

namespace hankel {

class SquareMatrix {
public:
    explicit SquareMatrix(int n) : n_(n), cells_(static_cast<size_t>(n) * n) {}
    static SquareMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    int size() const { return n_; }
    Rat& at(int i, int j) { return cells_[static_cast<size_t>(i) * n_ + j]; }
    const Rat& at(int i, int j) const { return cells_[static_cast<size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<Rat> cells_;
};

/// The n x n window H_n^{(k)}: entry (i,j) is a_{i+j+k} for 0-based i,j.
struct HankelMatrix {
    int n;
    int k;
    SquareMatrix entries;
};

enum class Method { bareiss, condensation, closed_form, catalog };
std::string method_name(Method m);

/// A computed d_n^{(k)} with the method that produced it.
struct TransformValue {
    int n = 0;
    int k = 0;
    Rat value;
    Method method = Method::bareiss;
};

/// Requires w to cover indices k .. k+2n-2.
HankelMatrix build_matrix(const SequenceWindow& w, int n, int k);

/// Exact determinant by fraction-free Bareiss elimination over integers
/// (entry denominators cleared by their per-matrix lcm), column pivoting
/// on zero pivots. Singular input returns 0.
Rat det_bareiss(const SquareMatrix& m);
inline Rat det_bareiss(const HankelMatrix& m) { return det_bareiss(m.entries); }

/// Exact determinant by Dodgson condensation. A zero interior entry makes
/// condensation fall back to det_bareiss on the original matrix; the
/// fallback is reported through fell_back when non-null.
Rat det_condensation(const SquareMatrix& m, bool* fell_back = nullptr);
inline Rat det_condensation(const HankelMatrix& m, bool* fell_back = nullptr) {
    return det_condensation(m.entries, fell_back);
}

} // namespace hankel
