#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hankel/closed_form.hpp"
#include "hankel/recurrence.hpp"

namespace hankel {

struct CatalogParams {
    std::optional<Rat> lambda;
    std::optional<Rat> mu;
    std::optional<int> m;

    Rat kappa() const; // mu/lambda
};

/// A named sequence with its recurrence parameters and the simplified
/// product formula for its Hankel transform.
struct CatalogEntry {
    std::string name;
    std::string summary;
    CatalogParams params;
    RecurrenceSpec spec;
    std::function<EvalOutcome(int n, int k)> simplified;
};

const std::vector<std::string>& entry_names();

/// Throws UnknownEntry / InvalidParams.
CatalogEntry entry(const std::string& name, const CatalogParams& params = {});

EvalOutcome eval_simplified(const CatalogEntry& e, int n, int k);

struct VerifyMismatch {
    int n = 0;
    int k = 0;
    std::string detail;
};

struct VerifyReport {
    std::string name;
    int n_max = 0;
    int k_max = 0;
    int cells = 0;
    std::vector<VerifyMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Checks simplified = closed form = Bareiss determinant on the whole
/// (n,k) grid up to (n_max, k_max).
VerifyReport verify_entry(const CatalogEntry& e, int n_max, int k_max);

} // namespace hankel
