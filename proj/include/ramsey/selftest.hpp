#pragma once

#include <string>
#include <vector>

namespace ramsey {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // failure reproducer, or a short summary when passing
};

/// The invariant suite behind the selftest command: field axioms, embedding
/// counts, zero-set equivalence, backend agreement, the monotonicity batches,
/// resolution and embedding invariance, the prime-window oracle equivalences
/// and worker determinism.
std::vector<CheckResult> run_selftest(int workers);

}  // namespace ramsey
