#pragma once

#include "paintkit/exact.hpp"
#include "paintkit/tokens.hpp"

#include <vector>

namespace paintkit {

/// One deletion among the first k deletions on a side of K_{n,n}.
struct SaveProfileStep {
    Vertex vertex = 0;
    /// 0 for side A = [0, n), 1 for side B = [n, 2n).
    int side = 0;
    /// Number of vertices of the same side deleted earlier.
    int index = 0;
    int save_size = 0;
    /// (k - 1) / (k - index).
    double cap = 0;
    bool within = true;
};

struct SchemeAudit {
    int tokens = 0;
    RemovalScheme scheme;
    std::vector<SaveProfileStep> profile;
    /// Total save size over the first k deletions of each side, and the
    /// bound (k - 1)(ln k + 1) it is compared against.
    int sigma_a = 0, sigma_b = 0;
    double sigma_bound = 0;
    bool harmonic_ok = true;
};

struct KnnStudy {
    int n = 0;
    /// Least k such that K_{n,n} is removable with k tokens everywhere.
    int k = 0;
    /// n - sqrt(2n(ln n + 1)).
    double lower_bound = 0;
    /// n + 1, the strict degeneracy.
    int trivial_upper = 0;
    bool bound_holds = false;
    /// Audits of the schemes found for every k' in [k, trivial_upper].
    std::vector<SchemeAudit> schemes;
    bool harmonic_ok = true;
};

struct KnnOptions {
    int n_cap = 4;
    ExactLimits limits = kRemovabilityLimits;
};

double knn_lower_bound(int n);

/// Replays the scheme on K_{n,n} with k tokens and records the save-size
/// profile of the first k same-side deletions.
SchemeAudit audit_knn_scheme(int n, int k, const RemovalScheme& s);

KnnStudy knn_study(int n, const KnnOptions& options = {});

} // namespace paintkit
