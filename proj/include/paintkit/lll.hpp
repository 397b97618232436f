#pragma once

#include "paintkit/errors.hpp"
#include "paintkit/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace paintkit {

class InvalidConstants : public Error {
  public:
    using Error::Error;
};

/// Constants of the random partition. log is the natural logarithm.
struct PartitionConstants {
    double alpha = 1;
    int d = 1;
    double c = 0.5;
    int beta = 1;
    double epsilon = 1;
    double p_s = 0;
    /// p[m] for m = 0..beta.
    std::vector<double> p;

    /// Defaults: c = alpha/2, beta = floor(d^(1/100)), epsilon = d^(-1/8),
    /// p_S = sqrt(ln d / d), p_0 = 1 - c, p_1 = 2c/3, p_m = c/((m+1)(m+2)).
    /// Overrides by name: c, beta, epsilon, p_S (these feed the p_m), then
    /// p0, p1, ... for individual probabilities.
    static PartitionConstants make(double alpha, int d, const std::map<std::string, double>& overrides = {});

    /// Probability of B*, 1 - (p_0 + ... + p_beta).
    double p_star() const;
};

struct PartitionPlan {
    PartitionConstants constants;
    VertexSet a_side, b_side;
    VertexSet s;
    /// part[b] in 0..beta for B_m, beta + 1 for B*; -1 on side A.
    std::vector<int> part;

    int star_index() const { return constants.beta + 1; }
    /// Vertices of B_m; m = beta + 1 gives B*.
    VertexSet b_part(int m) const;
};

class MalformedPartition : public Error {
  public:
    using Error::Error;
};

/// Bad events: X_{a,m} for a in A and m in 0..beta (|N(a) cap B_m| outside
/// (1 -+ epsilon) p_m deg(a)), Y_b for b in B (|N(b) cap S| outside
/// (1 -+ epsilon) p_S deg(b)).
struct BadEventLedger {
    /// x[a][m], empty for vertices outside A.
    std::vector<std::vector<char>> x;
    /// y[b], 0 outside B.
    std::vector<char> y;
    /// Resample counts of the same shape.
    std::vector<std::vector<long long>> x_resamples;
    std::vector<long long> y_resamples;

    bool clean() const;
    int bad_count() const;
};

/// Exact evaluation of every predicate. Throws MalformedPartition when the
/// sides do not bipartition g, S leaves A, or part[] is out of range.
BadEventLedger check_partition(const Graph& g, const PartitionPlan& plan);

/// A bad event: (vertex, m) for X_{a,m}, (vertex, -1) for Y_b.
using BadEvent = std::pair<Vertex, int>;

struct SampleOutcome {
    PartitionPlan plan;
    BadEventLedger ledger;
    /// Events in the order they were resampled.
    std::vector<BadEvent> resampled;
};

class ResampleBudgetExceeded : public Error {
  public:
    ResampleBudgetExceeded(long long budget, BadEventLedger snapshot);
    long long budget;
    BadEventLedger snapshot;
};

/// Resampling sampler: draw every choice from one stream seeded by `seed`,
/// then while some event is bad resample the variables of the lowest one
/// (X events by vertex then m, then Y events by vertex). Sides default to
/// bipartition(g).
SampleOutcome sample_partition(const Graph& g, const PartitionConstants& constants, std::uint64_t seed,
                               long long budget = 100000,
                               const std::optional<std::pair<VertexSet, VertexSet>>& sides = std::nullopt);

} // namespace paintkit
