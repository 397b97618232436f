#pragma once

#include "paintkit/exact.hpp"
#include "paintkit/graph.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace paintkit {

/// Parameter names in report order.
inline constexpr std::array<const char*, 9> kParameterNames = {"chi", "ch",  "chi_P", "chi_DPP", "AT",
                                                               "sd",  "sd3", "sd4",   "rem"};

struct ParameterEntry {
    enum class Status { Computed, Bounded, Capped };
    Status status = Status::Capped;
    /// Set for Computed.
    std::optional<int> value;
    /// Set for Bounded: the value is known to lie in [lower, upper].
    std::optional<int> lower, upper;
    /// Kind of the certificate that was replayed for the upper bound, if any.
    std::string witness;

    static ParameterEntry computed(int v, std::string witness = {});
    static ParameterEntry bounded(int lo, int hi);
    static ParameterEntry capped();
    std::optional<int> low() const { return status == Status::Computed ? value : lower; }
    std::optional<int> high() const { return status == Status::Computed ? value : upper; }
    friend bool operator==(const ParameterEntry&, const ParameterEntry&) = default;
};

struct ParameterReport {
    std::string graph6;
    /// Missing names are treated as capped.
    std::map<std::string, ParameterEntry> entries;

    const ParameterEntry& at(const std::string& name) const;
    nlohmann::json to_json(const std::vector<std::string>& violations) const;
    /// Reads a parameter-report payload (schema already validated).
    static ParameterReport from_json(const nlohmann::json& payload);
    friend bool operator==(const ParameterReport&, const ParameterReport&) = default;
};

/// Pairs (a, b) asserted as a <= b: both inequality chains, the sandwich of
/// the removability numbers between sd3 and sd, and chi <= ch.
const std::vector<std::pair<std::string, std::string>>& chain_relations();

/// Human-readable description of every relation contradicted by the known
/// values or bounds. Capped entries are skipped.
std::vector<std::string> chain_violations(const ParameterReport& r);

struct AuditOptions {
    ExactLimits choosability = kChoosabilityLimits;
    ExactLimits painting = kPaintingLimits;
    ExactLimits sd3 = kSd3Limits;
    ExactLimits removability = kRemovabilityLimits;
    /// chi_DPP is computed exactly up to this many vertices.
    int dp_exact_vertices = 4;
    /// Above that, one attempt at the lower bound with this node budget;
    /// otherwise the entry is bracketed by the DP-colouring number and sd3.
    long long dp_bracket_budget = 200000;
    int at_edge_cap = 30;
};

/// Computes every parameter. Each upper value ships a certificate that is
/// replayed before the entry is recorded (VerificationFailed otherwise); a
/// CapExceeded from one solver downgrades that entry only.
ParameterReport compute_parameters(const Graph& g, const AuditOptions& options = {});

struct AuditResult {
    std::vector<ParameterReport> reports;
    /// "graph <index> (<graph6>): <relation>" per violation.
    std::vector<std::string> violations;
};

AuditResult chain_audit(const std::vector<Graph>& corpus, const AuditOptions& options = {});

} // namespace paintkit
