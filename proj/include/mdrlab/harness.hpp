#pragma once

// Configuration-driven sweeps and randomized campaigns behind the mdrlab CLI.
//
// Margin convention in reports: for inequalities margin = bound - lhs, for
// identities margin = -|residual|. worst_margin is the smallest margin of the
// kind that decides `pass` for the mode.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdrlab/bounds.hpp"
#include "mdrlab/serialize.hpp"

namespace mdrlab {

enum class Mode { Fig2, Chsh, FuzzEq15, FuzzThm1, FuzzRs, FuzzThm2, Vertex };

const char *to_string(Mode m);
std::optional<Mode> parse_mode(const std::string &name);

class ConfigError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

struct RunConfig {
    Mode mode = Mode::Fig2;
    std::uint64_t seed = 0;
    std::int64_t trials = 1000;
    std::int64_t grid_points = 181;
    double tol_identity = 1e-9;
    double tol_inequality = 1e-9;
    std::string out_csv;
    std::string out_json;

    /// Throws ConfigError when an invariant does not hold.
    void validate() const;
    /// Overlays the fields present in `j` onto `base`; unknown keys are errors.
    static RunConfig from_json(const Json &j, RunConfig base);
    static RunConfig from_json(const Json &j);
    Json to_json() const;
};

struct SweepRow {
    double theta3 = 0.0;
    double theta_p = 0.0;
    double E_A2A3 = 0.0;
    double E_B1B2 = 0.0;
    double sum = 0.0;
    double bound_h = 0.0;
    double bound_o = 0.0;
};

struct ChshRow {
    SweepRow base;  // bound_h/bound_o hold the CHSH bounds 2 sqrt2 K
    double B12 = 0.0;
    double B23 = 0.0;
    double total = 0.0;
};

struct VertexCell {
    double dA = 0.0;
    double dB = 0.0;
    double c = 0.0;
    MdrKind kind = MdrKind::Heisenberg;
    double radius = 0.0;
    bool converged = true;
};

struct ViolationRecord {
    Json scenario;
    double lhs = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    std::string kind;
    bool hard = true;
};

struct CampaignReport {
    Mode mode = Mode::Fig2;
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
    double worst_margin = 0.0;
    std::vector<ViolationRecord> violations;
    bool pass = true;
    /// Mode-specific summary values, appended to the JSON after `pass`.
    Json extra = Json::object();

    std::size_t hard_count() const;
    std::size_t finding_count() const { return violations.size() - hard_count(); }
    Json to_json() const;
};

struct Fig2Result {
    std::vector<SweepRow> rows;
    CampaignReport report;
};

struct ChshResult {
    std::vector<ChshRow> rows;
    CampaignReport report;
};

struct VertexResult {
    std::vector<VertexCell> cells;
    CampaignReport report;
};

/// theta3 swept over [0, pi/2] at theta_p = 0 on the CNOT family.
Fig2Result run_fig2(const RunConfig &cfg);
/// CHSH composite over the same theta3 sweep.
ChshResult run_chsh(const RunConfig &cfg);
/// fuzz-eq15, fuzz-thm1, fuzz-rs, fuzz-thm2.
CampaignReport run_fuzz(const RunConfig &cfg);
/// Vertex radius surface and its closed-form checks.
VertexResult run_vertex(const RunConfig &cfg);

/// Recomputes the margin of a violation record from its serialized scenario.
double reevaluate_margin(Mode mode, const ViolationRecord &record);

std::string fig2_csv(const std::vector<SweepRow> &rows);
std::string chsh_csv(const std::vector<ChshRow> &rows);
std::string vertex_csv(const std::vector<VertexCell> &cells);

/// %.17g rendering used by every CSV column.
std::string format_number(double v);

struct RunOutcome {
    CampaignReport report;
    std::string csv;  // empty for modes without a table
    int exit_code = 0;
};

/// Runs the configured mode and writes out_csv / out_json when set.
/// exit_code: 0 pass, 1 hard violation. Output failures throw IoError.
RunOutcome run(const RunConfig &cfg);

}  // namespace mdrlab
