#include "mdrlab/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "mdrlab/sampling.hpp"

namespace mdrlab {

namespace {

constexpr double kHeisenbergVertexTol = 1e-8;
constexpr double kOzawaVertexTol = 1e-6;
constexpr std::array<double, 5> kVertexLevels{0.0, 0.1, 0.5, 1.0, 2.0};
constexpr double kVertexDeviationMax = 2.0;

struct ModeName {
    Mode mode;
    const char *name;
};

constexpr std::array<ModeName, 7> kModeNames{{
    {Mode::Fig2, "fig2"},
    {Mode::Chsh, "chsh"},
    {Mode::FuzzEq15, "fuzz-eq15"},
    {Mode::FuzzThm1, "fuzz-thm1"},
    {Mode::FuzzRs, "fuzz-rs"},
    {Mode::FuzzThm2, "fuzz-thm2"},
    {Mode::Vertex, "vertex"},
}};

double theta_at(std::int64_t i, std::int64_t n) {
    return (std::numbers::pi / 2.0) * static_cast<double>(i) / static_cast<double>(n - 1);
}

Json cnot_descriptor(const Scenario &s, double theta3, double theta_p) {
    Json j = to_json(s);
    j["family"] = "cnot";
    j["theta3"] = theta3;
    j["theta_p"] = theta_p;
    return j;
}

void note(CampaignReport &report, const BoundReport &b, const Json &scenario, bool hard, double tol) {
    report.worst_margin = std::min(report.worst_margin, b.margin);
    if (b.margin < -tol) {
        report.violations.push_back({scenario, b.lhs, b.bound, b.margin, to_string(b.kind), hard});
    }
}

CampaignReport new_report(const RunConfig &cfg) {
    CampaignReport r;
    r.mode = cfg.mode;
    r.seed = cfg.seed;
    r.trials = cfg.trials;
    r.worst_margin = std::numeric_limits<double>::infinity();
    return r;
}

void finish(CampaignReport &r) { r.pass = r.hard_count() == 0; }

Scenario random_scenario(Rng &rng) {
    int m = rng.bit();
    Vec3 a, b;
    do {
        a = random_axis(rng);
        b = random_axis(rng);
    } while (a.cross(b).norm() < 1e-6);
    Vec3 n_p = random_unit_vector(rng);
    Ket meter = random_ket(rng, 1);
    Op u13 = haar_unitary(rng, 2);
    return Scenario::make(m, a, b, n_p, std::move(meter), std::move(u13));
}

void fuzz_eq15(const RunConfig &cfg, CampaignReport &report) {
    double worst = 0.0;
    for (std::int64_t k = 0; k < cfg.trials; ++k) {
        Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(k));
        Scenario s = random_scenario(rng);
        MdrSample sample = evaluate_scenario(s);
        worst = std::max(worst, sample.residual_eq15);
        double parity = s.m() == 0 ? 1.0 : -1.0;
        double lhs = s.a().norm_sq() + s.b().norm_sq() - parity * (sample.E_A2A3 + sample.E_B1B2);
        const double margin = -sample.residual_eq15;
        report.worst_margin = std::min(report.worst_margin, margin);
        if (sample.residual_eq15 > cfg.tol_identity) {
            double rhs = 0.25 * (sample.eps_plus_sq + sample.eta_plus_sq + sample.eps_minus_sq + sample.eta_minus_sq);
            report.violations.push_back({to_json(s), lhs, rhs, margin, "eq15", true});
        }
    }
    report.extra["worst_residual"] = worst;
}

void fuzz_thm1(const RunConfig &cfg, CampaignReport &report) {
    for (std::int64_t k = 0; k < cfg.trials; ++k) {
        Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(k));
        Ket psi = random_ket(rng, 2);
        Vec3 a = random_axis(rng);
        Vec3 b = random_axis(rng);
        if (k % 8 == 7) {
            // Near-parallel axes, where the parallelogram area collapses.
            b = rng.normal() * a + 1e-7 * b;
        }
        Vec3 n_p = random_unit_vector(rng);
        BoundReport r = theorem1_check(psi, a, b, n_p);
        Json desc;
        desc["psi"] = to_json(psi);
        desc["a"] = to_json(a);
        desc["b"] = to_json(b);
        desc["n_p"] = to_json(n_p);
        note(report, r, desc, true, cfg.tol_inequality);
    }
}

void fuzz_rs(const RunConfig &cfg, CampaignReport &report) {
    for (std::int64_t k = 0; k < cfg.trials; ++k) {
        Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(k));
        Ket psi = random_ket(rng, 1);
        Vec3 a = random_axis(rng);
        Vec3 b = random_axis(rng);
        BoundReport r = rs_check(psi, a, b);
        Json desc;
        desc["psi"] = to_json(psi);
        desc["a"] = to_json(a);
        desc["b"] = to_json(b);
        note(report, r, desc, true, cfg.tol_inequality);
    }
}

void fuzz_thm2(const RunConfig &cfg, CampaignReport &report) {
    double worst_h = std::numeric_limits<double>::infinity();
    auto check = [&](const Scenario &s, const Json &desc) {
        MdrSample sample = evaluate_scenario(s);
        BoundReport h = theorem2_check(sample, s, MdrKind::Heisenberg);
        BoundReport o = theorem2_check(sample, s, MdrKind::Ozawa);
        worst_h = std::min(worst_h, h.margin);
        if (h.margin < -cfg.tol_inequality) {
            report.violations.push_back({desc, h.lhs, h.bound, h.margin, "heisenberg", false});
        }
        note(report, o, desc, true, cfg.tol_inequality);
    };

    // Deterministic CNOT family first, then Haar-random interactions.
    const std::int64_t g = cfg.grid_points;
    for (std::int64_t i = 0; i < g; ++i) {
        for (std::int64_t j = 0; j < g; ++j) {
            double theta3 = theta_at(i, g);
            double theta_p = theta_at(j, g);
            Scenario s = cnot_scenario(theta3, theta_p);
            check(s, cnot_descriptor(s, theta3, theta_p));
        }
    }
    for (std::int64_t k = 0; k < cfg.trials; ++k) {
        Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(k));
        Scenario s = random_scenario(rng);
        check(s, to_json(s));
    }
    report.extra["cnot_grid_scenarios"] = g * g;
    report.extra["worst_margin_heisenberg"] = worst_h;
    report.extra["heisenberg_findings"] = report.finding_count();
}

std::string csv_line(std::initializer_list<double> values) {
    std::string out;
    bool first = true;
    for (double v : values) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += format_number(v);
    }
    out += '\n';
    return out;
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open " + path + " for writing");
    }
    f << contents;
    f.close();
    if (!f) {
        throw IoError("failed writing " + path);
    }
}

}  // namespace

const char *to_string(Mode m) {
    for (const auto &[mode, name] : kModeNames) {
        if (mode == m) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Mode> parse_mode(const std::string &name) {
    for (const auto &[mode, mode_name] : kModeNames) {
        if (name == mode_name) {
            return mode;
        }
    }
    return std::nullopt;
}

void RunConfig::validate() const {
    if (trials < 1) {
        throw ConfigError("trials must be at least 1");
    }
    if (grid_points < 2) {
        throw ConfigError("grid_points must be at least 2");
    }
    if (!(tol_identity > 0.0) || !std::isfinite(tol_identity)) {
        throw ConfigError("tol_identity must be a positive number");
    }
    if (!(tol_inequality > 0.0) || !std::isfinite(tol_inequality)) {
        throw ConfigError("tol_inequality must be a positive number");
    }
}

RunConfig RunConfig::from_json(const Json &j, RunConfig base) {
    if (!j.is_object()) {
        throw ConfigError("configuration must be a JSON object");
    }
    try {
        for (const auto &[key, value] : j.items()) {
            if (key == "mode") {
                auto mode = parse_mode(value.get<std::string>());
                if (!mode) {
                    throw ConfigError("unknown mode '" + value.get<std::string>() + "'");
                }
                base.mode = *mode;
            } else if (key == "seed") {
                if (!value.is_number_unsigned()) {
                    throw ConfigError("seed must be a non-negative integer");
                }
                base.seed = value.get<std::uint64_t>();
            } else if (key == "trials") {
                if (!value.is_number_integer()) {
                    throw ConfigError("trials must be an integer");
                }
                base.trials = value.get<std::int64_t>();
            } else if (key == "grid_points") {
                if (!value.is_number_integer()) {
                    throw ConfigError("grid_points must be an integer");
                }
                base.grid_points = value.get<std::int64_t>();
            } else if (key == "tol_identity") {
                base.tol_identity = value.get<double>();
            } else if (key == "tol_inequality") {
                base.tol_inequality = value.get<double>();
            } else if (key == "out_csv") {
                base.out_csv = value.get<std::string>();
            } else if (key == "out_json") {
                base.out_json = value.get<std::string>();
            } else {
                throw ConfigError("unknown configuration key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("bad configuration value: ") + e.what());
    }
    return base;
}

RunConfig RunConfig::from_json(const Json &j) { return from_json(j, RunConfig{}); }

Json RunConfig::to_json() const {
    Json j;
    j["mode"] = to_string(mode);
    j["seed"] = seed;
    j["trials"] = trials;
    j["grid_points"] = grid_points;
    j["tol_identity"] = tol_identity;
    j["tol_inequality"] = tol_inequality;
    j["out_csv"] = out_csv;
    j["out_json"] = out_json;
    return j;
}

std::size_t CampaignReport::hard_count() const {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [](const ViolationRecord &v) { return v.hard; }));
}

Json CampaignReport::to_json() const {
    Json j;
    j["mode"] = to_string(mode);
    j["seed"] = seed;
    j["trials"] = trials;
    j["worst_margin"] = worst_margin;
    Json list = Json::array();
    for (const auto &v : violations) {
        Json item;
        item["scenario"] = v.scenario;
        item["lhs"] = v.lhs;
        item["bound"] = v.bound;
        item["margin"] = v.margin;
        item["kind"] = v.kind;
        list.push_back(std::move(item));
    }
    j["violations"] = std::move(list);
    j["pass"] = pass;
    for (const auto &[key, value] : extra.items()) {
        j[key] = value;
    }
    return j;
}

Fig2Result run_fig2(const RunConfig &cfg) {
    cfg.validate();
    Fig2Result out;
    out.report = new_report(cfg);
    CampaignReport &report = out.report;

    const std::int64_t g = cfg.grid_points;
    double max_sum = -std::numeric_limits<double>::infinity();
    double theta_at_max = 0.0;
    std::optional<double> over_lo, over_hi;
    for (std::int64_t i = 0; i < g; ++i) {
        const double theta3 = theta_at(i, g);
        Scenario s = cnot_scenario(theta3, 0.0);
        MdrSample sample = evaluate_scenario(s);
        BoundReport h = theorem2_check(sample, s, MdrKind::Heisenberg);
        BoundReport o = theorem2_check(sample, s, MdrKind::Ozawa);

        SweepRow row{theta3, 0.0, sample.E_A2A3, sample.E_B1B2, sample.E_A2A3 + sample.E_B1B2, h.bound, o.bound};
        out.rows.push_back(row);
        if (row.sum > max_sum) {
            max_sum = row.sum;
            theta_at_max = theta3;
        }

        Json desc = cnot_descriptor(s, theta3, 0.0);
        if (h.margin < -cfg.tol_inequality) {
            report.violations.push_back({desc, h.lhs, h.bound, h.margin, "heisenberg", false});
            if (!over_lo) {
                over_lo = theta3;
            }
            over_hi = theta3;
        }
        note(report, o, desc, true, cfg.tol_inequality);
    }
    finish(report);
    report.extra["max_sum"] = max_sum;
    report.extra["theta3_at_max"] = theta_at_max;
    if (over_lo) {
        report.extra["heisenberg_violation_range"] = Json::array({*over_lo, *over_hi});
    } else {
        report.extra["heisenberg_violation_range"] = nullptr;
    }
    return out;
}

ChshResult run_chsh(const RunConfig &cfg) {
    cfg.validate();
    ChshResult out;
    out.report = new_report(cfg);
    CampaignReport &report = out.report;

    auto evaluate = [](double theta3) {
        Scenario s = cnot_scenario(theta3, 0.0);
        MdrSample sample = evaluate_scenario(s);
        ChshReport chsh = chsh_composite(post_interaction_state(s), s.a(), s.b(), s.n_p());
        ChshRow row;
        row.base = {theta3, 0.0, sample.E_A2A3, sample.E_B1B2, sample.E_A2A3 + sample.E_B1B2, chsh.bound_h,
                    chsh.bound_o};
        row.B12 = chsh.B12;
        row.B23 = chsh.B23;
        row.total = chsh.total;
        return std::pair{row, cnot_descriptor(s, theta3, 0.0)};
    };

    const std::int64_t g = cfg.grid_points;
    double max_total = -std::numeric_limits<double>::infinity();
    double theta_at_max = 0.0;
    for (std::int64_t i = 0; i < g; ++i) {
        auto [row, desc] = evaluate(theta_at(i, g));
        out.rows.push_back(row);
        if (row.total > max_total) {
            max_total = row.total;
            theta_at_max = row.base.theta3;
        }
        BoundReport h = BoundReport::make(row.total, row.base.bound_h, BoundKind::Heisenberg);
        BoundReport o = BoundReport::make(row.total, row.base.bound_o, BoundKind::Ozawa);
        if (h.margin < -cfg.tol_inequality) {
            report.violations.push_back({desc, h.lhs, h.bound, h.margin, "heisenberg", false});
        }
        note(report, o, desc, true, cfg.tol_inequality);
    }

    // The composite peaks at theta3 = pi/8 with value 2 + sqrt2.
    const double peak_theta = std::numbers::pi / 8.0;
    const double peak_expected = 2.0 + std::numbers::sqrt2;
    auto [peak, peak_desc] = evaluate(peak_theta);
    const double peak_residual = std::abs(peak.total - peak_expected);
    if (peak_residual > cfg.tol_identity) {
        report.violations.push_back({peak_desc, peak.total, peak_expected, -peak_residual, "chsh-peak", true});
    }
    if (max_total > peak.total + cfg.tol_identity) {
        report.violations.push_back(
            {peak_desc, max_total, peak.total, peak.total - max_total, "chsh-peak", true});
    }
    finish(report);
    report.extra["max_total"] = max_total;
    report.extra["theta3_at_max"] = theta_at_max;
    report.extra["total_at_pi_over_8"] = peak.total;
    return out;
}

CampaignReport run_fuzz(const RunConfig &cfg) {
    cfg.validate();
    CampaignReport report = new_report(cfg);
    switch (cfg.mode) {
        case Mode::FuzzEq15: fuzz_eq15(cfg, report); break;
        case Mode::FuzzThm1: fuzz_thm1(cfg, report); break;
        case Mode::FuzzRs: fuzz_rs(cfg, report); break;
        case Mode::FuzzThm2: fuzz_thm2(cfg, report); break;
        default: throw ConfigError(std::string("run_fuzz cannot run mode ") + to_string(cfg.mode));
    }
    finish(report);
    return report;
}

VertexResult run_vertex(const RunConfig &cfg) {
    cfg.validate();
    VertexResult out;
    out.report = new_report(cfg);
    CampaignReport &report = out.report;

    auto record_check = [&](const VertexCell &cell, double expected, double tol, const char *kind) {
        double dev = std::abs(cell.radius - expected);
        report.worst_margin = std::min(report.worst_margin, -dev);
        if (!cell.converged || dev > tol) {
            Json desc;
            desc["dA"] = cell.dA;
            desc["dB"] = cell.dB;
            desc["c"] = cell.c;
            desc["converged"] = cell.converged;
            report.violations.push_back({desc, cell.radius, expected, -dev, kind, true});
        }
    };
    auto solve = [](double dA, double dB, double c, MdrKind kind) {
        VertexCell cell{dA, dB, c, kind, 0.0, true};
        try {
            cell.radius = vertex_min_radius(dA, dB, c, kind);
        } catch (const ConvergenceError &) {
            cell.converged = false;
            cell.radius = std::numeric_limits<double>::quiet_NaN();
        }
        return cell;
    };

    const std::int64_t g = cfg.grid_points;
    const double sym_factor = (2.0 - std::numbers::sqrt2) * (2.0 - std::numbers::sqrt2);
    for (double c : kVertexLevels) {
        for (std::int64_t i = 0; i < g; ++i) {
            for (std::int64_t j = 0; j < g; ++j) {
                double dA = kVertexDeviationMax * static_cast<double>(i) / static_cast<double>(g - 1);
                double dB = kVertexDeviationMax * static_cast<double>(j) / static_cast<double>(g - 1);
                VertexCell h = solve(dA, dB, c, MdrKind::Heisenberg);
                record_check(h, 2.0 * c, kHeisenbergVertexTol, "vertex-heisenberg");
                out.cells.push_back(h);
                VertexCell o = solve(dA, dB, c, MdrKind::Ozawa);
                if (!o.converged) {
                    record_check(o, std::numeric_limits<double>::quiet_NaN(), kOzawaVertexTol, "vertex-ozawa");
                }
                out.cells.push_back(o);
            }
        }
    }
    // Symmetric locus dA = dB = sqrt(c).
    for (std::int64_t i = 0; i < g; ++i) {
        double c = kVertexDeviationMax * static_cast<double>(i) / static_cast<double>(g - 1);
        VertexCell o = solve(std::sqrt(c), std::sqrt(c), c, MdrKind::Ozawa);
        record_check(o, sym_factor * c, kOzawaVertexTol, "vertex-ozawa");
        out.cells.push_back(o);
    }
    finish(report);
    return out;
}

double reevaluate_margin(Mode mode, const ViolationRecord &record) {
    const Json &j = record.scenario;
    const std::string &kind = record.kind;
    if (kind == "eq15") {
        return -evaluate_scenario(scenario_from_json(j)).residual_eq15;
    }
    if (kind == "theorem1") {
        return theorem1_check(ket_from_json(j.at("psi")), vec3_from_json(j.at("a")), vec3_from_json(j.at("b")),
                              vec3_from_json(j.at("n_p")))
            .margin;
    }
    if (kind == "rs") {
        return rs_check(ket_from_json(j.at("psi")), vec3_from_json(j.at("a")), vec3_from_json(j.at("b"))).margin;
    }
    if (kind == "heisenberg" || kind == "ozawa") {
        Scenario s = scenario_from_json(j);
        MdrKind mk = kind == "heisenberg" ? MdrKind::Heisenberg : MdrKind::Ozawa;
        if (mode == Mode::Chsh) {
            ChshReport r = chsh_composite(post_interaction_state(s), s.a(), s.b(), s.n_p());
            return (mk == MdrKind::Heisenberg ? r.bound_h : r.bound_o) - r.total;
        }
        return theorem2_check(evaluate_scenario(s), s, mk).margin;
    }
    if (kind == "vertex-heisenberg" || kind == "vertex-ozawa") {
        MdrKind mk = kind == "vertex-heisenberg" ? MdrKind::Heisenberg : MdrKind::Ozawa;
        double radius = vertex_min_radius(j.at("dA").get<double>(), j.at("dB").get<double>(),
                                          j.at("c").get<double>(), mk);
        return -std::abs(radius - record.bound);
    }
    if (kind == "chsh-peak") {
        Scenario s = scenario_from_json(j);
        ChshReport r = chsh_composite(post_interaction_state(s), s.a(), s.b(), s.n_p());
        return -std::abs(r.total - record.bound);
    }
    throw DomainError("unknown violation kind '" + kind + "'");
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fig2_csv(const std::vector<SweepRow> &rows) {
    std::string out = "theta3,theta_p,E_A2A3,E_B1B2,sum,bound_h,bound_o\n";
    for (const auto &r : rows) {
        out += csv_line({r.theta3, r.theta_p, r.E_A2A3, r.E_B1B2, r.sum, r.bound_h, r.bound_o});
    }
    return out;
}

std::string chsh_csv(const std::vector<ChshRow> &rows) {
    std::string out = "theta3,theta_p,E_A2A3,E_B1B2,sum,bound_h,bound_o,B12,B23,total\n";
    for (const auto &row : rows) {
        const SweepRow &r = row.base;
        out += csv_line({r.theta3, r.theta_p, r.E_A2A3, r.E_B1B2, r.sum, r.bound_h, r.bound_o, row.B12, row.B23,
                         row.total});
    }
    return out;
}

std::string vertex_csv(const std::vector<VertexCell> &cells) {
    std::string out = "dA,dB,c,kind,radius\n";
    for (const auto &cell : cells) {
        out += format_number(cell.dA) + ',' + format_number(cell.dB) + ',' + format_number(cell.c) + ',' +
               to_string(cell.kind) + ',' + format_number(cell.radius) + '\n';
    }
    return out;
}

RunOutcome run(const RunConfig &cfg) {
    cfg.validate();
    RunOutcome out;
    switch (cfg.mode) {
        case Mode::Fig2: {
            Fig2Result r = run_fig2(cfg);
            out.report = std::move(r.report);
            out.csv = fig2_csv(r.rows);
            break;
        }
        case Mode::Chsh: {
            ChshResult r = run_chsh(cfg);
            out.report = std::move(r.report);
            out.csv = chsh_csv(r.rows);
            break;
        }
        case Mode::Vertex: {
            VertexResult r = run_vertex(cfg);
            out.report = std::move(r.report);
            out.csv = vertex_csv(r.cells);
            break;
        }
        default: out.report = run_fuzz(cfg); break;
    }
    if (!cfg.out_csv.empty()) {
        if (out.csv.empty()) {
            throw ConfigError(std::string("mode ") + to_string(cfg.mode) + " does not produce a CSV table");
        }
        write_file(cfg.out_csv, out.csv);
    }
    if (!cfg.out_json.empty()) {
        write_file(cfg.out_json, out.report.to_json().dump(2) + "\n");
    }
    out.exit_code = out.report.pass ? 0 : 1;
    return out;
}

}  // namespace mdrlab
