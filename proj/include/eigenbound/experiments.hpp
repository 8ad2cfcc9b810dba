// SPDX-License-Identifier: Apache-2.0

#ifndef EIGENBOUND_EXPERIMENTS_HPP
#define EIGENBOUND_EXPERIMENTS_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "eigenbound/birman_schwinger.hpp"
#include "eigenbound/bounds.hpp"
#include "eigenbound/fourier_resolvent.hpp"
#include "eigenbound/model_solvers.hpp"
#include "eigenbound/potentials.hpp"
#include "eigenbound/quasimode.hpp"
#include "eigenbound/sweep.hpp"
#include "eigenbound/types.hpp"

namespace eigenbound {

inline constexpr const char* artifact_version = "0.1.0";

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::string experiment;
    int d = 3;
    double q = 0.0; // 0 = experiment default
    std::vector<double> eps_list;
    std::map<std::string, double> constants;
    int grid_points = 0; // 0 = experiment default
    std::string out_dir = ".";
    std::uint64_t seed = 1;
};

inline const std::vector<std::pair<std::string, std::string>>& experiment_registry() {
    static const std::vector<std::pair<std::string, std::string>> reg = {
        {"dn1d", "Davies-Nath and Abramov-Aslanyan-Davies 1D certificates on solver-built wells"},
        {"thm1", "higher-dimensional Davies-Nath certificate via the exponential-weight functional"},
        {"cor1", "|z|^{1/(d+1)} (Im sqrt z)^powers certificate obtained by Holder"},
        {"cor2", "local ball-norm certificate with the far tail absorbed"},
        {"frank", "|z|^{1/(2q)} dist(z,R+)^{1-(d+1)/(2q)} certificate"},
        {"bs-scaling", "exact scaling identity of the Birman-Schwinger operator norm"},
        {"squarewell1d", "complex square-well family: matching roots, norms, saturation"},
        {"radial3d", "3D radial step family: construction, norms, Im z2 lower bound"},
        {"quasimode", "Gaussian quasimode norms, residual identity, condition quantity"},
        {"quasimode-trunc", "truncated quasimode with exponentially small defect"},
        {"stein-tomas", "L2 -> Lpc free-resolvent growth measured against eps"},
        {"ij-norms", "Ionescu-Jerison global and local norm scalings"},
        {"lower-bound", "ball-localized mass functional on eigenvalue-bearing families"},
        {"ls-ratio", "Laptev-Safronov ratio along the radial family"},
    };
    return reg;
}

inline std::string list_experiments() {
    std::string out;
    for (const auto& [name, what] : experiment_registry()) {
        out += name;
        out += " - ";
        out += what;
        out += '\n';
    }
    return out;
}

namespace detail {

inline double const_or(const ExperimentConfig& cfg, const std::string& key, double dflt) {
    auto it = cfg.constants.find(key);
    return it == cfg.constants.end() ? dflt : it->second;
}

inline std::string fmt_row(std::initializer_list<double> vals) {
    std::string s;
    bool first = true;
    for (double v : vals) {
        if (!first) s += ',';
        s += fmt_g(v);
        first = false;
    }
    return s;
}

struct RunResult {
    std::string csv_header;
    std::vector<std::string> csv_rows;
    nlohmann::ordered_json summary;
    bool unsatisfied_fixed = false; // a certificate failed under fixed constants
};

// family shared by the d >= 2 certificate experiments
inline std::vector<RadialSolution3D> radial_family(const ExperimentConfig& cfg) {
    const double delta = const_or(cfg, "delta", 0.5);
    std::vector<RadialSolution3D> fam;
    for (double eps : cfg.eps_list) fam.push_back(construct_radial_3d(eps, delta));
    return fam;
}

inline RunResult run_squarewell1d(const ExperimentConfig& cfg) {
    const double rho = const_or(cfg, "rho", 0.5);
    const double C = const_or(cfg, "C", 2.0);
    RunResult rr;
    rr.csv_header = "eps,R,V0_re,V0_im,normL1,ratio_DN";
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (double eps : cfg.eps_list) {
        const SquareWellSolution1D sol = solve_square_well_1d(eps, rho, C);
        const Potential V = SquareWell1D{sol.V0, sol.R};
        const BoundCertificate dn = cert_davies_nath_1d(V, sol.E);
        const double l1 = std::abs(sol.V0) * 2.0 * sol.R;
        rr.csv_rows.push_back(
            fmt_row({eps, sol.R, sol.V0.real(), sol.V0.imag(), l1, dn.ratio}));
        pts.push_back({{"eps", eps},
                       {"R", sol.R},
                       {"V0_re", sol.V0.real()},
                       {"V0_im", sol.V0.imag()},
                       {"E_re", sol.E.real()},
                       {"E_im", sol.E.imag()},
                       {"residual", sol.residual},
                       {"winding", sol.winding},
                       {"normL1", l1},
                       {"ratio_DN", dn.ratio},
                       {"dn_satisfied", dn.satisfied}});
    }
    rr.summary["points"] = pts;
    return rr;
}

inline RunResult run_dn1d(const ExperimentConfig& cfg) {
    const double rho = const_or(cfg, "rho", 0.5);
    const double C = const_or(cfg, "C", 2.0);
    RunResult rr;
    rr.csv_header = certificate_csv_header();
    for (double eps : cfg.eps_list) {
        const SquareWellSolution1D sol = solve_square_well_1d(eps, rho, C);
        const Potential V = SquareWell1D{sol.V0, sol.R};
        const BoundCertificate aad = cert_aad_1d(V, sol.E);
        const BoundCertificate dn = cert_davies_nath_1d(V, sol.E);
        rr.csv_rows.push_back(to_csv_row(aad, eps));
        rr.csv_rows.push_back(to_csv_row(dn, eps));
        rr.unsatisfied_fixed = rr.unsatisfied_fixed || !aad.satisfied || !dn.satisfied;
    }
    rr.summary["constant"] = 0.5;
    return rr;
}

enum class CertKind { Theorem1, Corollary1, Frank };

inline RunResult run_cert_family(const ExperimentConfig& cfg, CertKind kind, double q_default) {
    const double q = cfg.q > 0.0 ? cfg.q : q_default;
    const auto fam = radial_family(cfg);
    auto one = [&](const RadialSolution3D& sol, double C) {
        const Potential V = RadialStep3D{sol.V0, sol.R};
        switch (kind) {
        case CertKind::Theorem1: return cert_theorem1(V, sol.E, q, C);
        case CertKind::Corollary1: return cert_corollary1(V, sol.E, q, C);
        default: return cert_frank(V, sol.E, q, C);
        }
    };
    RunResult rr;
    rr.csv_header = certificate_csv_header();
    const bool fitted = cfg.constants.find("C_dq") == cfg.constants.end();
    double C = 1.0;
    if (fitted) {
        std::vector<std::pair<double, double>> pairs;
        for (const auto& sol : fam) {
            const BoundCertificate c = one(sol, 1.0);
            pairs.emplace_back(c.lhs, c.rhs);
        }
        C = fit_constant(pairs).value * (1.0 + 1e-9);
    } else {
        C = cfg.constants.at("C_dq");
    }
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const BoundCertificate c = one(fam[i], C);
        rr.csv_rows.push_back(to_csv_row(c, cfg.eps_list[i]));
        if (!fitted) rr.unsatisfied_fixed = rr.unsatisfied_fixed || !c.satisfied;
    }
    rr.summary["constant"] = C;
    rr.summary["fitted"] = fitted;
    rr.summary["q"] = q;
    return rr;
}

inline RunResult run_cor2(const ExperimentConfig& cfg) {
    const double q = cfg.q > 0.0 ? cfg.q : 4.0;
    const auto fam = radial_family(cfg);
    const bool fitted = cfg.constants.find("C_d_prime") == cfg.constants.end();
    double Cd = 0.0;
    if (fitted) {
        // derive C_d' from the q=(d+1)/2 functional certificate over the family
        std::vector<std::pair<double, double>> pairs;
        for (const auto& sol : fam) {
            const Potential V = RadialStep3D{sol.V0, sol.R};
            const BoundCertificate c = cert_theorem1(V, sol.E, 2.0, 1.0);
            pairs.emplace_back(c.lhs, c.rhs);
        }
        const double Cthm = fit_constant(pairs).value * (1.0 + 1e-9);
        Cd = std::pow(Cthm, 0.5);
    } else {
        Cd = cfg.constants.at("C_d_prime");
    }
    RunResult rr;
    rr.csv_header = certificate_csv_header();
    nlohmann::ordered_json split = nlohmann::ordered_json::array();
    bool split_ok = true;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const Potential V = RadialStep3D{fam[i].V0, fam[i].R};
        const BoundCertificate c = cert_corollary2(V, q, fam[i].E, Cd);
        rr.csv_rows.push_back(to_csv_row(c, cfg.eps_list[i]));
        if (!fitted) rr.unsatisfied_fixed = rr.unsatisfied_fixed || !c.satisfied;
        const double tail = c.meta.at("tail");
        const bool ok = tail <= 0.5 * c.lhs / (2.0 * Cd) * (1.0 + 1e-9);
        split_ok = split_ok && ok;
        split.push_back({{"eps", cfg.eps_list[i]},
                         {"M", c.meta.at("M")},
                         {"tail", tail},
                         {"half_lhs_over_2Cd", 0.5 * c.lhs / (2.0 * Cd)},
                         {"absorbed", ok}});
    }
    rr.summary["C_d_prime"] = Cd;
    rr.summary["fitted"] = fitted;
    rr.summary["split_check"] = split;
    rr.summary["split_all_absorbed"] = split_ok;
    return rr;
}

inline RunResult run_radial3d(const ExperimentConfig& cfg) {
    const double q = cfg.q > 0.0 ? cfg.q : 4.0;
    const auto fam = radial_family(cfg);
    RunResult rr;
    rr.csv_header = "eps,R,V0_re,V0_im,z2_re,z2_im,imz2_over_eps,det_residual,normq,ls_ratio";
    std::vector<std::pair<double, double>> nrm_pts;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const auto& sol = fam[i];
        const Potential V = RadialStep3D{sol.V0, sol.R};
        const double nq = lq_norm(V, q);
        const double lsr = ls_ratio(V, sol.E, 3.5, 3);
        rr.csv_rows.push_back(fmt_row({sol.eps, sol.R, sol.V0.real(), sol.V0.imag(),
                                       sol.z2.real(), sol.z2.imag(), sol.z2.imag() / sol.eps,
                                       sol.det_residual, nq, lsr}));
        nrm_pts.emplace_back(sol.eps, nq / std::pow(std::abs(std::log(sol.eps)), 3.0 / q));
    }
    if (nrm_pts.size() >= 3) {
        const SlopeFit f = fit_slope(nrm_pts);
        rr.summary["norm_exponent"] = f.slope;
        rr.summary["norm_exponent_target"] = 1.0 - 3.0 / q;
    }
    rr.summary["q"] = q;
    return rr;
}

inline RunResult run_bs_scaling(const ExperimentConfig& cfg) {
    RunResult rr;
    rr.csv_header = "potential,z_re,z_im,lambda,rel_diff";
    struct Case {
        std::string name;
        Potential V;
        GridSpec grid;
    };
    std::vector<Case> cases;
    {
        Case c1{"squarewell1d", SquareWell1D{Complex(1.0, 0.5), 1.5}, {}};
        c1.grid = bs_grid_for(c1.V, cfg.grid_points > 0 ? cfg.grid_points : 400);
        cases.push_back(c1);
        Case c3{"radialstep3d", RadialStep3D{Complex(0.8, -0.3), 2.0}, {}};
        c3.grid = bs_grid_for(c3.V, cfg.grid_points > 0 ? std::min(cfg.grid_points, 32) : 20);
        cases.push_back(c3);
    }
    const std::vector<Complex> zs = {Complex(-1.0, 0.0), Complex(-0.6, 0.45)};
    const std::vector<double> lams = {0.5, 2.0};
    double worst = 0.0;
    for (const auto& cs : cases)
        for (const Complex& z : zs)
            for (double lam : lams) {
                const int d = dimension(cs.V);
                const double diff =
                    verify_bs_scaling(cs.V, make_spectral_point(z, d), lam, cs.grid);
                worst = std::max(worst, diff);
                std::string row = cs.name;
                row += ',';
                row += fmt_row({z.real(), z.imag(), lam, diff});
                rr.csv_rows.push_back(row);
            }
    rr.summary["worst_rel_diff"] = worst;
    return rr;
}

inline RunResult run_quasimode(const ExperimentConfig& cfg) {
    const double q = cfg.q > 0.0 ? cfg.q : 4.0;
    const int d = cfg.d;
    RunResult rr;
    rr.csv_header = "eps,q,d,g2,Vq,Vpsi2,condition_quantity";
    std::vector<std::pair<double, double>> g2p, vqp, cqp;
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (double eps : cfg.eps_list) {
        const Quasimode qm = gaussian_quasimode(eps, d);
        const QuasimodeNorms n = quasimode_norms(qm, q);
        const double cq = check_proposition_condition(qm, q);
        rr.csv_rows.push_back(fmt_row({eps, q, double(d), n.g2, n.Vq, n.Vpsi2, cq}));
        recs.push_back({{"eps", eps}, {"q", q}, {"d", d}, {"g2", n.g2}, {"Vq", n.Vq},
                        {"Vpsi2", n.Vpsi2}, {"condition_quantity", cq}});
        g2p.emplace_back(eps, n.g2);
        vqp.emplace_back(eps, n.Vq);
        cqp.emplace_back(eps, cq);
    }
    rr.summary["records"] = recs;
    if (cfg.eps_list.size() >= 3) {
        rr.summary["g2_slope"] = fit_slope(g2p).slope;
        rr.summary["Vq_slope"] = fit_slope(vqp).slope;
        rr.summary["Vq_slope_target"] = 1.0 - 0.5 * (d + 1) / q;
        rr.summary["condition_slope"] = fit_slope(cqp).slope;
    }
    return rr;
}

inline RunResult run_quasimode_trunc(const ExperimentConfig& cfg) {
    const double q = cfg.q > 0.0 ? cfg.q : 4.0;
    const int d = cfg.d;
    RunResult rr;
    rr.csv_header = "eps,M,g2,Vq,g2_over_eps_expM";
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (double eps : cfg.eps_list) {
        const Quasimode qm = truncated_quasimode(eps, q, d);
        const QuasimodeNorms n = quasimode_norms(qm, q);
        const double scaled = n.g2 / (eps * std::exp(-0.25 * qm.M * qm.M));
        rr.csv_rows.push_back(fmt_row({eps, qm.M, n.g2, n.Vq, scaled}));
        recs.push_back({{"eps", eps}, {"M", qm.M}, {"delta", qm.delta}, {"g2", n.g2},
                        {"Vq", n.Vq}, {"g2_over_eps_expM", scaled}});
    }
    rr.summary["records"] = recs;
    return rr;
}

inline RunResult run_stein_tomas(const ExperimentConfig& cfg) {
    const int d = cfg.d;
    const int n = cfg.grid_points > 0 ? cfg.grid_points : (d == 3 ? 64 : 256);
    const double lam = const_or(cfg, "lam", 1.0);
    const double L = default_2pc_box(lam, n);
    const TwoPcMeasurement m =
        measure_2pc_scaling(lam, cfg.eps_list, d, 3, n, L, cfg.seed);
    RunResult rr;
    rr.csv_header = "eps,estimate,knapp,best_random";
    for (std::size_t i = 0; i < m.eps.size(); ++i)
        rr.csv_rows.push_back(
            fmt_row({m.eps[i], m.estimate[i], m.knapp_ratio[i], m.best_random_ratio[i]}));
    rr.summary["slope"] = m.fit.slope;
    rr.summary["slope_target"] = -0.5;
    rr.summary["intercept"] = m.fit.intercept;
    rr.summary["max_residual"] = m.fit.max_residual;
    rr.summary["p_c"] = pc_exponent(d);
    rr.summary["grid"] = n;
    rr.summary["box_half_length"] = L;
    rr.summary["lemma_regime"] = m.lemma_regime;
    return rr;
}

inline RunResult run_ij_norms(const ExperimentConfig& cfg) {
    const double q = cfg.q > 0.0 ? cfg.q : 3.0;
    const int d = cfg.d;
    RunResult rr;
    rr.csv_header = "n,q,lq_norm,scaled_lq,ball_ratio,local_norm,model";
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (double n : {10.0, 100.0, 1000.0}) {
        const Potential V = IonescuJerison{n, d};
        const double lq = lq_norm(V, q);
        const double scaled = lq * std::pow(n, 1.0 - 0.5 * (d + 1) / q);
        for (double ratio : {10.0, 100.0}) {
            const double R = ratio * n;
            const double loc = local_ball_norm(V, 0.5 * (d + 1), Point{0, 0, 0}, R);
            const double model = ij_local_norm_model(n, R, d);
            rr.csv_rows.push_back(fmt_row({n, q, lq, scaled, ratio, loc, model}));
            recs.push_back({{"n", n}, {"R_over_n", ratio}, {"lq_norm", lq},
                            {"scaled_lq", scaled}, {"local_norm", loc}, {"model", model},
                            {"local_over_model", loc / model}});
        }
    }
    rr.summary["records"] = recs;
    return rr;
}

inline RunResult run_lower_bound(const ExperimentConfig& cfg) {
    const double A = const_or(cfg, "A", 2.0);
    const double rho = const_or(cfg, "rho", 0.5);
    const double C = const_or(cfg, "C", 2.0);
    RunResult rr;
    rr.csv_header = "family,eps,value,model";
    for (double eps : cfg.eps_list) {
        const SquareWellSolution1D sol = solve_square_well_1d(eps, rho, C);
        const Potential Vw = SquareWell1D{sol.V0, sol.R};
        const double vw = lower_bound_functional(Vw, eps, A, 1);
        std::string row = "squarewell1d,";
        row += fmt_row({eps, vw, 0.0});
        rr.csv_rows.push_back(row);
    }
    {
        const double n = const_or(cfg, "ij_n", 10.0);
        const double eps = cfg.eps_list.empty() ? 0.05 : cfg.eps_list.back();
        const Potential Vij = IonescuJerison{n, 3};
        const double radius = A * std::abs(std::log(eps)) / eps;
        const double v = lower_bound_functional(Vij, eps, A, 3);
        const double model = ij_local_norm_model(n, radius, 3);
        std::string row = "ionescu-jerison,";
        row += fmt_row({eps, v, model});
        rr.csv_rows.push_back(row);
    }
    rr.summary["A"] = A;
    return rr;
}

inline RunResult run_ls_ratio(const ExperimentConfig& cfg) {
    const double q = cfg.q > 0.0 ? cfg.q : 3.5;
    const auto fam = radial_family(cfg);
    RunResult rr;
    rr.csv_header = "eps,q,ls_ratio";
    std::vector<double> vals;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const Potential V = RadialStep3D{fam[i].V0, fam[i].R};
        const double r = ls_ratio(V, fam[i].E, q, 3);
        vals.push_back(r);
        rr.csv_rows.push_back(fmt_row({cfg.eps_list[i], q, r}));
    }
    bool increasing = true;
    for (std::size_t i = 1; i < vals.size(); ++i)
        increasing = increasing && vals[i] >= vals[i - 1]; // eps_list descends
    rr.summary["increasing_as_eps_decreases"] = increasing;
    rr.summary["q"] = q;
    return rr;
}

inline RunResult dispatch(const ExperimentConfig& cfg) {
    const std::string& e = cfg.experiment;
    if (e == "squarewell1d") return run_squarewell1d(cfg);
    if (e == "dn1d") return run_dn1d(cfg);
    if (e == "thm1") return run_cert_family(cfg, CertKind::Theorem1, 2.0);
    if (e == "cor1") return run_cert_family(cfg, CertKind::Corollary1, 4.0);
    if (e == "frank") return run_cert_family(cfg, CertKind::Frank, 4.0);
    if (e == "cor2") return run_cor2(cfg);
    if (e == "radial3d") return run_radial3d(cfg);
    if (e == "bs-scaling") return run_bs_scaling(cfg);
    if (e == "quasimode") return run_quasimode(cfg);
    if (e == "quasimode-trunc") return run_quasimode_trunc(cfg);
    if (e == "stein-tomas") return run_stein_tomas(cfg);
    if (e == "ij-norms") return run_ij_norms(cfg);
    if (e == "lower-bound") return run_lower_bound(cfg);
    if (e == "ls-ratio") return run_ls_ratio(cfg);
    std::string msg = "unknown experiment '" + e + "'; valid names:";
    for (const auto& [name, _] : experiment_registry()) msg += " " + name;
    throw ConfigError(msg);
}

} // namespace detail

inline void validate_config(const ExperimentConfig& cfg) {
    bool known = false;
    for (const auto& [name, _] : experiment_registry()) known = known || name == cfg.experiment;
    if (!known) {
        std::string msg = "unknown experiment '" + cfg.experiment + "'; valid names:";
        for (const auto& [name, _] : experiment_registry()) msg += " " + name;
        throw ConfigError(msg);
    }
    if (cfg.eps_list.empty()) throw ConfigError("field eps_list: must not be empty");
    for (double e : cfg.eps_list)
        if (e <= 0.0 || e > 0.5) throw ConfigError("field eps_list: entries must lie in (0, 0.5]");
    for (std::size_t i = 1; i < cfg.eps_list.size(); ++i)
        if (cfg.eps_list[i] >= cfg.eps_list[i - 1])
            throw ConfigError("field eps_list: must be sorted in descending order");
    if (cfg.d < 1 || cfg.d > 3) throw ConfigError("field d: must be 1, 2 or 3");
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    try {
        if (j.contains("experiment")) cfg.experiment = j.at("experiment").get<std::string>();
        if (j.contains("d")) cfg.d = j.at("d").get<int>();
        if (j.contains("q")) cfg.q = j.at("q").get<double>();
        if (j.contains("eps_list")) cfg.eps_list = j.at("eps_list").get<std::vector<double>>();
        if (j.contains("constants"))
            for (const auto& [k, v] : j.at("constants").items())
                cfg.constants[k] = v.get<double>();
        if (j.contains("grid_points")) cfg.grid_points = j.at("grid_points").get<int>();
        if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& ex) {
        throw ConfigError(std::string("config field error: ") + ex.what());
    }
    return cfg;
}

/// Default sweep when the config gives none.
inline std::vector<double> default_eps_list(const std::string& experiment) {
    if (experiment == "quasimode" || experiment == "stein-tomas") return {0.4, 0.2, 0.1, 0.05};
    if (experiment == "quasimode-trunc") return {0.3, 0.2, 0.1};
    if (experiment == "bs-scaling" || experiment == "ij-norms") return {0.1};
    return {0.1, 0.05, 0.02};
}

/// Runs one experiment, writing <out>/<experiment>.csv and
/// <out>/<experiment>.summary.json. Returns the process exit code:
/// 0 on success, 2 when a fixed-constant certificate suite had violations.
inline int run(ExperimentConfig cfg) {
    if (cfg.eps_list.empty()) cfg.eps_list = default_eps_list(cfg.experiment);
    validate_config(cfg);
    detail::RunResult rr = detail::dispatch(cfg);

    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    const fs::path csv_path = fs::path(cfg.out_dir) / (cfg.experiment + ".csv");
    const fs::path sum_path = fs::path(cfg.out_dir) / (cfg.experiment + ".summary.json");

    std::ofstream csv(csv_path, std::ios::binary);
    csv << rr.csv_header << '\n';
    for (const std::string& row : rr.csv_rows) csv << row << '\n';
    csv.close();

    nlohmann::ordered_json sum;
    sum["experiment"] = cfg.experiment;
    nlohmann::ordered_json cj;
    cj["d"] = cfg.d;
    cj["q"] = cfg.q;
    cj["eps_list"] = cfg.eps_list;
    cj["constants"] = cfg.constants;
    cj["grid_points"] = cfg.grid_points;
    cj["seed"] = cfg.seed;
    sum["config"] = cj;
    sum["version"] = artifact_version;
    sum["rows"] = rr.csv_rows.size();
    sum["results"] = rr.summary;
    std::ofstream js(sum_path, std::ios::binary);
    js << sum.dump(2) << '\n';
    js.close();

    return rr.unsatisfied_fixed ? 2 : 0;
}

} // namespace eigenbound

#endif
