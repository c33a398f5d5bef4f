#include "tqw/pipeline.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "tqw/parallel.hpp"

namespace tqw {

namespace {

// Fixed probe points keep reports byte-reproducible across runs.
constexpr cplx kCommProbes[4][2] = {
    {{0.23, 0.11}, {-0.57, 0.92}},
    {{1.31, 0.0}, {0.42, 0.0}},
    {{-0.85, 0.37}, {1.12, -0.64}},
    {{0.05, 1.4}, {2.3, 0.21}},
};
constexpr cplx kParityProbes[3] = {{0.77, 0.0}, {-1.23, 0.31}, {0.4, -1.1}};
constexpr cplx kDualityProbes[2] = {{0.61, 0.0}, {-0.34, 0.78}};

double commutativity_defect(const ModelParams& p) {
    double worst = 0.0;
    for (const auto& pair : kCommProbes) {
        const DenseMatrix tu = transfer_matrix(pair[0], p);
        const DenseMatrix tv = transfer_matrix(pair[1], p);
        worst = std::max(worst, commutator_max_abs(tu, tv) /
                                    std::max(tu.max_abs() * tv.max_abs(), 1e-300));
    }
    return worst;
}

double parity_defect_global(const ModelParams& p) {
    double worst = 0.0;
    for (const cplx u : kParityProbes) {
        const DenseMatrix tp = transfer_matrix(u, p);
        const DenseMatrix tm = transfer_matrix(-u, p);
        worst = std::max(worst, (tp - tm).max_abs() / std::max(tp.max_abs(), 1e-300));
    }
    return worst;
}

double duality_defect(const ModelParams& p) {
    const DenseMatrix c = charge_conjugation(p);
    ModelParams neg = p;
    neg.alpha = -p.alpha;
    neg.beta = -p.beta;
    neg.xi = -p.xi;
    double worst = 0.0;
    for (const cplx u : kDualityProbes) {
        const DenseMatrix lhs = c * transfer_matrix(u, p) * c;
        const DenseMatrix rhs = transfer_matrix(u, neg);
        worst = std::max(worst, (lhs - rhs).max_abs() / std::max(rhs.max_abs(), 1e-300));
    }
    return worst;
}

double hamiltonian_link_defect(const ModelParams& p) {
    const double h = 1e-5;
    const cplx u0(0.0, 0.5);
    const DenseMatrix tp = transfer_matrix(u0 + h, p);
    const DenseMatrix tm = transfer_matrix(u0 - h, p);
    DenseMatrix dt = (1.0 / (2.0 * h)) * (tp - tm);
    const DenseMatrix ham = hamiltonian(p);

    // 2-unknown least squares: dt ~ c1 H + c2 I over all entries.
    cplx shh = 0.0, shi = 0.0, sii = 0.0, shd = 0.0, sid = 0.0;
    const int dim = dt.dim;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const cplx hv = ham.at(i, j);
            const cplx iv = (i == j) ? cplx(1.0) : cplx(0.0);
            const cplx dv = dt.at(i, j);
            shh += std::conj(hv) * hv;
            shi += std::conj(hv) * iv;
            sii += std::conj(iv) * iv;
            shd += std::conj(hv) * dv;
            sid += std::conj(iv) * dv;
        }
    const cplx det = shh * sii - shi * std::conj(shi);
    const cplx c1 = (shd * sii - shi * sid) / det;
    const cplx c2 = (shh * sid - std::conj(shi) * shd) / det;

    double defect = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const cplx iv = (i == j) ? cplx(1.0) : cplx(0.0);
            defect = std::max(defect, std::abs(dt.at(i, j) - c1 * ham.at(i, j) - c2 * iv));
        }
    return defect / std::max(dt.max_abs(), 1e-300);
}

std::vector<std::array<double, 2>> poly_to_pairs(const Polynomial& p) {
    std::vector<std::array<double, 2>> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back({c.real(), c.imag()});
    return out;
}

std::vector<std::array<double, 2>> roots_to_pairs(const std::vector<cplx>& r) {
    std::vector<std::array<double, 2>> out;
    out.reserve(r.size());
    for (const auto& c : r) out.push_back({c.real(), c.imag()});
    return out;
}

}  // namespace

void RunConfig::validate() const {
    params.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (sweep_xi) {
        if (sweep_xi->empty()) throw std::invalid_argument("sweep list must not be empty");
        for (const double v : *sweep_xi)
            if (!std::isfinite(v)) throw std::invalid_argument("sweep values must be finite");
    }
}

VerificationReport run_pipeline(const RunConfig& config) {
    config.validate();
    const auto t_start = std::chrono::steady_clock::now();

    VerificationReport rep;
    rep.config = config;
    const ModelParams& p = config.params;

    rep.global.commutativity_defect = commutativity_defect(p);
    rep.global.parity_defect = parity_defect_global(p);
    rep.global.hamiltonian_link_defect = hamiltonian_link_defect(p);
    rep.global.duality_defect = duality_defect(p);
    rep.global.pass = rep.global.commutativity_defect < 1e-10 &&
                      rep.global.parity_defect < 1e-11 &&
                      rep.global.hamiltonian_link_defect < 1e-6 &&
                      rep.global.duality_defect < 1e-11;

    const SpectralData sd = spectral_data(p, config.tol);
    const BoundaryFunctions bf = boundary_functions(p);

    rep.eigenvalues.resize(sd.eigenvectors.size());
    parallel_for(sd.eigenvectors.size(), [&](size_t i) {
        EigenvalueRecord& rec = rep.eigenvalues[i];
        rec.h_eigenvalue = sd.h_eigenvalues[i];
        rec.recon_residual = sd.recon_residuals[i];
        try {
            rec.solution = solve_tq_pair(sd.t_polys[i], bf, p.n_sites);
            rec.wronskian = verify_identity(rec.solution, bf, p.n_sites, config.tol);
            rec.pass = rec.wronskian.pass && rec.solution.q_residual < config.tol &&
                       rec.solution.p_residual < config.tol && rec.recon_residual < config.tol;
        } catch (const std::exception& e) {
            rec.error = e.what();
            rec.pass = false;
        }
    });

    rep.summary_pass = rep.global.pass;
    for (const auto& rec : rep.eigenvalues) rep.summary_pass = rep.summary_pass && rec.pass;
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return rep;
}

std::vector<VerificationReport> run_sweep(const RunConfig& config) {
    config.validate();
    if (!config.sweep_xi) throw std::invalid_argument("run_sweep: no sweep values configured");
    std::vector<VerificationReport> reports;
    reports.reserve(config.sweep_xi->size());
    for (const double xi : *config.sweep_xi) {
        RunConfig c = config;
        c.sweep_xi.reset();
        c.params.xi = xi;
        reports.push_back(run_pipeline(c));
    }
    return reports;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    using json = nlohmann::ordered_json;
    json j;
    const ModelParams& p = report.config.params;
    j["config"] = {{"n_sites", p.n_sites}, {"alpha", p.alpha},        {"beta", p.beta},
                   {"xi", p.xi},           {"tol", report.config.tol}};
    j["global"] = {{"commutativity_defect", report.global.commutativity_defect},
                   {"parity_defect", report.global.parity_defect},
                   {"hamiltonian_link_defect", report.global.hamiltonian_link_defect},
                   {"duality_defect", report.global.duality_defect},
                   {"pass", report.global.pass}};
    j["eigenvalues"] = json::array();
    for (const auto& rec : report.eigenvalues) {
        json e;
        e["h_eigenvalue"] = rec.h_eigenvalue;
        e["recon_residual"] = rec.recon_residual;
        if (!rec.error.empty()) {
            e["error"] = rec.error;
            e["pass"] = false;
            j["eigenvalues"].push_back(std::move(e));
            continue;
        }
        e["t_poly"] = poly_to_pairs(rec.solution.t_poly);
        e["q_poly"] = poly_to_pairs(rec.solution.q_poly);
        e["p_poly"] = poly_to_pairs(rec.solution.p_poly);
        e["mu_poly"] = poly_to_pairs(rec.wronskian.mu_poly);
        e["bethe_roots"] = roots_to_pairs(rec.solution.bethe_roots);
        e["dual_roots"] = roots_to_pairs(rec.solution.dual_roots);
        e["q_residual"] = rec.solution.q_residual;
        e["p_residual"] = rec.solution.p_residual;
        e["q_fallback"] = rec.solution.q_info.fallback;
        e["p_fallback"] = rec.solution.p_info.fallback;
        e["divisibility_defect"] = rec.wronskian.divisibility_defect;
        e["mu_match_defect"] = rec.wronskian.mu_match_defect;
        e["mu_relation_defect"] = rec.wronskian.mu_relation_defect;
        e["w_parity_defect"] = rec.wronskian.w_parity_defect;
        e["mu_parity_defect"] = rec.wronskian.mu_parity_defect;
        e["mu_degree"] = rec.wronskian.mu_degree;
        e["pass"] = rec.pass;
        j["eigenvalues"].push_back(std::move(e));
    }
    j["summary_pass"] = report.summary_pass;
    j["timings"] = {{"wall_seconds", report.wall_seconds}};
    return j;
}

std::string report_to_csv(const VerificationReport& report) {
    std::ostringstream os;
    os.precision(17);
    os << "index,h_eigenvalue,recon_residual,q_residual,p_residual,divisibility_defect,"
          "mu_match_defect,mu_relation_defect,mu_degree,pass,error\n";
    for (size_t i = 0; i < report.eigenvalues.size(); ++i) {
        const auto& rec = report.eigenvalues[i];
        os << i << ',' << rec.h_eigenvalue << ',' << rec.recon_residual << ',';
        if (rec.error.empty()) {
            os << rec.solution.q_residual << ',' << rec.solution.p_residual << ','
               << rec.wronskian.divisibility_defect << ',' << rec.wronskian.mu_match_defect << ','
               << rec.wronskian.mu_relation_defect << ',' << rec.wronskian.mu_degree << ','
               << (rec.pass ? 1 : 0) << ',';
        } else {
            os << ",,,,,," << 0 << ',' << rec.error;
        }
        os << '\n';
    }
    return os.str();
}

std::string sweep_summary_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    os.precision(17);
    os << "xi,max_recon_residual,max_q_residual,max_p_residual,max_divisibility_defect,"
          "max_mu_match_defect,max_mu_degree,pass\n";
    for (const auto& rep : reports) {
        double rr = 0.0, rq = 0.0, rp = 0.0, dv = 0.0, mm = 0.0;
        int md = 0;
        for (const auto& rec : rep.eigenvalues) {
            rr = std::max(rr, rec.recon_residual);
            if (!rec.error.empty()) continue;
            rq = std::max(rq, rec.solution.q_residual);
            rp = std::max(rp, rec.solution.p_residual);
            dv = std::max(dv, rec.wronskian.divisibility_defect);
            mm = std::max(mm, rec.wronskian.mu_match_defect);
            md = std::max(md, rec.wronskian.mu_degree);
        }
        os << rep.config.params.xi << ',' << rr << ',' << rq << ',' << rp << ',' << dv << ','
           << mm << ',' << md << ',' << (rep.summary_pass ? 1 : 0) << '\n';
    }
    return os.str();
}

}  // namespace tqw
