#pragma once

#include "dispersive/corpus.hpp"
#include "dispersive/equation.hpp"
#include "dispersive/field.hpp"
#include "dispersive/operators.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dispersive {

enum class Verdict { pass, fail, report_only };
std::string verdict_name(Verdict v);

/// Outcome of one identity or inequality experiment. Inequality checks assert
/// finiteness, stability under one dyadic grid refinement and exact
/// degenerate cases; they never assert a value for the unknown constant.
struct CheckReport {
    std::string check_id;
    std::vector<std::pair<std::string, double>> params;
    std::size_t corpus_size = 0;
    /// Largest lhs / rhs ratio seen (at the coarse resolution).
    double worst_ratio = 0.0;
    /// Constant the check fits or calibrates (0 if none).
    double fitted_constant = 0.0;
    /// Largest residual of the check's exact identities and degenerate cases.
    double residual_max = 0.0;
    /// Quantity tracked across resolutions or domains, coarse to fine.
    std::vector<double> refinement_trend;
    Verdict verdict = Verdict::report_only;
    /// Warnings and gate adjustments made during the run.
    std::vector<std::string> notes;

    bool passed() const { return verdict != Verdict::fail; }
    double param(const std::string& name) const;
};

/// Relative change |b / a - 1|.
double relative_change(double a, double b);

// -- Propagator and conservation checks ------------------------------------

/// NLS group on exp(-x^2) against (1 + 4it)^{-1/2} exp(-x^2 / (1 + 4it)).
CheckReport check_free_propagator(double t = 1.0, std::size_t n = 1024, double L = 20.0);

/// Unitarity and group law of the three linear groups on `count` random fields.
CheckReport check_unitarity(std::size_t count = 50, double t = 0.7, double s = 0.45,
                            std::uint64_t seed = default_corpus_seed);

/// || U(t)(x f) - Gamma(t) U(t) f ||_2 / ||f||_{H^2} for the three models.
CheckReport check_commutation(double t = 0.3);

/// Drift of the conserved quantities over `steps` steps of size dt.
CheckReport check_conservation(std::size_t steps = 1000, double dt = 1e-3);

/// Order of the weighted-energy identity residual in the snapshot spacing.
CheckReport check_kato(double coarse_dt = 0.02, double T = 1.0);

// -- Operator identities --------------------------------------------------------

/// Gamma^b(t) e^{it Delta} f = e^{it Delta}(|x|^b f) on the Fresnel-matched
/// lattice of size n for the Gaussian exp(-x^2).
CheckReport check_gamma_identity(double t, double b, std::size_t n = 1024);

/// ||stein f||_2 / ||D^b f||_2 over the corpus after calibration on a Gaussian.
CheckReport check_stein_riesz(double b = 0.5, std::size_t n = 1024, double L = 16.0,
                              const CorpusOptions& corpus = {});

// -- Inequality lab ---------------------------------------------------------

/// stein(e^{itx^2})(x) <= c (t^{b/2} + t^b |x|^b) on |x| <= L/2.
CheckReport check_chirp_stein(double t, double b, std::size_t n = 1024, double L = 12.0);

/// || |x|^b e^{it Delta} f || against t^{b/2}||f|| + t^b ||D^b f|| + || |x|^b f ||.
CheckReport check_weighted_free(double t, double b, std::size_t n = 512, double L = 20.0,
                                const CorpusOptions& corpus = {});

/// L2 product estimate for the Stein derivative and its pointwise form.
CheckReport check_leibniz(double b, std::size_t pairs = 10, std::size_t n = 512, double L = 16.0,
                          const CorpusOptions& corpus = {});

/// ||D^alpha f||_p / (||f||_r^{1-theta} ||D^beta f||_q^theta) with theta from
/// 1/p - alpha = (1 - theta)/r + theta (1/q - beta).
CheckReport check_gn(double alpha, double beta, double p, double q, double r, std::size_t n = 512, double L = 32.0,
                     const CorpusOptions& corpus = {});

/// ||J^{theta a}(<x>^{(1-theta) b} f)|| / (||<x>^b f||^{1-theta} ||J^a f||^theta).
CheckReport check_interpolation(double a, double b, double theta, std::size_t n = 512, double L = 16.0,
                                const CorpusOptions& corpus = {});

/// ||D^alpha(fg) - f D^alpha g||_p / (sup_x sum_N |Q_N D^alpha f| ||g||_2).
CheckReport check_commutator_leibniz(double alpha, double p, std::size_t pairs = 10, std::size_t n = 512,
                                     double L = 16.0, const CorpusOptions& corpus = {});

/// ||d^l [H; a] d^m f||_p / (||d^{l+m} a||_inf ||f||_p), a a Gaussian.
CheckReport check_commutator_hilbert(int l, int m, double p, std::size_t n = 512, double L = 16.0,
                                     const CorpusOptions& corpus = {});

/// A_p constant of |x|^alpha and the weighted Hilbert ratio over `levels`
/// dyadic resolutions starting at n.
CheckReport check_ap_hilbert(double alpha, double p, std::size_t n = 256, std::size_t levels = 4, double L = 16.0,
                             const CorpusOptions& corpus = {});

/// (int_0^T ||e^{it Delta} u0||_p^q dt)^{1/q} / ||u0||_2 for u0 = exp(-x^2) and
/// its exact rescaling u0(2x) over T/4.
CheckReport check_strichartz(double q, double p, double T = 4.0, std::size_t n = 2048, double L = 128.0);

/// ||D^{s_c} u_lambda||_2 for u_lambda(x) = lambda^{2/(a-1)} u0(lambda x).
CheckReport check_scaling(double a, std::size_t n = 1024, double L = 20.0);

// -- Persistence -------------------------------------------------------------

struct PersistenceSetup {
    EquationSpec spec;
    /// Sobolev index tracked and the weight order m.
    double s = 1.0;
    double m = 1.0;
    double T = 1.0;
    StepperConfig stepper;
    std::size_t snapshots = 20;
    /// Weighted norm used for the boundedness verdict: |x|^{2m} measure
    /// (false) or |x|^m measure (true).
    bool measure_convention = false;
};

struct PersistenceResult {
    CheckReport report;
    Trajectory trajectory;
};

/// Evolves u0 and tracks sobolev(u, s), the weighted norms, the smoothing
/// proxy ||t^m d^{[m]} D^{m-[m]} u||_{L2(|x| <= L/4)} and the mean.
/// Verdict on sup_t weighted / initial <= 10 when m <= s, report-only otherwise.
PersistenceResult persistence_experiment(const PersistenceSetup& setup, const Field& u0);

/// Benjamin-Ono weighted growth of r = 2 and r = 3 on two domain sizes.
/// Report-only.
CheckReport check_bo_domain_sensitivity(double T = 2.0, double L_small = 20.0, double L_large = 40.0);

// -- Registry -----------------------------------------------------------------

using ParamMap = std::map<std::string, double>;

struct CheckRequest {
    std::string id;
    ParamMap params;
    CorpusOptions corpus;
};

struct CheckOutput {
    std::vector<CheckReport> reports;
    std::vector<Trajectory> trajectories;
};

/// Names accepted by run_check.
std::vector<std::string> check_names();

/// Parameter names a check accepts; throws for unknown ids.
std::vector<std::string> check_parameter_names(const std::string& id);

/// Dispatches by id with defaults for missing parameters. Unknown ids and
/// parameter names are rejected.
CheckOutput run_check(const CheckRequest& request);

} // namespace dispersive
