#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ginibre {

struct TrialConfig {
    long n = 2;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct EmpiricalCounts {
    std::map<long, std::uint64_t> counts;  // k -> occurrences
    std::uint64_t total = 0;
    std::uint64_t solver_failures = 0;     // excluded trials
};

// Standard normal deviates by Box-Muller over a 64-bit Mersenne Twister;
// hand-rolled so the stream is identical across platforms.
class NormalSampler {
  public:
    explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}
    double operator()();

  private:
    std::mt19937_64 rng_;
    double cache_ = 0.0;
    bool has_cache_ = false;
};

// Derives decorrelated per-worker seeds from the base seed (splitmix64).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t worker);

// n x n matrix of i.i.d. standard normals.
Eigen::MatrixXd sample_matrix(long n, NormalSampler& rng);

// Number of real eigenvalues via the real Schur form: 1x1 diagonal blocks
// are real; 2x2 blocks are classified by the discriminant of their
// characteristic polynomial (>= 0 splits into two real eigenvalues), which
// keeps k = n (mod 2) exact.
long count_real_eigenvalues(const Eigen::MatrixXd& m);

// Runs `trials` samples, deterministically partitioned across workers.
EmpiricalCounts estimate(const TrialConfig& config);

// Upper regularized incomplete gamma Q(a, x); chi-square p-value helper.
double gamma_q(double a, double x);

struct MonteCarloReport {
    TrialConfig config;
    EmpiricalCounts counts;
    std::vector<long> ks;              // admissible k, descending
    std::vector<double> frequencies;   // empirical
    std::vector<double> exact;         // exact p_{n,k}
    std::vector<double> z_scores;      // binomial z per k
    double chi2 = 0.0;
    double chi2_pvalue = 1.0;
    long chi2_dof = 0;
};

// Builds the comparison report against the exact probability table.
MonteCarloReport make_report(const TrialConfig& config,
                             const EmpiricalCounts& counts);

std::string report_to_json(const MonteCarloReport& r);
std::string report_to_csv(const MonteCarloReport& r);

}  // namespace ginibre
