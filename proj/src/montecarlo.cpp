#include "ginibre/montecarlo.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "ginibre/probabilities.hpp"

namespace ginibre {

double NormalSampler::operator()() {
    if (has_cache_) {
        has_cache_ = false;
        return cache_;
    }
    // Box-Muller; u1 in (0, 1], u2 in [0, 1).
    const double u1 =
        (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cache_ = r * std::sin(theta);
    has_cache_ = true;
    return r * std::cos(theta);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t worker) {
    std::uint64_t x = seed + (worker + 1) * 0x9e3779b97f4a7c15ULL;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

Eigen::MatrixXd sample_matrix(long n, NormalSampler& rng) {
    Eigen::MatrixXd m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m(i, j) = rng();
    return m;
}

long count_real_eigenvalues(const Eigen::MatrixXd& m) {
    const long n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("count_real_eigenvalues: not square");
    if (n == 1) return 1;
    Eigen::RealSchur<Eigen::MatrixXd> schur(m, /*computeU=*/false);
    if (schur.info() != Eigen::Success)
        throw std::runtime_error("real Schur iteration failed to converge");
    const Eigen::MatrixXd& t = schur.matrixT();
    long k = 0;
    long i = 0;
    while (i < n) {
        if (i + 1 < n && t(i + 1, i) != 0.0) {
            // 2x2 block: discriminant of its characteristic polynomial.
            const double tr = t(i, i) - t(i + 1, i + 1);
            const double disc = tr * tr + 4.0 * t(i, i + 1) * t(i + 1, i);
            if (disc >= 0.0) k += 2;  // ties count as two real eigenvalues
            i += 2;
        } else {
            k += 1;
            i += 1;
        }
    }
    return k;
}

namespace {

void run_worker(long n, std::uint64_t trials, std::uint64_t seed,
                EmpiricalCounts& out) {
    NormalSampler rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Eigen::MatrixXd m = sample_matrix(n, rng);
        try {
            long k = count_real_eigenvalues(m);
            ++out.counts[k];
        } catch (const std::runtime_error&) {
            ++out.solver_failures;
        }
        ++out.total;
    }
}

}  // namespace

EmpiricalCounts estimate(const TrialConfig& config) {
    if (config.n < 1) throw std::invalid_argument("estimate: n must be positive");
    if (config.trials < 1) throw std::invalid_argument("estimate: trials must be >= 1");
    const int workers = std::max(1, config.workers);

    std::vector<EmpiricalCounts> partial(static_cast<size_t>(workers));
    std::vector<std::thread> threads;
    const std::uint64_t base = config.trials / static_cast<std::uint64_t>(workers);
    const std::uint64_t rem = config.trials % static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t t =
            base + (static_cast<std::uint64_t>(w) < rem ? 1 : 0);
        threads.emplace_back(run_worker, config.n, t,
                             substream_seed(config.seed, static_cast<std::uint64_t>(w)),
                             std::ref(partial[static_cast<size_t>(w)]));
    }
    for (auto& th : threads) th.join();

    EmpiricalCounts merged;
    for (const auto& p : partial) {
        merged.total += p.total;
        merged.solver_failures += p.solver_failures;
        for (const auto& [k, c] : p.counts) merged.counts[k] += c;
    }
    return merged;
}

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad arguments");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) {
        // P(a,x) by series, Q = 1 - P.
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-16) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    // Continued fraction (modified Lentz).
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::abs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

MonteCarloReport make_report(const TrialConfig& config,
                             const EmpiricalCounts& counts) {
    MonteCarloReport r;
    r.config = config;
    r.counts = counts;

    ProbabilityTable table = probability_table(config.n);
    const double total = static_cast<double>(counts.total - counts.solver_failures);
    for (const auto& row : table.rows) {
        r.ks.push_back(row.k);
        r.exact.push_back(row.exact.to_double());
        auto it = counts.counts.find(row.k);
        const double obs = it == counts.counts.end()
                               ? 0.0
                               : static_cast<double>(it->second);
        r.frequencies.push_back(obs / total);
        const double p = r.exact.back();
        const double sigma = std::sqrt(p * (1.0 - p) * total);
        r.z_scores.push_back(sigma > 0.0 ? (obs - p * total) / sigma : 0.0);
    }

    // Chi-square with low-expectation categories pooled (expected < 5), so
    // the asymptotic null distribution is meaningful.
    double chi2 = 0.0;
    long cells = 0;
    double pooled_obs = 0.0, pooled_exp = 0.0;
    for (size_t i = 0; i < r.ks.size(); ++i) {
        const double expd = r.exact[i] * total;
        const double obs = r.frequencies[i] * total;
        if (expd < 5.0) {
            pooled_obs += obs;
            pooled_exp += expd;
        } else {
            chi2 += (obs - expd) * (obs - expd) / expd;
            ++cells;
        }
    }
    if (pooled_exp > 0.0) {
        chi2 += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
        ++cells;
    }
    r.chi2 = chi2;
    r.chi2_dof = std::max<long>(1, cells - 1);
    r.chi2_pvalue = gamma_q(0.5 * static_cast<double>(r.chi2_dof), 0.5 * chi2);
    return r;
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string report_to_json(const MonteCarloReport& r) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [k, c] : r.counts.counts) counts[std::to_string(k)] = c;
    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < r.ks.size(); ++i) {
        rows.push_back({{"k", r.ks[i]},
                        {"frequency", fmt(r.frequencies[i])},
                        {"exact", fmt(r.exact[i])},
                        {"z_score", fmt(r.z_scores[i])}});
    }
    nlohmann::json j{{"n", r.config.n},
                     {"trials", r.config.trials},
                     {"seed", r.config.seed},
                     {"workers", r.config.workers},
                     {"solver_failures", r.counts.solver_failures},
                     {"counts", counts},
                     {"rows", rows},
                     {"chi2", fmt(r.chi2)},
                     {"chi2_dof", r.chi2_dof},
                     {"chi2_pvalue", fmt(r.chi2_pvalue)}};
    return j.dump(2);
}

std::string report_to_csv(const MonteCarloReport& r) {
    std::string out = "n,k,count,frequency,exact,z_score\n";
    for (size_t i = 0; i < r.ks.size(); ++i) {
        auto it = r.counts.counts.find(r.ks[i]);
        const std::uint64_t c = it == r.counts.counts.end() ? 0 : it->second;
        out += std::to_string(r.config.n) + "," + std::to_string(r.ks[i]) + "," +
               std::to_string(c) + "," + fmt(r.frequencies[i]) + "," +
               fmt(r.exact[i]) + "," + fmt(r.z_scores[i]) + "\n";
    }
    return out;
}

}  // namespace ginibre
