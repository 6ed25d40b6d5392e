#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "coxnet/errors.hpp"
#include "coxnet/root_system.hpp"

namespace coxnet {

/// Seeded, reproducible source of standard normal variates.
///
/// The integer stream is std::mt19937_64 (a fully specified algorithm, so
/// the stream is identical across platforms); uniforms take the top 53 bits;
/// normals use the Marsaglia polar transform. Histograms therefore reproduce
/// exactly for a fixed seed and libm.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : gen_(seed) {}

    double uniform01() {  // in [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Seed for one block of trials. Blocks have a fixed size, so results depend
/// only on (seed, trials), never on the worker count.
inline std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
    return splitmix64(splitmix64(seed) ^ splitmix64(block + 1));
}

inline constexpr long long mc_block_size = 1 << 16;

inline int worker_count() {
    if (const char* env = std::getenv("COXNET_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Run `trials` simulations split into fixed-size blocks. per_trial is
/// called with a per-block sampler and must return the covered cell index.
/// Reduction is a plain integer sum, so the result is worker-order
/// independent.
template <class PerTrial>
std::vector<long long> mc_histogram(long long trials, std::uint64_t seed, std::size_t cells,
                                    PerTrial per_trial) {
    if (trials < 1) throw Error("trial count must be at least 1");
    const long long blocks = (trials + mc_block_size - 1) / mc_block_size;
    const int workers = static_cast<int>(std::min<long long>(worker_count(), blocks));

    std::vector<std::vector<long long>> partial(workers, std::vector<long long>(cells, 0));
    std::atomic<long long> next_block{0};
    auto run = [&](int worker) {
        std::vector<long long>& counts = partial[worker];
        for (;;) {
            const long long b = next_block.fetch_add(1);
            if (b >= blocks) break;
            NormalSampler rng(block_seed(seed, static_cast<std::uint64_t>(b)));
            const long long lo = b * mc_block_size;
            const long long hi = std::min(trials, lo + mc_block_size);
            for (long long t = lo; t < hi; ++t) ++counts[per_trial(rng)];
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (std::thread& th : pool) th.join();
    }

    std::vector<long long> total(cells, 0);
    for (const auto& p : partial)
        for (std::size_t i = 0; i < cells; ++i) total[i] += p[i];
    return total;
}

}  // namespace detail

/// Empirical coverage histogram for the group net: per trial draw Z with
/// independent standard normal coordinates (spherically symmetric, so all
/// chambers carry equal probability), set Y = theta v + Z, and record which
/// net interval covers theta. The interval index is the number of live-root
/// boundaries a^T Y / a^T v below theta, exactly covering_interval applied
/// to the freshly built net. Deterministic given the seed.
inline std::vector<long long> monte_carlo_coverage(const RootSystem& rs, long long trials,
                                                   std::uint64_t seed, double theta) {
    const LiveRoots lr = live_roots(rs);
    std::vector<std::vector<double>> roots;
    std::vector<double> dots;
    for (int r : lr.root_indices) {
        roots.push_back(rs.positive_roots_d[r]);
        dots.push_back(to_double(rs.root_dot_ray[r]));
    }
    const std::size_t dim = static_cast<std::size_t>(rs.ambient_dim);
    const std::vector<double>& v = rs.ray_direction_d;

    return detail::mc_histogram(
        trials, seed, roots.size() + 1, [&, theta](NormalSampler& rng) -> std::size_t {
            thread_local std::vector<double> y;
            y.resize(dim);
            for (std::size_t c = 0; c < dim; ++c) y[c] = theta * v[c] + rng.normal();
            std::size_t idx = 0;
            for (std::size_t r = 0; r < roots.size(); ++r) {
                double num = 0;
                for (std::size_t c = 0; c < dim; ++c) num += roots[r][c] * y[c];
                if (num / dots[r] < theta) ++idx;
            }
            return idx;
        });
}

inline std::vector<long long> monte_carlo_coverage(const GroupType& g, long long trials,
                                                   std::uint64_t seed, double theta) {
    return monte_carlo_coverage(build_root_system(g), trials, seed, theta);
}

/// Coverage of the known center by the 2^n subsample-mean intervals under
/// iid symmetric noise: each interval should cover with probability 2^{-n}.
inline std::vector<long long> hartigan_mc(int n, long long trials, std::uint64_t seed) {
    if (n < 1 || n > 12) throw Error("hartigan_mc supports 1 <= n <= 12");
    const std::size_t m = std::size_t(1) << n;
    return detail::mc_histogram(trials, seed, m, [n, m](NormalSampler& rng) -> std::size_t {
        thread_local std::vector<double> z, sums;
        z.resize(static_cast<std::size_t>(n));
        sums.assign(m, 0.0);
        for (double& x : z) x = rng.normal();
        std::size_t idx = 0;
        for (std::size_t mask = 1; mask < m; ++mask) {
            sums[mask] = sums[mask & (mask - 1)] + z[static_cast<std::size_t>(std::countr_zero(mask))];
            if (sums[mask] < 0.0) ++idx;  // subset mean below theta = 0
        }
        return idx;
    });
}

/// Coverage histogram for the congruent-cone net of order statistics and
/// adjacent-pair means, expected proportional to (1+q)(1+q^2)^{n-1}.
inline std::vector<long long> nongroup_mc(int n, long long trials, std::uint64_t seed,
                                          double theta) {
    if (n < 1) throw Error("nongroup_mc needs n >= 1");
    return detail::mc_histogram(
        trials, seed, static_cast<std::size_t>(2 * n), [n, theta](NormalSampler& rng) -> std::size_t {
            thread_local std::vector<double> y;
            y.resize(static_cast<std::size_t>(n));
            for (double& x : y) x = theta + rng.normal();
            std::sort(y.begin(), y.end());
            std::size_t idx = 0;
            for (int i = 0; i < n; ++i) {
                if (y[i] < theta) ++idx;
                if (i + 1 < n && 0.5 * (y[i] + y[i + 1]) < theta) ++idx;
            }
            return idx;
        });
}

}  // namespace coxnet
