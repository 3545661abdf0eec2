// Copyright 2026 The cliffmq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cliffmq/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cliffmq {

namespace {

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

struct Job {
    std::size_t n;
    std::size_t instance;
    PowerMethod method;
};

BenchRow run_job(const BenchConfig &cfg, const Job &job) {
    BenchRow row;
    row.n = job.n;
    row.instance = job.instance;
    row.method = job.method;
    row.seed = instance_seed(cfg.seed, job.n, job.instance);

    // Both methods see the same M for a given instance.
    std::mt19937_64 rng(row.seed);
    F2Matrix m = random_invertible(job.n, rng);
    if (job.method == PowerMethod::Baseline) {
        PowerReport r = baseline_gauss_power(m, cfg.include_diagonal);
        row.omega_nuc = r.total_nuc;
        row.mq_count = r.per_gate_nuc.size();
        return row;
    }
    PowerOptions opt;
    opt.walker_budget = cfg.walker_budget * job.n;
    opt.permutation_candidates = cfg.permutation_candidates;
    opt.screen_budget = cfg.screen_budget * job.n;
    opt.include_diagonal = cfg.include_diagonal;
    LowPowerResult r = compile_cx_low_power(m, opt, rng);
    row.omega_nuc = r.report.total_nuc;
    row.mq_count = r.compiled.mq_count;
    row.permutation_applied = r.compiled.permutation.has_value();
    return row;
}

}  // namespace

BenchConfig default_bench_config() {
    BenchConfig cfg;
    for (std::size_t n = 3; n <= 63; n += 4) {
        cfg.n_values.push_back(n);
    }
    cfg.instances_per_n = 20;
    return cfg;
}

void validate(const BenchConfig &cfg) {
    if (cfg.n_values.size() < 2) {
        throw std::invalid_argument("bench needs at least two qubit counts");
    }
    if (std::find(cfg.n_values.begin(), cfg.n_values.end(), std::size_t{0}) != cfg.n_values.end()) {
        throw std::invalid_argument("qubit counts must be positive");
    }
    if (cfg.instances_per_n == 0) {
        throw std::invalid_argument("bench needs at least one instance per n");
    }
    if (cfg.methods.empty()) {
        throw std::invalid_argument("bench needs at least one method");
    }
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t n, std::size_t instance) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(instance)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (std::uint64_t{out[0]} << 32) | out[1];
}

std::vector<BenchRow> run_bench(const BenchConfig &cfg) {
    validate(cfg);
    std::vector<std::size_t> ns = cfg.n_values;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::vector<PowerMethod> methods = cfg.methods;
    std::sort(methods.begin(), methods.end());
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

    std::vector<Job> jobs;
    for (std::size_t n : ns) {
        for (std::size_t i = 0; i < cfg.instances_per_n; i++) {
            for (PowerMethod m : methods) {
                jobs.push_back({n, i, m});
            }
        }
    }

    std::vector<BenchRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        while (true) {
            std::size_t k = next.fetch_add(1);
            if (k >= jobs.size()) {
                return;
            }
            try {
                rows[k] = run_job(cfg, jobs[k]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, jobs.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; t++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow> &rows) {
    std::ostringstream out;
    out << "n,method,omega_nuc,seed,mq_count,permutation_applied\n";
    for (const auto &r : rows) {
        out << r.n << ',' << method_name(r.method) << ',' << format_fixed(r.omega_nuc, 9) << ',' << r.seed << ','
            << r.mq_count << ',' << (r.permutation_applied ? "true" : "false") << '\n';
    }
    return out.str();
}

std::map<PowerMethod, MethodSummary> summarize(const std::vector<BenchRow> &rows) {
    std::map<PowerMethod, std::map<std::size_t, std::pair<double, std::size_t>>> acc;
    for (const auto &r : rows) {
        auto &slot = acc[r.method][r.n];
        slot.first += r.omega_nuc;
        slot.second++;
    }
    std::map<PowerMethod, MethodSummary> out;
    for (const auto &[method, per_n] : acc) {
        MethodSummary s;
        for (const auto &[n, sum_count] : per_n) {
            s.means.emplace_back(static_cast<double>(n), sum_count.first / static_cast<double>(sum_count.second));
        }
        s.fit = fit_power_law(s.means);
        out[method] = std::move(s);
    }
    return out;
}

std::string summary_text(const std::map<PowerMethod, MethodSummary> &summary) {
    std::ostringstream out;
    for (const auto &[method, s] : summary) {
        out << method_name(method) << ": beta=" << format_fixed(s.fit.beta, 4) << " +/- "
            << format_fixed(s.fit.stderr_beta, 4) << " prefactor=" << format_fixed(s.fit.prefactor, 4) << '\n';
    }
    return out.str();
}

}  // namespace cliffmq
