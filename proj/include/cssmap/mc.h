// Copyright 2026 The cssmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CSSMAP_MC_H
#define CSSMAP_MC_H

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "cssmap/bit_vector.h"
#include "cssmap/channels.h"
#include "cssmap/css_code.h"
#include "cssmap/error.h"
#include "cssmap/statmech.h"

namespace cssmap {

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by the golden gamma
/// 0x9E3779B97F4A7C15; output is the state passed through mix64.
class SplitMix64 {
   public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {
    }

    static uint64_t mix64(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() {
        return (double)(next() >> 11) * 0x1.0p-53;
    }

   private:
    uint64_t state_;
};

/// Seed of the stream numbered `index` derived from `seed`.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
    return seed ^ SplitMix64::mix64(index + 0x9E3779B97F4A7C15ULL);
}

enum class McStart { random, ordered };

struct McConfig {
    size_t sweeps = 4000;
    size_t burn_in = 1000;
    uint64_t seed = 1;
    size_t replicas = 2;
    size_t threads = 1;
    McStart start = McStart::random;

    void validate() const {
        if (burn_in >= sweeps) {
            throw DimensionError("burn_in must be smaller than sweeps");
        }
        if (replicas < 1) {
            throw DimensionError("at least one replica is required");
        }
    }
};

inline constexpr size_t kNumBlocks = 16;

/// Mean of a series and its standard error from kNumBlocks equal blocks.
struct BlockEstimate {
    double mean = 0;
    double err = 0;
};

inline BlockEstimate blocking(const std::vector<double> &series) {
    BlockEstimate out;
    if (series.empty()) {
        return out;
    }
    double total = 0;
    for (double v : series) {
        total += v;
    }
    out.mean = total / (double)series.size();
    size_t blocks = std::min(kNumBlocks, series.size());
    if (blocks < 2) {
        return out;
    }
    std::vector<double> means(blocks, 0);
    for (size_t b = 0; b < blocks; b++) {
        size_t lo = series.size() * b / blocks;
        size_t hi = series.size() * (b + 1) / blocks;
        double s = 0;
        for (size_t i = lo; i < hi; i++) {
            s += series[i];
        }
        means[b] = s / (double)(hi - lo);
    }
    double mb = 0;
    for (double m : means) {
        mb += m;
    }
    mb /= (double)blocks;
    double var = 0;
    for (double m : means) {
        var += (m - mb) * (m - mb);
    }
    var /= (double)(blocks - 1);
    out.err = std::sqrt(var / (double)blocks);
    return out;
}

/// Mean energy per term and Edwards-Anderson overlap.
///
/// The energy of a configuration is -Σ_t sign(t) Π_{i in t} s_i and it is
/// reported divided by the number of terms. The overlap of replicas a, b is
/// q = (1/N) Σ_i s_i^a s_i^b; ea_overlap is the mean of q^2 over replica
/// pairs and measurement sweeps. Error bars come from blocking the
/// replica-major concatenation of the per-sweep series into 16 blocks.
struct McObservables {
    double mean_energy = 0;
    double energy_err = 0;
    double ea_overlap = 0;
    double ea_err = 0;
    size_t samples = 0;
};

/// Draws each bit independently with probability p.
inline BitVector sample_disorder(size_t n, double p, uint64_t seed) {
    validate_probability(p, "p");
    SplitMix64 rng(seed);
    BitVector e(n);
    for (size_t i = 0; i < n; i++) {
        if (rng.uniform() < p) {
            e.set(i, true);
        }
    }
    return e;
}

inline BitVector sample_disorder(const CssCode &code, double p, uint64_t seed) {
    return sample_disorder(code.n(), p, seed);
}

namespace detail {

struct Replica {
    std::vector<double> energy;
    /// Spin configuration after each measured sweep, one bit per spin (set
    /// means s_i = -1), `words` 64-bit words per sweep.
    std::vector<uint64_t> snapshots;
    size_t words = 0;
};

inline Replica run_replica(
    const SmModel &model, const std::vector<std::vector<size_t>> &terms_of, double beta, const McConfig &cfg,
    uint64_t seed) {
    size_t m = model.num_spins;
    size_t nt = model.terms.size();
    SplitMix64 rng(seed);
    std::vector<int8_t> spins(m, 1);
    if (cfg.start == McStart::random) {
        for (auto &s : spins) {
            s = (rng.next() >> 63) ? -1 : 1;
        }
    }
    std::vector<int8_t> value(nt);
    long long energy = 0;
    for (size_t t = 0; t < nt; t++) {
        int v = model.terms[t].sign;
        for (size_t s : model.terms[t].sites) {
            v *= spins[s];
        }
        value[t] = (int8_t)v;
        energy -= v;
    }
    size_t max_degree = 0;
    for (const auto &ts : terms_of) {
        max_degree = std::max(max_degree, ts.size());
    }
    // accept[d] = exp(-2 |beta| d): acceptance of an unfavourable move whose
    // touched terms sum to +-d.
    std::vector<double> accept(max_degree + 1);
    for (size_t d = 0; d <= max_degree; d++) {
        accept[d] = std::exp(-2.0 * std::abs(beta) * (double)d);
    }

    Replica rep;
    rep.words = (m + 63) / 64;
    size_t measured = cfg.sweeps - cfg.burn_in;
    rep.energy.reserve(measured);
    rep.snapshots.assign(measured * rep.words, 0);
    double per_term = 1.0 / (double)std::max<size_t>(nt, 1);
    for (size_t sweep = 0; sweep < cfg.sweeps; sweep++) {
        for (size_t s = 0; s < m; s++) {
            long long local = 0;
            for (size_t t : terms_of[s]) {
                local += value[t];
            }
            // Flipping s negates every term it touches: dE = 2 * local.
            double u = rng.uniform();
            bool ok = beta * (double)local <= 0 || u < accept[(size_t)std::llabs(local)];
            if (ok) {
                spins[s] = (int8_t)-spins[s];
                for (size_t t : terms_of[s]) {
                    value[t] = (int8_t)-value[t];
                }
                energy += 2 * local;
            }
        }
        if (sweep >= cfg.burn_in) {
            size_t at = sweep - cfg.burn_in;
            rep.energy.push_back((double)energy * per_term);
            uint64_t *snap = &rep.snapshots[at * rep.words];
            for (size_t s = 0; s < m; s++) {
                if (spins[s] < 0) {
                    snap[s / 64] |= uint64_t{1} << (s % 64);
                }
            }
        }
    }
    return rep;
}

template <typename Body>
void parallel_for(size_t count, size_t threads, Body body) {
    threads = std::max<size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (size_t i = 0; i < count; i++) {
            body(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    for (size_t w = 0; w < threads; w++) {
        pool.emplace_back([=, &body] {
            for (size_t i = w; i < count; i += threads) {
                body(i);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
}

inline std::vector<std::vector<size_t>> terms_by_spin(const SmModel &model) {
    std::vector<std::vector<size_t>> terms_of(model.num_spins);
    for (size_t t = 0; t < model.terms.size(); t++) {
        for (size_t s : model.terms[t].sites) {
            terms_of[s].push_back(t);
        }
    }
    return terms_of;
}

}  // namespace detail

/// Single-spin-flip Metropolis on a single-species model at inverse
/// temperature beta. One sweep proposes a flip of every spin in index order
/// and accepts with probability min(1, exp(-beta dE)). Replica i uses the
/// stream derive_seed(cfg.seed, i).
inline McObservables metropolis(const SmModel &model, double beta, const McConfig &cfg) {
    cfg.validate();
    if (model.coupled) {
        throw DimensionError("metropolis runs single-species models only");
    }
    if (!std::isfinite(beta)) {
        throw DimensionError("metropolis needs a finite beta");
    }
    auto terms_of = detail::terms_by_spin(model);
    size_t measured = cfg.sweeps - cfg.burn_in;
    size_t r = cfg.replicas;
    std::vector<detail::Replica> reps(r);
    detail::parallel_for(r, cfg.threads, [&](size_t i) {
        reps[i] = detail::run_replica(model, terms_of, beta, cfg, derive_seed(cfg.seed, i));
    });

    std::vector<double> energy_series;
    energy_series.reserve(measured * r);
    for (const auto &rep : reps) {
        energy_series.insert(energy_series.end(), rep.energy.begin(), rep.energy.end());
    }
    auto e = blocking(energy_series);
    McObservables out;
    out.mean_energy = e.mean;
    out.energy_err = e.err;
    out.samples = measured;

    if (r >= 2 && model.num_spins > 0) {
        std::vector<double> q2_series;
        q2_series.reserve(measured * r * (r - 1) / 2);
        double inv = 1.0 / (double)model.num_spins;
        size_t words = reps[0].words;
        for (size_t a = 0; a < r; a++) {
            for (size_t b = a + 1; b < r; b++) {
                for (size_t t = 0; t < measured; t++) {
                    const uint64_t *sa = &reps[a].snapshots[t * words];
                    const uint64_t *sb = &reps[b].snapshots[t * words];
                    size_t differ = 0;
                    for (size_t w = 0; w < words; w++) {
                        differ += (size_t)std::popcount(sa[w] ^ sb[w]);
                    }
                    double q = 1.0 - 2.0 * (double)differ * inv;
                    q2_series.push_back(q * q);
                }
            }
        }
        auto q = blocking(q2_series);
        out.ea_overlap = q.mean;
        out.ea_err = q.err;
    }
    return out;
}

/// One row of a Nishimori-line scan.
struct ScanRow {
    double p = 0;
    double beta = 0;
    McObservables obs;
    size_t disorder_samples = 0;
};

/// Metropolis along the Nishimori line. For each p, disorder_samples error
/// strings are drawn at p, the model of `side` is built on each and run at
/// beta = nishimori_beta(p). Observables are averaged over disorder; with two
/// or more samples the error bars are the standard error across samples,
/// otherwise the blocking errors of the single run.
///
/// At p = 0 the model is sign-free and beta is taken from the smallest
/// positive p of the grid.
inline std::vector<ScanRow> nishimori_scan(
    const CssCode &code, Side side, const std::vector<double> &p_grid, size_t disorder_samples,
    const McConfig &cfg) {
    cfg.validate();
    if (disorder_samples < 1) {
        throw DimensionError("at least one disorder sample is required");
    }
    double smallest = 0;
    for (double p : p_grid) {
        validate_probability(p, "p");
        if (p >= 1) {
            throw DimensionError("the Nishimori line is not defined at p = 1");
        }
        if (p > 0 && (smallest == 0 || p < smallest)) {
            smallest = p;
        }
    }
    std::vector<ScanRow> rows(p_grid.size());
    std::vector<McObservables> runs(p_grid.size() * disorder_samples);
    std::vector<double> betas(p_grid.size());
    for (size_t i = 0; i < p_grid.size(); i++) {
        if (p_grid[i] > 0) {
            betas[i] = nishimori_beta(p_grid[i]);
        } else if (smallest > 0) {
            betas[i] = nishimori_beta(smallest);
        } else {
            throw DimensionError("a grid of only p = 0 has no matched coupling");
        }
    }
    McConfig inner = cfg;
    inner.threads = 1;
    detail::parallel_for(runs.size(), cfg.threads, [&](size_t job) {
        size_t i = job / disorder_samples;
        uint64_t stream = derive_seed(cfg.seed, (uint64_t)job * 2 + 1);
        auto e = sample_disorder(code, p_grid[i], stream);
        auto model = build_sm(code, side, e);
        McConfig c = inner;
        c.seed = derive_seed(cfg.seed, (uint64_t)job * 2 + 2);
        runs[job] = metropolis(model, betas[i], c);
    });
    for (size_t i = 0; i < p_grid.size(); i++) {
        ScanRow &row = rows[i];
        row.p = p_grid[i];
        row.beta = betas[i];
        row.disorder_samples = disorder_samples;
        double se = 0, sq = 0, see = 0, sqq = 0;
        for (size_t d = 0; d < disorder_samples; d++) {
            const auto &o = runs[i * disorder_samples + d];
            se += o.mean_energy;
            sq += o.ea_overlap;
            see += o.mean_energy * o.mean_energy;
            sqq += o.ea_overlap * o.ea_overlap;
            row.obs.samples += o.samples;
        }
        double D = (double)disorder_samples;
        row.obs.mean_energy = se / D;
        row.obs.ea_overlap = sq / D;
        if (disorder_samples >= 2) {
            row.obs.energy_err = std::sqrt(std::max(0.0, (see - se * se / D) / (D - 1)) / D);
            row.obs.ea_err = std::sqrt(std::max(0.0, (sqq - sq * sq / D) / (D - 1)) / D);
        } else {
            row.obs.energy_err = runs[i].energy_err;
            row.obs.ea_err = runs[i].ea_err;
        }
    }
    return rows;
}

}  // namespace cssmap

#endif
