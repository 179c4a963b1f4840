// represent.cpp

#include "romanoff/represent.hpp"

#include "romanoff/arith.hpp"

#include <algorithm>
#include <atomic>
#include <span>
#include <thread>

namespace romanoff {

namespace {

// Blocks are multiples of 128 numbers so odd-only bitmap words never straddle
// two blocks.
u64 block_size_for(u64 segment_size) {
    return std::max<u64>(128, (segment_size + 127) / 128 * 128);
}

// Runs the counting pass. For each block [lo, hi] of n, visit(worker, lo, counts)
// receives counts[n - lo] = r(n). Blocks are claimed dynamically; visit must
// only touch per-worker state or block-private data.
template <class Visit>
void scan_blocks(std::span<const u64> sums, u64 x, const PrimeTable& primes,
                 const DensityOptions& options, Visit&& visit) {
    const u64 block = block_size_for(options.segment_size);
    const u64 nblocks = x / block + 1;
    const unsigned workers =
        std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(nblocks)));
    std::atomic<u64> next{0};

    auto work = [&](unsigned worker) {
        std::vector<std::uint32_t> counts(block);
        for (u64 b = next++; b < nblocks; b = next++) {
            const u64 lo = b * block;
            const u64 hi = std::min(x, lo + block - 1);
            std::fill(counts.begin(), counts.end(), 0);
            for (u64 a : sums) {
                if (a + 2 > hi) break;
                const u64 plo = lo > a ? lo - a : 0;
                primes.for_each_prime(plo, hi - a, [&](u64 p) { ++counts[p + a - lo]; });
            }
            visit(worker, lo, std::span<const std::uint32_t>(counts.data(), hi - lo + 1));
        }
    };

    if (workers == 1) {
        work(0);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
}

void witness_search(const std::vector<std::vector<FloorPowTerm>>& lists, u64 n, std::size_t depth,
                    u64 partial, std::vector<std::size_t>& chosen, std::optional<Witness>& found) {
    if (found) return;
    if (depth == lists.size()) {
        if (partial + 2 <= n && is_prime_u64(n - partial)) {
            Witness w;
            w.n = n;
            w.p = n - partial;
            w.a = partial;
            for (std::size_t i = 0; i < lists.size(); ++i) {
                w.exponents.push_back(lists[i][chosen[i]].exponent);
                w.ks.push_back(lists[i][chosen[i]].k);
            }
            found = std::move(w);
        }
        return;
    }
    for (std::size_t j = 0; j < lists[depth].size() && !found; ++j) {
        const u64 e = lists[depth][j].exponent;
        if (e >= 63) break;
        const u64 term = u64{1} << e;
        if (partial + term + 2 > n) break;
        chosen[depth] = j;
        witness_search(lists, n, depth + 1, partial + term, chosen, found);
    }
}

}  // namespace

u64 RepresentableBitmap::count() const {
    u64 c = 0;
    for (u64 w : words_) c += static_cast<u64>(std::popcount(w));
    return c;
}

ExponentSumSet exponent_sums(const ExponentSpec& spec, u64 x) {
    if (x > kMaxBound) throw DomainError("exponent_sums: x exceeds 2^62");
    if (spec.rs.empty()) throw DomainError("exponent_sums: empty exponent tuple");
    if (x < 2) return {x, {}};
    const u64 max_exp = floor_log2(x);
    std::vector<std::vector<u64>> lists;
    for (const auto& r : spec.rs) lists.push_back(seq_values(r, max_exp));
    return {x, exponent_tuple_sums(lists, x)};
}

RepresentableBitmap mark_representable(const ExponentSumSet& sums, u64 x,
                                       const DensityOptions& options) {
    if (x > kMaxBound) throw DomainError("mark_representable: x exceeds 2^62");
    RepresentableBitmap bitmap(x);
    const PrimeTable primes(x, options.segment_size, options.threads);
    scan_blocks(sums.values, x, primes, options,
                [&](unsigned, u64 lo, std::span<const std::uint32_t> counts) {
                    for (u64 j = lo & 1 ? 0 : 1; j < counts.size(); j += 2)
                        if (counts[j]) bitmap.set(lo + j);
                });
    return bitmap;
}

DensityReport density_report(const ExponentSpec& spec, u64 x, const DensityOptions& options) {
    if (x < 4) throw DomainError("density_report: x must be at least 4");
    if (x > kMaxBound) throw DomainError("density_report: x exceeds 2^62");
    const ExponentSumSet sums = exponent_sums(spec, x);
    const PrimeTable primes(x, options.segment_size, options.threads);

    struct Totals {
        u64 representable = 0, representable_all = 0, sum_r = 0, sum_r2 = 0;
    };
    std::vector<Totals> per_worker(std::max(1u, options.threads));
    scan_blocks(sums.values, x, primes, options,
                [&](unsigned worker, u64 lo, std::span<const std::uint32_t> counts) {
                    Totals& t = per_worker[worker];
                    for (u64 j = 0; j < counts.size(); ++j) {
                        const u64 r = counts[j];
                        if (r == 0) continue;
                        t.sum_r += r;
                        t.sum_r2 += r * r;
                        ++t.representable_all;
                        if ((lo + j) & 1) ++t.representable;
                    }
                });

    DensityReport rep;
    rep.x = x;
    rep.sumset_size = sums.values.size();
    for (const auto& t : per_worker) {
        rep.representable += t.representable;
        rep.representable_all += t.representable_all;
        rep.sum_r += t.sum_r;
        rep.sum_r2 += t.sum_r2;
    }
    rep.odd_total = (x + 1) / 2 - 1;
    rep.density = static_cast<double>(rep.representable) / static_cast<double>(rep.odd_total);
    rep.density_all = static_cast<double>(rep.representable_all) / static_cast<double>(x);
    if (rep.sum_r2 > 0) {
        const long double s = static_cast<long double>(rep.sum_r);
        rep.cs_lower = static_cast<double>(s * s / (static_cast<long double>(x) * rep.sum_r2));
    }
    return rep;
}

std::vector<DensityReport> dichotomy_experiment(const ExponentSpec& spec,
                                                const std::vector<u64>& x_grid,
                                                const DensityOptions& options) {
    for (std::size_t i = 1; i < x_grid.size(); ++i)
        if (x_grid[i] <= x_grid[i - 1]) throw DomainError("dichotomy_experiment: grid must increase");
    std::vector<DensityReport> out;
    out.reserve(x_grid.size());
    for (u64 x : x_grid) out.push_back(density_report(spec, x, options));
    return out;
}

double upper_bound_density(const ExponentSpec& spec, u64 x) {
    if (x == 0) return 0;
    const auto sums = exponent_sums(spec, x);
    return static_cast<double>(prime_count(x)) * static_cast<double>(sums.values.size()) /
           static_cast<double>(x);
}

std::optional<Witness> find_witness(u64 n, const ExponentSpec& spec) {
    if (n > kMaxBound) throw DomainError("find_witness: n exceeds 2^62");
    if (spec.rs.empty()) throw DomainError("find_witness: empty exponent tuple");
    if (n < 4) return std::nullopt;
    const u64 max_exp = floor_log2(n);
    std::vector<std::vector<FloorPowTerm>> lists;
    for (const auto& r : spec.rs) lists.push_back(seq_terms(r, max_exp));
    std::vector<std::size_t> chosen(lists.size());
    std::optional<Witness> found;
    witness_search(lists, n, 0, 0, chosen, found);
    return found;
}

}  // namespace romanoff
