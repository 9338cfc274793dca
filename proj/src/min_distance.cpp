#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "qrring/error.hpp"
#include "qrring/linear_code.hpp"

namespace qrring {

namespace {

unsigned resolve_threads(unsigned requested, std::uint64_t work) {
    unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (work < (std::uint64_t{1} << 16)) t = 1;
    return t;
}

/// Walks messages begin..end-1 (base-p digits, digit 0 least significant) and
/// calls visit(index, weight) for each codeword. Weights are maintained
/// incrementally from the nonzero support of each generator row.
template <class Visit>
void walk_codewords(const LinearCode& c, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
    const auto& f = c.field();
    const std::uint32_t p = f.p();
    const std::size_t k = c.k();
    const std::size_t n = c.n();
    const auto& G = c.G();

    std::vector<std::vector<std::size_t>> support(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (G[i][j] != 0) support[i].push_back(j);

    std::vector<std::uint32_t> digits(k, 0);
    std::uint64_t idx = begin;
    for (std::size_t i = 0; i < k; ++i) {
        digits[i] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    FpRow word(n, 0);
    for (std::size_t i = 0; i < k; ++i)
        if (digits[i])
            for (auto j : support[i]) word[j] = f.add(word[j], f.mul(digits[i], G[i][j]));
    std::size_t weight = hamming_weight(word);

    for (std::uint64_t m = begin; m < end; ++m) {
        visit(m, weight);
        for (std::size_t d = 0; d < k; ++d) {
            for (auto j : support[d]) {
                const bool was = word[j] != 0;
                word[j] = f.add(word[j], G[d][j]);
                const bool now = word[j] != 0;
                weight += static_cast<std::size_t>(now) - static_cast<std::size_t>(was);
            }
            if (++digits[d] < p) break;
            digits[d] = 0;
        }
    }
}

FpRow message_of(const LinearCode& c, std::uint64_t index) {
    FpRow msg(c.k(), 0);
    for (std::size_t i = 0; i < c.k(); ++i) {
        msg[i] = static_cast<FieldElem>(index % c.field().p());
        index /= c.field().p();
    }
    return msg;
}

/// Splits [0, total) into contiguous ranges, one per worker.
template <class Worker>
void run_partitioned(std::uint64_t total, unsigned threads, Worker&& worker) {
    const std::uint64_t chunk = (total + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t b = std::min(total, chunk * t);
        const std::uint64_t e = std::min(total, b + chunk);
        if (t + 1 == threads) {
            worker(t, b, e);
        } else {
            pool.emplace_back([&worker, t, b, e] { worker(t, b, e); });
        }
    }
    for (auto& th : pool) th.join();
}

}  // namespace

std::string to_string(DistanceMethod method) {
    switch (method) {
        case DistanceMethod::Exhaustive: return "exhaustive";
        case DistanceMethod::InfoSet: return "info-set";
        case DistanceMethod::WitnessOnly: return "witness-only";
    }
    return "unknown";
}

std::vector<std::uint64_t> weight_enumerator(const LinearCode& c, std::uint64_t threshold, unsigned threads) {
    const auto total = code_size_capped(c, threshold);
    if (!total) throw Error(ErrorKind::TooLarge, "p^k exceeds the enumeration threshold");
    const unsigned t = resolve_threads(threads, *total);
    std::vector<std::vector<std::uint64_t>> partial(t, std::vector<std::uint64_t>(c.n() + 1, 0));
    run_partitioned(*total, t, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        auto& acc = partial[w];
        walk_codewords(c, b, e, [&](std::uint64_t, std::size_t wt) { ++acc[wt]; });
    });
    std::vector<std::uint64_t> out(c.n() + 1, 0);
    for (const auto& part : partial)
        for (std::size_t i = 0; i <= c.n(); ++i) out[i] += part[i];
    return out;
}

MinDistanceResult min_distance_exhaustive(const LinearCode& c, unsigned threads) {
    if (c.k() == 0) throw Error(ErrorKind::EmptyCode, "minimum distance of the zero code");
    const auto total = code_size_capped(c, std::numeric_limits<std::uint64_t>::max() / 2);
    if (!total) throw Error(ErrorKind::TooLarge, "code too large to enumerate");
    const unsigned t = resolve_threads(threads, *total);

    struct Best {
        std::size_t weight = std::numeric_limits<std::size_t>::max();
        std::uint64_t index = 0;
    };
    std::vector<Best> partial(t);
    run_partitioned(*total, t, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
        auto& best = partial[w];
        walk_codewords(c, b, e, [&](std::uint64_t idx, std::size_t wt) {
            if (idx != 0 && wt < best.weight) best = {wt, idx};
        });
    });
    Best best;
    for (const auto& b : partial)
        if (b.weight < best.weight || (b.weight == best.weight && b.index < best.index)) best = b;

    MinDistanceResult r;
    r.lower = r.upper = best.weight;
    r.exact = true;
    r.method = DistanceMethod::Exhaustive;
    r.witness = c.encode(message_of(c, best.index));
    return r;
}

MinDistanceResult min_distance_info_set(const LinearCode& c, const Budget& budget) {
    if (c.k() == 0) throw Error(ErrorKind::EmptyCode, "minimum distance of the zero code");
    using clock = std::chrono::steady_clock;
    const auto deadline = clock::now() + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(budget.seconds));
    const auto& f = c.field();
    const std::uint32_t p = f.p();
    const std::size_t n = c.n();
    const std::size_t k = c.k();

    MinDistanceResult r;
    r.method = DistanceMethod::InfoSet;
    r.lower = 1;
    r.upper = n + 1;
    for (const auto& row : c.G()) {
        const auto wt = hamming_weight(row);
        if (wt < r.upper) {
            r.upper = wt;
            r.witness = row;
        }
    }

    // Pairwise disjoint pivot sets: each generator is the RREF taken with the
    // not-yet-used columns (in a seeded random order) scanned first.
    struct InfoSet {
        FpMatrix gen;
        std::size_t rank = 0;
    };
    std::vector<InfoSet> sets;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(budget.seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<bool> used(n, false);
    for (;;) {
        std::vector<std::size_t> cols;
        for (auto j : order)
            if (!used[j]) cols.push_back(j);
        const std::size_t fresh = cols.size();
        for (auto j : order)
            if (used[j]) cols.push_back(j);
        FpMatrix gen = c.G();
        const auto piv = rref_in_place(f, gen, &cols);
        std::size_t rank = 0;
        for (auto pc : piv) {
            if (std::find(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(fresh), pc) ==
                cols.begin() + static_cast<std::ptrdiff_t>(fresh))
                continue;
            used[pc] = true;
            ++rank;
        }
        if (rank == 0) break;
        sets.push_back({std::move(gen), rank});
    }
    r.info_sets = sets.size();

    const auto contribution = [&](std::size_t w, std::size_t rank) -> std::size_t {
        const std::size_t deficit = k - rank;
        return w > deficit ? w - deficit : 0;
    };

    std::vector<FpRow> acc;
    std::uint64_t ticks = 0;
    bool out_of_time = false;

    for (std::size_t w = 1; w <= k && !out_of_time; ++w) {
        for (std::size_t s = 0; s < sets.size(); ++s) {
            if (contribution(w, sets[s].rank) == 0) continue;
            const auto& gen = sets[s].gen;

            acc.assign(w + 1, FpRow(n, 0));
            // depth-first over row combinations i_1 < ... < i_w, leading coefficient 1
            auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
                if (out_of_time) return;
                if (depth == w) {
                    const auto wt = hamming_weight(acc[w]);
                    if (wt < r.upper) {
                        r.upper = wt;
                        r.witness = acc[w];
                    }
                    if ((++ticks & 0xfff) == 0 && clock::now() > deadline) out_of_time = true;
                    return;
                }
                for (std::size_t i = start; i + (w - depth) <= k; ++i) {
                    const std::uint32_t a_hi = depth == 0 ? 2 : p;
                    for (std::uint32_t a = 1; a < a_hi; ++a) {
                        const auto& row = gen[i];
                        auto& dst = acc[depth + 1];
                        const auto& src = acc[depth];
                        for (std::size_t j = 0; j < n; ++j) dst[j] = f.add(src[j], f.mul(a, row[j]));
                        self(self, depth + 1, i + 1);
                        if (out_of_time) return;
                    }
                }
            };
            recurse(recurse, 0, 0);
            if (out_of_time) break;

            std::size_t lower = 0;
            for (std::size_t t = 0; t < sets.size(); ++t) lower += contribution(t <= s ? w + 1 : w, sets[t].rank);
            r.lower = std::max(r.lower, lower);
            if (r.lower >= r.upper) {
                r.lower = r.upper;
                r.exact = true;
                return r;
            }
        }
        // every message of weight <= w in the first (full-rank) set is done
        if (!out_of_time && w == k) {
            r.lower = r.upper;
            r.exact = true;
        }
    }
    r.lower = std::min(r.lower, r.upper);
    r.exact = r.lower == r.upper;
    return r;
}

MinDistanceResult min_distance(const LinearCode& c, const Budget& budget) {
    if (c.k() == 0) throw Error(ErrorKind::EmptyCode, "minimum distance of the zero code");
    if (code_size_capped(c, budget.exhaustive_threshold)) return min_distance_exhaustive(c, budget.threads);
    return min_distance_info_set(c, budget);
}

}  // namespace qrring
