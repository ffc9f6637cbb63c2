#include "orbitlr/matrixlab.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "orbitlr/orbit.hpp"

namespace orbitlr {

std::string describe(const Strategy& strategy) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ExhaustiveStrategy>)
                return "exhaustive(q=" + std::to_string(s.q) + ")";
            else
                return "random(p=" + std::to_string(s.p) + ", samples=" + std::to_string(s.samples) +
                       ", seed=" + std::to_string(s.seed) + ")";
        },
        strategy);
}

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::Pass: return "PASS";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::Fail: return "FAIL";
    }
    return "FAIL";
}

Verdict MembershipReport::verdict() const {
    if (!violations.empty())
        return Verdict::Fail;
    if (!missing.empty())
        return Verdict::Inconclusive;
    return Verdict::Pass;
}

namespace {

/**
 * Rank sequences of powers of a dense n×n matrix mod p, with scratch buffers
 * reused across calls. This is the inner loop of the census, so it avoids
 * the allocation done by ExactMatrix.
 */
class ColumnProfiler {
public:
    ColumnProfiler(const PrimeField& field, std::size_t n)
        : field_(field), p_(field.characteristic()), n_(n), power_(n * n), next_(n * n), work_(n * n) {
        lazy_ = p_ < (std::uint64_t{1} << 16);
        if (lazy_) {
            inverse_.assign(p_, 0);
            for (std::uint64_t v = 1; v < p_; ++v)
                inverse_[v] = field.inv(v);
        }
    }

    /// Column lengths of the Jordan type (the conjugate partition), largest first.
    /// Rank sequences of nilpotent matrices strictly decrease to zero.
    const std::vector<int>& columns(const std::vector<std::uint64_t>& m) {
        columns_.clear();
        std::size_t previous = n_;
        power_ = m;
        while (previous > 0) {
            const std::size_t r = rank(power_);
            if (r == previous)
                throw Error(ErrorKind::NotNilpotent, "rank stalls at " + std::to_string(r));
            columns_.push_back(static_cast<int>(previous - r));
            previous = r;
            if (r > 0) {
                multiply(power_, m, next_);
                std::swap(power_, next_);
            }
        }
        return columns_;
    }

private:
    std::uint64_t inv(std::uint64_t v) const { return lazy_ ? inverse_[v] : field_.inv(v); }

    void multiply(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                  std::vector<std::uint64_t>& out) const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                std::uint64_t acc = 0;
                if (lazy_) {
                    for (std::size_t k = 0; k < n_; ++k)
                        acc += a[i * n_ + k] * b[k * n_ + j];
                    acc %= p_;
                } else {
                    for (std::size_t k = 0; k < n_; ++k)
                        acc = (acc + a[i * n_ + k] * b[k * n_ + j]) % p_;
                }
                out[i * n_ + j] = acc;
            }
    }

    std::size_t rank(const std::vector<std::uint64_t>& m) {
        work_ = m;
        std::size_t r = 0;
        for (std::size_t col = 0; col < n_ && r < n_; ++col) {
            std::size_t pivot = r;
            while (pivot < n_ && work_[pivot * n_ + col] == 0)
                ++pivot;
            if (pivot == n_)
                continue;
            if (pivot != r)
                for (std::size_t j = col; j < n_; ++j)
                    std::swap(work_[pivot * n_ + j], work_[r * n_ + j]);
            const std::uint64_t scale = inv(work_[r * n_ + col]);
            for (std::size_t row = r + 1; row < n_; ++row) {
                const std::uint64_t lead = work_[row * n_ + col];
                if (lead == 0)
                    continue;
                const std::uint64_t factor = p_ - (lead * scale) % p_;
                for (std::size_t j = col; j < n_; ++j)
                    work_[row * n_ + j] = (work_[row * n_ + j] + factor * work_[r * n_ + j]) % p_;
            }
            ++r;
        }
        return r;
    }

    PrimeField field_;
    std::uint64_t p_;
    std::size_t n_;
    bool lazy_ = false;
    std::vector<std::uint64_t> inverse_;
    std::vector<std::uint64_t> power_, next_, work_;
    std::vector<int> columns_;
};

using ColumnSet = std::set<std::vector<int>>;

/// Shared setup for one (α, β) census over F_p.
struct Census {
    Census(const Partition& alpha, const Partition& beta, const PrimeField& field)
        : a(static_cast<std::size_t>(alpha.weight())),
          b(static_cast<std::size_t>(beta.weight())),
          n(a + b),
          field(field) {
        const auto base = direct_sum(jordan_matrix(alpha, field), jordan_matrix(beta, field));
        representative.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                representative[i * n + j] = base(i, j);
    }

    std::size_t a, b, n;
    PrimeField field;
    std::vector<std::uint64_t> representative;
};

/// Runs `work(chunk, worker_local_set)` for every chunk across hardware threads.
void for_each_chunk(std::uint64_t chunks, const std::function<void(std::uint64_t, ColumnSet&)>& work,
                    ColumnSet& merged) {
    const std::uint64_t threads =
        std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, std::max<std::uint64_t>(chunks, 1));
    if (threads <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c)
            work(c, merged);
        return;
    }
    std::mutex guard;
    std::vector<std::thread> pool;
    for (std::uint64_t t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            ColumnSet local;
            for (std::uint64_t c = t; c < chunks; c += threads)
                work(c, local);
            std::lock_guard lock(guard);
            merged.insert(local.begin(), local.end());
        });
    for (auto& th : pool)
        th.join();
}

constexpr std::uint64_t kChunk = 4096;

void run_exhaustive(const Census& census, std::uint64_t q, std::uint64_t cap, ColumnSet& out) {
    const std::size_t cells = census.a * census.b;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (total > cap / q)
            throw Error(ErrorKind::BudgetExceeded, std::to_string(q) + "^" + std::to_string(cells) +
                                                       " blocks exceed the cap of " + std::to_string(cap));
        total *= q;
    }
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    for_each_chunk(
        chunks,
        [&](std::uint64_t chunk, ColumnSet& local) {
            ColumnProfiler profiler(census.field, census.n);
            std::vector<std::uint64_t> m = census.representative;
            const std::uint64_t first = chunk * kChunk;
            const std::uint64_t last = std::min(total, first + kChunk);
            // decode `first` into base-q digits, then step like an odometer
            std::vector<std::uint64_t> digits(cells, 0);
            std::uint64_t index = first;
            for (std::size_t d = 0; d < cells; ++d) {
                digits[d] = index % q;
                index /= q;
            }
            for (std::uint64_t step = first; step < last; ++step) {
                for (std::size_t d = 0; d < cells; ++d)
                    m[(d / census.b) * census.n + census.a + d % census.b] = digits[d];
                local.insert(profiler.columns(m));
                for (std::size_t d = 0; d < cells; ++d) {
                    if (++digits[d] < q)
                        break;
                    digits[d] = 0;
                }
            }
        },
        out);
}

void run_random(const Census& census, const RandomStrategy& strategy, ColumnSet& out) {
    const std::uint64_t chunks = (strategy.samples + kChunk - 1) / kChunk;
    for_each_chunk(
        chunks,
        [&](std::uint64_t chunk, ColumnSet& local) {
            // one deterministic stream per chunk, independent of the thread count
            std::seed_seq seq{static_cast<std::uint32_t>(strategy.seed),
                              static_cast<std::uint32_t>(strategy.seed >> 32),
                              static_cast<std::uint32_t>(chunk)};
            std::mt19937_64 rng(seq);
            std::uniform_int_distribution<std::uint64_t> entry(0, strategy.p - 1);
            ColumnProfiler profiler(census.field, census.n);
            std::vector<std::uint64_t> m = census.representative;
            const std::uint64_t first = chunk * kChunk;
            const std::uint64_t last = std::min(strategy.samples, first + kChunk);
            for (std::uint64_t s = first; s < last; ++s) {
                for (std::size_t i = 0; i < census.a; ++i)
                    for (std::size_t j = 0; j < census.b; ++j)
                        m[i * census.n + census.a + j] = entry(rng);
                local.insert(profiler.columns(m));
            }
        },
        out);
}

std::vector<Partition> sorted_desc(std::set<Partition> items) {
    return {items.rbegin(), items.rend()};
}

}  // namespace

MembershipReport reachable_types(const Partition& alpha, const Partition& beta,
                                 std::span<const Strategy> strategies, std::uint64_t exhaustive_cap) {
    ColumnSet columns;
    for (const auto& strategy : strategies) {
        if (const auto* ex = std::get_if<ExhaustiveStrategy>(&strategy)) {
            const Census census(alpha, beta, PrimeField(ex->q));
            run_exhaustive(census, ex->q, exhaustive_cap, columns);
        } else {
            const auto& rnd = std::get<RandomStrategy>(strategy);
            const Census census(alpha, beta, PrimeField(rnd.p));
            run_random(census, rnd, columns);
        }
    }

    std::set<Partition> observed;
    for (const auto& cols : columns)
        observed.insert(conjugate(Partition(cols)));
    const auto poset = orbit_poset(alpha, beta);
    const std::set<Partition> allowed(poset.nodes.begin(), poset.nodes.end());

    std::set<Partition> missing;
    std::set<Partition> violations;
    std::set_difference(allowed.begin(), allowed.end(), observed.begin(), observed.end(),
                        std::inserter(missing, missing.end()));
    std::set_difference(observed.begin(), observed.end(), allowed.begin(), allowed.end(),
                        std::inserter(violations, violations.end()));

    return MembershipReport{alpha,
                            beta,
                            {strategies.begin(), strategies.end()},
                            sorted_desc(std::move(observed)),
                            sorted_desc(allowed),
                            sorted_desc(std::move(missing)),
                            sorted_desc(std::move(violations))};
}

}  // namespace orbitlr
