#include "orbitlr/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "orbitlr/error.hpp"

namespace orbitlr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw Error(ErrorKind::InvalidPartition, "parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error(ErrorKind::InvalidPartition, "parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty())
        return Partition{};
    while (true) {
        auto comma = text.find(',');
        auto token = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(ErrorKind::InvalidPartition, "cannot parse part '" + std::string(token) + "'");
        if (value <= 0)
            throw Error(ErrorKind::InvalidPartition, "parts must be positive");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

bool Partition::contained_in(const Partition& other) const noexcept {
    if (length() > other.length())
        return false;
    for (std::size_t i = 0; i < length(); ++i)
        if (parts_[i] > other.parts_[i])
            return false;
    return true;
}

std::string Partition::to_string() const {
    return "[" + to_key() + "]";
}

std::string Partition::to_key() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(lambda.empty() ? 0 : lambda[0], 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j)
            ++cols[j];
    return Partition(std::move(cols));
}

bool dominates(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw Error(ErrorKind::UnequalWeight,
                    "dominance compares " + mu.to_string() + " with " + lambda.to_string());
    int partial_mu = 0;
    int partial_lambda = 0;
    const auto len = std::max(mu.length(), lambda.length());
    for (std::size_t k = 0; k < len; ++k) {
        partial_mu += mu[k];
        partial_lambda += lambda[k];
        if (partial_lambda > partial_mu)
            return false;
    }
    return true;
}

Partition union_of(const Partition& alpha, const Partition& beta) {
    std::vector<int> parts;
    parts.reserve(alpha.length() + beta.length());
    std::merge(alpha.parts().begin(), alpha.parts().end(), beta.parts().begin(), beta.parts().end(),
               std::back_inserter(parts), std::greater<>{});
    return Partition(std::move(parts));
}

Partition sum_of(const Partition& alpha, const Partition& beta) {
    std::vector<int> parts(std::max(alpha.length(), beta.length()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        parts[i] = alpha[i] + beta[i];
    return Partition(std::move(parts));
}

std::int64_t n_stat(const Partition& lambda) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        total += static_cast<std::int64_t>(i) * lambda[i];
    return total;
}

std::int64_t sq_norm_conj(const Partition& lambda) {
    std::int64_t total = 0;
    const Partition conj = conjugate(lambda);
    for (int col : conj.parts())
        total += static_cast<std::int64_t>(col) * col;
    return total;
}

namespace {

void enumerate_partitions(int remaining, int max_part, std::vector<int>& prefix,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        enumerate_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw Error(ErrorKind::NegativeInput, "partitions_of(" + std::to_string(n) + ")");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_partitions(n, n, prefix, out);
    return out;
}

}  // namespace orbitlr
