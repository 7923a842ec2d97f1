#include "weylcalc/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace weylcalc {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(text, 10) != 0) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
    r.canonicalize();
    if (text.find('/') != std::string::npos) {
        auto den = text.substr(text.find('/') + 1);
        if (den.empty() || den == "0") throw std::invalid_argument("zero denominator: " + text);
    }
    return r;
}

std::string to_string(const Rat& r) {
    return r.get_str();
}

std::string to_string(const GaussianRat& z) {
    if (z.im == 0) return to_string(z.re);
    std::ostringstream os;
    os << to_string(z.re) << (z.im > 0 ? "+" : "") << to_string(z.im) << "i";
    return os.str();
}

Weight::Weight(std::map<int, long long> entries) : entries_(std::move(entries)) {
    for (const auto& [j, v] : entries_) {
        if (j < 0) throw std::invalid_argument("negative weight index");
        if (v == 0) throw std::invalid_argument("zero value stored in weight");
    }
}

Weight Weight::from_values(const std::vector<long long>& values) {
    Weight w;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0) w.entries_[static_cast<int>(i)] = values[i];
    }
    return w;
}

long long Weight::at(int j) const {
    auto it = entries_.find(j);
    return it == entries_.end() ? 0 : it->second;
}

void Weight::set(int j, long long value) {
    if (j < 0) throw std::invalid_argument("negative weight index");
    if (value == 0) {
        entries_.erase(j);
    } else {
        entries_[j] = value;
    }
}

int Weight::support_end() const {
    return entries_.empty() ? 0 : entries_.rbegin()->first + 1;
}

long long Weight::l1_norm() const {
    long long s = 0;
    for (const auto& [j, v] : entries_) s += std::llabs(v);
    return s;
}

long long Weight::total() const {
    long long s = 0;
    for (const auto& [j, v] : entries_) s += v;
    return s;
}

bool Weight::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& e) { return e.second > 0; });
}

Weight Weight::plus_part() const {
    Weight w;
    for (const auto& [j, v] : entries_) {
        if (v > 0) w.entries_[j] = v;
    }
    return w;
}

Weight Weight::minus_part() const {
    Weight w;
    for (const auto& [j, v] : entries_) {
        if (v < 0) w.entries_[j] = -v;
    }
    return w;
}

Weight Weight::negated() const {
    Weight w;
    for (const auto& [j, v] : entries_) w.entries_[j] = -v;
    return w;
}

std::vector<long long> Weight::sorted_values() const {
    std::vector<long long> vals;
    vals.reserve(entries_.size());
    for (const auto& [j, v] : entries_) vals.push_back(v);
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

OrbitSignature::OrbitSignature(std::map<long long, long long> multiplicities)
    : mult_(std::move(multiplicities)) {
    for (const auto& [v, m] : mult_) {
        if (v == 0) throw std::invalid_argument("zero value in orbit signature");
        if (m <= 0) throw std::invalid_argument("non-positive multiplicity in orbit signature");
    }
}

long long OrbitSignature::count(long long value) const {
    auto it = mult_.find(value);
    return it == mult_.end() ? 0 : it->second;
}

void OrbitSignature::add(long long value, long long count) {
    if (value == 0 || count == 0) return;
    mult_[value] += count;
    if (mult_[value] == 0) mult_.erase(value);
}

long long OrbitSignature::size() const {
    long long s = 0;
    for (const auto& [v, m] : mult_) s += m;
    return s;
}

long long OrbitSignature::l1_norm() const {
    long long s = 0;
    for (const auto& [v, m] : mult_) s += std::llabs(v) * m;
    return s;
}

OrbitSignature canonicalize(const Weight& lambda) {
    OrbitSignature sig;
    for (const auto& [j, v] : lambda.entries()) sig.add(v);
    return sig;
}

bool orbit_equal(const Weight& lambda, const Weight& mu) {
    return canonicalize(lambda) == canonicalize(mu);
}

std::pair<Weight, Weight> split_signs(const Weight& lambda) {
    return {lambda.plus_part(), lambda.minus_part()};
}

PartitionPair to_partition_pair(const Weight& lambda) {
    PartitionPair pair;
    pair.plus = lambda.plus_part().sorted_values();
    pair.minus = lambda.minus_part().sorted_values();
    return pair;
}

Weight from_partition_pair(const PartitionPair& pair) {
    auto check = [](const std::vector<long long>& parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1]) {
                throw std::invalid_argument("partition parts must be weakly decreasing");
            }
        }
    };
    check(pair.plus);
    check(pair.minus);

    Weight w;
    int idx = 0;
    for (long long p : pair.plus) w.set(idx++, p);
    // Negative block placed so the full value sequence stays non-increasing:
    // smallest magnitude first, largest magnitude last.
    for (auto it = pair.minus.rbegin(); it != pair.minus.rend(); ++it) w.set(idx++, -*it);
    return w;
}

Weight canonical_weight(const OrbitSignature& signature) {
    PartitionPair pair;
    for (auto it = signature.multiplicities().rbegin(); it != signature.multiplicities().rend();
         ++it) {
        if (it->first > 0) {
            for (long long c = 0; c < it->second; ++c) pair.plus.push_back(it->first);
        }
    }
    for (const auto& [v, m] : signature.multiplicities()) {
        if (v < 0) {
            for (long long c = 0; c < m; ++c) pair.minus.push_back(-v);
        }
    }
    std::sort(pair.minus.begin(), pair.minus.end(), std::greater<>());
    return from_partition_pair(pair);
}

bool is_contractive(const Weight& lambda) {
    return lambda.l1_norm() == 1;
}

}  // namespace weylcalc
