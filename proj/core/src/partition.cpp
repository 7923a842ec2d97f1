#include "weylcalc/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace weylcalc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

int Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(parts_[0], 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

namespace {

void emit_partitions(int remaining, int cap, std::vector<int>& stack,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        stack.push_back(next);
        emit_partitions(remaining - next, next, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_partitions(n, n, stack, out);
    return out;
}

namespace {

int hook_length(const Partition& shape, const Partition& conj, int r, int c) {
    return shape.part(r) - c + conj.part(c) - r - 1;
}

}  // namespace

long long standard_tableaux_count(const Partition& shape) {
    int n = shape.sum();
    Partition conj = shape.conjugate();
    Rat f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    for (int r = 0; r < shape.rows(); ++r) {
        for (int c = 0; c < shape.part(r); ++c) {
            f /= hook_length(shape, conj, r, c);
        }
    }
    if (f.get_den() != 1) throw std::logic_error("hook length formula must be integral");
    return static_cast<long long>(f.get_num().get_si());
}

long long semistandard_tableaux_count(const Partition& shape, int n) {
    if (shape.rows() > n) return 0;
    Partition conj = shape.conjugate();
    Rat d(1);
    for (int r = 0; r < shape.rows(); ++r) {
        for (int c = 0; c < shape.part(r); ++c) {
            d *= n + c - r;
            d /= hook_length(shape, conj, r, c);
        }
    }
    if (d.get_den() != 1) throw std::logic_error("hook content formula must be integral");
    return static_cast<long long>(d.get_num().get_si());
}

namespace {

// First-column hook lengths ("beta numbers"): strictly decreasing set
// lambda_i + (m - 1 - i). Border strips of size r correspond to elements x
// with x - r >= 0 not in the set; the strip height is the number of set
// elements strictly between x - r and x.
std::vector<int> beta_numbers(const Partition& shape) {
    int m = shape.rows();
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = shape.part(i) + (m - 1 - i);
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<int> parts;
    int m = static_cast<int>(beta.size());
    for (int i = 0; i < m; ++i) {
        int p = beta[i] - (m - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

long long character_rec(const Partition& shape, const std::vector<int>& cycles, std::size_t pos,
                        std::map<CharKey, long long>& memo) {
    if (pos == cycles.size()) return shape.empty() ? 1 : 0;
    CharKey key{shape.parts(), std::vector<int>(cycles.begin() + pos, cycles.end())};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = cycles[pos];
    std::vector<int> beta = beta_numbers(shape);
    long long value = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int b : beta) {
            if (b > target && b < beta[i]) ++height;
        }
        std::vector<int> next = beta;
        next[i] = target;
        long long sub = character_rec(from_beta(std::move(next)), cycles, pos + 1, memo);
        value += (height % 2 == 0) ? sub : -sub;
    }
    memo[key] = value;
    return value;
}

}  // namespace

long long character_value(const Partition& shape, const Partition& cycle_type) {
    if (shape.sum() != cycle_type.sum()) {
        throw std::invalid_argument("character: shape and cycle type sizes differ");
    }
    static thread_local std::map<CharKey, long long> memo;
    return character_rec(shape, cycle_type.parts(), 0, memo);
}

}  // namespace weylcalc
