#include "weylcalc/majorization.hpp"

#include <algorithm>

#include "weylcalc/linear_program.hpp"

namespace weylcalc {

RationalWeight::RationalWeight(std::map<int, Rat> entries) : entries_(std::move(entries)) {
    for (const auto& [j, v] : entries_) {
        if (j < 0) throw std::invalid_argument("negative weight index");
        if (v == 0) throw std::invalid_argument("zero value stored in rational weight");
    }
}

RationalWeight::RationalWeight(const Weight& w) {
    for (const auto& [j, v] : w.entries()) entries_[j] = Rat(static_cast<long>(v));
}

RationalWeight RationalWeight::from_values(const std::vector<Rat>& values) {
    RationalWeight w;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0) w.entries_[static_cast<int>(i)] = values[i];
    }
    return w;
}

Rat RationalWeight::at(int j) const {
    auto it = entries_.find(j);
    return it == entries_.end() ? Rat(0) : it->second;
}

void RationalWeight::set(int j, const Rat& value) {
    if (j < 0) throw std::invalid_argument("negative weight index");
    if (value == 0) {
        entries_.erase(j);
    } else {
        entries_[j] = value;
    }
}

int RationalWeight::support_end() const {
    return entries_.empty() ? 0 : entries_.rbegin()->first + 1;
}

RationalWeight RationalWeight::plus_part() const {
    RationalWeight w;
    for (const auto& [j, v] : entries_) {
        if (v > 0) w.entries_[j] = v;
    }
    return w;
}

RationalWeight RationalWeight::minus_part() const {
    RationalWeight w;
    for (const auto& [j, v] : entries_) {
        if (v < 0) w.entries_[j] = -v;
    }
    return w;
}

RationalWeight RationalWeight::negated() const {
    RationalWeight w;
    for (const auto& [j, v] : entries_) w.entries_[j] = -v;
    return w;
}

RationalWeight operator-(const RationalWeight& a, const RationalWeight& b) {
    RationalWeight out = a;
    for (const auto& [j, v] : b.entries_) out.set(j, out.at(j) - v);
    return out;
}

std::vector<Rat> RationalWeight::sorted_values() const {
    std::vector<Rat> vals;
    vals.reserve(entries_.size());
    for (const auto& [j, v] : entries_) vals.push_back(v);
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

Rat l_k(const RationalWeight& mu, int k) {
    if (k < 1) throw std::invalid_argument("l_k requires k >= 1");
    // Zeros are always available on the infinite index set, so only positive
    // values contribute.
    std::vector<Rat> pos;
    for (const auto& [j, v] : mu.entries()) {
        if (v > 0) pos.push_back(v);
    }
    std::sort(pos.begin(), pos.end(), std::greater<>());
    Rat s(0);
    for (int i = 0; i < k && i < static_cast<int>(pos.size()); ++i) s += pos[i];
    return s;
}

Rat total(const RationalWeight& mu) {
    Rat s(0);
    for (const auto& [j, v] : mu.entries()) s += v;
    return s;
}

bool in_weakstar_hull(const RationalWeight& mu, const Weight& lambda) {
    RationalWeight lam(lambda);
    RationalWeight neg_mu = mu.negated();
    RationalWeight neg_lam = lam.negated();
    int kmax = mu.support_size() + lambda.support_size();
    for (int k = 1; k <= kmax; ++k) {
        if (l_k(mu, k) > l_k(lam, k)) return false;
        if (l_k(neg_mu, k) > l_k(neg_lam, k)) return false;
    }
    return true;
}

bool in_norm_hull(const RationalWeight& mu, const Weight& lambda) {
    if (total(mu) != Rat(static_cast<long>(lambda.total()))) return false;
    return in_weakstar_hull(mu, lambda);
}

bool in_orbit_closure(const Weight& mu, const Weight& lambda) {
    OrbitSignature ms = canonicalize(mu);
    OrbitSignature ls = canonicalize(lambda);
    for (const auto& [v, m] : ms.multiplicities()) {
        if (m > ls.count(v)) return false;
    }
    return true;
}

HullExtremeSet upper_parts(const Weight& lambda) {
    if (!lambda.is_nonnegative()) {
        throw std::invalid_argument("upper_parts requires a non-negative weight");
    }
    std::vector<long long> vals = lambda.sorted_values();
    HullExtremeSet out;
    for (std::size_t c = 0; c <= vals.size(); ++c) {
        OrbitSignature sig;
        for (std::size_t i = 0; i < c; ++i) sig.add(vals[i]);
        out.insert(std::move(sig));
    }
    return out;
}

namespace {

// Signature of (positive weight with signature `plus`) minus (non-negative
// weight with signature `minus_magnitudes`); the supports are disjoint.
OrbitSignature signed_merge(const OrbitSignature& plus, const OrbitSignature& minus_magnitudes) {
    OrbitSignature out = plus;
    for (const auto& [v, m] : minus_magnitudes.multiplicities()) out.add(-v, m);
    return out;
}

}  // namespace

HullExtremeSet extreme_points_weakstar_hull(const Weight& lambda) {
    auto [plus, minus] = split_signs(lambda);
    OrbitSignature plus_sig = canonicalize(plus);
    OrbitSignature minus_sig = canonicalize(minus);
    HullExtremeSet out;
    HullExtremeSet minus_uppers = upper_parts(minus);
    for (const auto& up : minus_uppers.signatures()) {
        out.insert(signed_merge(plus_sig, up));
    }
    HullExtremeSet plus_uppers = upper_parts(plus);
    for (const auto& up : plus_uppers.signatures()) {
        out.insert(signed_merge(up, minus_sig));
    }
    return out;
}

bool is_extreme_weakstar(const Weight& mu, const Weight& lambda) {
    return extreme_points_weakstar_hull(lambda).contains(canonicalize(mu));
}

HullExtremeSet extreme_points_norm_hull(const Weight& lambda) {
    HullExtremeSet out;
    out.insert(canonicalize(lambda));
    return out;
}

RationalWeight SeparationCertificate::evaluation_vector() const {
    return on_minus_parts ? witness.negated() : witness;
}

namespace {

// Indicator of the positions of the k largest values of the (non-negative)
// weight part. k never exceeds the support size at the minimal violating k.
RationalWeight top_k_indicator(const Weight& part, int k) {
    std::vector<std::pair<long long, int>> by_value;
    for (const auto& [j, v] : part.entries()) by_value.push_back({v, j});
    std::sort(by_value.begin(), by_value.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    RationalWeight x;
    for (int i = 0; i < k && i < static_cast<int>(by_value.size()); ++i) {
        x.set(by_value[i].second, Rat(1));
    }
    return x;
}

}  // namespace

SeparationCertificate separating_vector(const Weight& lambda, const Weight& mu) {
    if (orbit_equal(lambda, mu)) {
        throw std::invalid_argument("separating_vector requires distinct orbits");
    }

    // Case order: positive parts first (mu outside co(lambda), then lambda
    // outside co(mu)), then the negative parts; smallest violating k wins.
    struct Case {
        Weight outside;
        Weight inside;
        SeparationDirection direction;
        bool on_minus;
    };
    const Case cases[] = {
        {mu.plus_part(), lambda.plus_part(), SeparationDirection::OutsideCoLambda, false},
        {lambda.plus_part(), mu.plus_part(), SeparationDirection::LambdaOutsideCoMu, false},
        {mu.minus_part(), lambda.minus_part(), SeparationDirection::OutsideCoLambda, true},
        {lambda.minus_part(), mu.minus_part(), SeparationDirection::LambdaOutsideCoMu, true},
    };
    for (const Case& c : cases) {
        RationalWeight out_part(c.outside);
        RationalWeight in_part(c.inside);
        int kmax = c.outside.support_size() + c.inside.support_size();
        for (int k = 1; k <= kmax; ++k) {
            Rat outside_value = l_k(out_part, k);
            Rat inside_value = l_k(in_part, k);
            if (outside_value > inside_value) {
                SeparationCertificate cert;
                cert.direction = c.direction;
                cert.on_minus_parts = c.on_minus;
                cert.witness = top_k_indicator(c.outside, k);
                cert.gap = outside_value - inside_value;
                return cert;
            }
        }
    }
    // Unreachable: equal L_k on both signed parts for all k means equal
    // signatures, contradicting the precondition.
    throw std::logic_error("separating_vector: no violated inequality found");
}

Rat support_functional(const Weight& lambda, const RationalWeight& x) {
    std::size_t len = lambda.entries().size() + x.entries().size();
    std::vector<Rat> lv, xv;
    lv.reserve(len);
    xv.reserve(len);
    for (const auto& [j, v] : lambda.entries()) lv.push_back(Rat(static_cast<long>(v)));
    for (const auto& [j, v] : x.entries()) xv.push_back(v);
    lv.resize(len, Rat(0));
    xv.resize(len, Rat(0));
    std::sort(lv.begin(), lv.end(), std::greater<>());
    std::sort(xv.begin(), xv.end(), std::greater<>());
    Rat s(0);
    for (std::size_t i = 0; i < len; ++i) s += lv[i] * xv[i];
    return s;
}

RationalWeight exposing_vector(const Weight& lambda) {
    return RationalWeight(lambda);
}

bool in_cone_c_lambda(const RationalWeight& v, const Weight& lambda) {
    if (v.is_zero()) return true;

    std::set<int> support;
    for (const auto& [j, val] : v.entries()) support.insert(j);
    for (const auto& [j, val] : lambda.entries()) support.insert(j);
    std::vector<int> idx(support.begin(), support.end());
    int n = static_cast<int>(idx.size());

    // Generators eps_i - eps_j over pairs with lambda_i > lambda_j.
    std::vector<std::pair<int, int>> gens;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (lambda.at(idx[a]) > lambda.at(idx[b])) gens.push_back({a, b});
        }
    }
    if (gens.empty()) return false;

    LinearProgram lp(static_cast<int>(gens.size()));
    for (int r = 0; r < n; ++r) {
        std::vector<Rat> row(gens.size(), Rat(0));
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (gens[g].first == r) row[g] += 1;
            if (gens[g].second == r) row[g] -= 1;
        }
        lp.add_row(std::move(row), RowSense::Eq, v.at(idx[r]));
    }
    return lp_feasible(lp);
}

}  // namespace weylcalc
