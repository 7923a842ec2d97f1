#include "weylcalc/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace weylcalc {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[v]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[v] = true;
    }
}

Perm Perm::identity(int k) {
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::transposition(int k, int a, int b) {
    Perm p = identity(k);
    std::swap(p.img_[a], p.img_[b]);
    return p;
}

Perm Perm::compose(const Perm& other) const {
    if (degree() != other.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> img(degree());
    for (int x = 0; x < degree(); ++x) img[x] = img_[other.img_[x]];
    Perm p;
    p.img_ = std::move(img);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> img(degree());
    for (int x = 0; x < degree(); ++x) img[img_[x]] = x;
    Perm p;
    p.img_ = std::move(img);
    return p;
}

int Perm::sign() const {
    std::vector<bool> seen(degree(), false);
    int parity = 0;
    for (int x = 0; x < degree(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (int y = x; !seen[y]; y = img_[y]) {
            seen[y] = true;
            ++len;
        }
        parity ^= (len - 1) & 1;
    }
    return parity ? -1 : 1;
}

Partition Perm::cycle_type() const {
    std::vector<bool> seen(degree(), false);
    std::vector<int> lengths;
    for (int x = 0; x < degree(); ++x) {
        if (seen[x]) continue;
        int len = 0;
        for (int y = x; !seen[y]; y = img_[y]) {
            seen[y] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

bool Perm::is_identity() const {
    for (int x = 0; x < degree(); ++x) {
        if (img_[x] != x) return false;
    }
    return true;
}

std::vector<Perm> symmetric_group(int k) {
    if (k < 0 || k > 8) throw ResourceLimitError("symmetric_group: degree capped at 8");
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

GroupAlgebraElement GroupAlgebraElement::unit(int degree) {
    GroupAlgebraElement e(degree);
    e.add_term(Perm::identity(degree), Rat(1));
    return e;
}

Rat GroupAlgebraElement::coefficient(const Perm& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

void GroupAlgebraElement::add_term(const Perm& p, const Rat& c) {
    if (p.degree() != degree_) throw std::invalid_argument("degree mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    GroupAlgebraElement out = *this;
    for (const auto& [p, c] : o.terms_) out.add_term(p, c);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    GroupAlgebraElement out = *this;
    for (const auto& [p, c] : o.terms_) out.add_term(p, -c);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
    GroupAlgebraElement out(degree_);
    for (const auto& [p, c] : terms_) {
        for (const auto& [q, d] : o.terms_) {
            out.add_term(p.compose(q), c * d);
        }
    }
    return out;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Rat& c) const {
    GroupAlgebraElement out(degree_);
    if (c == 0) return out;
    for (const auto& [p, t] : terms_) out.terms_[p] = t * c;
    return out;
}

}  // namespace weylcalc
