#include "weylcalc/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace weylcalc {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.rows()) {
        throw std::invalid_argument("tableau row count does not match shape");
    }
    int n = shape_.sum();
    std::vector<bool> seen(n, false);
    for (int r = 0; r < shape_.rows(); ++r) {
        if (static_cast<int>(rows_[r].size()) != shape_.part(r)) {
            throw std::invalid_argument("tableau row length does not match shape");
        }
        for (int e : rows_[r]) {
            if (e < 0 || e >= n || seen[e]) throw std::invalid_argument("tableau filling not bijective");
            seen[e] = true;
        }
    }
}

Tableau Tableau::row_canonical(const Partition& shape) {
    std::vector<std::vector<int>> rows(shape.rows());
    int next = 0;
    for (int r = 0; r < shape.rows(); ++r) {
        rows[r].resize(shape.part(r));
        for (int c = 0; c < shape.part(r); ++c) rows[r][c] = next++;
    }
    return Tableau(shape, std::move(rows));
}

std::vector<std::vector<int>> Tableau::columns() const {
    std::vector<std::vector<int>> cols(shape_.empty() ? 0 : shape_.part(0));
    for (int r = 0; r < shape_.rows(); ++r) {
        for (int c = 0; c < shape_.part(r); ++c) cols[c].push_back(rows_[r][c]);
    }
    return cols;
}

std::vector<int> Tableau::row_of_entry() const {
    std::vector<int> row(size());
    for (int r = 0; r < shape_.rows(); ++r) {
        for (int e : rows_[r]) row[e] = r;
    }
    return row;
}

TensorVector TensorVector::basis(int dim, const IndexTuple& tuple) {
    TensorVector v(dim, static_cast<int>(tuple.size()));
    v.add(tuple, GaussianRat(1));
    return v;
}

GaussianRat TensorVector::coefficient(const IndexTuple& t) const {
    auto it = coeffs_.find(t);
    return it == coeffs_.end() ? GaussianRat() : it->second;
}

void TensorVector::add(const IndexTuple& t, const GaussianRat& c) {
    if (static_cast<int>(t.size()) != rank_) throw std::invalid_argument("tuple rank mismatch");
    for (int i : t) {
        if (i < 0 || i >= dim_) throw std::invalid_argument("tuple index out of range");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

TensorVector TensorVector::operator+(const TensorVector& o) const {
    TensorVector out = *this;
    for (const auto& [t, c] : o.coeffs_) out.add(t, c);
    return out;
}

TensorVector TensorVector::operator-(const TensorVector& o) const {
    TensorVector out = *this;
    for (const auto& [t, c] : o.coeffs_) out.add(t, -c);
    return out;
}

TensorVector TensorVector::scaled(const GaussianRat& c) const {
    TensorVector out(dim_, rank_);
    if (c.is_zero()) return out;
    for (const auto& [t, v] : coeffs_) out.coeffs_[t] = v * c;
    return out;
}

GaussianRat TensorVector::inner(const TensorVector& o) const {
    GaussianRat s;
    for (const auto& [t, c] : coeffs_) {
        auto it = o.coeffs_.find(t);
        if (it != o.coeffs_.end()) s += c * it->second.conj();
    }
    return s;
}

std::vector<int> TensorVector::content(const IndexTuple& t, int dim) {
    std::vector<int> counts(dim, 0);
    for (int i : t) ++counts[i];
    return counts;
}

TensorVector permute_tensor(const Perm& sigma, const TensorVector& v) {
    if (sigma.degree() != v.rank()) throw std::invalid_argument("permutation rank mismatch");
    TensorVector out(v.dim(), v.rank());
    for (const auto& [t, c] : v.coefficients()) {
        TensorVector::IndexTuple moved(t.size());
        for (int q = 0; q < sigma.degree(); ++q) moved[sigma(q)] = t[q];
        out.add(moved, c);
    }
    return out;
}

TensorVector act_on_tensor(const GroupAlgebraElement& a, const TensorVector& v) {
    if (a.degree() != v.rank()) throw std::invalid_argument("group algebra rank mismatch");
    TensorVector out(v.dim(), v.rank());
    for (const auto& [sigma, coeff] : a.terms()) {
        for (const auto& [t, c] : v.coefficients()) {
            TensorVector::IndexTuple moved(t.size());
            for (int q = 0; q < sigma.degree(); ++q) moved[sigma(q)] = t[q];
            out.add(moved, c * GaussianRat(coeff));
        }
    }
    return out;
}

namespace {

// Sum over all permutations preserving the given blocks, with an optional
// sign twist.
GroupAlgebraElement block_sum(int degree, const std::vector<std::vector<int>>& blocks,
                              bool signed_sum) {
    GroupAlgebraElement out(degree);
    // Enumerate the product of the block symmetric groups.
    std::vector<std::vector<Perm>> block_perms;
    for (const auto& block : blocks) {
        block_perms.push_back(symmetric_group(static_cast<int>(block.size())));
    }
    std::vector<std::size_t> pick(blocks.size(), 0);
    while (true) {
        std::vector<int> img(degree);
        std::iota(img.begin(), img.end(), 0);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& block = blocks[b];
            const Perm& local = block_perms[b][pick[b]];
            for (std::size_t i = 0; i < block.size(); ++i) img[block[i]] = block[local(static_cast<int>(i))];
        }
        Perm p{std::vector<int>(img)};
        out.add_term(p, Rat(signed_sum ? p.sign() : 1));
        std::size_t b = 0;
        while (b < blocks.size()) {
            if (++pick[b] < block_perms[b].size()) break;
            pick[b] = 0;
            ++b;
        }
        if (b == blocks.size()) break;
    }
    return out;
}

}  // namespace

GroupAlgebraElement row_symmetrizer(const Tableau& t) {
    return block_sum(t.size(), t.rows(), false);
}

GroupAlgebraElement column_antisymmetrizer(const Tableau& t) {
    return block_sum(t.size(), t.columns(), true);
}

GroupAlgebraElement young_symmetrizer(const Tableau& t) {
    return column_antisymmetrizer(t) * row_symmetrizer(t);
}

TensorVector highest_weight_vector(const Partition& lambda, int n) {
    if (lambda.rows() > n) {
        throw std::invalid_argument("highest_weight_vector: more parts than the dimension");
    }
    if (lambda.empty()) throw std::invalid_argument("highest_weight_vector: empty shape");
    Tableau t = Tableau::row_canonical(lambda);
    TensorVector e_t = TensorVector::basis(n, t.row_of_entry());
    TensorVector v = act_on_tensor(column_antisymmetrizer(t), e_t);
    if (v.is_zero()) throw std::logic_error("highest weight vector vanished");
    return v;
}

GroupAlgebraElement isotypic_projector(const Partition& lambda, int k) {
    if (lambda.sum() != k) throw std::invalid_argument("isotypic_projector: shape size != k");
    long long f = standard_tableaux_count(lambda);
    Rat factorial(1);
    for (int i = 2; i <= k; ++i) factorial *= i;
    GroupAlgebraElement p(k);
    for (const Perm& sigma : symmetric_group(k)) {
        long long chi = character_value(lambda, sigma.cycle_type());
        if (chi != 0) {
            p.add_term(sigma, Rat(static_cast<long>(f)) * Rat(static_cast<long>(chi)) / factorial);
        }
    }
    return p;
}

namespace {

constexpr long long kMaxTensorDim = 4096;

long long pow_ll(int base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

// All index tuples of the given content, in lexicographic order.
std::vector<TensorVector::IndexTuple> tuples_of_content(const std::vector<int>& content, int k) {
    TensorVector::IndexTuple sorted;
    for (std::size_t i = 0; i < content.size(); ++i) {
        for (int c = 0; c < content[i]; ++c) sorted.push_back(static_cast<int>(i));
    }
    if (static_cast<int>(sorted.size()) != k) throw std::logic_error("content size mismatch");
    std::vector<TensorVector::IndexTuple> out;
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

// Enumerate all contents (compositions of k into n non-negative parts).
void contents_rec(int slot, int n, int remaining, std::vector<int>& acc,
                  std::vector<std::vector<int>>& out) {
    if (slot == n - 1) {
        acc[slot] = remaining;
        out.push_back(acc);
        return;
    }
    for (int c = remaining; c >= 0; --c) {
        acc[slot] = c;
        contents_rec(slot + 1, n, remaining - c, acc, out);
    }
}

std::vector<std::vector<int>> all_contents(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc(n, 0);
    contents_rec(0, n, k, acc, out);
    return out;
}

long long rational_matrix_rank(std::vector<std::vector<Rat>> rows) {
    long long rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        const Rat p = rows[pivot_row][col];
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat f = rows[r][col] / p;
            for (std::size_t j = col; j < cols; ++j) {
                if (rows[pivot_row][j] != 0) rows[r][j] -= f * rows[pivot_row][j];
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

// Rank of the projector restricted to one content class. The place
// permutation action preserves contents, so these blocks are independent.
long long content_block_rank(const GroupAlgebraElement& p, const std::vector<int>& content,
                             int k) {
    std::vector<TensorVector::IndexTuple> tuples = tuples_of_content(content, k);
    std::map<TensorVector::IndexTuple, std::size_t> index_of;
    for (std::size_t i = 0; i < tuples.size(); ++i) index_of[tuples[i]] = i;

    std::vector<std::vector<Rat>> rows(tuples.size(), std::vector<Rat>(tuples.size(), Rat(0)));
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const auto& t = tuples[i];
        for (const auto& [sigma, coeff] : p.terms()) {
            TensorVector::IndexTuple moved(t.size());
            for (int q = 0; q < sigma.degree(); ++q) moved[sigma(q)] = t[q];
            rows[i][index_of.at(moved)] += coeff;
        }
    }
    return rational_matrix_rank(std::move(rows));
}

}  // namespace

long long isotypic_rank(const Partition& lambda, int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("isotypic_rank: bad dimensions");
    if (pow_ll(n, k) > kMaxTensorDim) {
        throw ResourceLimitError("isotypic_rank: tensor space dimension exceeds cap");
    }
    GroupAlgebraElement p = isotypic_projector(lambda, k);
    long long rank = 0;
    for (const auto& content : all_contents(n, k)) {
        rank += content_block_rank(p, content, k);
    }
    return rank;
}

std::vector<IsotypicComponent> schur_weyl_decompose(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("schur_weyl_decompose: bad dimensions");
    if (pow_ll(n, k) > kMaxTensorDim) {
        throw ResourceLimitError("schur_weyl_decompose: tensor space dimension exceeds cap");
    }
    std::vector<IsotypicComponent> out;
    for (const Partition& lambda : partitions(k)) {
        IsotypicComponent comp;
        comp.partition = lambda;
        comp.dim_schur = semistandard_tableaux_count(lambda, n);
        comp.dim_specht = standard_tableaux_count(lambda);
        long long rank = isotypic_rank(lambda, n, k);
        if (rank != comp.dim_schur * comp.dim_specht) {
            throw std::logic_error("projector rank disagrees with tableau counts");
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::map<Weight, long long> weight_multiset(const Partition& lambda, int n) {
    if (lambda.rows() > n) {
        throw std::invalid_argument("weight_multiset: more parts than the dimension");
    }
    int k = lambda.sum();
    if (pow_ll(n, k) > kMaxTensorDim) {
        throw ResourceLimitError("weight_multiset: tensor space dimension exceeds cap");
    }
    GroupAlgebraElement p = isotypic_projector(lambda, k);
    long long f = standard_tableaux_count(lambda);
    std::map<Weight, long long> out;
    for (const auto& content : all_contents(n, k)) {
        long long rank = content_block_rank(p, content, k);
        if (rank == 0) continue;
        if (rank % f != 0) throw std::logic_error("content rank not divisible by dim M^lambda");
        std::vector<long long> values(content.begin(), content.end());
        out[Weight::from_values(values)] = rank / f;
    }
    return out;
}

}  // namespace weylcalc
