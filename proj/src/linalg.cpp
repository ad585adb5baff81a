#include "ghom/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gh {

SparseMatQ::SparseMatQ(int rows, int cols)
    : rows_(rows), cols_(cols), data_(rows) {}

void SparseMatQ::add(int row, int col, const mpq_class& value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw std::out_of_range("SparseMatQ::add");
    if (value == 0) return;
    auto& r = data_[row];
    auto it = std::lower_bound(
        r.begin(), r.end(), col,
        [](const std::pair<int, mpq_class>& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == col) {
        it->second += value;
        if (it->second == 0) r.erase(it);
    } else {
        r.insert(it, {col, value});
    }
}

long long SparseMatQ::num_entries() const {
    long long n = 0;
    for (const auto& r : data_) n += static_cast<long long>(r.size());
    return n;
}

void SparseMatQ::append_columns(const SparseMatQ& other) {
    if (other.rows_ != rows_)
        throw std::invalid_argument("append_columns: row count mismatch");
    for (int r = 0; r < rows_; ++r) {
        for (const auto& [c, v] : other.data_[r])
            data_[r].push_back({c + cols_, v});
    }
    cols_ += other.cols_;
}

namespace {

using Row = std::vector<std::pair<int, mpq_class>>;

// result = a + coeff * b, merged by column.
Row axpy(const Row& a, const mpq_class& coeff, const Row& b) {
    Row out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            mpq_class v = coeff * b[j].second;
            if (v != 0) out.push_back({b[j].first, std::move(v)});
            ++j;
        } else {
            mpq_class v = a[i].second + coeff * b[j].second;
            if (v != 0) out.push_back({a[i].first, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

int rank(const SparseMatQ& m) {
    // pivots[c] = row normalized to leading coefficient 1 in column c.
    std::map<int, Row> pivots;
    std::vector<int> order(m.rows());
    for (int r = 0; r < m.rows(); ++r) order[r] = r;
    // Process sparser rows first; they make cheaper pivots.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return m.row(a).size() < m.row(b).size();
    });
    for (int r : order) {
        Row cur = m.row(r);
        while (!cur.empty()) {
            auto it = pivots.find(cur.front().first);
            if (it == pivots.end()) break;
            cur = axpy(cur, -cur.front().second, it->second);
        }
        if (cur.empty()) continue;
        mpq_class lead = cur.front().second;
        for (auto& [c, v] : cur) v /= lead;
        pivots.emplace(cur.front().first, std::move(cur));
    }
    return static_cast<int>(pivots.size());
}

int kernel_dim(const SparseMatQ& m) { return m.cols() - rank(m); }

std::map<int, int> cohomology_dims(const PresentedComplex& cx) {
    std::map<int, int> out;
    auto basis_at = [&](int d) {
        auto it = cx.basis.find(d);
        return it == cx.basis.end() ? 0 : it->second;
    };
    auto rel_rank = [&](int d) {
        auto it = cx.relations.find(d);
        return it == cx.relations.end() ? 0 : rank(it->second);
    };
    // rank of the induced differential out of degree d, computed in the
    // presentation as rank([diff | relations_{d+1}]) - rank(relations_{d+1}).
    auto dbar_rank = [&](int d) {
        auto it = cx.diff.find(d);
        if (it == cx.diff.end() || basis_at(d) == 0 || basis_at(d + 1) == 0)
            return 0;
        SparseMatQ joint = it->second;
        auto rel = cx.relations.find(d + 1);
        if (rel != cx.relations.end()) {
            joint.append_columns(rel->second);
            return rank(joint) - rank(rel->second);
        }
        return rank(joint);
    };
    for (int d = cx.lo; d <= cx.hi; ++d) {
        int dim_space = basis_at(d) - rel_rank(d);
        int out_rank = dbar_rank(d);
        int in_rank = d > cx.lo ? dbar_rank(d - 1) : 0;
        out[d] = dim_space - out_rank - in_rank;
    }
    return out;
}

}  // namespace gh
