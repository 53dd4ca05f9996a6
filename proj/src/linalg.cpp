#include "repstab/linalg.hpp"

#include <algorithm>

namespace repstab::linalg {

SparseVector from_map(const std::map<int, Rational>& entries) {
    SparseVector out;
    out.reserve(entries.size());
    for (const auto& [col, value] : entries)
        if (value != 0) out.emplace_back(col, value);
    return out;
}

namespace {

using IntRow = std::vector<std::pair<int, BigInt>>;

// Scales a rational vector to a primitive integer one; returns the factor applied.
IntRow to_integer_row(const SparseVector& v, Rational* factor) {
    BigInt denom_lcm = 1;
    for (const auto& [col, value] : v) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), value.get_den_mpz_t());
    IntRow row;
    row.reserve(v.size());
    for (const auto& [col, value] : v) {
        BigInt scaled = value.get_num() * (denom_lcm / value.get_den());
        row.emplace_back(col, std::move(scaled));
    }
    *factor = Rational(denom_lcm);
    return row;
}

BigInt content(const IntRow& row) {
    BigInt g = 0;
    for (const auto& [col, value] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

}  // namespace

EchelonBasis::IntRow EchelonBasis::eliminate(IntRow v, const IntRow& row, Rational* scale) {
    // v <- p*v - c*row where p = pivot of row, c = v's entry in the pivot column,
    // then divide out the content.
    const int col = row.front().first;
    auto hit = std::lower_bound(v.begin(), v.end(), col, [](const auto& e, int c) { return e.first < c; });
    const BigInt c = hit->second;
    const BigInt& p = row.front().second;
    IntRow out;
    out.reserve(v.size() + row.size());
    auto a = v.begin();
    auto b = row.begin();
    while (a != v.end() || b != row.end()) {
        if (b == row.end() || (a != v.end() && a->first < b->first)) {
            out.emplace_back(a->first, p * a->second);
            ++a;
        } else if (a == v.end() || b->first < a->first) {
            out.emplace_back(b->first, -c * b->second);
            ++b;
        } else {
            BigInt value = p * a->second - c * b->second;
            if (value != 0) out.emplace_back(a->first, std::move(value));
            ++a;
            ++b;
        }
    }
    const BigInt g = content(out);
    if (g > 1)
        for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    if (scale) {
        Rational ratio(p, g > 1 ? g : BigInt(1));
        ratio.canonicalize();
        *scale *= ratio;
    }
    return out;
}

EchelonBasis::IntRow EchelonBasis::reduce_int(IntRow v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
        auto it = pivots_.find(v[pos].first);
        if (it == pivots_.end()) {
            ++pos;
            continue;
        }
        v = eliminate(std::move(v), rows_[it->second]);
    }
    return v;
}

bool EchelonBasis::insert(const SparseVector& v) {
    if (v.empty()) return false;
    Rational factor;
    IntRow row = to_integer_row(v, &factor);
    row = reduce_int(std::move(row));
    if (row.empty()) return false;
    const BigInt g = content(row);
    for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    if (row.front().second < 0)
        for (auto& e : row) e.second = -e.second;
    pivots_.emplace(row.front().first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

SparseVector EchelonBasis::reduce(const SparseVector& v) const {
    Rational scale;  // invariant: row = scale * (remainder of v)
    IntRow row = to_integer_row(v, &scale);
    std::size_t pos = 0;
    while (pos < row.size()) {
        auto it = pivots_.find(row[pos].first);
        if (it == pivots_.end()) {
            ++pos;
            continue;
        }
        row = eliminate(std::move(row), rows_[it->second], &scale);
    }
    SparseVector result;
    result.reserve(row.size());
    for (auto& [col, value] : row) result.emplace_back(col, Rational(value) / scale);
    for (auto& e : result) e.second.canonicalize();
    return result;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Rational Matrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

std::size_t Matrix::rank() const {
    std::vector<std::vector<BigInt>> a(rows_, std::vector<BigInt>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        BigInt denom_lcm = 1;
        for (std::size_t c = 0; c < cols_; ++c)
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), (*this)(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols_; ++c)
            a[r][c] = (*this)(r, c).get_num() * (denom_lcm / (*this)(r, c).get_den());
    }
    // Bareiss: every intermediate entry is a minor of the input, so divisions are exact.
    std::size_t rank = 0;
    BigInt previous = 1;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && a[pivot][col] == 0) ++pivot;
        if (pivot == rows_) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            for (std::size_t c = col + 1; c < cols_; ++c) {
                a[r][c] = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), previous.get_mpz_t());
            }
            a[r][col] = 0;
        }
        previous = a[rank][col];
        ++rank;
    }
    return rank;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
        }
    return out;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != blocks.front().rows()) throw Error(ErrorCode::InvalidArgument, "hstack row mismatch");
        cols += b.cols();
    }
    Matrix out(blocks.front().rows(), cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, offset + c) = b(r, c);
        offset += b.cols();
    }
    return out;
}

}  // namespace repstab::linalg
