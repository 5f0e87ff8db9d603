#include "ptelab/exact_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ptelab::linalg {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative shape");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rat(0));
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Rat& ExactMatrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("ExactMatrix::at");
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(j)];
}

const Rat& ExactMatrix::at(int i, int j) const {
    return const_cast<ExactMatrix*>(this)->at(i, j);
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    ExactMatrix r = *this;
    r += o;
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    ExactMatrix r = *this;
    r -= o;
    return r;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("ExactMatrix: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("ExactMatrix: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: product shape mismatch");
    ExactMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& b = o.at(k, j);
                if (b != 0) r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

ExactMatrix ExactMatrix::operator*(const Rat& c) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
    ExactMatrix r(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Rat& a = at(i, j);
            if (a == 0) continue;
            for (int p = 0; p < o.rows_; ++p)
                for (int q = 0; q < o.cols_; ++q) {
                    const Rat& b = o.at(p, q);
                    if (b != 0) r.at(i * o.rows_ + p, j * o.cols_ + q) = a * b;
                }
        }
    return r;
}

Rat ExactMatrix::trace() const {
    if (!is_square()) throw std::domain_error("ExactMatrix::trace: not square");
    Rat t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rat& v) { return v == 0; });
}

std::optional<Rat> ExactMatrix::as_scalar() const {
    if (!is_square() || rows_ == 0) return std::nullopt;
    const Rat& c = at(0, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? (at(i, j) != c) : (at(i, j) != 0)) return std::nullopt;
        }
    return c;
}

bool ExactMatrix::commutes_with(const ExactMatrix& o) const {
    return (*this) * o == o * (*this);
}

int ExactMatrix::rank() const {
    // Scale each row by the lcm of its denominators: row scaling preserves
    // rank and gives integer data for fraction-free elimination.
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        Int lcm(1);
        for (int j = 0; j < cols_; ++j) {
            Int den = at(i, j).get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        auto& row = m[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(cols_));
        for (int j = 0; j < cols_; ++j) {
            Rat v = at(i, j) * Rat(lcm);
            row[static_cast<std::size_t>(j)] = v.get_num();  // denominator is 1 now
        }
    }
    // Bareiss: all divisions below are exact by the fraction-free identity.
    int rank = 0;
    Int prev(1);
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        const Int piv = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (int r = rank + 1; r < rows_; ++r) {
            auto& target = m[static_cast<std::size_t>(r)];
            const auto& src = m[static_cast<std::size_t>(rank)];
            const Int head = target[static_cast<std::size_t>(col)];
            for (int j = col; j < cols_; ++j) {
                Int v = piv * target[static_cast<std::size_t>(j)] -
                        head * src[static_cast<std::size_t>(j)];
                target[static_cast<std::size_t>(j)] = div_exact(v, prev);
            }
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

std::string ExactMatrix::to_string() const {
    std::vector<std::string> cells;
    cells.reserve(data_.size());
    std::size_t width = 0;
    for (const auto& v : data_) {
        cells.push_back(rat_str(v));
        width = std::max(width, cells.back().size());
    }
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << '[';
        for (int j = 0; j < cols_; ++j) {
            const std::string& s =
                cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                      static_cast<std::size_t>(j)];
            if (j) os << ' ';
            os << std::string(width - s.size(), ' ') << s;
        }
        os << "]\n";
    }
    return os.str();
}

void RowEchelon::reduce(std::vector<Rat>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[static_cast<std::size_t>(pivots_[r])];
        if (c == 0) continue;
        Rat factor = c;  // basis rows have pivot exactly 1
        for (int j = 0; j < width_; ++j)
            v[static_cast<std::size_t>(j)] -= factor * rows_[r][static_cast<std::size_t>(j)];
    }
}

bool RowEchelon::add(std::vector<Rat> v) {
    if (static_cast<int>(v.size()) != width_)
        throw std::invalid_argument("RowEchelon::add: width mismatch");
    reduce(v);
    int pivot = -1;
    for (int j = 0; j < width_; ++j)
        if (v[static_cast<std::size_t>(j)] != 0) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    Rat inv = v[static_cast<std::size_t>(pivot)];
    for (int j = 0; j < width_; ++j) v[static_cast<std::size_t>(j)] /= inv;
    // Back-substitute into existing rows to stay fully reduced.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rat c = rows_[r][static_cast<std::size_t>(pivot)];
        if (c == 0) continue;
        for (int j = 0; j < width_; ++j)
            rows_[r][static_cast<std::size_t>(j)] -= c * v[static_cast<std::size_t>(j)];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool RowEchelon::contains(std::vector<Rat> v) const {
    if (static_cast<int>(v.size()) != width_)
        throw std::invalid_argument("RowEchelon::contains: width mismatch");
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

bool in_span(const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& target) {
    RowEchelon ech(static_cast<int>(target.size()));
    for (const auto& c : columns) ech.add(c);
    return ech.contains(target);
}

}  // namespace ptelab::linalg
