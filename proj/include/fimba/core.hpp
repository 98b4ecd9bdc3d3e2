#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fimba {

// Raised for problems with user-supplied data or files (bad CSV cell,
// missing label column, version mismatch on load, ...). The CLI maps it
// to exit code 2; everything else lands on 3.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense row-major matrix of doubles. Rows are the unit of access
// everywhere (samples, background rows, spectra rows).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
  }

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  std::span<double> row(int r) {
    return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }
  std::span<const double> row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }
  void set_row(int r, std::span<const double> v);

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  Matrix select_rows(std::span<const int> indices) const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// Runs fn(begin, end) over contiguous chunks of [0, n), on up to
// `threads` workers. Chunking is fixed by (n, threads); callers must
// only write to disjoint slots so results do not depend on scheduling.
void parallel_for(int n, int threads, const std::function<void(int, int)>& fn);

// Clamps a requested worker count to something sane (0 = all cores).
int resolve_threads(int requested);

// Shortest round-trip decimal form of a double (std::to_chars).
// Used for every CSV/JSON artifact so reruns are byte-identical.
std::string format_double(double v);

// Inverse of format_double; throws DataError on junk.
double parse_double(std::string_view s);

}  // namespace fimba
