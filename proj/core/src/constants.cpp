#include "betaram/constants.hpp"

#include "betaram/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace betaram {
namespace {

std::vector<BigRational> build_bernoulli(int count) {
  // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1.
  std::vector<BigRational> b(static_cast<std::size_t>(count));
  b[0] = 1;
  for (int m = 1; m < count; ++m) {
    BigRational acc = 0;
    BigInt c = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += BigRational(c) * b[static_cast<std::size_t>(k)];
      c = c * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / BigRational(m + 1);
  }
  return b;
}

std::vector<BigInt> build_euler(int max_index) {
  // Seidel boustrophedon triangle: the last entry of row n is the zigzag
  // number A_n; E_{2k} = (-1)^k A_{2k}.
  std::vector<BigInt> prev{1};
  std::vector<BigInt> zigzag{1};
  for (int n = 1; n <= max_index; ++n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 0;
    for (int k = 1; k <= n; ++k) {
      row[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(n - k)];
    }
    zigzag.push_back(row.back());
    prev = std::move(row);
  }
  std::vector<BigInt> e(static_cast<std::size_t>(max_index) + 1, 0);
  for (int n = 0; n <= max_index; n += 2) {
    e[static_cast<std::size_t>(n)] =
        (n / 2) % 2 == 0 ? zigzag[static_cast<std::size_t>(n)] : BigInt(-zigzag[static_cast<std::size_t>(n)]);
  }
  return e;
}

RationalConstantTable build_table() {
  RationalConstantTable t;
  t.bernoulli = build_bernoulli(2 * kTableK + 2);
  t.euler = build_euler(2 * kTableK);
  t.bernoulli_even_double.reserve(kTableK + 1);
  for (int k = 0; k <= kTableK; ++k) {
    t.bernoulli_even_double.push_back(
        t.bernoulli[static_cast<std::size_t>(2 * k)].convert_to<double>());
  }
  return t;
}

}  // namespace

const RationalConstantTable& constant_table() {
  static const RationalConstantTable table = build_table();
  return table;
}

namespace detail {

void throw_domain(const std::string& where, const std::string& what) {
  throw DomainError(where + ": " + what);
}

void throw_range(const std::string& where, const std::string& what) {
  throw RangeError(where + ": " + what);
}

}  // namespace detail
}  // namespace betaram
