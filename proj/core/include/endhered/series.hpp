#pragma once

// Bivariate power series in z and u, truncated at a fixed z-degree.
// u-powers are unbounded; every product drops terms with z-power above
// max_degree().

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace endhered {

template <class Coeff>
class TruncatedBivariateSeries {
 public:
  explicit TruncatedBivariateSeries(std::size_t max_degree) : rows_(max_degree + 1) {}

  static TruncatedBivariateSeries monomial(std::size_t max_degree, std::size_t z_power,
                                           std::size_t u_power, Coeff c) {
    TruncatedBivariateSeries s(max_degree);
    s.add_term(z_power, u_power, std::move(c));
    return s;
  }

  std::size_t max_degree() const noexcept { return rows_.size() - 1; }

  /// Highest u-power stored for z^z_power, plus one.
  std::size_t u_extent(std::size_t z_power) const { return rows_.at(z_power).size(); }

  Coeff coeff(std::size_t z_power, std::size_t u_power) const {
    if (z_power >= rows_.size() || u_power >= rows_[z_power].size()) return Coeff(0);
    return rows_[z_power][u_power];
  }

  void add_term(std::size_t z_power, std::size_t u_power, const Coeff& c) {
    if (z_power > max_degree() || c == 0) return;
    auto& row = rows_[z_power];
    if (row.size() <= u_power) row.resize(u_power + 1, Coeff(0));
    row[u_power] += c;
  }

  TruncatedBivariateSeries& operator+=(const TruncatedBivariateSeries& other) {
    check_compatible(other);
    for (std::size_t z = 0; z < other.rows_.size(); ++z) {
      for (std::size_t u = 0; u < other.rows_[z].size(); ++u) add_term(z, u, other.rows_[z][u]);
    }
    return *this;
  }

  friend TruncatedBivariateSeries operator+(TruncatedBivariateSeries a,
                                            const TruncatedBivariateSeries& b) {
    a += b;
    return a;
  }

  /// Zero coefficients are skipped, so multiplying by a sparse series costs
  /// O(terms(a) * terms(b)).
  friend TruncatedBivariateSeries operator*(const TruncatedBivariateSeries& a,
                                            const TruncatedBivariateSeries& b) {
    a.check_compatible(b);
    TruncatedBivariateSeries out(a.max_degree());
    for (std::size_t za = 0; za < a.rows_.size(); ++za) {
      for (std::size_t ua = 0; ua < a.rows_[za].size(); ++ua) {
        const Coeff& ca = a.rows_[za][ua];
        if (ca == 0) continue;
        for (std::size_t zb = 0; za + zb <= out.max_degree() && zb < b.rows_.size(); ++zb) {
          for (std::size_t ub = 0; ub < b.rows_[zb].size(); ++ub) {
            const Coeff& cb = b.rows_[zb][ub];
            if (cb == 0) continue;
            out.add_term(za + zb, ua + ub, ca * cb);
          }
        }
      }
    }
    return out;
  }

  friend bool operator==(const TruncatedBivariateSeries& a, const TruncatedBivariateSeries& b) {
    if (a.max_degree() != b.max_degree()) return false;
    for (std::size_t z = 0; z < a.rows_.size(); ++z) {
      const std::size_t width = std::max(a.rows_[z].size(), b.rows_[z].size());
      for (std::size_t u = 0; u < width; ++u) {
        if (a.coeff(z, u) != b.coeff(z, u)) return false;
      }
    }
    return true;
  }

 private:
  void check_compatible(const TruncatedBivariateSeries& other) const {
    if (other.max_degree() != max_degree()) {
      throw std::invalid_argument("series truncated at different degrees");
    }
  }

  std::vector<std::vector<Coeff>> rows_;
};

/// outer(inner) = sum_n outer[n] * inner^n by Horner's rule. inner must have
/// no constant term so the truncation is exact; outer terms above the
/// truncation degree are ignored.
template <class Coeff>
TruncatedBivariateSeries<Coeff> compose(std::span<const Coeff> outer,
                                        const TruncatedBivariateSeries<Coeff>& inner) {
  const std::size_t deg = inner.max_degree();
  for (std::size_t u = 0; u < inner.u_extent(0); ++u) {
    if (inner.coeff(0, u) != 0) throw std::invalid_argument("compose: inner series has a constant term");
  }
  TruncatedBivariateSeries<Coeff> acc(deg);
  const std::size_t top = std::min(outer.size(), deg + 1);
  for (std::size_t n = top; n-- > 0;) {
    acc = acc * inner;
    acc.add_term(0, 0, outer[n]);
  }
  return acc;
}

}  // namespace endhered
