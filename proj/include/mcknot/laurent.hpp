// Copyright 2026 The mcknot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/// Exact Laurent polynomials in the bracket variable A.
///
/// Storage is dense: the coefficient of A^(low() + i) lives at index i, and
/// both ends of the coefficient vector are nonzero.  The zero polynomial has
/// an empty vector.  Coefficients default to arbitrary-precision integers;
/// the hot state-sum loops accumulate in 64-bit and convert at the end.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcknot {

using BigInt = boost::multiprecision::cpp_int;

template <typename Coeff>
class BasicLaurent {
 public:
  using coeff_type = Coeff;
  /// (exponent, coefficient), descending exponent.
  using MachineForm = std::vector<std::pair<int, Coeff>>;

  BasicLaurent() = default;

  /// The constant polynomial c.
  explicit BasicLaurent(Coeff c) : low_(0) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }

  static BasicLaurent monomial(Coeff c, int exponent) {
    BasicLaurent p(std::move(c));
    if (!p.is_zero()) p.low_ = exponent;
    return p;
  }

  /// Builds from (exponent, coefficient) pairs in any order; duplicates add.
  static BasicLaurent from_terms(const std::vector<std::pair<int, Coeff>>& terms) {
    BasicLaurent p;
    for (const auto& [e, c] : terms) p += monomial(c, e);
    return p;
  }

  /// Dense constructor: coefficient of A^(low + i) is coeffs[i].
  static BasicLaurent from_dense(int low, std::vector<Coeff> coeffs) {
    BasicLaurent p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& dense() const { return coeffs_; }

  Coeff coeff(int exponent) const {
    if (is_zero() || exponent < low() || exponent > high()) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
  }

  /// max exponent - min exponent.  Undefined for the zero polynomial.
  int span() const {
    if (is_zero()) throw std::domain_error("span undefined for the zero polynomial");
    return high() - low();
  }

  /// Substitution A -> A^-1.
  BasicLaurent mirror() const {
    BasicLaurent p;
    if (is_zero()) return p;
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.low_ = -high();
    return p;
  }

  /// Multiplication by A^k.
  BasicLaurent shifted(int k) const {
    BasicLaurent p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
  }

  BasicLaurent& operator+=(const BasicLaurent& q) {
    if (q.is_zero()) return *this;
    if (is_zero()) {
      *this = q;
      return *this;
    }
    const int lo = std::min(low(), q.low());
    const int hi = std::max(high(), q.high());
    std::vector<Coeff> out(static_cast<std::size_t>(hi - lo + 1), Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(low_ - lo)] += coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i + static_cast<std::size_t>(q.low_ - lo)] += q.coeffs_[i];
    low_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
  }

  BasicLaurent operator-() const {
    BasicLaurent p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  BasicLaurent& operator-=(const BasicLaurent& q) { return *this += -q; }

  friend BasicLaurent operator+(BasicLaurent p, const BasicLaurent& q) { return p += q; }
  friend BasicLaurent operator-(BasicLaurent p, const BasicLaurent& q) { return p -= q; }

  friend BasicLaurent operator*(const BasicLaurent& p, const BasicLaurent& q) {
    BasicLaurent r;
    if (p.is_zero() || q.is_zero()) return r;
    r.low_ = p.low_ + q.low_;
    r.coeffs_.assign(p.coeffs_.size() + q.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r.coeffs_[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    r.trim();
    return r;
  }

  BasicLaurent& operator*=(const BasicLaurent& q) { return *this = *this * q; }

  friend bool operator==(const BasicLaurent& p, const BasicLaurent& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return p.low_ == q.low_ && p.coeffs_ == q.coeffs_;
  }
  friend bool operator!=(const BasicLaurent& p, const BasicLaurent& q) { return !(p == q); }

  MachineForm machine_form() const {
    MachineForm out;
    for (int e = high(); !is_zero() && e >= low(); --e) {
      const Coeff& c = coeffs_[static_cast<std::size_t>(e - low_)];
      if (c != 0) out.emplace_back(e, c);
    }
    return out;
  }

  /// Canonical rendering, descending exponent: "-A^5 - A^-3 + A^-7".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : machine_form()) {
      Coeff mag = c < 0 ? Coeff(-c) : c;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag;
      os << 'A';
      if (e != 1) os << '^' << e;
    }
    return os.str();
  }

  /// Inverse of to_string().
  static BasicLaurent parse(const std::string& text);

  template <typename Other>
  BasicLaurent<Other> convert() const {
    std::vector<Other> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(Other(c));
    return BasicLaurent<Other>::from_dense(low_, std::move(out));
  }

 private:
  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

template <typename Coeff>
BasicLaurent<Coeff> BasicLaurent<Coeff>::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  if (s == "0") return {};
  BasicLaurent p;
  std::size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("malformed polynomial: " + text); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Coeff c(digits == i ? 1 : 0);
    for (std::size_t k = digits; k < i; ++k) c = c * 10 + (s[k] - '0');
    int e = 0;
    if (i < s.size() && s[i] == 'A') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail();
        e = std::stoi(s.substr(start, i - start));
      }
    } else if (digits == i) {
      fail();
    }
    p += monomial(sign < 0 ? Coeff(-c) : c, e);
  }
  return p;
}

using LaurentPoly = BasicLaurent<BigInt>;

/// The loop value -A^2 - A^-2.
inline LaurentPoly delta() { return LaurentPoly::from_terms({{2, BigInt(-1)}, {-2, BigInt(-1)}}); }

/// (-A^2 - A^-2)^k.
inline LaurentPoly delta_power(int k) {
  if (k < 0) throw std::domain_error("delta_power: negative exponent");
  LaurentPoly out(BigInt(1));
  const LaurentPoly d = delta();
  for (int i = 0; i < k; ++i) out *= d;
  return out;
}

/// Writes an exact integer; values beyond int64 become decimal strings so the
/// machine form stays lossless.
inline std::string bigint_to_string(const BigInt& v) { return v.str(); }

inline bool fits_int64(const BigInt& v) {
  return v >= BigInt(std::numeric_limits<std::int64_t>::min()) &&
         v <= BigInt(std::numeric_limits<std::int64_t>::max());
}

/// Lexicographic comparison of machine forms (exponent first, then coefficient).
inline bool machine_less(const LaurentPoly::MachineForm& a, const LaurentPoly::MachineForm& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace mcknot
