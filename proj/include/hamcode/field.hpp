#pragma once

#include <vector>

namespace hamcode {

// Finite field F_q, q = p^m.  Elements are integers 0..q-1; for m > 1 the
// integer is the polynomial-basis encoding sum c_i * p^i of the coset
// representative sum c_i * x^i.  Prime fields of any size do modular
// arithmetic directly; proper prime powers are table-driven and supported
// for q <= 16 (q = 4, 8, 9, 16) with fixed reduction polynomials
//   F_4 : x^2+x+1   F_8 : x^3+x+1   F_9 : x^2+1   F_16: x^4+x+1.
class FiniteField {
 public:
  explicit FiniteField(int p, int m = 1);

  // factors q as p^m and builds the field; rejects non-prime-powers
  static FiniteField of_order(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int m() const { return m_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;  // a != 0
  int div(int a, int b) const;

 private:
  void check(int a) const;

  int p_, m_, q_;
  std::vector<int> mul_table_;  // q*q, only when m > 1
  std::vector<int> inv_table_;
};

}  // namespace hamcode
