#include "hamcode/field.hpp"

#include <stdexcept>
#include <string>

namespace hamcode {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// reduction polynomial as coefficient vector, degree m, leading coefficient 1
std::vector<int> reduction_poly(int q) {
  switch (q) {
    case 4:  return {1, 1, 1};        // x^2 + x + 1
    case 8:  return {1, 1, 0, 1};     // x^3 + x + 1
    case 9:  return {1, 0, 1};        // x^2 + 1
    case 16: return {1, 1, 0, 0, 1};  // x^4 + x + 1
    default:
      throw std::invalid_argument("FiniteField: no reduction polynomial for q = " +
                                  std::to_string(q));
  }
}

std::vector<int> digits_of(int a, int p, int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int value_of(const std::vector<int>& d, int p) {
  int v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

FiniteField::FiniteField(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic must be prime");
  if (m < 1) throw std::invalid_argument("FiniteField: extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > 1 << 20) throw std::invalid_argument("FiniteField: order too large");
  }
  q_ = static_cast<int>(q);
  if (m_ == 1) return;

  if (q_ > 16)
    throw std::invalid_argument("FiniteField: proper prime powers supported only up to 16");
  const std::vector<int> red = reduction_poly(q_);

  // polynomial multiplication followed by reduction, tabulated once
  mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
  for (int a = 0; a < q_; ++a) {
    const auto da = digits_of(a, p_, m_);
    for (int b = 0; b < q_; ++b) {
      const auto db = digits_of(b, p_, m_);
      std::vector<int> prod(2 * m_ - 1, 0);
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int deg = 2 * m_ - 2; deg >= m_; --deg) {
        const int lead = prod[deg];
        if (lead == 0) continue;
        prod[deg] = 0;
        for (int i = 0; i < m_; ++i)
          prod[deg - m_ + i] = ((prod[deg - m_ + i] - lead * red[i]) % p_ + p_) % p_;
      }
      prod.resize(m_);
      mul_table_[static_cast<std::size_t>(a) * q_ + b] = value_of(prod, p_);
    }
  }
  inv_table_.assign(q_, 0);
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_table_[static_cast<std::size_t>(a) * q_ + b] == 1) {
        inv_table_[a] = b;
        break;
      }
}

FiniteField FiniteField::of_order(int q) {
  if (q < 2) throw std::invalid_argument("FiniteField: order must be >= 2");
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return FiniteField(q, 1);
  int m = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1)
    throw std::invalid_argument("FiniteField: " + std::to_string(q) + " is not a prime power");
  return FiniteField(p, m);
}

void FiniteField::check(int a) const {
  if (a < 0 || a >= q_) throw std::invalid_argument("FiniteField: element out of range");
}

int FiniteField::add(int a, int b) const {
  check(a);
  check(b);
  if (m_ == 1) return (a + b) % p_;
  int out = 0, pw = 1;
  for (int i = 0; i < m_; ++i, pw *= p_)
    out += (a / pw + b / pw) % p_ * pw;
  return out;
}

int FiniteField::neg(int a) const {
  check(a);
  if (m_ == 1) return (p_ - a) % p_;
  int out = 0, pw = 1;
  for (int i = 0; i < m_; ++i, pw *= p_)
    out += (p_ - (a / pw) % p_) % p_ * pw;
  return out;
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul(int a, int b) const {
  check(a);
  check(b);
  if (m_ == 1) return static_cast<int>(static_cast<long long>(a) * b % p_);
  return mul_table_[static_cast<std::size_t>(a) * q_ + b];
}

int FiniteField::inv(int a) const {
  check(a);
  if (a == 0) throw std::invalid_argument("FiniteField: zero has no inverse");
  if (m_ > 1) return inv_table_[a];
  // extended Euclid on (a, p)
  int r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const int qt = r0 / r1;
    const int r2 = r0 - qt * r1, s2 = s0 - qt * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return (s0 % p_ + p_) % p_;
}

int FiniteField::div(int a, int b) const { return mul(a, inv(b)); }

}  // namespace hamcode
