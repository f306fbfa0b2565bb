#pragma once

#include <cstdint>
#include <vector>

namespace hamcon {

// Finite field GF(q) for q in {2,3,4,5,7,8,9}. Prime orders use modular
// arithmetic; q = 4, 8, 9 are built from fixed irreducible polynomials
// (x^2+x+1, x^3+x+1, x^2+1). The constructor checks the field axioms over
// all table entries and throws std::logic_error if any fails.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;  // throws on a == 0

  static bool supported(int q);
  static const std::vector<int>& supported_orders();

 private:
  void verify_axioms() const;
  int q_;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace hamcon
