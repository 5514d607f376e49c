#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mutlab/presentation.hpp"

namespace mutlab {

// Exact integers: Smith pivoting and the Euler-class scan overflow 64 bits on
// adversarial inputs, so no machine-word shortcuts anywhere in this module.
using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int r, int c) { return a_[r * cols_ + c]; }
  const BigInt& at(int r, int c) const { return a_[r * cols_ + c]; }
  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_, cols_;
  std::vector<BigInt> a_;
};

// Invariant factors d_1 | d_2 | ... (all >= 2, 1s dropped) plus free rank.
struct AbelianInvariants {
  std::vector<BigInt> torsion;
  int free_rank = 0;
  bool operator==(const AbelianInvariants&) const = default;
  std::string str() const;

  static AbelianInvariants free_of_rank(int r) { return AbelianInvariants{{}, r}; }
};

struct SmithResult {
  std::vector<BigInt> diagonal;  // nonnegative, divisibility chain
  AbelianInvariants invariants;  // cokernel, cols = ambient rank
};

SmithResult smith_normal_form(IntMatrix m);

// One row per relator (exponent sums), one column per generator.  Central
// defects do not abelianize to relations; callers wanting them report the
// count via `central_defect_count`.
IntMatrix abelianize(const Presentation& p);
int central_defect_count(const Presentation& p);

AbelianInvariants h1(const Presentation& p);

struct EulerWindow {
  int lo = -50;
  int hi = 50;
};

// Scans build_seifert(multiplicities, e, (1,...,1)) over the window for the
// unique e whose H1 matches `target`.  Throws NoSolutionError /
// NotUniqueError, both carrying the scanned window.
int solve_euler_class(const std::vector<int>& multiplicities, const AbelianInvariants& target,
                      EulerWindow window = {});

}  // namespace mutlab
