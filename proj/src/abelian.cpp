#include "mutlab/abelian.hpp"

#include <algorithm>

#include "mutlab/errors.hpp"

namespace mutlab {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::string AbelianInvariants::str() const {
  std::string out;
  for (const auto& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.str();
  }
  for (int i = 0; i < free_rank; ++i) {
    if (!out.empty()) out += " + ";
    out += "Z";
  }
  return out.empty() ? "0" : out;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

void add_row(IntMatrix& m, int dst, int src, const BigInt& q) {
  for (int c = 0; c < m.cols(); ++c) m.at(dst, c) += q * m.at(src, c);
}

void add_col(IntMatrix& m, int dst, int src, const BigInt& q) {
  for (int r = 0; r < m.rows(); ++r) m.at(r, dst) += q * m.at(r, src);
}

// floor division quotient for exact Euclidean-style reduction
BigInt div_round(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  // round to nearest to shrink entries fast
  if (2 * abs(r) > abs(b)) q += (a < 0) == (b < 0) ? 1 : -1;
  return q;
}

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  const int n = std::min(m.rows(), m.cols());
  int t = 0;
  while (t < n) {
    // pick a nonzero pivot of minimal magnitude in the trailing block
    int pr = -1, pc = -1;
    BigInt best = 0;
    for (int r = t; r < m.rows(); ++r) {
      for (int c = t; c < m.cols(); ++c) {
        const BigInt& v = m.at(r, c);
        if (v != 0 && (pr < 0 || abs(v) < best)) {
          best = abs(v);
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < m.rows(); ++r) {
        if (m.at(r, t) == 0) continue;
        BigInt q = div_round(m.at(r, t), m.at(t, t));
        add_row(m, r, t, -q);
        if (m.at(r, t) != 0) {
          swap_rows(m, t, r);  // remainder is smaller; keep reducing
          clean = false;
        }
      }
      for (int c = t + 1; c < m.cols(); ++c) {
        if (m.at(t, c) == 0) continue;
        BigInt q = div_round(m.at(t, c), m.at(t, t));
        add_col(m, c, t, -q);
        if (m.at(t, c) != 0) {
          swap_cols(m, t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: pivot must divide the trailing block
      for (int r = t + 1; r < m.rows() && clean; ++r) {
        for (int c = t + 1; c < m.cols() && clean; ++c) {
          if (m.at(r, c) % m.at(t, t) != 0) {
            add_row(m, t, r, 1);
            clean = false;
          }
        }
      }
    }
    ++t;
  }

  SmithResult res;
  res.diagonal.resize(n);
  for (int i = 0; i < n; ++i) res.diagonal[i] = abs(m.at(i, i));
  // chain fixup (already implied by the elimination, kept as a guard)
  std::stable_sort(res.diagonal.begin(), res.diagonal.end(),
                   [](const BigInt& a, const BigInt& b) {
                     if (a == 0) return false;
                     if (b == 0) return true;
                     return a < b;
                   });
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i) {
      BigInt &a = res.diagonal[i], &b = res.diagonal[i + 1];
      if (a != 0 && b != 0 && b % a != 0) {
        BigInt g = gcd(a, b);
        BigInt l = a / g * b;
        a = g;
        b = l;
        changed = true;
      }
    }
  }

  int rank = 0;
  for (const auto& d : res.diagonal) {
    if (d != 0) ++rank;
  }
  res.invariants.free_rank = m.cols() - rank;
  for (const auto& d : res.diagonal) {
    if (d > 1) res.invariants.torsion.push_back(d);
  }
  return res;
}

IntMatrix abelianize(const Presentation& p) {
  p.validate();
  IntMatrix m(static_cast<int>(p.relators.size()), static_cast<int>(p.generators.size()));
  for (int r = 0; r < m.rows(); ++r) {
    for (const Letter& l : p.relators[r].word.letters()) {
      m.at(r, p.generator_index(l.gen)) += l.exp;
    }
  }
  return m;
}

int central_defect_count(const Presentation& p) {
  int n = 0;
  for (const auto& r : p.relators) {
    if (r.defect == -1) ++n;
  }
  return n;
}

AbelianInvariants h1(const Presentation& p) {
  if (p.relators.empty()) return AbelianInvariants::free_of_rank(static_cast<int>(p.generators.size()));
  return smith_normal_form(abelianize(p)).invariants;
}

int solve_euler_class(const std::vector<int>& multiplicities, const AbelianInvariants& target,
                      EulerWindow window) {
  std::vector<int> ones(multiplicities.size(), 1);
  std::vector<int> hits;
  for (int e = window.lo; e <= window.hi; ++e) {
    if (h1(build_seifert(multiplicities, e, ones)) == target) hits.push_back(e);
  }
  std::string w = "[" + std::to_string(window.lo) + ", " + std::to_string(window.hi) + "]";
  if (hits.empty()) {
    throw NoSolutionError("no Euler class in " + w + " matches H1 = " + target.str());
  }
  if (hits.size() > 1) {
    throw NotUniqueError("multiple Euler classes in " + w + " match H1 = " + target.str());
  }
  return hits[0];
}

}  // namespace mutlab
