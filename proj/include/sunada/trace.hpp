#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "sunada/words.hpp"

namespace sunada {

class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer polynomial in the commuting trace coordinates
/// x = tr(a), y = tr(b), z = tr(ab), with exact (overflow-checked) arithmetic.
struct TracePoly {
  using Key = std::tuple<int, int, int>;  // exponents of x, y, z
  std::map<Key, long long> terms;         // canonical sorted-term form

  bool operator==(const TracePoly&) const = default;

  static TracePoly constant(long long c);
  static TracePoly variable(int which);  // 0 -> x, 1 -> y, 2 -> z

  TracePoly operator+(const TracePoly& o) const;
  TracePoly operator-(const TracePoly& o) const;
  TracePoly operator*(const TracePoly& o) const;

  double evaluate(double x, double y, double z) const;
  std::string str() const;  // e.g. "x^2*y - 2"
};

/// The unique polynomial P with P(tr a, tr b, tr ab) = tr w for every SL2
/// representation of the free group on {a, b}.
TracePoly trace_polynomial(const Word& w);

/// tr(w^n) from P = tr(w): t1 = P, t2 = P^2 - 2, t_{n+1} = P t_n - t_{n-1}.
TracePoly power_trace(const TracePoly& p, int n);

struct CommensurabilityWitness {
  int m = 0;
  int n = 0;  // tr(w1^m)^2 = tr(w2^n)^2
};

/// Least witness (by m+n, then m) with 1 <= m, n <= bound, if any.
std::optional<CommensurabilityWitness> trace_commensurable(const Word& w1,
                                                           const Word& w2, int bound);

/// Commensurable within the bound with no conjugate powers w1^m ~ w2^{+-n}.
bool is_trace_twin_pair(const Word& w1, const Word& w2, int bound);

struct TwinCertificate {
  bool granted = false;
  std::string reason;
};

/// Certifies that the curve class of w on a closed genus-`genus` surface has
/// no length twins, for the proven families only: powers of one standard
/// generator, and two-generator words a_i^j a_k^l of distinct handle
/// generators at genus >= 3. Genus 2 is refused (the hyperelliptic
/// involution produces a twin).
TwinCertificate no_length_twins_certificate(const Word& w, int genus);

}  // namespace sunada
