#pragma once

#include <utility>
#include <vector>

#include "relpoly/network.hpp"
#include "relpoly/numeric.hpp"

namespace relpoly {

/// Exact N-form coefficients N_0..N_n of one network.
struct CoefficientVector {
  int n = 0;
  std::vector<BigInt> counts;

  const BigInt& at(int k) const { return counts.at(static_cast<std::size_t>(k)); }
  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;
};

/// True iff S and T are joined by the perfect edges plus the closed devices.
bool is_connected(const DeviceGraph& graph, const std::vector<int>& closed_devices);

struct BruteForceOptions {
  int cap = 26;     // refuse enumeration beyond 2^cap states
  int workers = 1;  // disjoint state ranges; result independent of the split
};

/// Ground truth by exhaustive enumeration of all 2^n device states.
CoefficientVector brute_force_coefficients(const MatchstickNetwork& net,
                                           const BruteForceOptions& options = {});

/// Closed-form PoS coefficients via the alternating binomial sum.
CoefficientVector pos_coefficients(int length, int width);

/// SoP coefficients, obtained from the dual PoS by complementarity.
CoefficientVector sop_coefficients(int length, int width);

/// Complementarity map: N'_k = C(n, n-k) - N_{n-k}. Involutive.
CoefficientVector dual_coefficients(const CoefficientVector& cv);

/// (lower, upper) sandwich for N_k of any (l,w) network: PoS below, SoP above.
std::pair<BigInt, BigInt> coefficient_bounds(int length, int width, int k);

}  // namespace relpoly
