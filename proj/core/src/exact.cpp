#include "relpoly/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>

namespace relpoly {

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void uf_union(std::vector<int>& parent, int a, int b) {
  int ra = uf_find(parent, a), rb = uf_find(parent, b);
  if (ra != rb) parent[ra] = rb;
}

// The perfect edges never change, so they are contracted once; per state only
// the closed device edges are unioned over the contracted node set.
struct ContractedGraph {
  int node_count = 0;
  int source = 0;
  int terminus = 0;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> devices;
};

ContractedGraph contract_perfect(const DeviceGraph& g) {
  std::vector<int> parent(g.node_count);
  for (int i = 0; i < g.node_count; ++i) parent[i] = i;
  for (auto [a, b] : g.perfect_edges) uf_union(parent, a, b);

  std::vector<int> compact(g.node_count, -1);
  int next = 0;
  auto id = [&](int x) {
    int r = uf_find(parent, x);
    if (compact[r] < 0) compact[r] = next++;
    return compact[r];
  };

  ContractedGraph out;
  out.source = id(g.source);
  out.terminus = id(g.terminus);
  out.devices.reserve(g.device_edges.size());
  for (auto [a, b] : g.device_edges)
    out.devices.emplace_back(static_cast<std::uint8_t>(id(a)),
                             static_cast<std::uint8_t>(id(b)));
  out.node_count = next;
  if (out.node_count > 255) throw std::logic_error("contracted graph too large");
  return out;
}

using Tally = std::array<std::uint64_t, 27>;

void tally_range(const ContractedGraph& g, std::uint64_t begin, std::uint64_t end,
                 Tally& tally) {
  const int m = g.node_count;
  std::array<std::uint8_t, 256> parent{};
  for (std::uint64_t state = begin; state < end; ++state) {
    for (int i = 0; i < m; ++i) parent[i] = static_cast<std::uint8_t>(i);
    std::uint64_t bits = state;
    while (bits) {
      int d = std::countr_zero(bits);
      bits &= bits - 1;
      auto [a, b] = g.devices[static_cast<std::size_t>(d)];
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      while (parent[b] != b) b = parent[b] = parent[parent[b]];
      if (a != b) parent[a] = b;
    }
    std::uint8_t s = static_cast<std::uint8_t>(g.source);
    std::uint8_t t = static_cast<std::uint8_t>(g.terminus);
    while (parent[s] != s) s = parent[s] = parent[parent[s]];
    while (parent[t] != t) t = parent[t] = parent[parent[t]];
    if (s == t) ++tally[static_cast<std::size_t>(std::popcount(state))];
  }
}

}  // namespace

bool is_connected(const DeviceGraph& graph, const std::vector<int>& closed_devices) {
  const int n = static_cast<int>(graph.device_edges.size());
  std::vector<int> parent(graph.node_count);
  for (int i = 0; i < graph.node_count; ++i) parent[i] = i;
  for (auto [a, b] : graph.perfect_edges) uf_union(parent, a, b);
  for (int d : closed_devices) {
    if (d < 0 || d >= n) throw std::out_of_range("device index out of range");
    auto [a, b] = graph.device_edges[static_cast<std::size_t>(d)];
    uf_union(parent, a, b);
  }
  return uf_find(parent, graph.source) == uf_find(parent, graph.terminus);
}

CoefficientVector brute_force_coefficients(const MatchstickNetwork& net,
                                           const BruteForceOptions& options) {
  const int n = net.dims.size();
  if (n > options.cap)
    throw std::invalid_argument("brute force refused: n = " + std::to_string(n) +
                                " exceeds the enumeration cap " +
                                std::to_string(options.cap) +
                                " (raise the cap explicitly to override)");
  if (options.cap > 26)
    throw std::invalid_argument("enumeration cap above 26 is not supported");

  const ContractedGraph g = contract_perfect(to_device_graph(net));
  const std::uint64_t total = std::uint64_t{1} << n;
  const int workers = std::max(1, options.workers);

  std::vector<Tally> tallies(static_cast<std::size_t>(workers));
  for (auto& t : tallies) t.fill(0);
  if (workers == 1) {
    tally_range(g, 0, total, tallies[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
    for (int i = 0; i < workers; ++i) {
      std::uint64_t lo = chunk * static_cast<std::uint64_t>(i);
      std::uint64_t hi = i + 1 == workers ? total : lo + chunk;
      pool.emplace_back(tally_range, std::cref(g), lo, hi, std::ref(tallies[i]));
    }
    for (auto& t : pool) t.join();
  }

  CoefficientVector out;
  out.n = n;
  out.counts.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (const auto& t : tallies)
    for (int k = 0; k <= n; ++k) out.counts[k] += t[static_cast<std::size_t>(k)];
  return out;
}

CoefficientVector pos_coefficients(int length, int width) {
  if (length < 1 || width < 1)
    throw std::invalid_argument("pos_coefficients: l >= 1, w >= 1 required");
  const int n = length * width;
  CoefficientVector out;
  out.n = n;
  out.counts.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (int k = 0; k <= n; ++k) {
    BigInt acc = 0;
    for (int j = 1; j <= k / length; ++j) {
      BigInt term = binomial(width, j) * binomial(n - j * length, n - k);
      acc += (j % 2 == 1) ? term : -term;
    }
    out.counts[k] = acc;
  }
  return out;
}

CoefficientVector sop_coefficients(int length, int width) {
  return dual_coefficients(pos_coefficients(width, length));
}

CoefficientVector dual_coefficients(const CoefficientVector& cv) {
  CoefficientVector out;
  out.n = cv.n;
  out.counts.assign(cv.counts.size(), BigInt(0));
  for (int k = 0; k <= cv.n; ++k) {
    BigInt v = binomial(cv.n, cv.n - k) - cv.at(cv.n - k);
    if (v < 0)
      throw std::domain_error("dual_coefficients: N_" + std::to_string(cv.n - k) +
                              " exceeds C(n,k); input vector is corrupt");
    out.counts[k] = std::move(v);
  }
  return out;
}

std::pair<BigInt, BigInt> coefficient_bounds(int length, int width, int k) {
  const int n = length * width;
  if (k < 0 || k > n) throw std::invalid_argument("coefficient_bounds: k out of range");
  BigInt lower = 0;
  for (int j = 1; j <= k / length; ++j) {
    BigInt term = binomial(width, j) * binomial(n - j * length, n - k);
    lower += (j % 2 == 1) ? term : -term;
  }
  BigInt upper = 0;
  for (int j = 0; j <= (n - k) / width; ++j) {
    BigInt term = binomial(length, j) * binomial(n - j * width, k);
    upper += (j % 2 == 0) ? term : -term;
  }
  return {std::move(lower), std::move(upper)};
}

}  // namespace relpoly
