#include "relpoly/network.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace relpoly {
namespace {

MatchstickNetwork random_network(std::mt19937& rng, int max_dim = 6) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  int l = dim(rng), w = dim(rng);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>((l - 1) * (w - 1)));
  std::bernoulli_distribution coin(0.5);
  for (auto& b : bits) b = coin(rng) ? 1 : 0;
  return from_matrix(l, w, bits, "random");
}

TEST(Network, PosBuilders) {
  auto net = make_pos(2, 2);
  EXPECT_EQ(net.dims, (Dims{2, 2}));
  EXPECT_EQ(net.matrix.rows(), 1);
  EXPECT_EQ(net.matrix.cols(), 1);
  EXPECT_FALSE(net.matrix.at(0, 0));

  auto parallel = make_pos(1, 4);
  EXPECT_EQ(parallel.matrix.rows(), 0);
  EXPECT_EQ(parallel.dims.size(), 4);

  auto square = make_pos(4, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_FALSE(square.matrix.at(i, j));

  EXPECT_THROW(make_pos(0, 2), std::invalid_argument);
  EXPECT_THROW(make_pos(2, 0), std::invalid_argument);
}

TEST(Network, SopBuilders) {
  auto net = make_sop(2, 2);
  EXPECT_TRUE(net.matrix.at(0, 0));
  EXPECT_EQ(dual(make_sop(3, 5)), make_pos(5, 3));
  EXPECT_EQ(dual(make_pos(3, 5)), make_sop(5, 3));
}

TEST(Network, HammockPattern) {
  // the square 4-by-4 brick walls: H has sticks where 1-based (i+j) is odd
  auto h = make_hammock(4, 4, HammockVariant::H);
  auto figure = from_matrix(4, 4, {0, 1, 0, 1, 0, 1, 0, 1, 0});
  EXPECT_EQ(h, figure);

  auto hplus = make_hammock(4, 4, HammockVariant::HPlus);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_NE(h.matrix.at(i, j), hplus.matrix.at(i, j));

  EXPECT_EQ(make_hammock(1, 5).matrix.rows(), 0);
  EXPECT_THROW(make_hammock(3, 5, HammockVariant::HPlus), std::invalid_argument);
  EXPECT_THROW(make_hammock(4, 5, HammockVariant::HPlus), std::invalid_argument);
}

TEST(Network, FromMatrixValidation) {
  EXPECT_EQ(from_matrix(2, 2, {0}), make_pos(2, 2));
  EXPECT_EQ(from_matrix(2, 2, {1}), make_sop(2, 2));
  EXPECT_THROW(from_matrix(2, 2, {0, 1}), std::invalid_argument);
  EXPECT_THROW(from_matrix(2, 2, {2}), std::invalid_argument);
  EXPECT_THROW(from_matrix(3, 3, {1, 1, 1}), std::invalid_argument);
}

TEST(Network, DualInvolutionAndTransposition) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto net = random_network(rng);
    auto d = dual(net);
    EXPECT_EQ(d.dims.length, net.dims.width);
    EXPECT_EQ(d.dims.width, net.dims.length);
    EXPECT_EQ(dual(d), net);
  }
  // l = 1 all-parallel maps to the all-series network
  auto series = dual(make_pos(1, 4));
  EXPECT_EQ(series.dims, (Dims{4, 1}));
  EXPECT_EQ(series.matrix.rows(), 3);
  EXPECT_EQ(series.matrix.cols(), 0);
}

TEST(Network, DeviceGraphStructure) {
  auto g = to_device_graph(make_pos(2, 2));
  EXPECT_EQ(g.device_edges.size(), 4u);
  EXPECT_EQ(g.node_count, 8);
  // left bar, right bar, S and T hookups; no matchsticks
  EXPECT_EQ(g.perfect_edges.size(), 4u);

  auto h = to_device_graph(make_hammock(3, 5));
  EXPECT_EQ(h.device_edges.size(), 15u);
  // 2 terminal hookups + 2*(w-1) bar edges + 4 brick-wall matchsticks
  EXPECT_EQ(h.perfect_edges.size(), 2u + 8u + 4u);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto net = random_network(rng);
    EXPECT_EQ(static_cast<int>(to_device_graph(net).device_edges.size()),
              net.dims.size());
  }
}

TEST(Network, TextFormatRoundTrip) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto net = random_network(rng);
    std::istringstream in(format_network(net));
    EXPECT_EQ(parse_network(in), net);
  }
  EXPECT_EQ(format_network(make_sop(3, 3)), "3 3\n11\n11\n");
}

TEST(Network, FileRoundTrip) {
  auto path = ::testing::TempDir() + "relpoly_net.txt";
  auto net = make_hammock(5, 3);
  save_network(net, path);
  EXPECT_EQ(load_network(path), net);
  EXPECT_THROW(load_network(path + ".missing"), std::runtime_error);
}

TEST(Network, TextFormatErrors) {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    EXPECT_ANY_THROW(parse_network(in));
  };
  reject("");
  reject("3\n");
  reject("3 3\n11\n");        // missing row
  reject("3 3\n11\n1\n");     // short row
  reject("3 3\n11\n12\n");    // non-binary entry
  reject("0 3\n");
}

}  // namespace
}  // namespace relpoly
