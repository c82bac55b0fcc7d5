#include "relpoly/network.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace relpoly {

namespace {

void check_dims(int length, int width) {
  if (length < 1 || width < 1)
    throw std::invalid_argument("network dimensions must satisfy l >= 1, w >= 1");
}

}  // namespace

MatchstickMatrix::MatchstickMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

MatchstickMatrix::MatchstickMatrix(int rows, int cols, std::vector<std::uint8_t> bits)
    : rows_(rows), cols_(cols), bits_(std::move(bits)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  if (bits_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("matchstick matrix: wrong number of entries");
  for (auto b : bits_)
    if (b != 0 && b != 1)
      throw std::invalid_argument("matchstick matrix: entries must be 0 or 1");
}

std::size_t MatchstickMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw std::out_of_range("matchstick matrix index");
  return static_cast<std::size_t>(i) * cols_ + j;
}

bool MatchstickMatrix::at(int i, int j) const { return bits_[index(i, j)] != 0; }

void MatchstickMatrix::set(int i, int j, bool value) {
  bits_[index(i, j)] = value ? 1 : 0;
}

MatchstickMatrix MatchstickMatrix::complement_transpose() const {
  MatchstickMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, !at(i, j));
  return out;
}

MatchstickNetwork make_pos(int length, int width) {
  check_dims(length, width);
  return {Dims{length, width}, MatchstickMatrix(length - 1, width - 1), "PoS"};
}

MatchstickNetwork make_sop(int length, int width) {
  check_dims(length, width);
  MatchstickMatrix m(length - 1, width - 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.set(i, j, true);
  return {Dims{length, width}, std::move(m), "SoP"};
}

MatchstickNetwork make_hammock(int length, int width, HammockVariant variant) {
  check_dims(length, width);
  if (variant == HammockVariant::HPlus && (length % 2 != 0 || width % 2 != 0))
    throw std::invalid_argument(
        "hammock variant H+ exists only when both l and w are even");
  // (i+j) parity is the same in 0- and 1-based coordinates.
  int parity = variant == HammockVariant::H ? 1 : 0;
  MatchstickMatrix m(length - 1, width - 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.set(i, j, (i + j) % 2 == parity);
  return {Dims{length, width}, std::move(m),
          variant == HammockVariant::H ? "hammock-H" : "hammock-H+"};
}

MatchstickNetwork from_matrix(int length, int width,
                              const std::vector<std::uint8_t>& bits,
                              std::string label) {
  check_dims(length, width);
  return {Dims{length, width}, MatchstickMatrix(length - 1, width - 1, bits),
          std::move(label)};
}

MatchstickNetwork dual(const MatchstickNetwork& net) {
  MatchstickNetwork out;
  out.dims = Dims{net.dims.width, net.dims.length};
  out.matrix = net.matrix.complement_transpose();
  out.label = net.label.empty() ? "" : net.label + "-dual";
  return out;
}

DeviceGraph to_device_graph(const MatchstickNetwork& net) {
  const int l = net.dims.length, w = net.dims.width;
  DeviceGraph g;
  // Grid node (wire j, column i) = j*(l+1) + i; S and T appended.
  auto node = [l](int wire, int col) { return wire * (l + 1) + col; };
  g.node_count = w * (l + 1) + 2;
  g.source = w * (l + 1);
  g.terminus = w * (l + 1) + 1;
  g.perfect_edges.emplace_back(g.source, node(0, 0));
  g.perfect_edges.emplace_back(g.terminus, node(0, l));
  for (int j = 0; j + 1 < w; ++j) {
    g.perfect_edges.emplace_back(node(j, 0), node(j + 1, 0));
    g.perfect_edges.emplace_back(node(j, l), node(j + 1, l));
  }
  for (int i = 0; i < net.matrix.rows(); ++i)
    for (int j = 0; j < net.matrix.cols(); ++j)
      if (net.matrix.at(i, j))
        g.perfect_edges.emplace_back(node(j, i + 1), node(j + 1, i + 1));
  g.device_edges.reserve(static_cast<std::size_t>(l) * w);
  for (int j = 0; j < w; ++j)
    for (int i = 1; i <= l; ++i)
      g.device_edges.emplace_back(node(j, i - 1), node(j, i));
  return g;
}

std::string format_network(const MatchstickNetwork& net) {
  std::ostringstream out;
  out << net.dims.length << ' ' << net.dims.width << '\n';
  for (int i = 0; i < net.matrix.rows(); ++i) {
    for (int j = 0; j < net.matrix.cols(); ++j) out << (net.matrix.at(i, j) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

MatchstickNetwork parse_network(std::istream& in, std::string label) {
  int length = 0, width = 0;
  if (!(in >> length >> width))
    throw std::runtime_error("network file: expected 'l w' on the first line");
  check_dims(length, width);
  std::string line;
  std::getline(in, line);  // rest of the header line
  MatchstickMatrix m(length - 1, width - 1);
  for (int i = 0; i < length - 1; ++i) {
    line.clear();
    if (width > 1 && !std::getline(in, line))
      throw std::runtime_error("network file: missing matrix row " + std::to_string(i + 1));
    if (width > 1) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (static_cast<int>(line.size()) != width - 1)
        throw std::runtime_error("network file: row " + std::to_string(i + 1) +
                                 " must have exactly " + std::to_string(width - 1) + " bits");
      for (int j = 0; j < width - 1; ++j) {
        if (line[j] != '0' && line[j] != '1')
          throw std::runtime_error("network file: entries must be 0 or 1");
        m.set(i, j, line[j] == '1');
      }
    }
  }
  return {Dims{length, width}, std::move(m), std::move(label)};
}

MatchstickNetwork load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open network file: " + path);
  return parse_network(in, path);
}

void save_network(const MatchstickNetwork& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write network file: " + path);
  out << format_network(net);
}

}  // namespace relpoly
