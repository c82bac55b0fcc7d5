#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace relpoly {

/// Network dimensions: length l (devices per wire) and width w (wires).
struct Dims {
  int length = 0;
  int width = 0;

  int size() const { return length * width; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Binary matchstick incidence matrix of an (l,w) network, shape (l-1) x (w-1).
/// Row i addresses internal column i+1, column j the gap between wires j+1 and
/// j+2 (storage is 0-based; the matrix is empty when l = 1 or w = 1).
class MatchstickMatrix {
 public:
  MatchstickMatrix() = default;
  MatchstickMatrix(int rows, int cols);
  MatchstickMatrix(int rows, int cols, std::vector<std::uint8_t> bits);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(int i, int j) const;
  void set(int i, int j, bool value);

  /// Bitwise complement followed by transpose (shape becomes (w-1) x (l-1)).
  MatchstickMatrix complement_transpose() const;

  friend bool operator==(const MatchstickMatrix&, const MatchstickMatrix&) = default;

 private:
  std::size_t index(int i, int j) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

struct MatchstickNetwork {
  Dims dims;
  MatchstickMatrix matrix;
  std::string label;

  /// Structural equality; labels are display-only and ignored.
  friend bool operator==(const MatchstickNetwork& a, const MatchstickNetwork& b) {
    return a.dims == b.dims && a.matrix == b.matrix;
  }
};

/// The two brick-wall patterns. H places matchsticks where (row+col) is odd in
/// 1-based matrix coordinates (the convention drawn for the square 4-by-4
/// case); HPlus is its complement and exists only when l and w are both even.
enum class HammockVariant { H, HPlus };

MatchstickNetwork make_pos(int length, int width);
MatchstickNetwork make_sop(int length, int width);
MatchstickNetwork make_hammock(int length, int width,
                               HammockVariant variant = HammockVariant::H);
MatchstickNetwork from_matrix(int length, int width,
                              const std::vector<std::uint8_t>& bits,
                              std::string label = "");

/// Dual network: complement-transpose of the matchstick matrix, dims swapped.
MatchstickNetwork dual(const MatchstickNetwork& net);

/// Explicit device-level graph. Perfect edges are always-conducting (terminal
/// bars and matchsticks); device_edges[d] spans the two grid nodes of device d,
/// indexed wire-major (d = wire * length + position).
struct DeviceGraph {
  int node_count = 0;
  int source = 0;
  int terminus = 0;
  std::vector<std::pair<int, int>> perfect_edges;
  std::vector<std::pair<int, int>> device_edges;
};

DeviceGraph to_device_graph(const MatchstickNetwork& net);

/// Text format: "l w" on the first line, then l-1 lines of w-1 bits.
std::string format_network(const MatchstickNetwork& net);
MatchstickNetwork parse_network(std::istream& in, std::string label = "");
MatchstickNetwork load_network(const std::string& path);
void save_network(const MatchstickNetwork& net, const std::string& path);

}  // namespace relpoly
