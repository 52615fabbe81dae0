#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcat {

// Index of a quantale element inside its carrier.
using Elem = int;

// Thrown when input tables are malformed (ragged rows, unknown identifiers).
// Distinct from axiom failures, which are reported, not thrown.
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration would exceed the configured caps.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internally guaranteed property fails; always a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Enumeration caps for presheaf/functor/filter searches.
struct Limits {
  std::size_t max_maps = 1'000'000;   // candidate maps in an enumeration
  std::size_t max_members = 200'000;  // surviving members of a presheaf category
  std::size_t max_opens = 64;         // open sets of a finite topology
  int max_quantale = 16;              // carrier size for subset scans
};

// Dense row-major matrix of small values.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  const std::vector<T>& flat() const { return data_; }
  std::vector<T>& flat() { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using ElemMatrix = Matrix<Elem>;
using BoolMatrix = Matrix<uint8_t>;

// splitmix64; used both as a generator step and to derive per-case seeds,
// so parallel and serial law runs see identical streams.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic RNG independent of the standard library distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() { return splitmix64(state_); }

  // uniform in [0, n)
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool chance(double p) { return static_cast<double>(next() >> 11) / 9007199254740992.0 < p; }

 private:
  uint64_t state_;
};

// Stable seed derivation: mixes a root seed with a stream tag and case index.
inline uint64_t derive_seed(uint64_t root, uint64_t stream, uint64_t index) {
  uint64_t s = root ^ (0x9e3779b97f4a7c15ull * (stream + 1));
  splitmix64(s);
  s ^= 0xd1b54a32d192ed03ull * (index + 1);
  return splitmix64(s);
}

// FNV-1a, used to tag law ids into seed streams.
inline uint64_t hash_str(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qcat
