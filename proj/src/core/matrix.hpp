#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/ring.hpp"

namespace exgl {

// Exact n x n matrix over a finite ring. Row/column indices are 0-based in
// the core; the JSON/CLI surface is 1-based to match the usual notation.
struct Mat {
  RingPtr ring;
  std::uint32_t n = 0;
  std::vector<elem> a;  // row-major

  elem at(std::uint32_t i, std::uint32_t j) const { return a[i * n + j]; }
  elem& at(std::uint32_t i, std::uint32_t j) { return a[i * n + j]; }

  bool operator==(const Mat& other) const { return n == other.n && a == other.a; }

  std::string to_json() const;
  std::string display() const;

  // Packs the entries into a base-|R| integer key when it fits 64 bits.
  std::optional<std::uint64_t> pack_key() const;
};

Mat identity(RingPtr ring, std::uint32_t n);
Mat zero_matrix(RingPtr ring, std::uint32_t n);

// t_{ij}(x) = e + x e^{ij}, i != j.
Mat transvection(RingPtr ring, std::uint32_t n, std::uint32_t i, std::uint32_t j, elem x);

// p_{ij} = e + e^{ij} - e^{ji} - e^{ii} - e^{jj} (a signed transposition).
Mat perm_matrix(RingPtr ring, std::uint32_t n, std::uint32_t i, std::uint32_t j);

Mat mul(const Mat& a, const Mat& b);
Mat mat_from_json(RingPtr ring, const std::string& json_text);

// In-place elementary row/column operations:
//   acc := acc * t_{ij}(x)   (column j += column i * x)
//   acc := t_{ij}(x) * acc   (row i += x * row j)
void right_mul_transvection(Mat& acc, std::uint32_t i, std::uint32_t j, elem x);
void left_mul_transvection(Mat& acc, std::uint32_t i, std::uint32_t j, elem x);

struct InvertibleMatrix {
  Mat mat;
  Mat inv;

  const Ring& ring() const { return *mat.ring; }
  std::uint32_t n() const { return mat.n; }
};

// Two-sided inverse by exhaustive column solving: for each identity column,
// scan all |R|^n candidate columns; a missing or non-unique solution means
// the matrix is not invertible (errc::not_invertible). `scan_cap` bounds
// |R|^n.
InvertibleMatrix invert(const Mat& m, std::uint64_t scan_cap = (1ull << 20));

InvertibleMatrix as_invertible(Mat m, Mat inverse);  // validates the pair

}  // namespace exgl
