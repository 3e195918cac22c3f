#include "core/matrix.hpp"

#include "json.hpp"

namespace exgl {

std::string Mat::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::uint32_t i = 0; i < n; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::uint32_t j = 0; j < n; ++j) row.push_back(at(i, j));
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

std::string Mat::display() const {
  std::string out = "[";
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::uint32_t j = 0; j < n; ++j) {
      if (j) out += ",";
      out += ring->display(at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::optional<std::uint64_t> Mat::pack_key() const {
  const std::uint64_t order = ring->order();
  std::uint64_t key = 0;
  for (elem v : a) {
    if (key > (UINT64_MAX - v) / order) return std::nullopt;
    key = key * order + v;
  }
  return key;
}

Mat identity(RingPtr ring, std::uint32_t n) {
  Mat m{std::move(ring), n, {}};
  m.a.assign(static_cast<std::size_t>(n) * n, m.ring->zero());
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = m.ring->one();
  return m;
}

Mat zero_matrix(RingPtr ring, std::uint32_t n) {
  Mat m{std::move(ring), n, {}};
  m.a.assign(static_cast<std::size_t>(n) * n, m.ring->zero());
  return m;
}

Mat transvection(RingPtr ring, std::uint32_t n, std::uint32_t i, std::uint32_t j, elem x) {
  require(i < n && j < n, errc::argument, "transvection index out of range");
  require(i != j, errc::argument, "transvection needs i != j");
  ring->check(x);
  Mat m = identity(std::move(ring), n);
  m.at(i, j) = x;
  return m;
}

Mat perm_matrix(RingPtr ring, std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  require(i < n && j < n, errc::argument, "perm matrix index out of range");
  require(i != j, errc::argument, "perm matrix needs i != j");
  Mat m = identity(std::move(ring), n);
  const Ring& R = *m.ring;
  m.at(i, i) = R.zero();
  m.at(j, j) = R.zero();
  m.at(i, j) = R.one();
  m.at(j, i) = R.neg(R.one());
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  require(a.ring->same_ring(*b.ring), errc::argument, "matrix product across different rings");
  require(a.n == b.n, errc::argument, "matrix product needs equal degrees");
  const Ring& R = *a.ring;
  Mat out = zero_matrix(a.ring, a.n);
  for (std::uint32_t i = 0; i < a.n; ++i)
    for (std::uint32_t k = 0; k < a.n; ++k) {
      const elem aik = a.at(i, k);
      if (aik == R.zero()) continue;
      for (std::uint32_t j = 0; j < a.n; ++j)
        out.at(i, j) = R.add(out.at(i, j), R.mul(aik, b.at(k, j)));
    }
  return out;
}

Mat mat_from_json(RingPtr ring, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("matrix JSON: ") + e.what());
  }
  require(j.is_array() && !j.empty(), errc::parse, "matrix JSON: expected a nested array");
  const std::uint32_t n = static_cast<std::uint32_t>(j.size());
  Mat m = zero_matrix(std::move(ring), n);
  for (std::uint32_t i = 0; i < n; ++i) {
    require(j[i].is_array() && j[i].size() == n, errc::parse, "matrix JSON: ragged rows");
    for (std::uint32_t jj = 0; jj < n; ++jj)
      m.at(i, jj) = m.ring->check(j[i][jj].get<elem>());
  }
  return m;
}

void right_mul_transvection(Mat& acc, std::uint32_t i, std::uint32_t j, elem x) {
  const Ring& R = *acc.ring;
  if (x == R.zero()) return;
  for (std::uint32_t r = 0; r < acc.n; ++r)
    acc.at(r, j) = R.add(acc.at(r, j), R.mul(acc.at(r, i), x));
}

void left_mul_transvection(Mat& acc, std::uint32_t i, std::uint32_t j, elem x) {
  const Ring& R = *acc.ring;
  if (x == R.zero()) return;
  for (std::uint32_t c = 0; c < acc.n; ++c)
    acc.at(i, c) = R.add(acc.at(i, c), R.mul(x, acc.at(j, c)));
}

InvertibleMatrix invert(const Mat& m, std::uint64_t scan_cap) {
  const Ring& R = *m.ring;
  const std::uint32_t n = m.n;
  std::uint64_t space = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    require(space <= scan_cap / R.order(), errc::capacity,
            "invert: |R|^n exceeds the column scan cap");
    space *= R.order();
  }

  Mat inv = zero_matrix(m.ring, n);
  std::vector<elem> col(n, R.zero());
  for (std::uint32_t c = 0; c < n; ++c) {
    bool found = false;
    std::vector<elem> solution;
    std::fill(col.begin(), col.end(), 0);
    // Odometer over all candidate columns.
    while (true) {
      bool match = true;
      for (std::uint32_t i = 0; i < n && match; ++i) {
        elem acc = R.zero();
        for (std::uint32_t k = 0; k < n; ++k) acc = R.add(acc, R.mul(m.at(i, k), col[k]));
        match = acc == ((i == c) ? R.one() : R.zero());
      }
      if (match) {
        if (found)
          fail(errc::not_invertible, "matrix is not invertible (non-unique column solution)");
        found = true;
        solution = col;
      }
      std::uint32_t pos = n;
      bool wrapped = false;
      while (true) {
        if (pos == 0) {
          wrapped = true;
          break;
        }
        --pos;
        if (++col[pos] < R.order()) break;
        col[pos] = 0;
      }
      if (wrapped) break;
    }
    if (!found) fail(errc::not_invertible, "matrix is not invertible (no column solution)");
    for (std::uint32_t i = 0; i < n; ++i) inv.at(i, c) = solution[i];
  }
  return as_invertible(m, std::move(inv));
}

InvertibleMatrix as_invertible(Mat m, Mat inverse) {
  const Mat e = identity(m.ring, m.n);
  require(mul(m, inverse) == e && mul(inverse, m) == e, errc::not_invertible,
          "matrix pair is not a two-sided inverse");
  return {std::move(m), std::move(inverse)};
}

}  // namespace exgl
