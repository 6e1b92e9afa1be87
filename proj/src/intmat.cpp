#include "weil/intmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace weil {

BigVec to_big(const IntVec& v) {
  BigVec r;
  r.reserve(v.size());
  for (long long x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

IntVec to_small(const BigVec& v) {
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw std::overflow_error("lattice entry exceeds 64 bits");
    r.push_back(x.get_si());
  }
  return r;
}

namespace {

bool is_zero(const BigVec& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

// rows a, b with a[col] = x, b[col] = y  ->  a has gcd, b has 0
void combine(BigVec& a, BigVec& b, std::size_t col) {
  BigInt g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[col].get_mpz_t(),
             b[col].get_mpz_t());
  const BigInt u = a[col] / g;
  const BigInt v = b[col] / g;
  for (std::size_t k = 0; k < a.size(); ++k) {
    BigInt na = s * a[k] + t * b[k];
    BigInt nb = u * b[k] - v * a[k];
    a[k] = std::move(na);
    b[k] = std::move(nb);
  }
}

}  // namespace

BigMat hnf(BigMat rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero), rows.end());
  if (rows.empty()) return rows;
  const std::size_t ncols = rows[0].size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
    std::size_t piv = rows.size();
    for (std::size_t i = top; i < rows.size(); ++i) {
      if (rows[i][col] != 0) {
        if (piv == rows.size()) {
          piv = i;
        } else {
          combine(rows[piv], rows[i], col);
        }
      }
    }
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    if (rows[top][col] < 0)
      for (auto& x : rows[top]) x = -x;
    const BigInt& p = rows[top][col];
    for (std::size_t i = 0; i < top; ++i) {
      BigInt qt;
      mpz_fdiv_q(qt.get_mpz_t(), rows[i][col].get_mpz_t(), p.get_mpz_t());
      if (qt != 0)
        for (std::size_t k = 0; k < ncols; ++k) rows[i][k] -= qt * rows[top][k];
    }
    ++top;
  }
  rows.resize(top);
  return rows;
}

std::size_t lattice_rank(const BigMat& rows) { return hnf(rows).size(); }

BigMat integer_kernel(const BigMat& rows, std::size_t ncols) {
  const std::size_t k = rows.size();
  BigMat m(ncols, BigVec(k + ncols));
  for (std::size_t i = 0; i < ncols; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = rows[j][i];
    m[i][k + i] = 1;
  }
  BigMat h = hnf(std::move(m));
  BigMat ker;
  for (auto& row : h) {
    bool zero_head = true;
    for (std::size_t j = 0; j < k; ++j)
      if (row[j] != 0) zero_head = false;
    if (zero_head) ker.emplace_back(row.begin() + static_cast<long>(k), row.end());
  }
  return hnf(std::move(ker));
}

BigMat saturation(const BigMat& rows, std::size_t ncols) {
  if (rows.empty()) return {};
  return hnf(integer_kernel(integer_kernel(rows, ncols), ncols));
}

bool in_lattice(const BigMat& hnf_basis, const BigVec& v) {
  BigVec w = v;
  std::size_t col = 0;
  for (const auto& row : hnf_basis) {
    while (row[col] == 0) {
      if (w[col] != 0) return false;
      ++col;
    }
    if (w[col] % row[col] != 0) return false;
    const BigInt qt = w[col] / row[col];
    for (std::size_t k = col; k < w.size(); ++k) w[k] -= qt * row[k];
    ++col;
  }
  return is_zero(w);
}

std::optional<std::vector<BigRat>> rational_coordinates(const BigMat& hnf_basis,
                                                        const BigVec& v) {
  std::vector<BigRat> w(v.begin(), v.end());
  std::vector<BigRat> coords;
  std::size_t col = 0;
  for (const auto& row : hnf_basis) {
    while (row[col] == 0) {
      if (w[col] != 0) return std::nullopt;
      ++col;
    }
    BigRat c = w[col] / BigRat(row[col]);
    c.canonicalize();
    for (std::size_t k = col; k < w.size(); ++k) w[k] -= c * row[k];
    coords.push_back(c);
    ++col;
  }
  for (const auto& x : w)
    if (x != 0) return std::nullopt;
  return coords;
}

BigInt torsion_exponent(const BigMat& hnf_basis, std::size_t ncols) {
  BigInt t = 1;
  for (const auto& s : saturation(hnf_basis, ncols)) {
    auto c = rational_coordinates(hnf_basis, s);
    if (!c) throw std::logic_error("saturation vector outside span");
    for (const auto& x : *c) mpz_lcm(t.get_mpz_t(), t.get_mpz_t(), x.get_den_mpz_t());
  }
  return t;
}

namespace {

BigInt dot(const BigVec& a, const BigVec& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt round_div(const BigInt& a, const BigInt& b) {
  // nearest integer to a/b, b > 0
  BigInt num = 2 * a + b, den = 2 * b, r;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

}  // namespace

// Cohen, Algorithm 2.6.7, with indices shifted to start at 0.
LllResult lll(BigMat b) {
  const std::size_t n = b.size();
  LllResult res;
  if (n == 0) return res;
  std::vector<BigInt> d(n + 1);  // d[i+1] = d_i of the text, d[0] = 1
  std::vector<std::vector<BigInt>> lam(n, std::vector<BigInt>(n));
  d[0] = 1;
  d[1] = dot(b[0], b[0]);
  if (d[1] == 0) throw std::invalid_argument("lll: dependent rows");
  std::size_t k = 1, kmax = 0;

  auto red = [&](std::size_t kk, std::size_t l) {
    if (2 * abs(lam[kk][l]) > d[l + 1]) {
      const BigInt qt = round_div(lam[kk][l], d[l + 1]);
      for (std::size_t c = 0; c < b[kk].size(); ++c) b[kk][c] -= qt * b[l][c];
      lam[kk][l] -= qt * d[l + 1];
      for (std::size_t i = 0; i < l; ++i) lam[kk][i] -= qt * lam[l][i];
    }
  };
  auto swap = [&](std::size_t kk) {
    std::swap(b[kk], b[kk - 1]);
    for (std::size_t j = 0; j + 1 < kk; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
    const BigInt l = lam[kk][kk - 1];
    const BigInt bb = (d[kk - 1] * d[kk + 1] + l * l) / d[kk];
    for (std::size_t i = kk + 1; i <= kmax; ++i) {
      const BigInt t = lam[i][kk];
      lam[i][kk] = (d[kk + 1] * lam[i][kk - 1] - l * t) / d[kk];
      lam[i][kk - 1] = (bb * t + l * lam[i][kk]) / d[kk + 1];
    }
    d[kk] = bb;
  };

  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j <= k; ++j) {
        BigInt u = dot(b[k], b[j]);
        for (std::size_t i = 0; i < j; ++i) u = (d[i + 1] * u - lam[k][i] * lam[j][i]) / d[i];
        if (j < k) {
          lam[k][j] = u;
        } else {
          if (u == 0) throw std::invalid_argument("lll: dependent rows");
          d[k + 1] = u;
        }
      }
    }
    red(k, k - 1);
    if (100 * d[k + 1] * d[k - 1] < 99 * d[k] * d[k] - 100 * lam[k][k - 1] * lam[k][k - 1]) {
      swap(k);
      if (k > 1) --k;
      continue;
    }
    for (std::size_t l = k - 1; l-- > 0;) red(k, l);
    ++k;
  }
  res.basis = std::move(b);
  for (std::size_t i = 0; i < n; ++i) {
    BigRat r(d[i + 1], d[i]);
    r.canonicalize();
    res.gs_norm2.push_back(r);
  }
  return res;
}

std::size_t rational_rank(BigMat rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      for (std::size_t c = col + 1; c < ncols; ++c)
        rows[i][c] = (rows[rank][col] * rows[i][c] - rows[i][col] * rows[rank][c]) / prev;
      rows[i][col] = 0;
    }
    prev = rows[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace weil
