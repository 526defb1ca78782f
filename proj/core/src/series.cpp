#include <nashkit/errors.hpp>
#include <nashkit/series.hpp>

namespace nashkit {

TruncatedSeries::TruncatedSeries(std::vector<int> caps) : caps_(std::move(caps)) {
  std::size_t total = 1;
  strides_.assign(caps_.size(), 1);
  for (std::size_t v = caps_.size(); v-- > 0;) {
    if (caps_[v] < 0) throw SeriesError("negative degree cap");
    strides_[v] = total;
    total *= static_cast<std::size_t>(caps_[v] + 1);
  }
  coeffs_.assign(total, Integer(0));
}

TruncatedSeries TruncatedSeries::one(std::vector<int> caps) {
  TruncatedSeries s(std::move(caps));
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::vector<int> caps, int v) {
  TruncatedSeries s(std::move(caps));
  if (s.caps_[v] >= 1) s.coeffs_[s.strides_[v]] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::elementary(std::vector<int> caps, int k) {
  TruncatedSeries s(std::move(caps));
  int n = s.nvars();
  if (k < 0 || k > n) return s;
  // Walk all 0/1 vectors with k ones that respect the caps.
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != k) continue;
    bool ok = true;
    for (int v = 0; v < n; ++v) {
      e[v] = (mask >> v) & 1U;
      if (e[v] > s.caps_[v]) ok = false;
    }
    if (ok) s[e] = 1;
  }
  return s;
}

std::vector<int> TruncatedSeries::exponent(std::size_t idx) const {
  std::vector<int> e(caps_.size());
  for (std::size_t v = 0; v < caps_.size(); ++v) {
    e[v] = static_cast<int>(idx / strides_[v]);
    idx %= strides_[v];
  }
  return e;
}

std::size_t TruncatedSeries::index(const std::vector<int>& e) const {
  if (e.size() != caps_.size()) throw SeriesError("exponent has the wrong length");
  std::size_t idx = 0;
  for (std::size_t v = 0; v < caps_.size(); ++v) {
    if (e[v] < 0 || e[v] > caps_[v]) throw SeriesError("exponent exceeds the cap");
    idx += static_cast<std::size_t>(e[v]) * strides_[v];
  }
  return idx;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (caps_ != o.caps_) throw SeriesError("series with different caps");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (caps_ != o.caps_) throw SeriesError("series with different caps");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Integer& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

namespace {

struct SparseEntry {
  std::vector<int> e;
  const Integer* c;
};

std::vector<SparseEntry> nonzeros(const TruncatedSeries& s, bool skip_constant) {
  std::vector<SparseEntry> out;
  for (std::size_t i = skip_constant ? 1 : 0; i < s.size(); ++i)
    if (s.at(i) != 0) out.push_back({s.exponent(i), &s.at(i)});
  return out;
}

}  // namespace

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.caps_ != b.caps_) throw SeriesError("series with different caps");
  TruncatedSeries out(a.caps_);
  auto sb = nonzeros(b, false);
  std::vector<int> sum(a.caps_.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    auto ea = a.exponent(i);
    for (const auto& t : sb) {
      bool fits = true;
      for (std::size_t v = 0; v < sum.size(); ++v) {
        sum[v] = ea[v] + t.e[v];
        if (sum[v] > a.caps_[v]) { fits = false; break; }
      }
      if (fits) out.coeffs_[out.index(sum)] += a.coeffs_[i] * *t.c;
    }
  }
  return out;
}

TruncatedSeries series_div_truncated(const TruncatedSeries& num, const TruncatedSeries& den) {
  if (num.caps() != den.caps()) throw SeriesError("series with different caps");
  const Integer& c0 = den.at(0);
  if (c0 == 0) throw SeriesError("denominator has zero constant term");
  TruncatedSeries q(num.caps());
  auto tail = nonzeros(den, true);
  std::vector<int> diff(num.caps().size());
  // Flat order is compatible with divisibility, so every q[m - t] is final
  // by the time q[m] is computed.
  for (std::size_t i = 0; i < q.size(); ++i) {
    Integer acc = num.at(i);
    auto m = q.exponent(i);
    for (const auto& t : tail) {
      bool below = true;
      for (std::size_t v = 0; v < diff.size(); ++v) {
        diff[v] = m[v] - t.e[v];
        if (diff[v] < 0) { below = false; break; }
      }
      if (!below) continue;
      const Integer& prev = q[diff];
      if (prev != 0) acc -= *t.c * prev;
    }
    if (acc != 0) {
      if (!mpz_divisible_p(acc.get_mpz_t(), c0.get_mpz_t())) throw SeriesError("quotient is not integral");
      mpz_divexact(q.at(i).get_mpz_t(), acc.get_mpz_t(), c0.get_mpz_t());
    }
  }
  return q;
}

}  // namespace nashkit
