#include <nashkit/counting.hpp>
#include <nashkit/errors.hpp>
#include <nashkit/series.hpp>

#include <cmath>
#include <numbers>

namespace nashkit {

std::pair<int, int> BlockDerangement::element(int e) const {
  for (int i = 0; i < format.n(); ++i) {
    if (e < format[i] - 1) return {i, e};
    e -= format[i] - 1;
  }
  throw FormatError("element index out of range");
}

std::vector<std::pair<int, int>> BlockDerangement::block(int k) const {
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < static_cast<int>(assignment.size()); ++e)
    if (assignment[e] == k) out.push_back(element(e));
  return out;
}

bool is_block_derangement(const Format& f, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != f.D()) return false;
  std::vector<int> load(static_cast<std::size_t>(f.n()), 0);
  int e = 0;
  for (int i = 0; i < f.n(); ++i) {
    for (int j = 0; j < f[i] - 1; ++j, ++e) {
      int k = assignment[e];
      if (k < 0 || k >= f.n() || k == i) return false;
      ++load[k];
    }
  }
  for (int k = 0; k < f.n(); ++k)
    if (load[k] != f[k] - 1) return false;
  return true;
}

Integer c_chow(const Format& f) {
  std::vector<int> caps;
  for (int d : f.dims()) caps.push_back(d - 1);
  TruncatedSeries acc = TruncatedSeries::one(caps);
  for (int i = 0; i < f.n(); ++i) {
    TruncatedSeries hat(caps);
    for (int j = 0; j < f.n(); ++j)
      if (j != i) hat += TruncatedSeries::variable(caps, j);
    for (int p = 0; p < f[i] - 1; ++p) acc = acc * hat;
  }
  return acc[caps];
}

namespace {

class Backtracker {
 public:
  Backtracker(const Format& f, const std::function<bool(const std::vector<int>&)>& visit)
      : f_(f), visit_(visit), owner_(static_cast<std::size_t>(f.D())), assignment_(owner_.size()) {
    int e = 0;
    for (int i = 0; i < f.n(); ++i) {
      for (int j = 0; j < f[i] - 1; ++j) owner_[e++] = i;
      cap_.push_back(f[i] - 1);
      // Elements not yet placed that may go to block i.
      eligible_.push_back(f.D() - (f[i] - 1));
    }
  }

  void run() {
    if (feasible()) place(0);
  }

 private:
  // Each block's remaining capacity must be coverable by the elements that
  // are still unplaced and allowed to go there.
  bool feasible() const {
    for (int k = 0; k < f_.n(); ++k)
      if (cap_[k] > eligible_[k]) return false;
    return true;
  }

  bool place(int e) {
    if (e == static_cast<int>(owner_.size())) return visit_(assignment_);
    int i = owner_[e];
    for (int k = 0; k < f_.n(); ++k)
      if (k != i) --eligible_[k];
    for (int k = 0; k < f_.n(); ++k) {
      if (k == i || cap_[k] == 0) continue;
      --cap_[k];
      assignment_[e] = k;
      bool go_on = true;
      if (feasible()) go_on = place(e + 1);
      ++cap_[k];
      if (!go_on) {
        restore(i);
        return false;
      }
    }
    restore(i);
    return true;
  }

  void restore(int i) {
    for (int k = 0; k < f_.n(); ++k)
      if (k != i) ++eligible_[k];
  }

  const Format& f_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::vector<int> owner_;
  std::vector<int> assignment_;
  std::vector<int> cap_;
  std::vector<int> eligible_;
};

}  // namespace

void for_each_block_derangement(const Format& f, const std::function<bool(const std::vector<int>&)>& visit) {
  Backtracker(f, visit).run();
}

Integer c_derangements(const Format& f, std::uint64_t limit) {
  std::uint64_t count = 0;
  bool exceeded = false;
  for_each_block_derangement(f, [&](const std::vector<int>&) {
    if (++count > limit) {
      exceeded = true;
      return false;
    }
    return true;
  });
  if (exceeded) throw CountLimitExceeded("more than " + std::to_string(limit) + " block derangements");
  return Integer(std::to_string(count));
}

std::vector<BlockDerangement> enumerate_block_derangements(const Format& f, std::uint64_t limit) {
  std::vector<BlockDerangement> out;
  bool exceeded = false;
  for_each_block_derangement(f, [&](const std::vector<int>& a) {
    if (out.size() >= limit) {
      exceeded = true;
      return false;
    }
    out.push_back({f, a});
    return true;
  });
  if (exceeded) throw CountLimitExceeded("more than " + std::to_string(limit) + " block derangements");
  return out;
}

Integer c_genfun(const Format& f) {
  std::vector<int> caps = f.dims();
  int n = f.n();
  TruncatedSeries den(caps);
  for (int i = 0; i <= n; ++i) {
    if (i == 1) continue;
    TruncatedSeries e = TruncatedSeries::elementary(caps, i);
    e *= Integer(1 - i);
    den += e;
  }
  TruncatedSeries num(caps);
  num[std::vector<int>(static_cast<std::size_t>(n), 1)] = 1;
  return series_div_truncated(num, den)[caps];
}

Asymptotic c_asymptotic(int n, int d) {
  if (n < 3 || d < 2) throw DomainError("asymptotic formula needs n >= 3 and d >= 2");
  double nn = n, dd = d;
  Asymptotic a;
  a.log_value = 0.5 * std::log(nn) + (nn * dd - 1) * std::log(nn - 1) -
                0.5 * (nn - 1) * std::log(2 * nn * (nn - 2) * std::numbers::pi * dd);
  a.value = std::exp(a.log_value);
  a.overflow = !std::isfinite(a.value);
  return a;
}

}  // namespace nashkit
