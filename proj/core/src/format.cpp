#include <nashkit/errors.hpp>
#include <nashkit/format.hpp>

#include <numeric>
#include <sstream>

namespace nashkit {

std::string to_string(FormatClass c) {
  switch (c) {
    case FormatClass::Within: return "within";
    case FormatClass::Boundary: return "boundary";
    case FormatClass::Beyond: return "beyond";
  }
  return "?";
}

Format::Format(std::vector<int> d) : d_(std::move(d)) {
  if (d_.size() < 2) throw FormatError("a format needs at least two players");
  cells_ = 1;
  for (int di : d_) {
    if (di < 2) throw FormatError("every player needs at least two strategies");
    offsets_.push_back(vars_);
    vars_ += di;
    D_ += di - 1;
    cells_ *= static_cast<std::size_t>(di);
  }
}

int Format::max_index() const {
  int m = 0;
  for (int i = 1; i < n(); ++i)
    if (d_[i] >= d_[m]) m = i;
  return m;
}

FormatClass Format::classify() const {
  int m = max_index();
  int rest = D_ - (d_[m] - 1);
  int top = d_[m] - 1;
  if (top < rest) return FormatClass::Within;
  if (top == rest) return FormatClass::Boundary;
  return FormatClass::Beyond;
}

std::string Format::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d_[i]);
  }
  return s;
}

Format Format::parse(const std::string& text) {
  std::vector<int> d;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw FormatError("bad format entry '" + item + "'");
    }
    if (used != item.size()) throw FormatError("bad format entry '" + item + "'");
    d.push_back(v);
  }
  return Format(std::move(d));
}

MultiIndex::MultiIndex(const Format& f, std::vector<int> j) : fmt_(f), j_(std::move(j)) {
  if (static_cast<int>(j_.size()) != f.n()) throw FormatError("multi-index length mismatch");
  for (int i = 0; i < f.n(); ++i)
    if (j_[i] < 0 || j_[i] >= f[i]) throw FormatError("multi-index out of range");
}

std::size_t MultiIndex::linear() const {
  std::size_t idx = 0;
  for (int i = 0; i < fmt_.n(); ++i) idx = idx * static_cast<std::size_t>(fmt_[i]) + static_cast<std::size_t>(j_[i]);
  return idx;
}

MultiIndex MultiIndex::from_linear(const Format& f, std::size_t idx) {
  if (idx >= f.cells()) throw FormatError("linear index out of range");
  std::vector<int> j(static_cast<std::size_t>(f.n()));
  for (int i = f.n() - 1; i >= 0; --i) {
    j[i] = static_cast<int>(idx % static_cast<std::size_t>(f[i]));
    idx /= static_cast<std::size_t>(f[i]);
  }
  return MultiIndex(f, std::move(j));
}

bool MultiIndex::next() {
  for (int i = fmt_.n() - 1; i >= 0; --i) {
    if (++j_[i] < fmt_[i]) return true;
    j_[i] = 0;
  }
  return false;
}

std::vector<int> MultiIndex::drop(int i) const {
  std::vector<int> out;
  out.reserve(j_.size() - 1);
  for (int k = 0; k < fmt_.n(); ++k)
    if (k != i) out.push_back(j_[k]);
  return out;
}

MultiIndex MultiIndex::insert(const Format& f, int k, int i, std::span<const int> minus_i) {
  if (static_cast<int>(minus_i.size()) != f.n() - 1) throw FormatError("j_{-i} has the wrong length");
  std::vector<int> j;
  j.reserve(static_cast<std::size_t>(f.n()));
  for (int p = 0, q = 0; p < f.n(); ++p) j.push_back(p == i ? k : minus_i[q++]);
  return MultiIndex(f, std::move(j));
}

}  // namespace nashkit
