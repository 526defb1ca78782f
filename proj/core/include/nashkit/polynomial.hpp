#pragma once

#include <nashkit/errors.hpp>
#include <nashkit/format.hpp>
#include <nashkit/rational.hpp>

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nashkit {

using Exponent = std::vector<std::uint16_t>;

// Graded lex, larger first: higher total degree, then the exponent of the
// earliest variable decides.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    unsigned da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

template <class T, class S>
T convert_scalar(const S& s) {
  if constexpr (std::is_same_v<T, S>) {
    return s;
  } else if constexpr (std::is_same_v<S, Rational>) {
    return T(s.get_d());
  } else {
    return T(s);
  }
}

// Sparse polynomial in a fixed number of variables.
template <class S>
class Polynomial {
 public:
  using Terms = std::map<Exponent, S, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const S& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }
  static Polynomial variable(int nvars, int v) {
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(v)] = 1;
    Polynomial p(nvars);
    p.add_term(std::move(e), S(1));
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const S& c) {
    if (scalar_traits<S>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (scalar_traits<S>::is_zero(it->second)) terms_.erase(it);
    }
  }

  S coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }

  int total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (auto x : e) d += x;
      best = std::max(best, d);
    }
    return best;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const { return scale(S(-1)); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial out(a.nvars_);
    Exponent e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<std::uint16_t>(ea[v] + eb[v]);
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  Polynomial scale(const S& s) const {
    Polynomial out(nvars_);
    if (scalar_traits<S>::is_zero(s)) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * s);
    return out;
  }

  Polynomial derivative(int v) const {
    Polynomial out(nvars_);
    auto uv = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_) {
      if (e[uv] == 0) continue;
      Exponent f = e;
      S k(static_cast<int>(f[uv]));
      --f[uv];
      out.add_term(f, c * k);
    }
    return out;
  }

  // Substitutes x_v := value for each listed variable, keeping nvars.
  Polynomial substitute(const std::map<int, S>& values) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      S k = c;
      for (const auto& [v, val] : values) {
        auto uv = static_cast<std::size_t>(v);
        for (int p = 0; p < f[uv]; ++p) k *= val;
        f[uv] = 0;
      }
      out.add_term(f, k);
    }
    return out;
  }

  template <class T>
  T evaluate(std::span<const T> x) const {
    if (static_cast<int>(x.size()) != nvars_) throw FormatError("evaluation point has the wrong length");
    T acc(0);
    for (const auto& [e, c] : terms_) {
      T m = convert_scalar<T>(c);
      for (std::size_t v = 0; v < e.size(); ++v)
        for (int p = 0; p < e[v]; ++p) m *= x[v];
      acc += m;
    }
    return acc;
  }

  // Canonical text; name(v) gives the printed variable name.
  std::string to_string(const std::function<std::string(int)>& name) const;

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  void check(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw FormatError("polynomials live in different rings");
  }

  int nvars_ = 0;
  Terms terms_;
};

std::string coefficient_text(const Rational& c, bool& negative, bool& is_one);
std::string coefficient_text(const std::complex<double>& c, bool& negative, bool& is_one);

template <class S>
std::string Polynomial<S>::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = false, is_one = false;
    std::string coef = coefficient_text(c, negative, is_one);
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += name(static_cast<int>(v));
      if (e[v] > 1) mono += '^' + std::to_string(e[v]);
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += coef;
    } else if (is_one) {
      out += mono;
    } else {
      out += coef + '*' + mono;
    }
  }
  return out;
}

// Polynomial whose variables are grouped by a Format: group i holds the
// coordinates pi^(i)_1..pi^(i)_{d_i}.
template <class S>
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(Format f) : fmt_(std::move(f)), poly_(fmt_.vars()) {}
  MultiPoly(Format f, Polynomial<S> p) : fmt_(std::move(f)), poly_(std::move(p)) {
    if (poly_.nvars() != fmt_.vars()) throw FormatError("variable count does not match the format");
  }

  // Zero-based group and coordinate.
  static MultiPoly variable(const Format& f, int group, int var) {
    return MultiPoly(f, Polynomial<S>::variable(f.vars(), f.offset(group) + var));
  }
  static MultiPoly constant(const Format& f, const S& c) { return MultiPoly(f, Polynomial<S>::constant(f.vars(), c)); }

  const Format& format() const { return fmt_; }
  const Polynomial<S>& poly() const { return poly_; }
  const auto& terms() const { return poly_.terms(); }
  bool is_zero() const { return poly_.is_zero(); }
  std::size_t size() const { return poly_.size(); }

  void add_term(const Exponent& e, const S& c) { poly_.add_term(e, c); }

  // Degree per group if every term agrees, nullopt if inhomogeneous.
  // The zero polynomial reports nullopt as well.
  std::optional<std::vector<int>> multidegree() const {
    std::optional<std::vector<int>> md;
    for (const auto& [e, c] : poly_.terms()) {
      std::vector<int> cur(static_cast<std::size_t>(fmt_.n()), 0);
      for (int i = 0; i < fmt_.n(); ++i)
        for (int v = 0; v < fmt_[i]; ++v) cur[i] += e[static_cast<std::size_t>(fmt_.offset(i) + v)];
      if (!md) {
        md = cur;
      } else if (*md != cur) {
        return std::nullopt;
      }
    }
    return md;
  }

  MultiPoly& operator+=(const MultiPoly& o) { check(o); poly_ += o.poly_; return *this; }
  MultiPoly& operator-=(const MultiPoly& o) { check(o); poly_ -= o.poly_; return *this; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    return MultiPoly(a.fmt_, a.poly_ * b.poly_);
  }
  MultiPoly scale(const S& s) const { return MultiPoly(fmt_, poly_.scale(s)); }
  MultiPoly partial(int group, int var) const { return MultiPoly(fmt_, poly_.derivative(fmt_.offset(group) + var)); }

  // point[i] holds the d_i coordinates of group i.
  template <class T>
  T evaluate(const std::vector<std::vector<T>>& point) const {
    return poly_.template evaluate<T>(flatten(point));
  }

  template <class T>
  std::vector<T> flatten(const std::vector<std::vector<T>>& point) const {
    if (static_cast<int>(point.size()) != fmt_.n()) throw FormatError("point has the wrong number of groups");
    std::vector<T> flat;
    flat.reserve(static_cast<std::size_t>(fmt_.vars()));
    for (int i = 0; i < fmt_.n(); ++i) {
      if (static_cast<int>(point[i].size()) != fmt_[i]) throw FormatError("point group has the wrong length");
      flat.insert(flat.end(), point[i].begin(), point[i].end());
    }
    return flat;
  }

  // Variables print as p<group>_<coord>, both one-based.
  std::string to_string() const {
    return poly_.to_string([this](int v) { return var_name(v); });
  }
  std::string var_name(int v) const {
    int g = 0;
    while (g + 1 < fmt_.n() && fmt_.offset(g + 1) <= v) ++g;
    return "p" + std::to_string(g + 1) + "_" + std::to_string(v - fmt_.offset(g) + 1);
  }

  bool operator==(const MultiPoly& o) const { return fmt_ == o.fmt_ && poly_ == o.poly_; }

 private:
  void check(const MultiPoly& o) const {
    if (!(fmt_ == o.fmt_)) throw FormatError("polynomials have different formats");
  }

  Format fmt_;
  Polynomial<S> poly_;
};

using QPoly = MultiPoly<Rational>;
using CPoly = MultiPoly<std::complex<double>>;

}  // namespace nashkit
