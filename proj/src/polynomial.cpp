#include "invkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "invkit/error.hpp"

namespace invkit {

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

std::shared_ptr<const VarContext> VarContext::make(std::vector<std::string> state_names,
                                                   std::vector<std::string> param_names) {
  std::vector<std::string> names = std::move(state_names);
  const std::size_t n_state = names.size();
  names.insert(names.end(), param_names.begin(), param_names.end());
  require(n_state >= 1, "variable context needs at least one state variable");
  std::set<std::string> seen;
  for (const auto& n : names) {
    require(valid_identifier(n), "invalid variable name '" + n + "'");
    require(seen.insert(n).second, "duplicate variable name '" + n + "'");
  }
  return std::shared_ptr<const VarContext>(new VarContext(std::move(names), n_state));
}

std::size_t VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return npos;
}

VarContextPtr default_context(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VarContext::make(std::move(names));
}

void require_same_context(const VarContextPtr& a, const VarContextPtr& b) {
  require(a && b && (a == b || *a == *b), "mismatched variable contexts");
}

void require_same_context(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.context(), b.context());
}

VarContextPtr block_context(const VarContext& base, std::uint32_t m) {
  std::vector<std::string> state;
  state.reserve((m + 1) * base.state_count());
  for (std::uint32_t a = 0; a <= m; ++a)
    for (std::size_t i = 0; i < base.state_count(); ++i)
      state.push_back(base.name(i) + "_" + std::to_string(a));
  std::vector<std::string> params;
  for (std::size_t i = base.state_count(); i < base.total(); ++i) params.push_back(base.name(i));
  return VarContext::make(std::move(state), std::move(params));
}

Polynomial Polynomial::constant(VarContextPtr ctx, Rational c) {
  Polynomial p(std::move(ctx));
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(p.ctx_->total()), std::move(c));
  return p;
}

Polynomial Polynomial::variable(VarContextPtr ctx, std::size_t index) {
  require(index < ctx->total(), "variable index out of range");
  Polynomial p(ctx);
  p.terms_.emplace_back(Monomial(ctx->total()).raised(index), Rational(1));
  return p;
}

Polynomial Polynomial::from_monomial(VarContextPtr ctx, Monomial m, Rational c) {
  require(m.n_vars() == ctx->total(), "monomial length does not match context");
  Polynomial p(std::move(ctx));
  if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
  return p;
}

Polynomial Polynomial::from_terms(VarContextPtr ctx, std::vector<Term> terms) {
  for (const auto& [m, c] : terms)
    require(m.n_vars() == ctx->total(), "monomial length does not match context");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  Polynomial p(std::move(ctx));
  for (auto& [m, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == m)
      p.terms_.back().second += c;
    else
      p.terms_.emplace_back(std::move(m), std::move(c));
    if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  }
  return p;
}

std::uint32_t Polynomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous(std::uint32_t d) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Polynomial Polynomial::homogeneous_component(std::uint32_t d) const {
  Polynomial p(ctx_);
  for (const auto& t : terms_)
    if (t.first.degree() == d) p.terms_.push_back(t);
  return p;
}

std::vector<std::uint32_t> Polynomial::occurring_degrees() const {
  std::set<std::uint32_t> ds;
  for (const auto& [m, c] : terms_) ds.insert(m.degree());
  return {ds.begin(), ds.end()};
}

Rational Polynomial::coeff(const Monomial& m) const {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return grlex_greater(t.first, key); });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

bool Polynomial::uses_variable(std::size_t i) const {
  for (const auto& [m, c] : terms_)
    if (m.exp(i) > 0) return true;
  return false;
}

bool Polynomial::uses_parameter_vars() const {
  for (std::size_t i = ctx_->state_count(); i < ctx_->total(); ++i)
    if (uses_variable(i)) return true;
  return false;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ctx_);
  p.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) p.terms_.emplace_back(m, -c);
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_context(a, b);
  Polynomial p(a.ctx_);
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && grlex_greater(ia->first, ib->first))) {
      p.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || grlex_greater(ib->first, ia->first)) {
      p.terms_.push_back(*ib++);
    } else {
      Rational c = ia->second + ib->second;
      if (!c.is_zero()) p.terms_.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_context(a, b);
  std::map<Monomial, Rational, bool (*)(const Monomial&, const Monomial&)> acc(grlex_greater);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma.times(mb);
      auto [it, fresh] = acc.emplace(std::move(m), ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  Polynomial p(a.ctx_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.emplace_back(m, std::move(c));
  return p;
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
  Polynomial p(a.ctx_);
  if (c.is_zero()) return p;
  p.terms_.reserve(a.terms_.size());
  for (const auto& [m, cc] : a.terms_) p.terms_.emplace_back(m, cc * c);
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return *a.ctx_ == *b.ctx_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::diff(std::size_t var_index) const {
  require(var_index < ctx_->total(), "diff: variable index out of range");
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    const auto e = m.exp(var_index);
    if (e == 0) continue;
    out.emplace_back(m.lowered(var_index), c * Rational(static_cast<long long>(e)));
  }
  return from_terms(ctx_, std::move(out));
}

Polynomial Polynomial::subst(std::span<const Polynomial> images) const {
  require(images.size() == ctx_->total(), "subst: one image per variable required");
  const VarContextPtr target = images.empty() ? ctx_ : images[0].context();
  for (const auto& im : images) require_same_context(im.context(), target);

  // Per-variable power cache; exponents in scope are small.
  std::vector<std::vector<Polynomial>> powers(images.size());
  const Polynomial one = Polynomial::constant(target, Rational(1));
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(one);
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Polynomial acc = Polynomial::zero(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m.exp(i) > 0) t = t * power(i, m.exp(i));
    acc = acc + t;
  }
  return acc;
}

Polynomial Polynomial::pullback(const MatrixQ& a) const {
  const auto n = static_cast<Eigen::Index>(ctx_->state_count());
  require(a.rows() == n && a.cols() == n,
          "pullback: matrix must be square of the state dimension");
  std::vector<Polynomial> images;
  images.reserve(ctx_->total());
  for (std::size_t i = 0; i < ctx_->state_count(); ++i) {
    Polynomial im = Polynomial::zero(ctx_);
    for (std::size_t j = 0; j < ctx_->state_count(); ++j) {
      const Rational& aij = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (!aij.is_zero()) im = im + Polynomial::variable(ctx_, j) * aij;
    }
    images.push_back(std::move(im));
  }
  for (std::size_t i = ctx_->state_count(); i < ctx_->total(); ++i)
    images.push_back(Polynomial::variable(ctx_, i));
  return subst(images);
}

std::vector<Polynomial> Polynomial::taylor_coefficients(std::uint32_t m) const {
  const VarContextPtr blocks = block_context(*ctx_, m);
  const std::size_t n = ctx_->state_count();

  using Series = std::vector<Polynomial>;  // index = power of t, truncated at m
  const auto zero_series = [&] { return Series(m + 1, Polynomial::zero(blocks)); };
  const auto series_mul = [&](const Series& a, const Series& b) {
    Series c = zero_series();
    for (std::uint32_t i = 0; i <= m; ++i)
      for (std::uint32_t j = 0; i + j <= m; ++j) c[i + j] = c[i + j] + a[i] * b[j];
    return c;
  };

  // Image of each input variable as a t-series on the block context.
  std::vector<Series> var_series;
  var_series.reserve(ctx_->total());
  for (std::size_t i = 0; i < ctx_->total(); ++i) {
    Series s = zero_series();
    if (ctx_->is_state(i)) {
      for (std::uint32_t a = 0; a <= m; ++a) s[a] = Polynomial::variable(blocks, a * n + i);
    } else {
      s[0] = Polynomial::variable(blocks, (m + 1) * n + (i - n));
    }
    var_series.push_back(std::move(s));
  }

  Series acc = zero_series();
  for (const auto& [mono, c] : terms_) {
    Series t = zero_series();
    t[0] = Polynomial::constant(blocks, c);
    for (std::size_t i = 0; i < ctx_->total(); ++i)
      for (std::uint32_t e = 0; e < mono.exp(i); ++e) t = series_mul(t, var_series[i]);
    for (std::uint32_t j = 0; j <= m; ++j) acc[j] = acc[j] + t[j];
  }
  return acc;
}

Rational Polynomial::eval(const VectorQ& point) const {
  require(static_cast<std::size_t>(point.size()) == ctx_->total(),
          "eval: point length must equal variable count");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < ctx_->total(); ++i)
      for (std::uint32_t e = 0; e < m.exp(i); ++e) t *= point(static_cast<Eigen::Index>(i));
    acc += t;
  }
  return acc;
}

Rational Polynomial::eval_state(const VectorQ& state_point) const {
  require(static_cast<std::size_t>(state_point.size()) == ctx_->state_count(),
          "eval_state: point length must equal the state-variable count");
  require(!uses_parameter_vars(),
          "eval_state: polynomial involves parameter variables");
  VectorQ full(static_cast<Eigen::Index>(ctx_->total()));
  for (Eigen::Index i = 0; i < full.size(); ++i)
    full(i) = i < state_point.size() ? state_point(i) : Rational(0);
  return eval(full);
}

Polynomial Polynomial::exact_monomial_quotient(const Monomial& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mm, c] : terms_) {
    ensure(mm.divisible_by(m), "monomial quotient: term '" + str() +
                                   "' not divisible as required");
    out.emplace_back(mm.divided_by(m), c);
  }
  return from_terms(ctx_, std::move(out));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const Rational a = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < ctx_->total(); ++i) {
      if (m.exp(i) == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->name(i);
      if (m.exp(i) > 1) mono += "^" + std::to_string(m.exp(i));
    }
    if (mono.empty())
      os << a.str();
    else if (a == Rational(1))
      os << mono;
    else
      os << a.str() << "*" << mono;
  }
  return os.str();
}

namespace {

struct PolyParser {
  const VarContextPtr& ctx;
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("polynomial parse error at position " + std::to_string(pos) + ": " +
                          why + " in '" + std::string(s) + "'");
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Int read_nat() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Int(std::string(s.substr(start, pos - start)));
  }

  std::string read_ident() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a variable name");
    return std::string(s.substr(start, pos - start));
  }

  // factor := nat ['/' nat]  |  ident ['^' nat]; multiplies into (coeff, mono)
  void read_factor(Rational& coeff, Monomial& mono) {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = read_nat();
      if (accept('/')) {
        Int den = read_nat();
        if (den.is_zero()) fail("zero denominator");
        coeff *= Rational(num, den);
      } else {
        coeff *= Rational(num);
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = read_ident();
      const std::size_t idx = ctx->index_of(name);
      if (idx == VarContext::npos) fail("unknown variable '" + name + "'");
      std::uint32_t e = 1;
      if (accept('^')) {
        Int ee = read_nat();
        if (ee > 1000000) fail("exponent too large");
        e = static_cast<std::uint32_t>(ee);
      }
      mono = mono.raised(idx, e);
      return;
    }
    fail("expected a coefficient or a variable");
  }

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    if (eof()) fail("empty input");
    bool first = true;
    while (!eof()) {
      int sign = 1;
      if (accept('-'))
        sign = -1;
      else if (accept('+'))
        sign = 1;
      else if (!first)
        fail("expected '+' or '-'");
      if (eof()) fail("dangling sign");
      Rational coeff(sign);
      Monomial mono(ctx->total());
      read_factor(coeff, mono);
      while (accept('*')) read_factor(coeff, mono);
      terms.emplace_back(std::move(mono), std::move(coeff));
      first = false;
    }
    return Polynomial::from_terms(ctx, std::move(terms));
  }
};

}  // namespace

Polynomial Polynomial::parse(const VarContextPtr& ctx, std::string_view text) {
  PolyParser p{ctx, text};
  return p.parse();
}

}  // namespace invkit
