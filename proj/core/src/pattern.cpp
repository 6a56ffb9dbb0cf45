#include "subgame/pattern.hpp"

#include <limits>
#include <optional>

namespace subgame {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

}  // namespace

PatternExpr PatternExpr::bit(bool b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kBit;
  n->bit = b;
  return PatternExpr(std::move(n));
}

PatternExpr PatternExpr::concat(std::vector<PatternExpr> parts) {
  std::vector<PatternExpr> flat;
  flat.reserve(parts.size());
  for (auto& p : parts) {
    if (p.kind() == Kind::kConcat) {
      flat.insert(flat.end(), p.children().begin(), p.children().end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  for (std::size_t i = 0; i + 1 < flat.size(); ++i) {
    if (flat[i].has_tail()) throw std::invalid_argument("infinite tail must come last");
  }
  if (flat.empty()) return power(bit(false), 0);
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConcat;
  n->children = std::move(flat);
  return PatternExpr(std::move(n));
}

PatternExpr PatternExpr::power(PatternExpr e, std::uint64_t k) {
  if (e.has_tail()) throw std::invalid_argument("cannot raise an infinite tail to a power");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kPower;
  n->exponent = k;
  n->children.push_back(std::move(e));
  return PatternExpr(std::move(n));
}

PatternExpr PatternExpr::infinite(PatternExpr e) {
  if (e.has_tail()) throw std::invalid_argument("nested infinite tail");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kInfinite;
  n->children.push_back(std::move(e));
  return PatternExpr(std::move(n));
}

PatternExpr PatternExpr::literal(const BitString& bits) {
  std::vector<PatternExpr> runs;
  std::size_t i = 0;
  while (i < bits.size()) {
    std::size_t j = i;
    while (j < bits.size() && bits[j] == bits[i]) ++j;
    runs.push_back(j - i == 1 ? bit(bits[i]) : power(bit(bits[i]), j - i));
    i = j;
  }
  return concat(std::move(runs));
}

PatternExpr PatternExpr::eventually_periodic(const BitString& prefix, const BitString& cycle) {
  if (prefix.empty()) return infinite(literal(cycle));
  return concat({literal(prefix), infinite(literal(cycle))});
}

bool PatternExpr::has_tail() const {
  switch (kind()) {
    case Kind::kInfinite:
      return true;
    case Kind::kConcat:
      return children().back().has_tail();
    default:
      return false;
  }
}

std::uint64_t PatternExpr::finite_length() const {
  switch (kind()) {
    case Kind::kBit:
      return 1;
    case Kind::kPower:
      return sat_mul(child().finite_length(), exponent());
    case Kind::kConcat: {
      std::uint64_t t = 0;
      for (const auto& c : children()) t = sat_add(t, c.finite_length());
      return t;
    }
    case Kind::kInfinite:
      break;
  }
  throw std::logic_error("finite_length of an infinite pattern");
}

bool operator==(const PatternExpr& a, const PatternExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PatternExpr::Kind::kBit:
      return a.bit_value() == b.bit_value();
    case PatternExpr::Kind::kPower:
      if (a.exponent() != b.exponent()) return false;
      break;
    default:
      break;
  }
  return a.children() == b.children();
}

// ---- parsing ----

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  PatternExpr run() {
    PatternExpr e = sequence(true);
    skip();
    if (i_ < s_.size()) throw PatternSyntaxError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n')) ++i_;
  }

  PatternExpr sequence(bool top) {
    std::vector<PatternExpr> terms;
    bool closed = false;
    for (;;) {
      skip();
      if (i_ >= s_.size() || s_[i_] == ')') break;
      const std::size_t start = i_;
      if (closed) throw PatternSyntaxError("'inf' must close the pattern", start);
      bool inf = false;
      terms.push_back(term(top, inf));
      closed = inf;
    }
    if (terms.empty()) throw PatternSyntaxError("expected '0', '1' or '('", i_);
    return PatternExpr::concat(std::move(terms));
  }

  PatternExpr term(bool top, bool& inf) {
    PatternExpr a = atom();
    skip();
    if (i_ >= s_.size() || s_[i_] != '^') return a;
    ++i_;
    skip();
    if (s_.substr(i_, 3) == "inf") {
      if (!top) throw PatternSyntaxError("'inf' is only allowed in tail position", i_);
      i_ += 3;
      inf = true;
      return PatternExpr::infinite(std::move(a));
    }
    if (i_ >= s_.size() || s_[i_] < '0' || s_[i_] > '9') {
      throw PatternSyntaxError("expected exponent", i_);
    }
    const std::size_t start = i_;
    std::uint64_t k = 0;
    while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9') {
      const auto d = static_cast<std::uint64_t>(s_[i_] - '0');
      if (k > (kMax - d) / 10) throw PatternSyntaxError("exponent overflow", start);
      k = k * 10 + d;
      ++i_;
    }
    return PatternExpr::power(std::move(a), k);
  }

  PatternExpr atom() {
    skip();
    if (i_ >= s_.size()) throw PatternSyntaxError("unexpected end of pattern", i_);
    const char c = s_[i_];
    if (c == '0' || c == '1') {
      ++i_;
      return PatternExpr::bit(c == '1');
    }
    if (c == '(') {
      ++i_;
      PatternExpr inner = sequence(false);
      skip();
      if (i_ >= s_.size() || s_[i_] != ')') throw PatternSyntaxError("expected ')'", i_);
      ++i_;
      return inner;
    }
    throw PatternSyntaxError("unexpected '" + std::string(1, c) + "'", i_);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

std::string base(const PatternExpr& e);

std::string render_term(const PatternExpr& e) {
  switch (e.kind()) {
    case PatternExpr::Kind::kBit:
      return e.bit_value() ? "1" : "0";
    case PatternExpr::Kind::kPower:
      return base(e.child()) + "^" + std::to_string(e.exponent());
    case PatternExpr::Kind::kInfinite:
      return base(e.child()) + "^inf";
    case PatternExpr::Kind::kConcat:
      break;
  }
  std::string out;
  const auto& cs = e.children();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const bool glue = i > 0 && cs[i].kind() == PatternExpr::Kind::kBit &&
                      cs[i - 1].kind() == PatternExpr::Kind::kBit;
    if (i > 0 && !glue) out += ' ';
    out += render_term(cs[i]);
  }
  return out;
}

std::string base(const PatternExpr& e) {
  if (e.kind() == PatternExpr::Kind::kBit) return render_term(e);
  return "(" + render_term(e) + ")";
}

void emit(const PatternExpr& e, BitString& out, std::uint64_t limit) {
  if (out.size() >= limit) return;
  switch (e.kind()) {
    case PatternExpr::Kind::kBit:
      out.push_back(e.bit_value());
      return;
    case PatternExpr::Kind::kConcat:
      for (const auto& c : e.children()) {
        emit(c, out, limit);
        if (out.size() >= limit) return;
      }
      return;
    case PatternExpr::Kind::kPower: {
      if (e.child().finite_length() == 0) return;
      for (std::uint64_t k = 0; k < e.exponent() && out.size() < limit; ++k) emit(e.child(), out, limit);
      return;
    }
    case PatternExpr::Kind::kInfinite:
      if (e.child().finite_length() == 0) throw std::invalid_argument("infinite tail of an empty pattern");
      while (out.size() < limit) emit(e.child(), out, limit);
      return;
  }
}

// (bit, count) when e is a bit or a power of a bit.
std::optional<std::pair<bool, std::uint64_t>> as_run(const PatternExpr& e) {
  if (e.kind() == PatternExpr::Kind::kBit) return std::pair{e.bit_value(), std::uint64_t{1}};
  if (e.kind() == PatternExpr::Kind::kPower && e.child().kind() == PatternExpr::Kind::kBit) {
    return std::pair{e.child().bit_value(), e.exponent()};
  }
  return std::nullopt;
}

PatternExpr make_run(bool b, std::uint64_t k) {
  return k == 1 ? PatternExpr::bit(b) : PatternExpr::power(PatternExpr::bit(b), k);
}

void push_merged(std::vector<PatternExpr>& out, PatternExpr e) {
  const auto cur = as_run(e);
  if (cur && !out.empty()) {
    const auto prev = as_run(out.back());
    if (prev && prev->first == cur->first && prev->second <= kMax - cur->second) {
      out.back() = make_run(cur->first, prev->second + cur->second);
      return;
    }
  }
  out.push_back(std::move(e));
}

// Simplified parts of e; empty when e expands to nothing.
std::vector<PatternExpr> simplify_parts(const PatternExpr& e) {
  std::vector<PatternExpr> out;
  switch (e.kind()) {
    case PatternExpr::Kind::kBit:
      out.push_back(e);
      break;
    case PatternExpr::Kind::kConcat:
      for (const auto& c : e.children()) {
        for (auto& p : simplify_parts(c)) push_merged(out, std::move(p));
      }
      break;
    case PatternExpr::Kind::kPower: {
      auto inner = simplify_parts(e.child());
      const std::uint64_t k = e.exponent();
      if (k == 0 || inner.empty()) break;
      if (k == 1) return inner;
      if (inner.size() == 1 && inner[0].kind() == PatternExpr::Kind::kPower &&
          inner[0].exponent() <= kMax / k) {
        out.push_back(PatternExpr::power(inner[0].child(), inner[0].exponent() * k));
      } else if (inner.size() == 1) {
        out.push_back(PatternExpr::power(inner[0], k));
      } else {
        out.push_back(PatternExpr::power(PatternExpr::concat(std::move(inner)), k));
      }
      break;
    }
    case PatternExpr::Kind::kInfinite: {
      auto inner = simplify_parts(e.child());
      out.push_back(inner.empty() ? e : PatternExpr::infinite(PatternExpr::concat(std::move(inner))));
      break;
    }
  }
  return out;
}

}  // namespace

PatternExpr simplify(const PatternExpr& e) { return PatternExpr::concat(simplify_parts(e)); }

PatternExpr parse_pattern(std::string_view text) { return Parser(text).run(); }

std::string render(const PatternExpr& e) { return render_term(e); }

BitString expand(const PatternExpr& e, std::uint64_t n) {
  if (!e.has_tail() && e.finite_length() < n) {
    throw std::out_of_range("pattern has " + std::to_string(e.finite_length()) + " bits, " +
                            std::to_string(n) + " requested");
  }
  BitString out;
  out.reserve(n);
  emit(e, out, n);
  return out;
}

std::pair<BitString, BitString> split_tail(const PatternExpr& e) {
  if (!e.has_tail()) throw std::invalid_argument("pattern has no infinite tail");
  if (e.kind() == PatternExpr::Kind::kInfinite) {
    const auto& c = e.child();
    return {BitString{}, expand(c, c.finite_length())};
  }
  std::vector<PatternExpr> head(e.children().begin(), e.children().end() - 1);
  const PatternExpr h = PatternExpr::concat(std::move(head));
  const PatternExpr& t = e.children().back().child();
  return {expand(h, h.finite_length()), expand(t, t.finite_length())};
}

}  // namespace subgame
