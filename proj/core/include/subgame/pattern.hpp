#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subgame/bits.hpp"

namespace subgame {

// Run-length pattern AST. Values are immutable and cheap to copy.
//
// Text grammar (whitespace ignored):
//   pattern := term+
//   term    := atom ["^" (uint | "inf")]
//   atom    := "0" | "1" | "(" pattern ")"
// "^inf" may only close the outermost pattern.
class PatternExpr {
 public:
  enum class Kind { kBit, kConcat, kPower, kInfinite };

  static PatternExpr bit(bool b);
  // Flattens nested concatenations; one child collapses to the child, none to "0^0".
  static PatternExpr concat(std::vector<PatternExpr> parts);
  static PatternExpr power(PatternExpr e, std::uint64_t k);
  static PatternExpr infinite(PatternExpr e);
  // Run-length form of a literal bit string.
  static PatternExpr literal(const BitString& bits);
  // literal(prefix) followed by literal(cycle)^inf.
  static PatternExpr eventually_periodic(const BitString& prefix, const BitString& cycle);

  Kind kind() const { return node_->kind; }
  bool bit_value() const { return node_->bit; }
  std::uint64_t exponent() const { return node_->exponent; }
  const std::vector<PatternExpr>& children() const { return node_->children; }
  const PatternExpr& child() const { return node_->children.front(); }

  bool has_tail() const;
  // Length of the finite expansion, saturating at UINT64_MAX; throws if has_tail().
  std::uint64_t finite_length() const;

  friend bool operator==(const PatternExpr& a, const PatternExpr& b);
  friend bool operator!=(const PatternExpr& a, const PatternExpr& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind = Kind::kBit;
    bool bit = false;
    std::uint64_t exponent = 0;
    std::vector<PatternExpr> children;
  };
  explicit PatternExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class PatternSyntaxError : public std::invalid_argument {
 public:
  PatternSyntaxError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

PatternExpr parse_pattern(std::string_view text);
std::string render(const PatternExpr& e);

// Same expansion with ^0 terms dropped, ^1 unwrapped, nested powers of one child
// multiplied out and adjacent runs of one bit merged.
PatternExpr simplify(const PatternExpr& e);

// First n bits. Throws std::out_of_range when a finite pattern is shorter than n.
BitString expand(const PatternExpr& e, std::uint64_t n);

// (prefix, one copy of the tail). Throws std::invalid_argument without a tail.
std::pair<BitString, BitString> split_tail(const PatternExpr& e);

}  // namespace subgame
