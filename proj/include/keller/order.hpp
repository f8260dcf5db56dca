#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "keller/monomial.hpp"

namespace keller {

/// A monomial order, described as an ordered list of variable blocks.
/// Monomials are compared block by block; within a block either lex or
/// grevlex decides. Variables listed first within a block are larger.
/// `lex` and `grevlex` are single-block orders on x1 > x2 > ... > xn.
/// Block orders put the eliminated variables in the first block, which
/// gives the elimination property.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder grevlex(std::size_t nvars);
  /// `eliminated` > all other variables (kept block, in increasing index
  /// order). Both blocks use `inner`.
  static MonomialOrder block(std::size_t nvars, std::vector<std::size_t> eliminated, Kind inner = Kind::grevlex);

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  /// Variables of the first block of a block order; empty otherwise.
  const std::vector<std::size_t>& eliminated() const { return eliminated_; }

  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.nvars_ == b.nvars_ && a.blocks_ == b.blocks_;
  }

 private:
  struct Block {
    std::vector<std::size_t> vars;
    Kind inner;
    friend bool operator==(const Block&, const Block&) = default;
  };

  Kind kind_ = Kind::grevlex;
  std::size_t nvars_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::size_t> eliminated_;
};

}  // namespace keller
