#include "keller/order.hpp"

#include <algorithm>

#include "keller/error.hpp"

namespace keller {

namespace {

std::vector<std::size_t> iota_vars(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

const char* kind_name(MonomialOrder::Kind k) {
  switch (k) {
    case MonomialOrder::Kind::lex: return "lex";
    case MonomialOrder::Kind::grevlex: return "grevlex";
    case MonomialOrder::Kind::block: return "block";
  }
  return "?";
}

}  // namespace

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  MonomialOrder o;
  o.kind_ = Kind::lex;
  o.nvars_ = nvars;
  o.blocks_.push_back(Block{iota_vars(nvars), Kind::lex});
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  MonomialOrder o;
  o.kind_ = Kind::grevlex;
  o.nvars_ = nvars;
  o.blocks_.push_back(Block{iota_vars(nvars), Kind::grevlex});
  return o;
}

MonomialOrder MonomialOrder::block(std::size_t nvars, std::vector<std::size_t> eliminated, Kind inner) {
  if (inner == Kind::block) throw StructuralError("block order needs lex or grevlex inside blocks");
  std::vector<bool> in_first(nvars, false);
  for (auto v : eliminated) {
    if (v >= nvars || in_first[v]) throw StructuralError("invalid eliminated variable set");
    in_first[v] = true;
  }
  std::sort(eliminated.begin(), eliminated.end());
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < nvars; ++v)
    if (!in_first[v]) kept.push_back(v);
  MonomialOrder o;
  o.kind_ = Kind::block;
  o.nvars_ = nvars;
  o.eliminated_ = eliminated;
  if (!eliminated.empty()) o.blocks_.push_back(Block{std::move(eliminated), inner});
  if (!kept.empty()) o.blocks_.push_back(Block{std::move(kept), inner});
  return o;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::grevlex) return grevlex_compare(a, b);
  for (const auto& blk : blocks_) {
    if (blk.inner == Kind::lex) {
      for (auto v : blk.vars)
        if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    } else {
      std::uint64_t da = 0, db = 0;
      for (auto v : blk.vars) {
        da += a[v];
        db += b[v];
      }
      if (da != db) return da > db ? 1 : -1;
      for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it)
        if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
    }
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  if (kind_ != Kind::block) return kind_name(kind_);
  std::string s = "block(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += " > ";
    s += std::string(kind_name(blocks_[i].inner)) + "{";
    for (std::size_t k = 0; k < blocks_[i].vars.size(); ++k) {
      if (k) s += ",";
      s += "x" + std::to_string(blocks_[i].vars[k] + 1);
    }
    s += "}";
  }
  return s + ")";
}

}  // namespace keller
