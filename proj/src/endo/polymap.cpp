#include <algorithm>
#include <sstream>

#include "keller/endo.hpp"
#include "keller/error.hpp"

namespace keller {

namespace {

constexpr std::string_view kFamilyNames[] = {"triangular", "affine", "composed",
                                             "druzkowski", "lang_maslamani", "essen_form"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view value, std::size_t line) {
  std::uint64_t out = 0;
  if (value.empty()) throw InputError("map line " + std::to_string(line) + ": empty number");
  for (char c : value) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("map line " + std::to_string(line) + ": expected a number, got '" + std::string(value) + "'");
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return out;
}

}  // namespace

std::string_view to_string(Family f) { return kFamilyNames[static_cast<std::size_t>(f)]; }

Family parse_family(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kFamilyNames); ++i)
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  throw InputError("unknown map family '" + std::string(name) + "'");
}

PolyMap::PolyMap(std::vector<Polynomial> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw StructuralError("a map needs at least one coordinate");
  for (const auto& c : coords_)
    if (c.nvars() != coords_.size())
      throw StructuralError("map coordinate lives in " + std::to_string(c.nvars()) + " variables, expected " +
                            std::to_string(coords_.size()));
}

PolyMap PolyMap::identity(std::size_t n) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(Polynomial::variable(n, i));
  return PolyMap(std::move(c));
}

std::vector<long> PolyMap::degrees() const {
  std::vector<long> d;
  for (const auto& c : coords_) d.push_back(c.total_degree());
  return d;
}

long PolyMap::max_degree() const {
  auto d = degrees();
  return *std::max_element(d.begin(), d.end());
}

bool PolyMap::is_identity() const { return *this == identity(n()); }

Polynomial jacobian_det(const PolyMap& f) { return jacobian_det(f.coords()); }

bool is_keller(const PolyMap& f) {
  auto j = jacobian_det(f);
  return j.is_constant() && !j.is_zero();
}

bool is_dominant(const PolyMap& f) { return !jacobian_det(f).is_zero(); }

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  if (f.n() != g.n()) throw StructuralError("compose: maps of different dimension");
  std::vector<Polynomial> c;
  c.reserve(f.n());
  for (const auto& fi : f.coords()) c.push_back(fi.substitute(g.coords()));
  return PolyMap(std::move(c));
}

std::size_t matrix_rank(RationalMatrix a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

Rational matrix_determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw StructuralError("determinant of a non-square matrix");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::size_t druzkowski_corank(const RationalMatrix& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw StructuralError("druzkowski_corank needs a square matrix");
  return a.size() - matrix_rank(a);
}

std::string format_map(const PolyMap& f) {
  std::ostringstream out;
  if (const auto& p = f.provenance()) {
    out << "# family=" << to_string(p->family) << '\n';
    out << "# seed=" << p->seed << '\n';
    out << "# n=" << p->n << '\n';
    out << "# degree_bound=" << p->degree_bound << '\n';
    out << "# factors=" << p->factors << '\n';
    out << "# r=" << p->r << '\n';
  }
  out << "nvars: " << f.n() << '\n';
  for (std::size_t i = 0; i < f.n(); ++i) out << 'x' << (i + 1) << " -> " << to_string(f[i]) << '\n';
  return out.str();
}

PolyMap parse_map(std::string_view text) {
  std::optional<std::size_t> nvars;
  std::vector<std::optional<Polynomial>> coords;
  GeneratorSpec spec;
  bool has_provenance = false;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw InputError("map line " + std::to_string(lineno) + ": " + msg);
  };
  while (!text.empty()) {
    ++lineno;
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      auto eq = body.find('=');
      if (eq == std::string_view::npos) continue;  // free-form comment
      auto key = trim(body.substr(0, eq));
      auto value = trim(body.substr(eq + 1));
      has_provenance = true;
      if (key == "family")
        spec.family = parse_family(value);
      else if (key == "seed")
        spec.seed = parse_u64(value, lineno);
      else if (key == "n")
        spec.n = parse_u64(value, lineno);
      else if (key == "degree_bound")
        spec.degree_bound = static_cast<unsigned>(parse_u64(value, lineno));
      else if (key == "factors")
        spec.factors = static_cast<unsigned>(parse_u64(value, lineno));
      else if (key == "r")
        spec.r = parse_u64(value, lineno);
      continue;
    }
    if (line.starts_with("nvars:")) {
      if (nvars) fail("duplicate nvars");
      nvars = parse_u64(trim(line.substr(6)), lineno);
      if (*nvars == 0) fail("nvars must be positive");
      coords.assign(*nvars, std::nullopt);
      continue;
    }
    if (!nvars) fail("expected 'nvars: N' before coordinates");
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) fail("expected 'xi -> polynomial'");
    auto lhs = trim(line.substr(0, arrow));
    if (lhs.size() < 2 || lhs.front() != 'x') fail("left side must be a variable x1..xn");
    std::size_t idx = parse_u64(lhs.substr(1), lineno);
    if (idx == 0 || idx > *nvars) fail("variable " + std::string(lhs) + " out of range");
    if (coords[idx - 1]) fail("duplicate coordinate " + std::string(lhs));
    try {
      coords[idx - 1] = parse_polynomial(trim(line.substr(arrow + 2)), *nvars);
    } catch (const InputError& e) {
      fail(e.what());
    }
  }
  if (!nvars) throw InputError("map file has no 'nvars:' line");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < *nvars; ++i) {
    if (!coords[i]) throw InputError("map file is missing coordinate x" + std::to_string(i + 1));
    out.push_back(std::move(*coords[i]));
  }
  PolyMap f(std::move(out));
  if (has_provenance) f.set_provenance(spec);
  return f;
}

}  // namespace keller
