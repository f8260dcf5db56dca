#pragma once

#include <functional>

#include "keller/extension.hpp"

namespace keller::detail {

/// Two-draw agreement with third-draw majority. Draws whose value is
/// nullopt are retried, up to ten in a row.
Measurement agree(SampleStream& stream, const std::function<Sample(SampleStream&)>& measure);

/// F_j - c_j.
std::vector<Polynomial> shifted(const PolyMap& f, std::span<const Rational> c);
std::vector<Rational> image(const PolyMap& f, std::span<const Rational> p);

void require_dominant(const PolyMap& f, const char* what);

/// Integer coefficients with content 1 and a positive leading coefficient
/// in `var`.
Polynomial primitive_in(const Polynomial& p, std::size_t var);

}  // namespace keller::detail
