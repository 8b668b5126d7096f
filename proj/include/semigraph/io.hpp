#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "semigraph/bounds.hpp"
#include "semigraph/charpoly.hpp"
#include "semigraph/families.hpp"
#include "semigraph/matrix.hpp"
#include "semigraph/spectrum.hpp"

namespace semigraph {

// Fixed rendering used for every float in emitted output: %.12g, with
// negative zero normalized, so repeated runs are byte-identical.
std::string real_str(double v);
std::string real_str(double v, int precision);

std::string json_escape(std::string_view s);

// {"order": n, "entries": [["p/4", ...], ...]} - entries keep the fixed
// denominator 4 to make the exactness class visible; standalone rationals
// elsewhere are rendered in lowest terms.
std::string matrix_json(const SymmetricQMatrix& m);

// Real-valued rows, comma-separated, one line per row.
std::string matrix_csv(const SymmetricQMatrix& m, int precision = 12);

std::string spectrum_json(const Spectrum& s);

// {"order": n, "coefficients": ["c0", ..., "cn"]} in lowest terms.
std::string charpoly_json(const CharPoly& p);

// argmax_variant selects which maximizing pair is reported; the upper_ok
// flag always refers to the proof variant.
std::string bounds_json(const BoundsReport& r, const Semigraph& g,
                        UpperVariant argmax_variant = UpperVariant::Proof);

std::string closed_spectrum_json(const ClosedFormSpectrum& s, std::string_view family,
                                 std::int64_t n);

// Full report: summary, exact degrees, exact Laplacian, numeric spectrum,
// connectivity, and the bounds block (null when the bound hypotheses fail).
std::string report_json(const Semigraph& g, double tol = 1e-8, const JacobiOptions& opts = {});
std::string report_csv(const Semigraph& g, double tol = 1e-8, const JacobiOptions& opts = {},
                       int precision = 12);

}  // namespace semigraph
