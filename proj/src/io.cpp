#include "semigraph/io.hpp"

#include <cstdio>
#include <sstream>

namespace semigraph {

std::string real_str(double v, int precision) {
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

std::string real_str(double v) { return real_str(v, 12); }

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string quote(std::string_view s) { return '"' + json_escape(s) + '"'; }

std::string counts_entry(std::int64_t quarters) {
  return quote(std::to_string(quarters) + "/4");
}

std::string spectrum_body(const Spectrum& s) {
  std::ostringstream out;
  out << "{\"values\":[";
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    if (i > 0) out << ',';
    out << real_str(s.values(i));
  }
  out << "],\"tol\":" << real_str(s.tol) << ",\"multiplicity_clusters\":[";
  const auto clusters = multiplicity_clusters(s);
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (i > 0) out << ',';
    out << '[' << real_str(clusters[i].first) << ',' << clusters[i].second << ']';
  }
  out << "]}";
  return out.str();
}

}  // namespace

std::string matrix_json(const SymmetricQMatrix& m) {
  std::ostringstream out;
  out << "{\"order\":" << m.order() << ",\"entries\":[";
  for (Eigen::Index i = 0; i < m.order(); ++i) {
    if (i > 0) out << ',';
    out << '[';
    for (Eigen::Index j = 0; j < m.order(); ++j) {
      if (j > 0) out << ',';
      out << counts_entry(m.counts()(i, j));
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

std::string matrix_csv(const SymmetricQMatrix& m, int precision) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.order(); ++i) {
    for (Eigen::Index j = 0; j < m.order(); ++j) {
      if (j > 0) out << ',';
      out << real_str(static_cast<double>(m.counts()(i, j)) / 4.0, precision);
    }
    out << '\n';
  }
  return out.str();
}

std::string spectrum_json(const Spectrum& s) { return spectrum_body(s); }

std::string charpoly_json(const CharPoly& p) {
  std::ostringstream out;
  out << "{\"order\":" << p.degree() << ",\"coefficients\":[";
  for (int k = 0; k <= p.degree(); ++k) {
    if (k > 0) out << ',';
    out << quote(rational_str(p.coeff(k)));
  }
  out << "]}";
  return out.str();
}

std::string bounds_json(const BoundsReport& r, const Semigraph& g, UpperVariant argmax_variant) {
  const VertexPair argmax =
      argmax_variant == UpperVariant::Literal ? r.argmax_literal : r.argmax_proof;
  std::ostringstream out;
  out << "{\"delta\":" << quote(r.delta.str()) << ",\"lower\":" << quote(r.lower.str())
      << ",\"upper_literal\":" << quote(r.upper_literal.str())
      << ",\"upper_proof\":" << quote(r.upper_proof.str())
      << ",\"lambda_n\":" << real_str(r.lambda_n) << ",\"lower_ok\":" << bool_str(r.lower_ok)
      << ",\"upper_ok\":" << bool_str(r.upper_ok) << ",\"argmax_pair\":["
      << quote(g.label(argmax.first)) << ',' << quote(g.label(argmax.second)) << "]}";
  return out.str();
}

std::string closed_spectrum_json(const ClosedFormSpectrum& s, std::string_view family,
                                 std::int64_t n) {
  std::ostringstream out;
  out << "{\"family\":" << quote(family) << ",\"n\":" << n << ",\"order\":" << s.order
      << ",\"fixed\":[";
  for (std::size_t i = 0; i < s.fixed.size(); ++i) {
    if (i > 0) out << ',';
    out << '[' << quote(s.fixed[i].first.str()) << ',' << s.fixed[i].second << ']';
  }
  out << "],\"residual\":[";
  for (int k = 0; k <= s.residual.degree(); ++k) {
    if (k > 0) out << ',';
    out << quote(rational_str(s.residual.coeff(k)));
  }
  out << "]}";
  return out.str();
}

namespace {

struct ClassCounts {
  std::int64_t pure_end = 0;
  std::int64_t pure_middle = 0;
  std::int64_t middle_end = 0;
  std::int64_t isolated = 0;
};

ClassCounts count_classes(const Semigraph& g) {
  ClassCounts c;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    switch (g.vertex_class(static_cast<VertexIndex>(v))) {
      case VertexClass::PureEnd: ++c.pure_end; break;
      case VertexClass::PureMiddle: ++c.pure_middle; break;
      case VertexClass::MiddleEnd: ++c.middle_end; break;
      case VertexClass::Isolated: ++c.isolated; break;
    }
  }
  return c;
}

}  // namespace

std::string report_json(const Semigraph& g, double tol, const JacobiOptions& opts) {
  const EdgeCensus census = edge_census(g);
  const ClassCounts classes = count_classes(g);
  const DegreeVector deg = degrees(g);
  const SymmetricQMatrix l = laplacian(g);
  const Spectrum s = eigenvalues_sym(l, opts);
  const bool combinatorial = is_connected(g);
  const bool spectral = s.values(1) > tol * std::max(1.0, s.lambda_max());

  std::ostringstream out;
  out << "{\n";
  out << "\"semigraph\":{\"n\":" << g.vertex_count() << ",\"m\":" << g.edge_count()
      << ",\"census\":{\"m1\":" << census.full << ",\"m2\":" << census.quarter
      << ",\"m3\":" << census.half_one_partial << ",\"m4\":" << census.half_two_partial
      << "},\"vertex_classes\":{\"pure_end\":" << classes.pure_end
      << ",\"pure_middle\":" << classes.pure_middle << ",\"middle_end\":" << classes.middle_end
      << ",\"isolated\":" << classes.isolated << "}},\n";
  out << "\"degrees\":[";
  for (Eigen::Index i = 0; i < deg.size(); ++i) {
    if (i > 0) out << ',';
    out << quote(deg[i].str());
  }
  out << "],\n";
  out << "\"laplacian\":" << matrix_json(l) << ",\n";
  out << "\"spectrum\":" << spectrum_body(s) << ",\n";
  out << "\"connectivity\":{\"combinatorial\":" << bool_str(combinatorial)
      << ",\"spectral\":" << bool_str(spectral) << ",\"lambda2\":" << real_str(s.values(1))
      << "},\n";
  out << "\"bounds\":";
  if (combinatorial && g.edge_count() > 0) {
    out << bounds_json(bounds_report(g, tol, opts), g);
  } else {
    out << "null";
  }
  out << "\n}\n";
  return out.str();
}

std::string report_csv(const Semigraph& g, double tol, const JacobiOptions& opts, int precision) {
  const EdgeCensus census = edge_census(g);
  const ClassCounts classes = count_classes(g);
  const DegreeVector deg = degrees(g);
  const SymmetricQMatrix l = laplacian(g);
  const Spectrum s = eigenvalues_sym(l, opts);
  const bool combinatorial = is_connected(g);
  const bool spectral = s.values(1) > tol * std::max(1.0, s.lambda_max());

  std::ostringstream out;
  out << "n," << g.vertex_count() << "\nm," << g.edge_count() << "\n";
  out << "m1," << census.full << "\nm2," << census.quarter << "\nm3," << census.half_one_partial
      << "\nm4," << census.half_two_partial << "\n";
  out << "pure_end," << classes.pure_end << "\npure_middle," << classes.pure_middle
      << "\nmiddle_end," << classes.middle_end << "\nisolated," << classes.isolated << "\n";
  for (Eigen::Index i = 0; i < deg.size(); ++i)
    out << "degree," << g.label(i) << ',' << real_str(deg[i].to_double(), precision) << "\n";
  for (Eigen::Index i = 0; i < l.order(); ++i) {
    out << "L," << g.label(i);
    for (Eigen::Index j = 0; j < l.order(); ++j)
      out << ',' << real_str(static_cast<double>(l.counts()(i, j)) / 4.0, precision);
    out << "\n";
  }
  for (Eigen::Index i = 0; i < s.values.size(); ++i)
    out << "eigenvalue," << (i + 1) << ',' << real_str(s.values(i), precision) << "\n";
  for (const auto& [value, count] : multiplicity_clusters(s))
    out << "cluster," << real_str(value, precision) << ',' << count << "\n";
  out << "connected," << bool_str(combinatorial) << "\n";
  out << "spectral_connected," << bool_str(spectral) << "\n";
  out << "lambda2," << real_str(s.values(1), precision) << "\n";
  if (combinatorial && g.edge_count() > 0) {
    const BoundsReport r = bounds_report(g, tol, opts);
    out << "delta," << real_str(r.delta.to_double(), precision) << "\n";
    out << "lower," << real_str(r.lower.to_double(), precision) << "\n";
    out << "upper_literal," << real_str(r.upper_literal.to_double(), precision) << "\n";
    out << "upper_proof," << real_str(r.upper_proof.to_double(), precision) << "\n";
    out << "lambda_n," << real_str(r.lambda_n, precision) << "\n";
    out << "lower_ok," << bool_str(r.lower_ok) << "\n";
    out << "upper_ok," << bool_str(r.upper_ok) << "\n";
    out << "argmax_pair," << g.label(r.argmax_proof.first) << ','
        << g.label(r.argmax_proof.second) << "\n";
  }
  return out.str();
}

}  // namespace semigraph
