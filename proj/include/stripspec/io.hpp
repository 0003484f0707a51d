// Copyright (c) 2026 The stripspec authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STRIPSPEC_IO_HPP
#define STRIPSPEC_IO_HPP

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "stripspec/catalog.hpp"
#include "stripspec/coefficients.hpp"
#include "stripspec/errors.hpp"
#include "stripspec/harmonic.hpp"
#include "stripspec/suite.hpp"

namespace stripspec::io {

using json = nlohmann::ordered_json;

// Wire schemas:
//   root coefficients  {dim, N, a0, a[], b[]}
//   trig coefficients  {dim, N, c0, c[], s[]}
//   solution           {dim, N, a0, a[], b[], convention}
// a0/c0 are length-d arrays; a/b/c/s are N arrays of length-d arrays.

inline json to_json(const RootCoefficients& rc) {
  return json{{"dim", rc.dim}, {"N", rc.order()}, {"a0", rc.a0},
              {"a", rc.a},     {"b", rc.b}};
}

inline json to_json(const TrigCoefficients& tc) {
  return json{{"dim", tc.dim}, {"N", tc.order()}, {"c0", tc.c0},
              {"c", tc.c},     {"s", tc.s}};
}

inline RootCoefficients root_coefficients_from_json(const json& j) {
  try {
    RootCoefficients rc;
    rc.dim = j.at("dim").get<int>();
    const int N = j.at("N").get<int>();
    rc.a0 = j.at("a0").get<Vec>();
    rc.a = j.at("a").get<std::vector<Vec>>();
    rc.b = j.at("b").get<std::vector<Vec>>();
    if (rc.dim < 1 || static_cast<int>(rc.a.size()) != N ||
        static_cast<int>(rc.b.size()) != N ||
        static_cast<int>(rc.a0.size()) != rc.dim)
      throw io_error("root coefficients: inconsistent sizes");
    for (const auto& v : rc.a)
      if (static_cast<int>(v.size()) != rc.dim)
        throw io_error("root coefficients: ragged 'a'");
    for (const auto& v : rc.b)
      if (static_cast<int>(v.size()) != rc.dim)
        throw io_error("root coefficients: ragged 'b'");
    return rc;
  } catch (const json::exception& e) {
    throw io_error(std::string("root coefficients: ") + e.what());
  }
}

inline json to_json(const HarmonicSolution& sol) {
  json j = to_json(sol.coeffs);
  j["convention"] = to_string(sol.convention);
  j["full_strip_integrable"] = sol.full_strip_integrable;
  return j;
}

inline HarmonicSolution solution_from_json(const json& j) {
  HarmonicSolution sol;
  sol.coeffs = root_coefficients_from_json(j);
  try {
    sol.convention = convention_from_string(j.at("convention").get<std::string>());
    if (j.contains("full_strip_integrable"))
      sol.full_strip_integrable = j.at("full_strip_integrable").get<bool>();
  } catch (const json::exception& e) {
    throw io_error(std::string("solution: ") + e.what());
  }
  return sol;
}

inline json to_json(const diag::CheckRecord& c) {
  return json{{"name", c.name},       {"anchor", c.anchor},
              {"inputs", c.inputs},   {"measured", c.measured},
              {"tolerance", c.tolerance}, {"pass", c.pass},
              {"xfail", c.xfail}};
}

/// Report JSON; `timestamp` is the only nondeterministic field and may be
/// disabled for byte-reproducible output.
inline json to_json(const diag::Report& rep, bool with_timestamp = true) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back(to_json(c));
  json j{{"summary",
          {{"total", rep.total()},
           {"passed", rep.passed()},
           {"failed", rep.failed()},
           {"xfail", rep.xfailed()},
           {"ok", rep.ok()}}},
         {"environment",
          {{"quadrature", rep.quadrature},
           {"convention", rep.convention},
           {"seed", rep.seed}}},
         {"checks", checks}};
  if (with_timestamp) {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    j["environment"]["timestamp"] = buf;
  }
  return j;
}

/// Full-precision scientific format (17 significant digits), so CSV output
/// round-trips doubles bit-faithfully.
inline std::string format_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

/// Field sample CSV: header x,y,component_0..component_{d-1}, one row per
/// grid point (y-major).
inline void write_field_csv(std::ostream& os, const HarmonicSolution& sol,
                            const StripGrid& grid) {
  os << "x,y";
  for (int c = 0; c < sol.dim(); ++c) os << ",component_" << c;
  os << "\n";
  for (double y : grid.ys)
    for (double x : grid.xs) {
      const Vec u = eval_solution(sol, x, y);
      os << format_full(x) << "," << format_full(y);
      for (double v : u) os << "," << format_full(v);
      os << "\n";
    }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "' for reading");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw io_error("cannot parse '" + path + "': " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw io_error("write failed for '" + path + "'");
}

/**
 * \brief Resolve a function spec: a catalog name, or a path to a root
 * coefficient JSON file (loaded as the exact finite combination).
 * Unknown names raise lookup_error, unreadable/malformed files io_error.
 */
inline VectorFunction function_from_spec(const std::string& spec, int dim) {
  if (is_catalog_name(spec)) return catalog(spec, dim);
  if (std::filesystem::exists(spec)) {
    RootCoefficients rc = root_coefficients_from_json(read_json_file(spec));
    return combination_function(std::move(rc),
                                std::filesystem::path(spec).stem().string());
  }
  throw lookup_error("'" + spec +
                     "' is neither a catalog name nor an existing file");
}

}  // namespace stripspec::io

#endif  // STRIPSPEC_IO_HPP
