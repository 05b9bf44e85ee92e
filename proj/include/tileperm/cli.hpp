#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tileperm/enumerate.hpp"
#include "tileperm/flipclasses.hpp"
#include "tileperm/plabic.hpp"
#include "tileperm/scott.hpp"
#include "tileperm/strandmap.hpp"
#include "tileperm/verify.hpp"

namespace tileperm::cli {

enum class Method { Enum, Formula, Both };

inline Method parse_method(const std::string& s) {
  if (s == "enum") return Method::Enum;
  if (s == "formula") return Method::Formula;
  if (s == "both") return Method::Both;
  fail(errc::malformed_input, "unknown method: " + s);
}

// ---------------------------------------------------------------------------
// Table builders. Every table is emitted row by row in the order of the
// corresponding table of counts: n ascending, then diagonal count m
// ascending, then λ lexicographically descending.

inline std::string table_anm(int max_n, Method method, int max_rank) {
  std::ostringstream out;
  for (int n = 3; n <= max_n; ++n) {
    for (int m = 0; m <= n - 3; ++m) {
      BigUint formula = a_n_m_formula(n, m);
      std::string cell = formula.str();
      if (method != Method::Formula) {
        std::uint64_t counted = generate_by_m(n, m, max_rank).size();
        if (method == Method::Both && BigUint(counted) != formula)
          fail(errc::out_of_range, "a_" + std::to_string(n) + "(" + std::to_string(m) +
                                       "): enumeration " + std::to_string(counted) +
                                       " != formula " + formula.str());
        cell = std::to_string(counted);
      }
      out << (m ? "," : "") << cell;
    }
    out << "\n";
  }
  return out.str();
}

inline std::string table_aen(int max_n, Method method, int max_rank) {
  std::ostringstream out;
  for (int n = 3; n <= max_n; ++n) {
    std::uint64_t by_key = 0, by_perm = 0;
    if (method != Method::Formula) by_key = count_classes(n, max_rank);
    if (method != Method::Enum) by_perm = count_scott_images(n, max_rank);
    if (method == Method::Both && by_key != by_perm)
      fail(errc::out_of_range, "AE_" + std::to_string(n) + ": class keys " +
                                   std::to_string(by_key) + " != scott images " +
                                   std::to_string(by_perm));
    out << (method == Method::Formula ? by_perm : by_key) << "\n";
  }
  return out.str();
}

inline std::string table_an_lambda(int max_n, Method method, int max_rank) {
  if (method == Method::Formula)
    fail(errc::not_applicable, "no closed formula for A_n(lambda); use --method enum or both");
  std::ostringstream out;
  for (int n = 3; n <= max_n; ++n) {
    std::map<ShapePartition, std::uint64_t> counts = lambda_counts(n, max_rank);
    for (int m = 0; m <= n - 3; ++m) {
      BigUint row_total;
      for (const ShapePartition& lam : partitions_with_parts(n - 2, m + 1)) {
        auto it = counts.find(lam);
        std::uint64_t c = it == counts.end() ? 0 : it->second;
        out << n << "," << lam.str() << "," << c << "\n";
        row_total += BigUint(c);
      }
      if (method == Method::Both && row_total != a_n_m_formula(n, m))
        fail(errc::out_of_range,
             "lambda cells for n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                 " sum to " + row_total.str() + " != " + a_n_m_formula(n, m).str());
    }
  }
  return out.str();
}

inline std::string table_aen_lambda(int max_n, Method method, int max_rank) {
  std::ostringstream out;
  for (int n = 3; n <= max_n; ++n) {
    std::map<ShapePartition, std::uint64_t> class_counts = lambda_class_counts(n, max_rank);
    std::map<ShapePartition, std::uint64_t> tiling_counts;
    if (method != Method::Enum) tiling_counts = lambda_counts(n, max_rank);
    auto formula_cell = [&](const ShapePartition& lam) -> std::uint64_t {
      if (lam.alpha(1) <= 4)
        return reduction_formula_with(n, lam, [&](const ShapePartition& mu) {
          auto it = tiling_counts.find(mu);
          return it == tiling_counts.end() ? 0 : it->second;
        });
      // One r-gon (r > 3) and triangles otherwise: C(n, r).
      if (lam.num_parts() == lam.alpha(1) + 1 && lam.parts[0] > 1)
        return binomial_class_count(n, lam.parts[0] + 2).to_u64();
      // The paper gives no formula here; fall back to the quotient count.
      auto it = class_counts.find(lam);
      return it == class_counts.end() ? 0 : it->second;
    };
    for (int m = 0; m <= n - 3; ++m) {
      for (const ShapePartition& lam : partitions_with_parts(n - 2, m + 1)) {
        auto it = class_counts.find(lam);
        std::uint64_t counted = it == class_counts.end() ? 0 : it->second;
        std::uint64_t cell = counted;
        if (method != Method::Enum) {
          std::uint64_t predicted = formula_cell(lam);
          if (method == Method::Both && predicted != counted)
            fail(errc::out_of_range, "AE_" + std::to_string(n) + "(" + lam.str() +
                                         "): enumeration " + std::to_string(counted) +
                                         " != formula " + std::to_string(predicted));
          cell = predicted;
        }
        out << n << "," << lam.str() << "," << cell << "\n";
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

inline nlohmann::json tiling_to_json(const Tiling& t) {
  nlohmann::json j;
  j["n"] = t.n();
  auto& ds = j["diagonals"] = nlohmann::json::array();
  for (const Diagonal& d : t.diagonals()) ds.push_back({d.a, d.b});
  return j;
}

inline std::string format_lambda_spaces(const Tiling& t) { return shape_of(t).str(); }

inline std::string diagonals_spaced(const Tiling& t) {
  std::string s;
  for (const Diagonal& d : t.diagonals()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(d.a) + "-" + std::to_string(d.b);
  }
  return s;
}

inline nlohmann::json verify_to_json(const std::vector<VerifySuiteResult>& results) {
  nlohmann::json j = nlohmann::json::array();
  for (const VerifySuiteResult& r : results) {
    nlohmann::json s;
    s["suite"] = r.suite;
    s["checks"] = r.checks;
    auto& fails = s["failures"] = nlohmann::json::array();
    for (const VerifyFailure& f : r.failures)
      fails.push_back({{"property", f.property}, {"counterexample", f.counterexample}});
    j.push_back(std::move(s));
  }
  return j;
}

inline int run(int argc, const char* const* argv, std::ostream& out_stream,
               std::ostream& err_stream) {
  CLI::App app{"polygon tilings, the Scott map, flip classes, strand diagrams, plabic graphs"};
  app.require_subcommand(1);

  std::string out_file;
  int max_rank = kDefaultMaxRank;
  app.add_option("--out", out_file, "write output to a file instead of stdout");
  app.add_option("--max-rank", max_rank, "largest rank full enumeration will attempt");

  int n = 0, m = -1;
  std::string diagonals, lambda_flag, format = "text", emit, table, method_flag = "enum",
                          suite = "all";

  CLI::App* c_enum = app.add_subcommand("enumerate", "list tilings of the n-gon");
  c_enum->add_option("--n", n, "polygon rank")->required();
  c_enum->add_option("--m", m, "restrict to tilings with m diagonals");
  c_enum->add_option("--lambda", lambda_flag, "restrict to a shape, e.g. \"2,2,1,1\"");
  c_enum->add_option("--format", format, "json|csv|count");

  CLI::App* c_count = app.add_subcommand("count", "emit the count tables");
  c_count->add_option("--n", n, "largest rank")->required();
  c_count->add_option("--table", table, "anm|aen|an-lambda|aen-lambda")->required();
  c_count->add_option("--method", method_flag, "enum|formula|both");

  CLI::App* c_scott = app.add_subcommand("scott", "Scott permutation of a tiling");
  c_scott->add_option("--n", n, "polygon rank")->required();
  c_scott->add_option("--diagonals", diagonals, "e.g. \"2-8,3-5,5-8\"");
  c_scott->add_option("--format", format, "cycles|oneline|json");

  CLI::App* c_classes = app.add_subcommand("classes", "flip-equivalence classes");
  c_classes->add_option("--n", n, "polygon rank")->required();
  c_classes->add_option("--lambda", lambda_flag, "restrict to a shape");
  c_classes->add_option("--emit", emit, "count|reps|table");

  CLI::App* c_strands = app.add_subcommand("strands", "strand diagram of a tiling");
  c_strands->add_option("--n", n, "polygon rank")->required();
  c_strands->add_option("--diagonals", diagonals, "e.g. \"2-8,3-5,5-8\"");
  c_strands->add_option("--emit", emit, "json|faces");

  CLI::App* c_plabic = app.add_subcommand("plabic", "plabic graph of a tiling");
  c_plabic->add_option("--n", n, "polygon rank")->required();
  c_plabic->add_option("--diagonals", diagonals, "e.g. \"2-8,3-5,5-8\"");
  c_plabic->add_option("--emit", emit, "dot|json|trip");

  CLI::App* c_verify = app.add_subcommand("verify", "run the exhaustive property suites");
  c_verify->add_option("--n", n, "largest rank to verify")->required();
  c_verify->add_option("--suite", suite, "lemmas|main-theorem|bijections|all");
  c_verify->add_option("--format", format, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out_stream, err_stream);
  }

  std::ofstream file_stream;
  std::ostream* sink = &out_stream;
  if (!out_file.empty()) {
    file_stream.open(out_file);
    if (!file_stream) {
      err_stream << "cannot open " << out_file << "\n";
      return 2;
    }
    sink = &file_stream;
  }
  std::ostream& out = *sink;

  try {
    if (c_enum->parsed()) {
      std::vector<Tiling> list;
      if (!lambda_flag.empty())
        list = generate_by_lambda(n, parse_partition(lambda_flag), max_rank);
      else if (m >= 0)
        list = generate_by_m(n, m, max_rank);
      else
        list = generate_all(n, max_rank);
      if (format == "count") {
        out << list.size() << "\n";
      } else if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const Tiling& t : list) j.push_back(tiling_to_json(t));
        out << j.dump() << "\n";
      } else if (format == "csv") {
        for (const Tiling& t : list)
          out << t.n() << "," << diagonals_spaced(t) << "," << format_lambda_spaces(t) << "\n";
      } else {
        fail(errc::malformed_input, "enumerate format must be json, csv or count");
      }
      return 0;
    }

    if (c_count->parsed()) {
      Method method = parse_method(method_flag);
      if (table == "anm")
        out << table_anm(n, method, max_rank);
      else if (table == "aen")
        out << table_aen(n, method, max_rank);
      else if (table == "an-lambda")
        out << table_an_lambda(n, method, max_rank);
      else if (table == "aen-lambda")
        out << table_aen_lambda(n, method, max_rank);
      else
        fail(errc::malformed_input, "unknown table: " + table);
      return 0;
    }

    if (c_scott->parsed()) {
      Tiling t = parse_tiling_flag(n, diagonals);
      Permutation sigma = scott_perm(t);
      if (format == "oneline" ) {
        for (int i = 1; i <= n; ++i) out << (i > 1 ? " " : "") << sigma(i);
        out << "\n";
      } else if (format == "json") {
        nlohmann::json j;
        j["n"] = n;
        j["sigma"] = sigma.images;
        j["cycles"] = to_cycles(sigma);
        out << j.dump() << "\n";
      } else {
        out << to_cycles(sigma) << "\n";
      }
      return 0;
    }

    if (c_classes->parsed()) {
      if (emit == "reps") {
        for (const auto& [key, rep] : class_representatives(n, max_rank)) {
          out << diagonals_spaced(rep) << ";";
          for (const Tile& tile : key.big_tiles) {
            out << " ";
            for (std::size_t i = 0; i < tile.vertices.size(); ++i)
              out << (i ? "-" : "") << tile.vertices[i];
          }
          out << "\n";
        }
      } else if (emit == "table") {
        out << table_aen_lambda(n, Method::Enum, max_rank);
      } else {
        if (!lambda_flag.empty())
          out << count_classes_by_lambda(n, parse_partition(lambda_flag), max_rank) << "\n";
        else
          out << count_classes(n, max_rank) << "\n";
      }
      return 0;
    }

    if (c_strands->parsed()) {
      Tiling t = parse_tiling_flag(n, diagonals);
      StrandMap map = build_strand_map(t);
      if (emit == "faces") {
        for (const FaceInfo& f : classify_faces(map)) {
          if (f.outer) continue;
          out << face_class_name(f.cls) << " sides=" << f.sides();
          if (f.vertex_label > 0) out << " vertex=" << f.vertex_label;
          if (f.edge_label > 0) out << " edge=" << f.edge_label;
          out << "\n";
        }
      } else {
        out << to_json(map).dump() << "\n";
      }
      return 0;
    }

    if (c_plabic->parsed()) {
      Tiling t = parse_tiling_flag(n, diagonals);
      PlabicGraph g = g_map(t);
      if (emit == "dot")
        out << to_dot(g);
      else if (emit == "trip")
        out << to_cycles(trip_perm(g)) << "\n";
      else
        out << to_json(g).dump() << "\n";
      return 0;
    }

    if (c_verify->parsed()) {
      std::vector<VerifySuiteResult> results;
      if (suite == "lemmas")
        results.push_back(verify_lemmas(n, max_rank));
      else if (suite == "main-theorem")
        results.push_back(verify_main_theorem(n, max_rank));
      else if (suite == "bijections")
        results.push_back(verify_bijections(n, max_rank));
      else if (suite == "all")
        results = verify_all(n, max_rank);
      else
        fail(errc::malformed_input, "unknown suite: " + suite);
      bool ok = true;
      if (format == "json") {
        out << verify_to_json(results).dump() << "\n";
        for (const VerifySuiteResult& r : results) ok &= r.ok();
      } else {
        for (const VerifySuiteResult& r : results) {
          out << r.suite << ": " << r.checks << " checks, " << r.failures.size()
              << " failures\n";
          for (const VerifyFailure& f : r.failures)
            out << "  FAIL " << f.property << " at " << f.counterexample << "\n";
          ok &= r.ok();
        }
      }
      return ok ? 0 : 1;
    }
  } catch (const error& e) {
    err_stream << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err_stream << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("tileperm");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace tileperm::cli
