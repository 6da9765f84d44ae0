#pragma once

// Command-line front end. run() is the whole program minus process setup,
// so tests can drive it in-process.

#include <algorithm>
#include <exception>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equipart/acceptance.hpp"
#include "equipart/bounds.hpp"
#include "equipart/errors.hpp"
#include "equipart/serialize.hpp"

namespace equipart::cli {

enum ExitCode : int { ok = 0, bad_arguments = 2, internal = 3, resource = 4 };

namespace detail {

using equipart::detail::require;

inline std::string join(const json& arr, const std::string& sep = " ") {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

inline std::string cell(const json& v) {
  if (v.is_null()) return "-";
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// Display width in code points; the bound column contains UTF-8.
inline std::size_t width_of(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

inline std::string pad(const std::string& s, std::size_t w) { return std::string(w - std::min(w, width_of(s)), ' ') + s; }

// Right-aligned table from rows of JSON objects, columns picked by key.
inline void print_table(std::ostream& os, const json& rows, const std::vector<std::pair<std::string, std::string>>& cols) {
  const auto value = [](const json& r, const std::string& key) { return cell(r.contains(key) ? r[key] : json(nullptr)); };
  std::vector<std::size_t> width;
  for (const auto& [key, head] : cols) {
    std::size_t w = width_of(head);
    for (const auto& r : rows) w = std::max(w, width_of(value(r, key)));
    width.push_back(w);
  }
  for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "  " : "") << pad(cols[c].second, width[c]);
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "  " : "") << pad(value(r, cols[c].first), width[c]);
    os << '\n';
  }
}

inline void text_words(std::ostream& os, const json& j, bool brute) {
  std::vector<std::pair<std::string, std::string>> cols{{"n", "n"},      {"R", "R(n)"},        {"P", "P(n)"},
                                                        {"P2n", "P(2n)"}, {"Q", "Q(n)"},       {"A", "A(n)"},
                                                        {"A_mod2", "A%2"}, {"P2n_mod2", "P(2n)%2"}};
  if (brute) {
    cols.push_back({"R_brute", "R*"});
    cols.push_back({"P_brute", "P*"});
    cols.push_back({"Q_brute", "Q*"});
  }
  print_table(os, j["rows"], cols);
  if (brute) os << "(* = exhaustive enumeration)\n";
}

inline void text_circles(std::ostream& os, const json& j) {
  os << "j=" << j["j"] << " states=" << j["states"] << " circles=" << j["circles"].size() << '\n';
  std::size_t i = 0;
  for (const auto& c : j["circles"]) os << "circle " << ++i << "  length " << c["length"] << "  " << join(c["compressed"]) << '\n';
}

inline void text_obstruction(std::ostream& os, const json& j) {
  os << "(d,j,k) = (" << j["d"] << "," << j["j"] << ",2)  case " << cell(j["case"]) << '\n';
  if (j["case"] == "delta0") {
    os << "m=" << j["m"] << "  D8-orbits " << j["orbit_count"] << "  C(2m-1,m-1) " << j["closed_form"] << "  parity "
       << cell(j["parity"]) << '\n';
  } else {
    os << "conventions: epsilon " << cell(j["conventions"]["epsilon"]) << ", rows " << cell(j["conventions"]["rows"])
       << '\n';
    os << "states " << j["states"] << "  circles " << j["circles"] << "  generating classes " << j["classes"].size()
       << '\n';
    json rows = json::array();
    for (auto c : j["classes"]) {
      c["canonical"] = c["canonical"].get<std::string>() + c["signs"].get<std::string>();
      c["stabilizer"] = "{" + join(c["stabilizer"], ",") + "}";
      rows.push_back(c);
    }
    print_table(os, rows,
                {{"canonical", "class"},
                 {"components", "comp"},
                 {"circle_length", "len"},
                 {"stabilizer", "stabilizer"},
                 {"monodromy", "monodromy"},
                 {"epsilon", "eps"},
                 {"eta", "eta"},
                 {"contribution", "contrib"}});
    if (j.contains("counters")) {
      const auto& k = j["counters"];
      os << "alpha " << k["alpha"] << "  beta " << k["beta"] << "  gamma " << k["gamma"] << "  Omega " << k["omega"]
         << "  (Omega mod 4 = " << k["omega_mod4"] << ")\n";
    } else {
      const auto& z = j["coordinates"];
      os << "coordinates in basis (Z,Y): (" << z["Z"] << "," << z["Y"] << ")";
      if (z.contains("O1")) os << "  closed form (O1,O2): (" << z["O1"] << "," << z["O2"] << ")";
      os << '\n';
    }
  }
  os << "total " << cell(j["total"]) << '\n';
  os << "verdict " << (j["admissible"].get<bool>() ? "admissible" : "not certified") << '\n';
  for (const auto& n : j["notes"]) os << "note: " << n.get<std::string>() << '\n';
}

inline void text_jacobian(std::ostream& os, const json& j) {
  os << "word " << cell(j["word"]) << "  j=" << j["j"] << " d=" << j["d"] << "  rows " << cell(j["row_order"]) << '\n';
  os << "curve order: " << join(j["curve_order"]) << '\n';
  std::size_t lw = 0;
  for (const auto& r : j["rows"]) lw = std::max(lw, r.get<std::string>().size());
  std::size_t cw = 2;
  for (const auto& c : j["columns"]) cw = std::max(cw, c.get<std::string>().size());
  os << std::string(lw, ' ');
  for (const auto& c : j["columns"]) os << ' ' << std::setw(static_cast<int>(cw)) << c.get<std::string>();
  os << '\n';
  for (std::size_t r = 0; r < j["rows"].size(); ++r) {
    os << std::left << std::setw(static_cast<int>(lw)) << j["rows"][r].get<std::string>() << std::right;
    for (const auto& v : j["matrix"][r]) os << ' ' << std::setw(static_cast<int>(cw)) << v.get<int>();
    os << '\n';
  }
  os << "det sign " << j["det_sign"] << "  block-diagonal sign " << j["block_sign"] << '\n';
}

inline void text_dickson(std::ostream& os, const json& j) {
  os << "(P_" << j["k"] << ")^" << j["j"] << '\n';
  if (j.contains("d"))
    os << "d=" << j["d"] << ": " << (j["admissible"].get<bool>() ? "not in the ideal, (d,j,k) admissible" : "in the ideal")
       << '\n';
  os << "minimal d " << j["minimal_d"] << "  index formula " << j["index_formula"] << "  lower bound "
     << j["lower_bound"] << '\n';
}

inline std::string bounds_line(const json& j) {
  std::ostringstream s;
  const std::string delta = "Δ(" + j["j"].dump() + "," + j["k"].dump() + ")";
  if (j["exact"].get<bool>())
    s << delta << " = " << j["lower"];
  else if (j["best"].is_null())
    s << j["lower"] << " ≤ " << delta;
  else
    s << j["lower"] << " ≤ " << delta << " ≤ " << j["best"];
  return s.str();
}

inline void text_bounds(std::ostream& os, const json& j) {
  os << bounds_line(j) << '\n';
  for (const auto& u : j["uppers"]) os << "  upper " << u["value"] << "  " << u["provenance"].get<std::string>() << '\n';
  for (const auto& n : j["notes"]) os << "note: " << n.get<std::string>() << '\n';
}

inline void text_table(std::ostream& os, const json& j) {
  json rows = json::array();
  for (auto r : j["rows"]) {
    const bool exact = !r["best"].is_null() && r["best"] == r["lower"];
    json b{{"j", r["j"]}, {"k", r["k"]}, {"lower", r["lower"]}, {"best", r["best"]}, {"exact", exact}};
    r["bound"] = bounds_line(b);
    rows.push_back(r);
  }
  print_table(os, rows,
              {{"j", "j"},
               {"lower", "lower"},
               {"dickson_minimal_d", "dickson d*"},
               {"index_formula", "index formula"},
               {"bound", "bound"}});
}

inline SignedWord parse_word_arg(const std::string& text) {
  if (!text.empty() && (text.back() == '+' || text.back() == '-')) return parse_signed_word(text);
  return SignedWord{Word(text), SignPair{}};
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for two-hyperplane mass equipartitions.", "equipart"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("equipart ") + kVersion);

  bool as_json = false;
  bool no_header = false;
  std::string out_path;
  app.add_flag("--json", as_json, "Emit JSON instead of text");
  app.add_flag("--no-header", no_header, "Suppress the version header line of text output");
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");

  int j = 0, k = 0, d = 0, nmax = 0, jmax = 0;
  std::string word, eps_conv = "quarter", rows = "paper";
  bool brute = false;
  std::uint64_t cap = kDefaultProductCap;

  const auto conventions = [&](CLI::App* sub) {
    sub->add_option("--epsilon-convention", eps_conv, "Orientation sign convention")
        ->check(CLI::IsMember({"quarter", "three-quarter"}));
    sub->add_option("--row-order", rows, "Jacobian row order per measure")->check(CLI::IsMember({"paper", "swapped"}));
  };

  auto* words = app.add_subcommand("words", "R, P, Q, A counts and parities for n = 1..nmax");
  words->add_option("--nmax", nmax, "Largest n")->required();
  words->add_flag("--brute", brute, "Add exhaustive-enumeration columns");

  auto* circles = app.add_subcommand("circles", "Circles of the solution manifold with compressed cycles");
  circles->add_option("--j", j, "Number of measures (odd)")->required();

  auto* obstr = app.add_subcommand("obstruction", "Obstruction class for (d, j, 2) with 2d - 3j in {0, 1}");
  obstr->add_option("--d", d, "Dimension")->required();
  obstr->add_option("--j", j, "Number of measures")->required();
  conventions(obstr);

  auto* jac = app.add_subcommand("jacobian", "Sign matrix and Jacobian sign of a canonical word");
  jac->add_option("--word", word, "Balanced word starting with A, e.g. AAABBB")->required();
  jac->add_option("--row-order", rows, "Row order per measure")->check(CLI::IsMember({"paper", "swapped"}));

  auto* dick = app.add_subcommand("dickson", "Ideal-membership test for (P_k)^j");
  dick->add_option("--j", j, "Number of measures")->required();
  dick->add_option("--k", k, "Number of hyperplanes")->required();
  auto* dopt = dick->add_option("--d", d, "Test this dimension");
  dick->add_option("--cap", cap, "Monomial-product guard per multiplication");

  auto* bounds = app.add_subcommand("bounds", "Lower bound and upper candidates for Delta(j, k)");
  bounds->add_option("--j", j, "Number of measures")->required();
  bounds->add_option("--k", k, "Number of hyperplanes")->required();
  bounds->add_option("--cap", cap, "Monomial-product guard per multiplication");
  conventions(bounds);

  auto* table = app.add_subcommand("table", "Bound table for fixed k");
  table->add_option("--k", k, "Number of hyperplanes")->required();
  table->add_option("--jmax", jmax, "List j = 1..jmax instead of the closing-table rows");
  table->add_option("--cap", cap, "Monomial-product guard per multiplication");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << "equipart " << kVersion << '\n';
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return bad_arguments;
  }

  std::ostringstream buf;
  int status = ok;
  try {
    Conventions conv;
    conv.epsilon = eps_conv == "quarter" ? EpsilonConvention::quarter : EpsilonConvention::three_quarter;
    conv.rows = rows == "paper" ? RowOrder::paper : RowOrder::swapped;
    if (!as_json && !no_header) buf << "# equipart " << kVersion << '\n';

    json payload;
    if (words->parsed()) {
      payload = words_json(nmax, brute);
      if (!as_json) detail::text_words(buf, payload, brute);
    } else if (circles->parsed()) {
      payload = circles_json(enumerate_circles(j));
      if (!as_json) detail::text_circles(buf, payload);
    } else if (obstr->parsed()) {
      payload = obstruction_json(obstruction(d, j, conv), conv);
      if (!as_json) detail::text_obstruction(buf, payload);
    } else if (jac->parsed()) {
      payload = jacobian_json(detail::parse_word_arg(word), conv.rows);
      if (!as_json) detail::text_jacobian(buf, payload);
    } else if (dick->parsed()) {
      payload = dickson_json(j, k, dopt->count() ? std::optional<int>(d) : std::nullopt, cap);
      if (!as_json) detail::text_dickson(buf, payload);
    } else if (bounds->parsed()) {
      BoundsOptions opt;
      opt.product_cap = cap;
      opt.conventions = conv;
      payload = bounds_json(bounds_report(j, k, opt));
      if (!as_json) detail::text_bounds(buf, payload);
    } else if (table->parsed()) {
      detail::require(jmax >= 0, "table: --jmax must be nonnegative");
      std::vector<int> js = default_table_rows();
      if (jmax > 0) {
        js.clear();
        for (int i = 1; i <= jmax; ++i) js.push_back(i);
      }
      BoundsOptions opt;
      opt.product_cap = cap;
      payload = table_json(k, js, opt);
      if (!as_json) detail::text_table(buf, payload);
    } else if (verify->parsed()) {
      const auto outcomes = acceptance::run_all();
      json list = json::array();
      int passed = 0;
      for (const auto& o : outcomes) {
        passed += o.passed;
        list.push_back(json{{"id", o.id}, {"name", o.name}, {"passed", o.passed}, {"detail", o.detail}});
        if (!as_json) buf << acceptance::format(o) << '\n';
      }
      payload = json{{"schema", "equipart.verify/1"}, {"criteria", list}, {"passed", passed},
                     {"total", outcomes.size()}};
      if (!as_json) buf << passed << "/" << outcomes.size() << " criteria passed\n";
      if (passed != static_cast<int>(outcomes.size())) status = internal;
    }
    if (as_json) buf << payload.dump(2) << '\n';
  } catch (const invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return bad_arguments;
  } catch (const resource_error& e) {
    err << "resource limit: " << e.what() << '\n';
    return resource;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << '\n';
    return internal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal;
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << out_path << '\n';
      return bad_arguments;
    }
    f << buf.str();
  } else {
    out << buf.str();
  }
  return status;
}

}  // namespace equipart::cli
