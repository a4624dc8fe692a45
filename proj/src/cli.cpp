#include "cyclefam/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <vector>

#include "cyclefam/compose.hpp"
#include "cyclefam/construction.hpp"
#include "cyclefam/family_json.hpp"
#include "cyclefam/raney.hpp"
#include "cyclefam/solver.hpp"
#include "cyclefam/verify.hpp"
#include "cyclefam/witness.hpp"

namespace cyclefam::cli {
namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto end = std::min(text.find(',', begin), text.size());
    const char* first = text.data() + begin;
    const char* last = text.data() + end;
    int v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (first == last || ec != std::errc{} || ptr != last) {
      throw std::invalid_argument("expected comma-separated integers, got '" + text + "'");
    }
    values.push_back(v);
    begin = end + 1;
  }
  return values;
}

template <class Range>
std::string join_ints(const Range& values) {
  std::string out;
  for (auto v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

// Writes to `path`, or to `out` with a trailing newline when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
  } else {
    write_text_file(path, text + "\n");
  }
}

std::string bounds_tsv(const std::vector<BoundsRow>& rows) {
  std::string out = "k\t|F|\t|F^T|\twitness\t(k/2)^(k-1)\tverified\n";
  for (const auto& r : rows) {
    out += std::to_string(r.k) + '\t' + std::to_string(r.family_size) + '\t' +
           std::to_string(r.transversal_count) + '\t' + std::to_string(r.lower_bound_witness) +
           '\t' + r.comparison_value.decimal() + '\t' + (r.maximality_verified ? "yes" : "no") +
           '\n';
  }
  return out;
}

std::string bounds_json(const std::vector<BoundsRow>& rows) {
  nlohmann::ordered_json j;
  j["format"] = kFormatVersion;
  auto& list = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["k"] = r.k;
    row["family_size"] = r.family_size;
    row["transversal_count"] = r.transversal_count;
    row["lower_bound_witness"] = r.lower_bound_witness;
    row["comparison_num"] = r.comparison_value.num;
    row["comparison_den"] = r.comparison_value.den;
    row["comparison_decimal"] = r.comparison_value.decimal();
    row["bound_holds"] = r.bound_holds();
    row["maximality_verified"] = r.maximality_verified;
    list.push_back(std::move(row));
  }
  return j.dump() + "\n";
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle-based intersecting families: construction, transversals, witnesses"};
  app.name(args.empty() ? "cyclefam" : args.front());
  app.require_subcommand(1);

  int k = 0;
  int t = 0;
  std::string out_path;
  std::string input;

  auto* construct = app.add_subcommand("construct", "Emit F(k,t) as a JSON family");
  construct->add_option("--k", k, "Block size")->required();
  construct->add_option("--t", t, "Number of cycle sets, 1 <= t <= k")->required();
  construct->add_option("--out", out_path, "Output file (default: stdout)");

  auto* tau_cmd = app.add_subcommand("tau", "Transversal number of a family");
  tau_cmd->add_option("family", input, "Family JSON file")->required();

  auto* transversals = app.add_subcommand("transversals", "All minimum blocking sets");
  transversals->add_option("family", input, "Family JSON file")->required();
  transversals->add_option("--out", out_path, "Output file (default: stdout)");

  auto* check_maximal = app.add_subcommand("check-maximal", "Test F == F^T");
  check_maximal->add_option("family", input, "Family JSON file")->required();

  std::string avoid;
  bool trace = false;
  auto* witness = app.add_subcommand("witness", "Block of F(k,t) missing a set of < t points");
  witness->add_option("--k", k, "Block size")->required();
  witness->add_option("--t", t, "Number of cycle sets")->required();
  witness->add_option("--avoid", avoid, "Comma-separated points, e.g. x0.0,x1.2");
  witness->add_flag("--trace", trace, "Print the full construction trace");

  std::string values;
  auto* raney = app.add_subcommand("raney", "Positive cyclic shift of a sequence summing to 1");
  raney->add_option("values", values, "Comma-separated integers; put '--' before negatives")
      ->required();

  auto* maximal = app.add_subcommand("maximal", "Maximal intersecting family built on F(k,k-1)");
  maximal->add_option("--k", k, "Block size, >= 2")->required();
  maximal->add_option("--out", out_path, "Output file (default: stdout)");

  auto* compose = app.add_subcommand("compose", "F(k,t) plus A ⊛ F^T(k,t)");
  compose->add_option("--a", input, "Maximal intersecting family of (k-t)-sets")->required();
  compose->add_option("--k", k, "Block size")->required();
  compose->add_option("--t", t, "Number of cycle sets, t <= k-1")->required();
  compose->add_option("--out", out_path, "Output file (default: stdout)");

  int k_min = 2;
  int k_max = 5;
  std::string format = "tsv";
  auto* bounds = app.add_subcommand("bounds", "Certified lower bounds against (k/2)^(k-1)");
  bounds->add_option("--k-min", k_min, "Smallest k")->capture_default_str();
  bounds->add_option("--k-max", k_max, "Largest k")->capture_default_str();
  bounds->add_option("--format", format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();

  std::uint64_t seed = kDefaultSeed;
  auto* verify = app.add_subcommand("verify", "Run the full verification suite");
  verify->add_option("--k-max", k_max, "Largest k for the maximality check (2..5)")
      ->capture_default_str();
  verify->add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  try {
    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (construct->parsed()) {
      const Family f = build_family(k, t);
      emit(to_json({k, t, f}), out_path, out);
      return is_intersecting(f) && is_uniform(f, k) ? kOk : kPropertyFails;
    }
    if (tau_cmd->parsed()) {
      const auto report = cyclefam::tau(read_family_file(input).family);
      out << "tau=" << report.tau << "\ncertificate=" << report.certificate.str() << '\n';
      return kOk;
    }
    if (transversals->parsed()) {
      const Family f = enumerate_transversals(read_family_file(input).family);
      emit(to_json({*f.declared_k(), std::nullopt, f}), out_path, out);
      return kOk;
    }
    if (check_maximal->parsed()) {
      const bool ok = is_maximal(read_family_file(input).family);
      out << "maximal=" << (ok ? "yes" : "no") << '\n';
      return ok ? kOk : kPropertyFails;
    }
    if (witness->parsed()) {
      const auto w = witness_block(k, t, parse_point_list(avoid));
      if (trace) {
        out << format_trace(w);
      } else {
        out << "block=" << w.block.str() << '\n';
      }
      return kOk;
    }
    if (raney->parsed()) {
      const auto r = raney_mu(parse_int_list(values));
      out << "mu=" << r.mu << "\npartial_sums=" << join_ints(r.shifted_partial_sums) << '\n';
      return kOk;
    }
    if (maximal->parsed()) {
      emit(to_json({k, std::nullopt, build_maximal(k)}), out_path, out);
      return kOk;
    }
    if (compose->parsed()) {
      const Family a = read_family_file(input).family;
      emit(to_json({k, std::nullopt, compose_general(a, k, t)}), out_path, out);
      return kOk;
    }
    if (bounds->parsed()) {
      const auto rows = bounds_table(k_min, k_max);
      out << (format == "json" ? bounds_json(rows) : bounds_tsv(rows));
      const bool ok = std::all_of(rows.begin(), rows.end(),
                                  [](const BoundsRow& r) { return r.bound_holds(); });
      return ok ? kOk : kPropertyFails;
    }
    if (verify->parsed()) {
      const auto results = run_verification({k_max, seed});
      int failed = 0;
      for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
        err << r.name << " took " << r.seconds << " s\n";
        failed += r.passed ? 0 : 1;
      }
      out << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
          << " checks passed\n";
      return failed == 0 ? kOk : kPropertyFails;
    }
  } catch (const std::logic_error& e) {
    // Other logic_errors come from internal invariant checks.
    if (dynamic_cast<const std::invalid_argument*>(&e) ||
        dynamic_cast<const std::out_of_range*>(&e)) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
    err << "invariant violated: " << e.what() << '\n';
    return kPropertyFails;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace cyclefam::cli
