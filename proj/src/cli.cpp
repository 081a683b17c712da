// Copyright 2026 The planetrees Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planetrees/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "planetrees/canonical.hpp"
#include "planetrees/enumerate.hpp"
#include "planetrees/errors.hpp"
#include "planetrees/identities.hpp"
#include "planetrees/render.hpp"

namespace planetrees {

namespace {

enum class Format { kCodes, kDot, kAscii };

struct CliConfig {
  std::string passport;
  Format format = Format::kCodes;
  bool show_weights = false;
  std::size_t n = 0;
  std::size_t max = 0;
  std::size_t max_vertices = 0;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string trees_phrase(std::size_t count) {
  return std::to_string(count) + (count == 1 ? " tree" : " trees");
}

int cmd_enumerate(const CliConfig& cfg, std::ostream& out) {
  const DualPassport passport = parse_passport(cfg.passport);
  const auto codes = enumerate_codes(passport);
  ExactRational sum;
  std::size_t index = 0;
  for (const auto& code : codes) {
    ++index;
    const PlaneTree tree = tree_from_code(code);
    const ExactRational w = weight(tree);
    sum += w;
    const auto shown = cfg.show_weights ? std::optional(w) : std::nullopt;
    switch (cfg.format) {
      case Format::kCodes:
        out << code.str();
        if (shown) out << '\t' << shown->str();
        out << '\n';
        break;
      case Format::kDot:
        out << render_dot(tree, index, shown);
        break;
      case Format::kAscii:
        out << render_ascii(tree, index, shown);
        break;
    }
  }
  if (cfg.format == Format::kDot) out << "// ";
  out << trees_phrase(codes.size()) << ", sum " << sum.str() << '\n';
  return kExitOk;
}

int print_identity(const IdentityReport& r, std::ostream& out) {
  out << r.passport.str() << ' ' << r.lhs.str() << ' ' << r.rhs.str() << ' '
      << (r.equal ? "OK" : "FAIL") << '\n';
  return r.equal ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  return print_identity(verify_identity(parse_passport(cfg.passport)), out);
}

int cmd_verify_all(const CliConfig& cfg, std::ostream& out) {
  if (cfg.max_vertices > kMaxVerifyAllVertices) {
    throw ResourceLimit("verify-all is capped at " +
                        std::to_string(kMaxVerifyAllVertices) + " vertices");
  }
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (const auto& p : feasible_passports(cfg.max_vertices)) {
    ++checked;
    if (print_identity(verify_identity(p), out) != kExitOk) ++failures;
  }
  out << checked << " passports, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

std::string histogram_str(const std::map<std::size_t, std::size_t>& h) {
  std::string s = "{";
  for (const auto& [order, count] : h) {
    if (s.size() > 1) s += ',';
    s += std::to_string(order) + ':' + std::to_string(count);
  }
  return s + "}";
}

int cmd_theorem(const CliConfig& cfg, std::ostream& out) {
  const std::size_t lo = cfg.n ? cfg.n : 1;
  const std::size_t hi = cfg.n ? cfg.n : cfg.max;
  if (hi > kDefaultTheoremBound) {
    throw ResourceLimit("theorem check for n = " + std::to_string(hi) +
                        " exceeds the bound n <= " +
                        std::to_string(kDefaultTheoremBound));
  }
  bool ok = true;
  for (std::size_t n = lo; n <= hi; ++n) {
    const TheoremReport r = theorem_check(n);
    out << "n=" << n << " trees=" << r.census.tree_count
        << " aut=" << histogram_str(r.census.aut_histogram)
        << " sum=" << r.census.weighted_sum.str()
        << " predicate=" << yes_no(r.predicate)
        << " divisible=" << yes_no(r.divisible) << '\n';
    ok = ok && r.holds();
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_table(const CliConfig& cfg, std::ostream& out) {
  const auto rows = divisibility_table(cfg.max);
  std::vector<std::string> cat;
  cat.reserve(rows.size());
  std::size_t wn = 1, wc = 3, wm = 3;
  for (const auto& r : rows) {
    cat.push_back(r.catalan_n.str());
    wn = std::max(wn, std::to_string(r.n).size());
    wc = std::max(wc, cat.back().size());
    wm = std::max(wm, std::to_string(r.modulus).size());
  }
  out << std::setw(static_cast<int>(wn)) << "n" << ' '
      << std::setw(static_cast<int>(wc)) << "C_n" << ' '
      << std::setw(static_cast<int>(wm)) << "n+2" << ' '
      << "divisible predicate\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << std::setw(static_cast<int>(wn)) << r.n << ' '
        << std::setw(static_cast<int>(wc)) << cat[i] << ' '
        << std::setw(static_cast<int>(wm)) << r.modulus << ' '
        << std::left << std::setw(9) << yes_no(r.divisible) << std::right
        << ' ' << yes_no(r.predicate) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Plane trees by dual passport: enumeration, weighted counts, "
               "and Catalan divisibility checks",
               "planetrees"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* enumerate = app.add_subcommand("enumerate", "List all plane trees with a passport");
  enumerate->add_option("--passport", cfg.passport, "Comma-separated counts, e.g. 4,2,0,1")
      ->required();
  const std::map<std::string, Format> formats{
      {"codes", Format::kCodes}, {"dot", Format::kDot}, {"ascii", Format::kAscii}};
  enumerate->add_option("--format", cfg.format, "codes | dot | ascii")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  enumerate->add_flag("--weights", cfg.show_weights, "Show each tree's weight");

  auto* verify = app.add_subcommand("verify", "Check the weighted-count identity for one passport");
  verify->add_option("--passport", cfg.passport, "Comma-separated counts")->required();

  auto* verify_all = app.add_subcommand(
      "verify-all", "Check the identity for every feasible passport up to a size");
  verify_all->add_option("--max-vertices", cfg.max_vertices, "Largest vertex count")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));

  auto* theorem = app.add_subcommand(
      "theorem", "Census of the (n+2,0,n) family against C_n/(n+2)");
  auto* n_opt = theorem->add_option("--n", cfg.n, "Single n")
                    ->check(CLI::PositiveNumber);
  auto* max_opt = theorem->add_option("--max", cfg.max, "All n from 1 to this")
                      ->check(CLI::PositiveNumber);
  n_opt->excludes(max_opt);
  theorem->require_option(1);

  auto* table = app.add_subcommand("table", "Divisibility of C_n by n+2 (no enumeration)");
  table->add_option("--max", cfg.max, "Largest n")->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (*enumerate) return cmd_enumerate(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*verify_all) return cmd_verify_all(cfg, out);
    if (*theorem) return cmd_theorem(cfg, out);
    return cmd_table(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const InfeasiblePassport& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceLimit;
  }
}

}  // namespace planetrees
