// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. `run` is the whole program minus process setup so
// it can be driven in-process by tests.
//
// Exit codes: 0 pass, 1 verification failure, 2 recipe not applicable,
// 3 internal contradiction (no twist for an applicable recipe), 4 parse or
// usage error.
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mdssd/codes.hpp"
#include "mdssd/constructions.hpp"
#include "mdssd/error.hpp"
#include "mdssd/gf.hpp"
#include "mdssd/serialize.hpp"
#include "mdssd/verify.hpp"

namespace mdssd::cli {

enum ExitCode : int {
  kPass = 0,
  kVerifyFailed = 1,
  kNotApplicable = 2,
  kInternal = 3,
  kParse = 4,
};

inline int exit_code_for(Errc e) {
  switch (e) {
    case Errc::RecipeNotApplicable: return kNotApplicable;
    case Errc::TwistSolveFailed:
    case Errc::InternalCrossCheckFailed: return kInternal;
    case Errc::RankDeficient: return kVerifyFailed;
    default: return kParse;
  }
}

struct CommandSpec {
  std::uint64_t p = 0;
  unsigned m = 1;
  std::string recipe;
  std::optional<unsigned> l, s;
  std::optional<std::uint64_t> t, e1;
  std::uint64_t n_max = 0;
  std::uint64_t q_min = 3, q_max = 0;
  std::uint64_t mds_budget = MdsOptions{}.budget;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  std::string out;
  std::string format = "json";
  bool no_timings = false;
  std::string matrix_file;
};

namespace detail {

inline Recipe recipe_from_flags(const Field& F, const CommandSpec& c) {
  const auto kind = parse_recipe_kind(c.recipe);
  if (!kind) throw Error(Errc::ParseError, "unknown recipe \"" + c.recipe + "\"");
  Recipe r = make_recipe(*kind, F);
  r.s = c.s;
  r.l = c.l;
  r.t = c.t;
  r.e1 = c.e1;
  if (c.e1 && *c.e1 != 0 && (F.q() - 1) % *c.e1 == 0) r.e2 = (F.q() - 1) / *c.e1;
  // Affine recipes carry an explicit l so certificates are self-describing.
  if (mdssd::detail::uses_affine_lift(*kind) && !r.l) r.l = 0;
  return r;
}

inline MdsOptions mds_options(const CommandSpec& c) {
  MdsOptions o;
  o.budget = c.mds_budget;
  return o;
}

inline bool certificate_passes(const Certificate& cert) { return cert.self_dual.pass && cert.mds.pass(); }

inline std::string summary_line(const Certificate& cert) {
  std::ostringstream os;
  os << (cert.recipe ? describe(*cert.recipe) : std::string("-")) << ": [" << cert.n << ", " << cert.k
     << "]_" << cert.field.q() << (cert.extended ? " EGRS" : " GRS")
     << ", self-dual " << (cert.self_dual.pass ? "pass" : "FAIL") << ", MDS " << to_string(cert.mds.kind)
     << " (" << cert.mds.minors << " minors)";
  return os.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& body) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
  f << body;
}

inline std::string matrix_text(const Certificate& cert) {
  std::ostringstream os;
  write_matrix(os, LinearCode(cert.field, cert.generator));
  return os.str();
}

/// Adds the brute-force twist verdict when (q-1)^|S| fits the oracle budget.
inline json with_oracle(json j, const Certificate& cert, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cert.points.size() && total <= budget; ++i) total *= cert.field.q() - 1;
  if (total > budget) return j;
  const bool exists = oracle_exists_twist(EvalSet(cert.field, cert.points), cert.extended, budget);
  if (!exists) throw Error(Errc::InternalCrossCheckFailed, "oracle finds no self-dual twist, but one was constructed");
  j["oracle"] = json{{"exists", exists}};
  return j;
}

inline std::string recipe_tag(const Recipe& r) {
  std::string s(to_string(r.kind));
  auto add = [&](const char* name, auto v) {
    if (v) s += std::string("_") + name + std::to_string(*v);
  };
  add("s", r.s);
  add("l", r.l);
  add("t", r.t);
  add("e1", r.e1);
  return s;
}

inline std::string recipe_label(const Recipe& r) {
  std::string params;
  auto add = [&](const char* name, auto v) {
    if (v) params += (params.empty() ? "" : ",") + std::string(name) + "=" + std::to_string(*v);
  };
  add("s", r.s);
  add("l", r.l);
  add("t", r.t);
  add("e1", r.e1);
  std::string out(to_string(r.kind));
  if (!params.empty()) out += "(" + params + ")";
  return out;
}

}  // namespace detail

inline int cmd_build(const CommandSpec& c, std::ostream& out, std::ostream& err) {
  const Field F = make_field(c.p, c.m);
  const Recipe r = detail::recipe_from_flags(F, c);
  if (auto a = applicable(F, r); !a) {
    err << "not applicable: " << describe(r) << ": " << a.reason << '\n';
    return kNotApplicable;
  }
  const Certificate cert = certify(F, r, CertifyOptions{detail::mds_options(c)});
  const std::string cert_json = detail::with_oracle(to_json(cert, !c.no_timings), cert, c.oracle_budget).dump(2) + "\n";
  if (!c.out.empty()) {
    detail::write_file(c.out + ".json", cert_json);
    detail::write_file(c.out + ".matrix", detail::matrix_text(cert));
    out << detail::summary_line(cert) << '\n';
  } else if (c.format == "text") {
    out << detail::summary_line(cert) << '\n' << detail::matrix_text(cert);
  } else {
    out << cert_json;
  }
  return detail::certificate_passes(cert) ? kPass : kVerifyFailed;
}

inline int cmd_search(const CommandSpec& c, std::ostream& out, std::ostream& err) {
  const Field F = make_field(c.p, c.m);
  std::ostringstream lines, table;
  table << std::left << std::setw(36) << "recipe" << std::setw(6) << "n" << std::setw(6) << "k" << std::setw(10)
        << "self_dual" << "mds\n";
  for (const auto& entry : enumerate_recipes(F, c.n_max)) {
    try {
      const Certificate cert = certify(F, entry.recipe, CertifyOptions{detail::mds_options(c)});
      lines << detail::with_oracle(to_json(cert, !c.no_timings), cert, c.oracle_budget).dump() << '\n';
      table << std::setw(36) << detail::recipe_label(entry.recipe) << std::setw(6) << cert.n << std::setw(6) << cert.k
            << std::setw(10) << (cert.self_dual.pass ? "pass" : "FAIL") << to_string(cert.mds.kind) << '\n';
    } catch (const Error& e) {
      lines << json{{"recipe", to_json(entry.recipe)}, {"error", e.what()}}.dump() << '\n';
      table << std::setw(36) << detail::recipe_label(entry.recipe) << std::setw(6) << entry.length << std::setw(6) << "-"
            << std::setw(10) << "ERROR" << e.what() << '\n';
    }
  }
  if (!c.out.empty()) detail::write_file(c.out, lines.str());
  if (c.format == "text") {
    out << table.str();
  } else {
    if (c.out.empty()) out << lines.str();
    err << table.str();
  }
  return kPass;
}

inline int cmd_verify(const CommandSpec& c, std::ostream& out, std::ostream& err) {
  std::ifstream f(c.matrix_file);
  if (!f) {
    err << "cannot open " << c.matrix_file << '\n';
    return kParse;
  }
  const MatrixFile mf = parse_matrix(f);
  const auto pp = mdssd::detail::prime_power(mf.q);
  if (!pp) throw Error(Errc::ParseError, "q = " + std::to_string(mf.q) + " is not a prime power");
  const Field F = make_field(pp->first, pp->second);
  Matrix g(mf.k, mf.n);
  for (std::size_t i = 0; i < mf.k; ++i)
    for (std::size_t j = 0; j < mf.n; ++j) g(i, j) = F.element(mf.rows[i][j]);
  std::optional<LinearCode> C;
  try {
    C.emplace(F, std::move(g));
  } catch (const Error& e) {
    if (e.code() != Errc::RankDeficient && e.code() != Errc::DimensionOutOfRange) throw;
    out << "self_dual: fail (rank failure: " << e.what() << ")\n";
    return kVerifyFailed;
  }
  const SelfDualResult sd = check_self_dual(*C);
  const MdsVerdict mds = check_mds(*C, detail::mds_options(c));
  out << "self_dual: " << (sd.pass ? "pass" : "fail (" + sd.reason + ")") << '\n';
  out << "mds: " << to_string(mds.kind) << " (" << mds.minors << " minors)";
  if (mds.kind == MdsVerdict::Kind::Failed) {
    out << " witness columns:";
    for (auto w : mds.witness) out << ' ' << w;
  }
  out << '\n';
  return sd.pass && mds.pass() ? kPass : kVerifyFailed;
}

inline int cmd_tables(const CommandSpec& c, std::ostream& out, std::ostream& err) {
  out << std::left << std::setw(8) << "q" << std::setw(6) << "n" << std::setw(6) << "k" << std::setw(10) << "mds"
      << "recipes\n";
  for (std::uint64_t q = std::max<std::uint64_t>(c.q_min, 3); q <= c.q_max; ++q) {
    const auto pp = mdssd::detail::prime_power(q);
    if (!pp || pp->first == 2) continue;
    const Field F = make_field(pp->first, pp->second);
    std::map<std::uint64_t, std::vector<Certificate>> by_length;
    for (const auto& entry : enumerate_recipes(F, c.n_max)) {
      try {
        Certificate cert = certify(F, entry.recipe, CertifyOptions{detail::mds_options(c)});
        if (!detail::certificate_passes(cert)) {
          err << "q=" << q << " " << describe(entry.recipe) << ": certificate did not pass, row omitted\n";
          continue;
        }
        if (!c.out.empty())
          detail::write_file(std::filesystem::path(c.out) / ("q" + std::to_string(q) + "_n" + std::to_string(cert.n) +
                                                             "_" + detail::recipe_tag(entry.recipe) + ".json"),
                             to_json(cert, !c.no_timings).dump(2) + "\n");
        by_length[cert.n].push_back(std::move(cert));
      } catch (const Error& e) {
        err << "q=" << q << " " << describe(entry.recipe) << ": " << e.what() << '\n';
      }
    }
    for (const auto& [n, certs] : by_length) {
      std::string names;
      bool sampled = false;
      for (const auto& cert : certs) {
        names += (names.empty() ? "" : "/") + detail::recipe_label(*cert.recipe);
        sampled = sampled || cert.mds.kind == MdsVerdict::Kind::Sampled;
      }
      out << std::setw(8) << q << std::setw(6) << n << std::setw(6) << n / 2 << std::setw(10)
          << (sampled ? "sampled" : "verified") << names << '\n';
    }
  }
  return kPass;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandSpec c;
  CLI::App app{"Construct and verify MDS self-dual (extended) GRS codes over odd-characteristic fields", "mdssd"};
  app.require_subcommand(1);

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--mds-budget", c.mds_budget, "Exhaustive minor budget; sampled above it")
        ->check(CLI::PositiveNumber);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "Output path");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--no-timings", c.no_timings, "Omit stage timings from JSON output");
  };

  auto* build = app.add_subcommand("build", "Construct, certify and emit one code");
  build->add_option("--p", c.p, "Characteristic")->required();
  build->add_option("--m", c.m, "Extension degree");
  build->add_option("--recipe", c.recipe, "Recipe kind, e.g. thm1a, thm4, rmk34, lemma31")->required();
  build->add_option("--l", c.l, "Affine lift dimension");
  build->add_option("--s", c.s, "Subfield degree");
  build->add_option("--t", c.t, "Recipe parameter t");
  build->add_option("--e1", c.e1, "Coset parameter e1 (divisor of q - 1)");
  build->add_option("--oracle-budget", c.oracle_budget, "Brute-force twist oracle budget");
  add_budget(build);
  add_output(build);

  auto* search = app.add_subcommand("search", "Certify every applicable recipe up to a length cap");
  search->add_option("--p", c.p, "Characteristic")->required();
  search->add_option("--m", c.m, "Extension degree");
  search->add_option("--n-max", c.n_max, "Largest code length")->required();
  search->add_option("--oracle-budget", c.oracle_budget, "Brute-force twist oracle budget");
  add_budget(search);
  add_output(search);

  auto* verify = app.add_subcommand("verify", "Check a generator matrix file for self-duality and MDS");
  verify->add_option("matrix", c.matrix_file, "Matrix file (header \"q n k\")")->required();
  add_budget(verify);

  auto* tables = app.add_subcommand("tables", "Certified lengths per field size");
  tables->add_option("--q-min", c.q_min, "Smallest q");
  tables->add_option("--q-max", c.q_max, "Largest q")->required();
  tables->add_option("--n-max", c.n_max, "Largest code length")->required();
  add_budget(tables);
  add_output(tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParse;
  }

  try {
    if (*build) return cmd_build(c, out, err);
    if (*search) return cmd_search(c, out, err);
    if (*verify) return cmd_verify(c, out, err);
    if (*tables) return cmd_tables(c, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kParse;
}

}  // namespace mdssd::cli
