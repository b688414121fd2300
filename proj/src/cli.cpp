#include "permclass/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "permclass/bijections.hpp"
#include "permclass/error.hpp"
#include "permclass/oracle.hpp"
#include "permclass/pattern_classes.hpp"
#include "permclass/series.hpp"
#include "permclass/verification.hpp"

namespace permclass {

namespace {

using json = nlohmann::ordered_json;

struct CommandConfig {
  std::string member_class = "aip";
  int k = 1;
  std::optional<int> series_k;
  int order = 10;
  std::string name;
  std::string value = "-";
  std::string format = "plain";
  std::optional<long long> t, u, v, q;
  std::string numer;
  std::string denom;
  int n = 0;
  std::optional<int> enum_k;
  bool count_only = false;
  std::string suite = "all";
  int max_n = 9;
  bool inject_fault = false;
};

std::string read_value(const std::string& value, std::istream& in) {
  if (value != "-") return value;
  std::string line;
  std::getline(in, line);
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  return line;
}

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  switch (e.code()) {
    case ErrorCode::kNotInClass: return kExitNegative;
    default: return kExitUsage;
  }
}

int cmd_member(const CommandConfig& cfg, std::ostream& out, std::istream& in) {
  const Permutation p = parse_permutation(read_value(cfg.value, in));
  bool member = false;
  std::vector<int> profile;
  if (cfg.member_class == "aip") {
    if (cfg.k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be nonnegative");
    member = is_almost_increasing(p, cfg.k);
    profile = height_profile(p);
  } else {
    member = is_x_class(p);
  }
  if (cfg.format == "json") {
    json j;
    j["class"] = cfg.member_class;
    if (cfg.member_class == "aip") j["k"] = cfg.k;
    j["permutation"] = to_string(p);
    j["member"] = member;
    if (cfg.member_class == "aip") j["height_profile"] = profile;
    out << j.dump() << '\n';
  } else {
    out << (member ? "member" : "non-member") << '\n';
    if (cfg.member_class == "aip") {
      out << "height profile:";
      for (std::size_t i = 0; i < profile.size(); ++i) out << (i == 0 ? " " : ",") << profile[i];
      out << '\n';
    }
  }
  return member ? kExitOk : kExitNegative;
}

int cmd_map(const CommandConfig& cfg, std::ostream& out, std::istream& in) {
  const std::string input = read_value(cfg.value, in);
  const std::string& name = cfg.name;
  std::string image;
  if (name == "wx") {
    image = to_string(word_to_xperm(validate_word(input)));
  } else if (name == "wx-inv") {
    image = xperm_to_word(parse_permutation(input)).letters();
  } else if (name == "aw") {
    image = aip_to_word(parse_permutation(input)).letters();
  } else if (name == "aw-inv") {
    image = to_string(word_to_aip(validate_word(input)));
  } else if (name == "zeta") {
    image = word_to_path(validate_word(input)).steps();
  } else if (name == "zeta-inv") {
    image = path_to_word(validate_bounded_path(input)).letters();
  } else if (name == "theta") {
    image = theta(parse_permutation(input)).steps;
  } else if (name == "psi") {
    image = to_string(psi(parse_permutation(input)));
  } else if (name == "psi-inv") {
    image = to_string(psi_inverse(parse_colored_motzkin(input)));
  } else if (name == "diagonal") {
    image = to_string(diagonal_sequence(parse_permutation(input)));
  } else if (name == "array") {
    out << render_array(parse_permutation(input));
    return kExitOk;
  }
  out << image << '\n';
  return kExitOk;
}

std::vector<Integer> parse_integer_list(const std::string& text, const std::string& what) {
  std::vector<Integer> out;
  std::stringstream stream(text);
  std::string field;
  std::size_t index = 0;
  while (std::getline(stream, field, ',')) {
    const auto first = field.find_first_not_of(" \t");
    const auto last = field.find_last_not_of(" \t");
    field = first == std::string::npos ? "" : field.substr(first, last - first + 1);
    const bool digits =
        !field.empty() && field.find_first_not_of("0123456789", field[0] == '-' ? 1 : 0) ==
                              std::string::npos && field != "-";
    if (!digits) {
      throw Error(ErrorCode::kParse, what + ": expected an integer, got '" + field + "'", index);
    }
    out.emplace_back(field);
    ++index;
  }
  if (out.empty()) throw Error(ErrorCode::kParse, what + " is empty");
  return out;
}

json series_json(const std::string& which, const std::optional<int>& k,
                 const TruncatedSeries& s) {
  json j;
  j["series"] = which;
  if (k) j["k"] = *k;
  j["order"] = s.order();
  json coefficients = json::array();
  for (int n = 0; n <= s.order(); ++n) {
    json terms = json::array();
    for (const auto& [m, c] : s[n].terms()) {
      json exps;
      for (std::size_t i = 0; i < kNumVars; ++i) {
        exps[std::string(1, kVarNames[i])] = m.exponents[i];
      }
      terms.push_back({{"exponents", exps}, {"coefficient", c.str()}});
    }
    coefficients.push_back({{"power", n}, {"terms", terms}});
  }
  j["coefficients"] = coefficients;
  return j;
}

int cmd_series(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.order < 0 || cfg.order > kMaxSeriesOrder) {
    throw Error(ErrorCode::kInvalidArgument,
                "N must be within 0.." + std::to_string(kMaxSeriesOrder));
  }
  if (cfg.series_k && *cfg.series_k < 0) {
    throw Error(ErrorCode::kInvalidArgument, "k must be nonnegative");
  }
  const auto by_profile = [&](const WeightProfile& profile) {
    return cfg.series_k ? cf_series(profile, *cfg.series_k, cfg.order)
                        : unbounded_series(profile, cfg.order);
  };
  std::optional<TruncatedSeries> s;
  if (cfg.name == "ak") {
    s = by_profile(ak_profile());
  } else if (cfg.name == "f") {
    s = by_profile(f_profile());
  } else if (cfg.name == "g") {
    s = by_profile(g_profile());
  } else if (cfg.name == "h") {
    s = by_profile(h_profile());
  } else if (cfg.name == "xclass") {
    s = xclass_series(cfg.order);
  } else {
    if (cfg.numer.empty() || cfg.denom.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "rational needs --numer and --denom");
    }
    s = rational_series(parse_integer_list(cfg.numer, "numerator"),
                        parse_integer_list(cfg.denom, "denominator"), cfg.order);
  }
  const std::pair<Var, std::optional<long long>> specializations[] = {
      {Var::kT, cfg.t}, {Var::kU, cfg.u}, {Var::kV, cfg.v}, {Var::kQ, cfg.q}};
  for (const auto& [var, value] : specializations) {
    if (value) s = s->substitute(var, Integer(*value));
  }

  if (cfg.format == "json") {
    const bool profiled = cfg.name == "ak" || cfg.name == "f" || cfg.name == "g" || cfg.name == "h";
    out << series_json(cfg.name, profiled ? cfg.series_k : std::nullopt, *s).dump() << '\n';
  } else if (const auto sequence = format_sequence(*s)) {
    out << *sequence << '\n';
  } else {
    out << format_plain(*s);
  }
  return kExitOk;
}

int cmd_enumerate(const CommandConfig& cfg, std::ostream& out) {
  const EnumerationCaps caps = caps_from_environment();
  std::vector<std::string> items;
  std::size_t count = 0;
  const auto emit = [&](std::string s) {
    ++count;
    if (!cfg.count_only) out << s << '\n';
  };
  const std::string& what = cfg.name;
  if (what == "words") {
    for (const auto& w : enumerate_words(cfg.n, caps)) emit(w.letters());
  } else if (what == "paths") {
    for (const auto& p : enumerate_bounded_paths(cfg.n, caps)) emit(p.steps());
  } else if (what == "colored") {
    for (const auto& p : enumerate_colored_paths(cfg.n, cfg.enum_k.value_or(cfg.n), caps)) {
      emit(to_string(p));
    }
  } else {
    PermClass cls = PermClass::kAll;
    int k = cfg.enum_k.value_or(1);
    if (what == "aip") {
      cls = PermClass::kAip;
    } else if (what == "xclass") {
      cls = PermClass::kXClass;
    } else if (what == "involutions") {
      cls = PermClass::kAipInvolutions;
      k = cfg.enum_k.value_or(cfg.n);
    }
    if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be nonnegative");
    for_each_permutation(
        cfg.n, [&](const Permutation& p) { if (in_class(p, cls, k)) emit(to_string(p)); }, caps);
  }
  if (cfg.count_only) out << count << '\n';
  return kExitOk;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  VerifyOptions options;
  const EnumerationCaps env = caps_from_environment();
  options.max_n = std::min({cfg.max_n, env.perm_n, env.word_n});
  options.inject_fault = cfg.inject_fault;
  const VerifySuite suite = cfg.suite == "bijections" ? VerifySuite::kBijections
                            : cfg.suite == "series"   ? VerifySuite::kSeries
                                                      : VerifySuite::kAll;
  const auto reports = run_verification(suite, options);
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.passed) ++failed;
    out << (cfg.format == "json" ? r.to_json() : r.summary()) << '\n';
  }
  if (cfg.format != "json") {
    out << reports.size() - failed << '/' << reports.size() << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"Almost-increasing permutations, the X-class, and their bijections"};
  app.name("permclass");
  app.require_subcommand(1);
  CommandConfig cfg;
  const std::vector<std::string> formats = {"plain", "json"};

  auto* member = app.add_subcommand("member", "Test membership in A^(k)_n or the X-class");
  member->add_option("--class", cfg.member_class, "aip or x")
      ->check(CLI::IsMember({"aip", "x"}))
      ->required();
  member->add_option("-k", cfg.k, "height bound for aip")->capture_default_str();
  member->add_option("permutation", cfg.value, "comma-separated one-line notation, or - for stdin");
  member->add_option("--format", cfg.format)->check(CLI::IsMember(formats));

  auto* map = app.add_subcommand("map", "Apply a bijection");
  map->add_option("name", cfg.name, "wx, wx-inv, aw, aw-inv, zeta, zeta-inv, theta, psi, psi-inv")
      ->check(CLI::IsMember({"wx", "wx-inv", "aw", "aw-inv", "zeta", "zeta-inv", "theta", "psi",
                             "psi-inv", "diagonal", "array"}))
      ->required();
  map->add_option("value", cfg.value, "input value, or - for stdin");

  auto* series = app.add_subcommand("series", "Expand a generating function");
  series->add_option("which", cfg.name, "ak, f, g, h, xclass or rational")
      ->check(CLI::IsMember({"ak", "f", "g", "h", "xclass", "rational"}))
      ->required();
  series->add_option("-k", cfg.series_k, "height bound (omit for the unbounded limit)");
  series->add_option("-N", cfg.order, "highest power of x")->capture_default_str();
  series->add_option("--t", cfg.t, "specialize t to an integer");
  series->add_option("--u", cfg.u, "specialize u to an integer");
  series->add_option("--v", cfg.v, "specialize v to an integer");
  series->add_option("--q", cfg.q, "specialize q to an integer");
  series->add_option("--numer", cfg.numer, "numerator coefficients, e.g. 1,-3");
  series->add_option("--denom", cfg.denom, "denominator coefficients, e.g. 1,-4,2");
  series->add_option("--format", cfg.format)->check(CLI::IsMember(formats));

  auto* enumerate = app.add_subcommand("enumerate", "List the objects of a finite family");
  enumerate->add_option("what", cfg.name, "perms, aip, xclass, involutions, words, paths, colored")
      ->check(CLI::IsMember({"perms", "aip", "xclass", "involutions", "words", "paths", "colored"}))
      ->required();
  enumerate->add_option("-n", cfg.n, "size")->required();
  enumerate->add_option("-k", cfg.enum_k, "height bound (aip, involutions, colored)");
  enumerate->add_flag("--count", cfg.count_only, "print only the number of objects");

  auto* verify = app.add_subcommand("verify", "Run the exhaustive verification suite");
  verify->add_option("suite", cfg.suite, "bijections, series or all")
      ->check(CLI::IsMember({"bijections", "series", "all"}));
  verify->add_option("--max-n", cfg.max_n, "upper bound on every exhaustive domain")
      ->capture_default_str();
  verify->add_flag("--inject-fault", cfg.inject_fault, "add a deliberately failing check");
  verify->add_option("--format", cfg.format)->check(CLI::IsMember(formats));

  std::vector<const char*> argv{"permclass"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*member) return cmd_member(cfg, out, in);
    if (*map) return cmd_map(cfg, out, in);
    if (*series) return cmd_series(cfg, out);
    if (*enumerate) return cmd_enumerate(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

}  // namespace permclass
