#include "mhdstress/config.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mhdstress/errors.hpp"

namespace mhdstress {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// Collects problems instead of throwing on the first one.
class Problems {
 public:
  void add(std::string msg) { list_.push_back(std::move(msg)); }
  bool empty() const { return list_.empty(); }

  [[noreturn]] void raise() const {
    std::string msg = "invalid configuration:";
    for (const auto& m : list_) msg += "\n  - " + m;
    throw ConfigError(msg);
  }

 private:
  std::vector<std::string> list_;
};

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && std::isfinite(out);
}

bool parse_int(const std::string& s, long long& out) {
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !s.empty();
}

bool parse_uint64(const std::string& s, std::uint64_t& out) {
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && !s.empty();
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "dim",          "n_points",         "model",          "alpha",       "beta",       "dt",
      "t_end",        "sample_every",     "stability_factor", "ic",         "ic.seed",    "ic.k_cap",
      "ic.amplitude", "ic.correlation",   "ic.mean_v",      "ic.B0",       "ic.mode",    "output.timeseries",
      "output.snapshot_prefix", "output.snapshot_every"};
  return keys;
}

InitialKind parse_kind(const std::string& s, Problems& problems) {
  if (s == "random") return InitialKind::random_bandlimited;
  if (s == "alfven") return InitialKind::alfven;
  if (s == "aligned") return InitialKind::aligned_steady;
  if (s == "modes") return InitialKind::explicit_modes;
  problems.add("ic: unknown initial condition '" + s + "' (expected random, alfven, aligned, or modes)");
  return InitialKind::random_bandlimited;
}

std::vector<double> parse_vector(const std::string& key, const std::string& value, Problems& problems) {
  std::vector<double> out;
  for (const auto& part : split(value, ',')) {
    double x = 0.0;
    if (!parse_double(part, x)) {
      problems.add(key + ": '" + value + "' is not a comma-separated list of numbers");
      return {};
    }
    out.push_back(x);
  }
  return out;
}

// <field> <component> <k1,k2[,k3]> <re> <im>
ModeSpec parse_mode(const std::string& value, int line, Problems& problems) {
  ModeSpec m;
  const auto tok = split_ws(value);
  const std::string where = "ic.mode (line " + std::to_string(line) + ")";
  if (tok.size() != 5) {
    problems.add(where + ": expected '<field> <component> <k1,k2[,k3]> <re> <im>'");
    return m;
  }
  if (tok[0] != "v" && tok[0] != "B" && tok[0] != "w") problems.add(where + ": field must be v, B, or w");
  m.field = tok[0].empty() ? '?' : tok[0][0];
  long long comp = 0;
  if (!parse_int(tok[1], comp)) problems.add(where + ": component is not an integer");
  m.component = static_cast<int>(comp);
  for (const auto& part : split(tok[2], ',')) {
    long long k = 0;
    if (!parse_int(part, k)) {
      problems.add(where + ": wavevector '" + tok[2] + "' is not a list of integers");
      break;
    }
    m.k.push_back(static_cast<int>(k));
  }
  double re = 0.0, im = 0.0;
  if (!parse_double(tok[3], re) || !parse_double(tok[4], im)) problems.add(where + ": coefficient is not numeric");
  m.coeff = {re, im};
  return m;
}

void check(const SimConfig& c, Problems& problems) {
  if (c.dim != 2 && c.dim != 3) problems.add("dim must be 2 or 3");
  const bool pow2 = c.n_points > 0 && (c.n_points & (c.n_points - 1)) == 0;
  if (c.n_points < 8 || !pow2) problems.add("n_points must be a power of two >= 8");
  if (std::abs(c.alpha + c.beta - 1.0) > 1e-12)
    problems.add("alpha + beta must equal 1 (got " + std::to_string(c.alpha + c.beta) + ")");
  if (!(c.dt > 0.0)) problems.add("dt must be positive");
  if (!(c.t_end >= 0.0)) problems.add("t_end must be non-negative");
  if (c.sample_every < 1) problems.add("sample_every must be >= 1");
  if (!(c.stability_factor > 0.0 && c.stability_factor <= 1.0)) problems.add("stability_factor must lie in (0, 1]");
  if (c.output.snapshot_every < 0) problems.add("output.snapshot_every must be >= 0");

  const int cutoff = c.n_points / 3;
  const auto& ic = c.ic;
  switch (ic.kind) {
    case InitialKind::random_bandlimited:
      if (!(ic.amplitude > 0.0)) problems.add("ic.amplitude must be positive");
      if (ic.k_cap < 1) problems.add("ic.k_cap must be >= 1");
      if (ic.k_cap > cutoff)
        problems.add("ic.k_cap = " + std::to_string(ic.k_cap) + " exceeds the dealias cutoff " + std::to_string(cutoff));
      if (!(ic.correlation >= 0.0 && ic.correlation <= 1.0)) problems.add("ic.correlation must lie in [0, 1]");
      if (!ic.mean_v.empty() && static_cast<int>(ic.mean_v.size()) != c.dim)
        problems.add("ic.mean_v must have dim entries");
      break;
    case InitialKind::aligned_steady:
      if (!(ic.amplitude > 0.0)) problems.add("ic.amplitude must be positive");
      break;
    case InitialKind::alfven:
      if (static_cast<int>(ic.B0.size()) != c.dim) problems.add("ic.B0 must have dim entries");
      break;
    case InitialKind::explicit_modes:
      break;
  }

  bool any_w = false;
  for (const auto& m : ic.modes) {
    if (m.field == 'w') any_w = true;
    if (m.field == 'w' && ic.kind != InitialKind::alfven) problems.add("ic.mode: field w is only valid with ic = alfven");
    if ((m.field == 'v' || m.field == 'B') && ic.kind != InitialKind::explicit_modes)
      problems.add("ic.mode: fields v and B are only valid with ic = modes");
    if (m.component < 1 || m.component > c.dim) problems.add("ic.mode: component must lie in 1..dim");
    if (static_cast<int>(m.k.size()) != c.dim) {
      problems.add("ic.mode: wavevector must have dim entries");
      continue;
    }
    bool zero = true;
    for (int k : m.k) {
      if (std::abs(k) > cutoff) problems.add("ic.mode: |k_i| = " + std::to_string(std::abs(k)) +
                                             " exceeds the dealias cutoff " + std::to_string(cutoff));
      if (k != 0) zero = false;
    }
    if (zero && m.coeff.imag() != 0.0) problems.add("ic.mode: the k = 0 coefficient must be real");
  }
  if (ic.kind == InitialKind::alfven && !any_w) problems.add("ic = alfven needs at least one 'ic.mode = w ...' line");
  if (ic.kind == InitialKind::explicit_modes && ic.modes.empty()) problems.add("ic = modes needs at least one ic.mode line");
}

}  // namespace

SimConfig parse_config(std::string_view text) {
  SimConfig c;
  Problems problems;
  std::set<std::string> seen;

  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      problems.add("line " + std::to_string(line_no) + ": expected 'key = value'");
      continue;
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (!known_keys().count(key)) {
      problems.add("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      continue;
    }
    if (key != "ic.mode" && !seen.insert(key).second) {
      problems.add("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
      continue;
    }
    seen.insert(key);

    auto need_double = [&](double& dst) {
      if (!parse_double(value, dst)) problems.add(key + ": '" + value + "' is not a number");
    };
    auto need_int = [&](int& dst) {
      long long x = 0;
      if (!parse_int(value, x)) problems.add(key + ": '" + value + "' is not an integer");
      dst = static_cast<int>(x);
    };

    if (key == "dim") need_int(c.dim);
    else if (key == "n_points") need_int(c.n_points);
    else if (key == "model") {
      try {
        c.model = parse_model(value);
      } catch (const ConfigError& e) {
        problems.add(std::string("model: ") + e.what());
      }
    } else if (key == "alpha") need_double(c.alpha);
    else if (key == "beta") need_double(c.beta);
    else if (key == "dt") need_double(c.dt);
    else if (key == "t_end") need_double(c.t_end);
    else if (key == "sample_every") need_int(c.sample_every);
    else if (key == "stability_factor") need_double(c.stability_factor);
    else if (key == "ic") c.ic.kind = parse_kind(value, problems);
    else if (key == "ic.seed") {
      if (!parse_uint64(value, c.ic.seed)) problems.add("ic.seed: '" + value + "' is not an unsigned integer");
    } else if (key == "ic.k_cap") need_int(c.ic.k_cap);
    else if (key == "ic.amplitude") need_double(c.ic.amplitude);
    else if (key == "ic.correlation") need_double(c.ic.correlation);
    else if (key == "ic.mean_v") c.ic.mean_v = parse_vector(key, value, problems);
    else if (key == "ic.B0") c.ic.B0 = parse_vector(key, value, problems);
    else if (key == "ic.mode") c.ic.modes.push_back(parse_mode(value, line_no, problems));
    else if (key == "output.timeseries") c.output.timeseries = value;
    else if (key == "output.snapshot_prefix") c.output.snapshot_prefix = value;
    else if (key == "output.snapshot_every") need_int(c.output.snapshot_every);
  }

  for (const char* required : {"dim", "n_points", "model", "dt", "t_end", "ic"})
    if (!seen.count(required)) problems.add(std::string("missing required key '") + required + "'");

  if (problems.empty()) check(c, problems);
  if (!problems.empty()) problems.raise();
  return c;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate(const SimConfig& config) {
  Problems problems;
  check(config, problems);
  if (!problems.empty()) problems.raise();
}

}  // namespace mhdstress
