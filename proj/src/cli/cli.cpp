#include "revlab/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>

#include "revlab/complexity/compressor.hpp"
#include "revlab/core/rng.hpp"
#include "session.hpp"

namespace revlab::cli {

namespace fs = std::filesystem;

void add_common(CLI::App& sub, Common& common) {
  sub.add_option("--seed", common.seed, "Seed for every random stream of the run");
  sub.add_option("--out", common.out_dir, "Directory for machine outputs and manifest.json");
  sub.add_option("--threads", common.threads, "Worker threads (0 = hardware concurrency)");
}

namespace {

std::string command_path(const CLI::App& sub) {
  std::vector<std::string> names;
  for (const CLI::App* a = &sub; a != nullptr && a->get_parent() != nullptr; a = a->get_parent()) {
    names.push_back(a->get_name());
  }
  std::string path;
  for (auto it = names.rbegin(); it != names.rend(); ++it) path += (path.empty() ? "" : " ") + *it;
  return path;
}

nlohmann::json effective_config(const CLI::App& sub) {
  nlohmann::json config = nlohmann::json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help") continue;
    if (opt->get_type_size() == 0) {
      config[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      const auto& r = opt->results();
      config[name] = r.size() == 1 ? nlohmann::json(r.front()) : nlohmann::json(r);
    } else {
      config[name] = opt->get_default_str();
    }
  }
  return config;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

Run::Run(Session& session, const CLI::App& sub)
    : session_(session), command_(command_path(sub)), config_(effective_config(sub)) {
  config_["seed"] = session_.common.seed;
  if (has_out()) fs::create_directories(session_.common.out_dir);
}

void Run::write(const std::string& name, const std::string& content) {
  if (!has_out()) return;
  const fs::path path = fs::path(session_.common.out_dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
  outputs_.push_back(name);
}

void Run::write_json(const std::string& name, const nlohmann::json& j) { write(name, j.dump(2) + "\n"); }

void Run::write_curve(const std::string& name, const std::vector<std::pair<double, double>>& points) {
  std::ostringstream os;
  os << std::setprecision(12) << "x,y\n";
  for (const auto& [x, y] : points) os << x << ',' << y << '\n';
  write(name, os.str());
}

void Run::finish() {
  if (!has_out()) return;
  nlohmann::json manifest = {{"command", command_},
                             {"config", config_},
                             {"seed", session_.common.seed},
                             {"outputs", outputs_},
                             {"timestamp", utc_timestamp()}};
  const fs::path path = fs::path(session_.common.out_dir) / "manifest.json";
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << manifest.dump(2) << '\n';
}

ExactRational parse_rational_option(const std::string& option, const std::string& text) {
  try {
    return ExactRational::parse(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError(option, "expected a rational like 3/4, got '" + text + "'");
  }
}

namespace {

std::size_t parse_length(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const auto n = std::stoull(text, &used);
    if (used == text.size()) return n;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("bits", "bad length in '" + spec + "'");
}

}  // namespace

BitString parse_bits(const std::string& spec, std::uint64_t seed, std::uint64_t stream) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    try {
      return BitString::from_string(spec);
    } catch (const std::invalid_argument&) {
      throw CLI::ValidationError("bits", "'" + spec + "' is neither a 0/1 string nor KIND:ARG");
    }
  }
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "zeros") return BitString::zeros(parse_length(arg, spec));
  if (kind == "ones") return BitString::ones(parse_length(arg, spec));
  if (kind == "prng") {
    Rng rng(mix_seed(seed, stream));
    return rng.bits(parse_length(arg, spec));
  }
  if (kind == "repeat") {
    const auto c2 = arg.rfind(':');
    if (c2 == std::string::npos || c2 == 0) throw CLI::ValidationError("bits", "expected repeat:PATTERN:N");
    const BitString pattern = parse_bits(arg.substr(0, c2), seed, stream);
    const std::size_t n = parse_length(arg.substr(c2 + 1), spec);
    if (pattern.empty()) throw CLI::ValidationError("bits", "repeat pattern is empty");
    BitString out(n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, pattern[i % pattern.size()]);
    return out;
  }
  if (kind == "file") {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + arg + "'");
    const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return BitString::from_bytes(bytes);
  }
  throw CLI::ValidationError("bits", "unknown kind '" + kind + "' in '" + spec + "'");
}

std::vector<const complexity::Compressor*> select_compressors(const std::vector<std::string>& names) {
  std::vector<const complexity::Compressor*> out;
  for (const auto& name : names) {
    if (name == "all") {
      const auto all = complexity::builtin_compressors();
      out.insert(out.end(), all.begin(), all.end());
    } else {
      try {
        out.push_back(&complexity::compressor_by_name(name));
      } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--compressors", e.what());
      }
    }
  }
  if (out.empty()) throw CLI::ValidationError("--compressors", "at least one compressor is needed");
  return out;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session session{out, err, {}};
  CLI::App app("Reversible-computation, thermodynamics and nonlocality experiments", "revlab");
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  add_circuit_commands(app, session);
  add_secondlaw_commands(app, session);
  add_thermo_commands(app, session);
  add_complexity_commands(app, session);
  add_bell_commands(app, session);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace revlab::cli
