#include <fstream>
#include <sstream>

#include "revlab/core/rng.hpp"
#include "revlab/nonlocal/audit.hpp"
#include "revlab/nonlocal/games.hpp"
#include "session.hpp"

namespace revlab::cli {

namespace {

namespace nl = nonlocal;

struct GameArgs {
  std::string game = "pr";
  std::string strategy;
  std::size_t rounds = 1000;
  unsigned m = 2;
  std::string source = "prng";
  std::size_t block = 1;
  std::string x_table;
  std::string y_table;
  std::string transcript;
};

void add_game_options(CLI::App& sub, GameArgs& g, bool allow_transcript) {
  sub.add_option("--game", g.game, "pr or chained")->check(CLI::IsMember({"pr", "chained"}));
  sub.add_option("--strategy", g.strategy,
                 "pr: oracle, local, signaling; chained: quantum, deterministic (default oracle / quantum)");
  sub.add_option("--rounds", g.rounds, "Rounds n");
  sub.add_option("--m", g.m, "Chained setting count")->check(CLI::Range(2u, 1u << 9));
  sub.add_option("--source", g.source, "Input source: prng or file:PATH");
  sub.add_option("--block", g.block, "Block length of a random local strategy");
  sub.add_option("--x-table", g.x_table, "Deterministic chained outputs x(1..m) as bits (default zeros)");
  sub.add_option("--y-table", g.y_table, "Deterministic chained outputs y(1..m) as bits (default zeros)");
  if (allow_transcript) sub.add_option("--transcript", g.transcript, "Read this transcript instead of playing");
}

std::vector<bool> table_bits(const std::string& text, unsigned m, const std::string& option) {
  if (text.empty()) return std::vector<bool>(m, false);
  const BitString bits = parse_bits(text, 0, 0);
  if (bits.size() != m) throw CLI::ValidationError(option, "needs exactly m bits");
  std::vector<bool> out(m);
  for (unsigned i = 0; i < m; ++i) out[i] = bits[i];
  return out;
}

nl::Strategy build_strategy(const GameArgs& g, std::uint64_t seed) {
  const bool pr = g.game == "pr";
  const std::string name = g.strategy.empty() ? (pr ? "oracle" : "quantum") : g.strategy;
  if (pr) {
    if (name == "oracle") return nl::PROracle{};
    if (name == "signaling") return nl::Signaling{};
    if (name == "local") {
      Rng rng(mix_seed(seed, 2));
      return nl::LocalDeterministic::random(g.block, rng);
    }
  } else {
    if (name == "quantum") return nl::ChainedQuantum{g.m};
    if (name == "deterministic") {
      return nl::ChainedDeterministic{g.m, table_bits(g.x_table, g.m, "--x-table"),
                                      table_bits(g.y_table, g.m, "--y-table")};
    }
  }
  throw CLI::ValidationError("--strategy", "'" + name + "' is not a " + g.game + " strategy");
}

nl::Transcript obtain_transcript(const GameArgs& g, std::uint64_t seed) {
  if (!g.transcript.empty()) {
    std::ifstream in(g.transcript);
    if (!in) throw std::runtime_error("cannot open transcript '" + g.transcript + "'");
    return nl::read_transcript(in);
  }
  return nl::run_game(nl::parse_game_kind(g.game), g.rounds, g.m, build_strategy(g, seed),
                      nl::InputSource::parse(g.source), seed);
}

std::string transcript_csv(const nl::Transcript& t) {
  std::ostringstream os;
  nl::write_transcript(os, t);
  return os.str();
}

void summarize(std::ostream& out, const nl::Transcript& t) {
  std::visit(
      [&](const auto& tr) {
        const double n = static_cast<double>(tr.rounds());
        out << "rounds: " << tr.rounds() << "\nstrategy: " << tr.strategy() << '\n';
        if constexpr (std::is_same_v<std::decay_t<decltype(tr)>, nl::PRTranscript>) {
          out << "win_fraction: " << tr.win_fraction() << '\n';
        } else {
          out << "m: " << tr.m() << "\nerror_fraction: " << tr.error_fraction() << '\n';
        }
        if (n > 0) {
          out << "x_ones: " << static_cast<double>(tr.x().hamming_weight()) / n
              << "\ny_ones: " << static_cast<double>(tr.y().hamming_weight()) / n << '\n';
        }
      },
      t);
}

}  // namespace

void add_bell_commands(CLI::App& app, Session& s) {
  auto* group = app.add_subcommand("bell", "PR-box and chained Bell games");
  group->require_subcommand(1);

  {
    auto* sub = group->add_subcommand("play", "Play a game and write its transcript");
    auto g = std::make_shared<GameArgs>();
    add_game_options(*sub, *g, false);
    add_common(*sub, s.common);
    sub->callback([&s, sub, g] {
      Run run(s, *sub);
      const auto t = obtain_transcript(*g, run.seed());
      summarize(run.out(), t);
      run.write("transcript.csv", transcript_csv(t));
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("value", "Exact classical value by exhaustion");
    auto game = std::make_shared<std::string>("pr");
    auto rounds = std::make_shared<std::size_t>(1);
    auto m = std::make_shared<unsigned>(2);
    sub->add_option("--game", *game, "pr or chained")->check(CLI::IsMember({"pr", "chained"}));
    sub->add_option("--rounds", *rounds, "Parallel PR repetitions (<= 2)");
    sub->add_option("--m", *m, "Chained setting count (2..12)");
    add_common(*sub, s.common);
    sub->callback([&s, sub, game, rounds, m] {
      Run run(s, *sub);
      nlohmann::json report;
      if (*game == "pr") {
        const ExactRational v = nl::pr_value_bruteforce(*rounds);
        run.out() << "value: " << v << "\ndecimal: " << v.to_decimal(10) << '\n';
        report = {{"game", "pr"}, {"rounds", *rounds}, {"value", v.to_string()}};
      } else {
        const auto v = nl::chained_classical_value(*m);
        const double q = nl::chained_quantum_error(*m);
        run.out() << "value: " << v.value << "\nerror: " << v.error << "\nquantum_error: " << q << '\n';
        report = {{"game", "chained"},
                  {"m", *m},
                  {"value", v.value.to_string()},
                  {"error", v.error.to_string()},
                  {"quantum_error", q}};
      }
      run.write_json("value.json", report);
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("chained", "Classical versus quantum error across m");
    auto ms = std::make_shared<std::vector<unsigned>>(std::vector<unsigned>{2, 4, 8});
    auto rounds = std::make_shared<std::size_t>(100000);
    sub->add_option("--m-list", *ms, "Setting counts (2..12)")->delimiter(',');
    sub->add_option("--rounds", *rounds, "Quantum rounds per m");
    add_common(*sub, s.common);
    sub->callback([&s, sub, ms, rounds] {
      Run run(s, *sub);
      std::vector<std::pair<double, double>> classical, quantum, ratio;
      std::ostringstream csv;
      csv << "m,classical_error,quantum_model,quantum_measured,ratio\n";
      run.out() << "m,classical_error,quantum_model,quantum_measured,ratio\n";
      for (unsigned m : *ms) {
        const double ce = nl::chained_classical_value(m).error.to_double();
        const auto t = nl::run_chained_game(*rounds, m, nl::ChainedQuantum{m}, {}, mix_seed(run.seed(), m));
        const double qe = t.error_fraction();
        const double r = qe > 0 ? ce / qe : 0.0;
        std::ostringstream row;
        row << m << ',' << ce << ',' << nl::chained_quantum_error(m) << ',' << qe << ',' << r << '\n';
        run.out() << row.str();
        csv << row.str();
        classical.emplace_back(m, ce);
        quantum.emplace_back(m, qe);
        ratio.emplace_back(m, r);
      }
      run.write("chained.csv", csv.str());
      run.write_curve("classical_error.csv", classical);
      run.write_curve("quantum_error.csv", quantum);
      run.write_curve("ratio.csv", ratio);
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("audit", "No-signaling audit: khat(x | a) against khat(x | a, b)");
    auto g = std::make_shared<GameArgs>();
    auto comp = std::make_shared<std::string>("arith");
    add_game_options(*sub, *g, true);
    sub->add_option("--compressor", *comp, "Compressor for the estimates");
    add_common(*sub, s.common);
    sub->callback([&s, sub, g, comp] {
      Run run(s, *sub);
      const auto t = obtain_transcript(*g, run.seed());
      const auto r = nl::nosignaling_audit(t, *select_compressors({*comp}).front());
      run.out() << "khat_x_given_a: " << r.khat_x_given_a << "\nkhat_x_given_ab: " << r.khat_x_given_ab
                << "\ngap: " << r.gap << "\nnormalized_gap: " << r.normalized_gap << '\n';
      run.write_json("audit.json", r.to_json());
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("witness", "Uncomputability witness on a winning transcript");
    auto g = std::make_shared<GameArgs>();
    auto comp = std::make_shared<std::string>("arith");
    auto cfg = std::make_shared<nl::WitnessConfig>();
    add_game_options(*sub, *g, true);
    sub->add_option("--compressor", *comp, "Compressor for the estimates");
    sub->add_option("--tol", cfg->tol, "Verdict slack as a fraction of n");
    sub->add_option("--epsilon-factor", cfg->epsilon_factor, "Chained error threshold in quantum-error units");
    add_common(*sub, s.common);
    sub->callback([&s, sub, g, comp, cfg] {
      Run run(s, *sub);
      const auto t = obtain_transcript(*g, run.seed());
      const auto& c = *select_compressors({*comp}).front();
      nlohmann::json report;
      if (const auto* pr = std::get_if<nl::PRTranscript>(&t)) {
        const auto r = nl::pr_witness(*pr, c, *cfg);
        const double n = static_cast<double>(r.rounds);
        run.out() << "khat_ab_given_b / n: " << static_cast<double>(r.khat_ab_given_b) / n
                  << "\nkhat_x_given_a / n: " << static_cast<double>(r.khat_x_given_a) / n
                  << "\nkhat_x / n: " << static_cast<double>(r.khat_x) / n << "\nverdict: " << to_string(r.verdict)
                  << '\n';
        report = r.to_json();
      } else {
        const auto r = nl::chained_witness(std::get<nl::ChainedTranscript>(t), c, *cfg);
        run.out() << "chi_ratio: " << r.chi_ratio << "\nerror_fraction: " << r.error_fraction
                  << "\nentropy_lemma: " << (r.lemma_applicable ? "applicable" : "inapplicable")
                  << "\nkhat_x / n: " << static_cast<double>(r.khat_x) / static_cast<double>(r.rounds)
                  << "\nverdict: " << to_string(r.verdict) << '\n';
        report = r.to_json();
      }
      run.write_json("witness.json", report);
      run.finish();
    });
  }
}

}  // namespace revlab::cli
