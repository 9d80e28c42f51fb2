#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "revlab/combinatorics/bounds.hpp"
#include "revlab/combinatorics/experiments.hpp"
#include "revlab/core/rng.hpp"
#include "revlab/revcircuit/circuit.hpp"
#include "session.hpp"

namespace revlab::cli {

namespace {

namespace cb = combinatorics;

constexpr int kDigits = 10;

nlohmann::json rational_json(const ExactRational& r) {
  return {{"exact", r.to_string()}, {"decimal", r.to_decimal(kDigits)}};
}

void print_rational(std::ostream& out, const ExactRational& r) {
  out << "bound: " << r << "\ndecimal: " << r.to_decimal(kDigits) << '\n';
}

double log2_ratio(const ExactRational& r) {
  using boost::multiprecision::msb;
  // Exponent split keeps the logarithm finite far below double's range.
  const BigInt& num = r.numerator();
  const BigInt& den = r.denominator();
  if (num <= 0) return -INFINITY;
  const long long shift_n = static_cast<long long>(msb(num));
  const long long shift_d = static_cast<long long>(msb(den));
  const auto top = [](const BigInt& v, long long bits) {
    return bits > 52 ? static_cast<double>(BigInt(v >> static_cast<unsigned>(bits - 52))) * std::exp2(-52.0)
                     : static_cast<double>(v) * std::exp2(static_cast<double>(-bits));
  };
  return std::log2(top(num, shift_n)) - std::log2(top(den, shift_d)) + static_cast<double>(shift_n - shift_d);
}

}  // namespace

void add_secondlaw_commands(CLI::App& app, Session& s) {
  auto* group = app.add_subcommand("secondlaw", "Counting bounds for conservative reversible maps");
  group->require_subcommand(1);

  {
    auto* sub = group->add_subcommand("clausius", "Injectivity bound on the weight couple becoming more imbalanced");
    auto n = std::make_shared<long long>(0);
    auto w = std::make_shared<std::string>("1/2");
    auto delta = std::make_shared<std::string>();
    auto tail = std::make_shared<bool>(false);
    sub->add_option("--n", *n, "Half length n")->required();
    sub->add_option("--w", *w, "Heavy-half density w, 1/2 <= w < 1");
    sub->add_option("--delta", *delta, "Density increase")->required();
    sub->add_flag("--tail", *tail, "Sum over every increase >= delta");
    add_common(*sub, s.common);
    sub->callback([&s, sub, n, w, delta, tail] {
      Run run(s, *sub);
      const ExactRational b = cb::imbalance_bound(*n, parse_rational_option("--w", *w),
                                                  parse_rational_option("--delta", *delta), *tail);
      print_rational(run.out(), b);
      run.write_json("clausius.json", {{"n", *n}, {"w", *w}, {"delta", *delta}, {"tail", *tail},
                                       {"bound", rational_json(b)}});
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("kelvin", "Injectivity bound on concentrating n ones at fixed wires");
    auto length = std::make_shared<long long>(0);
    auto weight = std::make_shared<long long>(0);
    auto n = std::make_shared<long long>(0);
    sub->add_option("--length", *length, "String length N")->required();
    sub->add_option("--weight", *weight, "Hamming weight w")->required();
    sub->add_option("--n", *n, "Ones to concentrate")->required();
    add_common(*sub, s.common);
    sub->callback([&s, sub, length, weight, n] {
      Run run(s, *sub);
      const ExactRational b = cb::concentration_bound(*length, *weight, *n);
      print_rational(run.out(), b);
      std::vector<std::pair<double, double>> curve;
      for (long long k = 1; k <= *weight; ++k) {
        curve.emplace_back(static_cast<double>(k), log2_ratio(cb::concentration_bound(*length, *weight, k)) /
                                                       static_cast<double>(k));
      }
      run.write_json("kelvin.json",
                     {{"length", *length}, {"weight", *weight}, {"n", *n}, {"bound", rational_json(b)}});
      run.write_curve("kelvin_decay.csv", curve);
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("monotonic", "Decay of the imbalance bound with the half length");
    auto w = std::make_shared<std::string>("3/4");
    auto delta = std::make_shared<std::string>("1/4");
    auto max_n = std::make_shared<long long>(64);
    sub->add_option("--w", *w, "Heavy-half density");
    sub->add_option("--delta", *delta, "Density increase");
    sub->add_option("--max-n", *max_n, "Largest half length")->check(CLI::Range(1, 4096));
    add_common(*sub, s.common);
    sub->callback([&s, sub, w, delta, max_n] {
      Run run(s, *sub);
      const ExactRational wr = parse_rational_option("--w", *w);
      const ExactRational dr = parse_rational_option("--delta", *delta);
      std::vector<std::pair<double, double>> decay, tail;
      run.out() << "n,log2_point_over_n,tail\n";
      for (long long n = 1; n <= *max_n; ++n) {
        if (!(wr * ExactRational(n)).is_integer() || !(dr * ExactRational(n)).is_integer()) continue;
        const ExactRational point = cb::imbalance_bound(n, wr, dr, false);
        const ExactRational t = cb::imbalance_bound(n, wr, dr, true);
        const double rate = log2_ratio(point) / static_cast<double>(n);
        decay.emplace_back(static_cast<double>(n), rate);
        tail.emplace_back(static_cast<double>(n), t.to_double());
        run.out() << n << ',' << rate << ',' << t.to_decimal(kDigits) << '\n';
      }
      if (decay.empty()) throw std::invalid_argument("no half length up to --max-n makes w n and delta n integral");
      run.write_curve("decay.csv", decay);
      run.write_curve("tail.csv", tail);
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("histogram", "Monte-Carlo output couples of a conservative circuit");
    auto width = std::make_shared<std::size_t>(16);
    auto w = std::make_shared<std::string>("3/4");
    auto trials = std::make_shared<std::uint64_t>(100000);
    auto gates = std::make_shared<std::size_t>(64);
    auto path = std::make_shared<std::string>();
    sub->add_option("--width", *width, "Circuit width (even)");
    sub->add_option("--w", *w, "Source couple density");
    sub->add_option("--trials", *trials, "Sampled inputs");
    sub->add_option("--gates", *gates, "Gates of the random Fredkin circuit");
    sub->add_option("--circuit", *path, "Use this circuit file instead of a random Fredkin circuit");
    add_common(*sub, s.common);
    sub->callback([&s, sub, width, w, trials, gates, path] {
      Run run(s, *sub);
      const ExactRational wr = parse_rational_option("--w", *w);
      circuit::Circuit c(0);
      if (path->empty()) {
        const circuit::GateKind fredkin[] = {circuit::GateKind::Fredkin};
        c = circuit::random_circuit(*width, *gates, fredkin, mix_seed(run.seed(), 1));
      } else {
        std::ifstream in(*path);
        if (!in) throw std::runtime_error("cannot open circuit file '" + *path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        c = circuit::parse_circuit(text.str());
      }
      const auto h = cb::empirical_transition_histogram(c, wr, *trials, mix_seed(run.seed(), 2), run.threads());
      const long long n = static_cast<long long>(h.source.half_length);
      const double freq = h.frequency_more_imbalanced();
      run.out() << "source: [" << h.source.left_weight << ',' << h.source.right_weight << "]\n"
                << "more_imbalanced: " << freq << '\n';
      nlohmann::json report = {{"width", c.width()},
                               {"w", *w},
                               {"trials", *trials},
                               {"more_imbalanced", freq}};
      if (static_cast<long long>(h.source.left_weight) < n) {
        const ExactRational tail = cb::imbalance_bound(n, wr, ExactRational(1) / ExactRational(n), true);
        const double sigma = std::sqrt(tail.to_double() * (1.0 - tail.to_double()) / static_cast<double>(*trials));
        run.out() << "tail_bound: " << tail.to_decimal(kDigits) << "\nsigma: " << sigma << "\nwithin_bound: "
                  << (freq <= tail.to_double() + 3 * sigma ? "yes" : "no") << '\n';
        report["tail_bound"] = rational_json(tail);
        report["sigma"] = sigma;
      }
      std::ostringstream csv;
      h.write_csv(csv);
      std::map<std::size_t, double> by_left;
      for (const auto& [couple, count] : h.counts) by_left[couple.left_weight] += h.frequency(couple);
      std::vector<std::pair<double, double>> curve;
      for (const auto& [left, f] : by_left) curve.emplace_back(static_cast<double>(left), f);
      run.write("histogram.csv", csv.str());
      run.write_curve("left_weight.csv", curve);
      run.write_json("histogram.json", report);
      run.finish();
    });
  }
}

}  // namespace revlab::cli
