#include "revlab/complexity/compressor.hpp"
#include "revlab/core/rng.hpp"
#include "revlab/thermo/landauer.hpp"
#include "session.hpp"

namespace revlab::cli {

namespace {

struct ThermoArgs {
  std::string input;
  std::string catalyst;
  std::vector<std::string> compressors{"all"};
  double temperature = 1.0;
};

void add_thermo_options(CLI::App& sub, ThermoArgs& a) {
  sub.add_option("--input", a.input, "Subject bits S (0/1 string, zeros:N, prng:N, repeat:P:N, file:PATH)")
      ->required();
  sub.add_option("--catalyst", a.catalyst, "Side information X, left unchanged");
  sub.add_option("--compressors", a.compressors, "Compressor names or 'all'")->delimiter(',');
  sub.add_option("--temperature", a.temperature, "Reservoir temperature in units of the reference T")
      ->check(CLI::PositiveNumber);
}

}  // namespace

void add_thermo_commands(CLI::App& app, Session& s) {
  auto* group = app.add_subcommand("thermo", "Landauer accounting in bit-units (kT ln 2 = 1)");
  group->require_subcommand(1);

  {
    auto* sub = group->add_subcommand("erase", "Upper bound on the erasure cost of S given X");
    auto a = std::make_shared<ThermoArgs>();
    add_thermo_options(*sub, *a);
    add_common(*sub, s.common);
    sub->callback([&s, sub, a] {
      Run run(s, *sub);
      const BitString in = parse_bits(a->input, run.seed(), 0);
      const BitString cat = parse_bits(a->catalyst, run.seed(), 1);
      const auto comps = select_compressors(a->compressors);
      const std::size_t ec = thermo::erasure_cost_upper(in, cat, comps);
      run.out() << "length: " << in.size() << "\nerasure_cost_ub: " << ec
                << "\nscaled: " << static_cast<double>(ec) * a->temperature << '\n';
      run.write_json("erase.json", {{"length", in.size()},
                                    {"erasure_cost_ub", ec},
                                    {"temperature", a->temperature},
                                    {"scaled", static_cast<double>(ec) * a->temperature}});
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("work", "Lower bound on the work value of S given X and the duality sum");
    auto a = std::make_shared<ThermoArgs>();
    add_thermo_options(*sub, *a);
    add_common(*sub, s.common);
    sub->callback([&s, sub, a] {
      Run run(s, *sub);
      const BitString in = parse_bits(a->input, run.seed(), 0);
      const BitString cat = parse_bits(a->catalyst, run.seed(), 1);
      const auto comps = select_compressors(a->compressors);
      const auto r = thermo::duality_report(in, cat, comps);
      run.out() << "length: " << r.length << "\nwork_value_lb: " << r.work_value_lb
                << "\nerasure_cost_ub: " << r.erasure_cost_ub << "\nsum: " << r.sum
                << "\nclipped: " << (r.clipped ? "yes" : "no")
                << "\nscaled_work: " << static_cast<double>(r.work_value_lb) * a->temperature << '\n';
      run.write_json("work.json", {{"length", r.length},
                                   {"work_value_lb", r.work_value_lb},
                                   {"erasure_cost_ub", r.erasure_cost_ub},
                                   {"sum", r.sum},
                                   {"clipped", r.clipped},
                                   {"temperature", a->temperature},
                                   {"scaled_work", static_cast<double>(r.work_value_lb) * a->temperature}});
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("demon", "Extract-then-erase cycle with a work ledger");
    auto input = std::make_shared<std::string>();
    auto comp = std::make_shared<std::string>("rle");
    auto temperature = std::make_shared<double>(1.0);
    sub->add_option("--input", *input, "Register contents S")->required();
    sub->add_option("--compressor", *comp, "Compressor used by the demon");
    sub->add_option("--temperature", *temperature, "Reservoir temperature in units of the reference T")
        ->check(CLI::PositiveNumber);
    add_common(*sub, s.common);
    sub->callback([&s, sub, input, comp, temperature] {
      Run run(s, *sub);
      const BitString in = parse_bits(*input, run.seed(), 0);
      const auto comps = select_compressors({*comp});
      const auto ledger = thermo::demon_cycle(in, *comps.front(), mix_seed(run.seed(), 1));
      run.out() << "length: " << in.size() << "\nextracted: " << ledger.extracted_work()
                << "\npaid: " << ledger.paid_erasure() << "\nnet: " << ledger.net()
                << "\nscaled_net: " << static_cast<double>(ledger.net()) * *temperature << '\n';
      auto j = ledger.to_json();
      j["temperature"] = *temperature;
      run.write_json("ledger.json", j);
      run.finish();
    });
  }
}

}  // namespace revlab::cli
