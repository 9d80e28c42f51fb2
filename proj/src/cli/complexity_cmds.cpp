#include "revlab/complexity/estimates.hpp"
#include "session.hpp"

namespace revlab::cli {

void add_complexity_commands(CLI::App& app, Session& s) {
  auto* group = app.add_subcommand("complexity", "Compression estimates of Kolmogorov quantities");
  group->require_subcommand(1);

  {
    auto* sub = group->add_subcommand("estimate", "khat(S) and khat(S | X) per compressor");
    auto input = std::make_shared<std::string>();
    auto given = std::make_shared<std::string>();
    auto names = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"all"});
    sub->add_option("--input", *input, "Subject bits (0/1 string, zeros:N, prng:N, repeat:P:N, file:PATH)")
        ->required();
    sub->add_option("--given", *given, "Condition X; empty for the unconditional estimate");
    sub->add_option("--compressors", *names, "Compressor names or 'all'")->delimiter(',');
    add_common(*sub, s.common);
    sub->callback([&s, sub, input, given, names] {
      Run run(s, *sub);
      const BitString x = parse_bits(*input, run.seed(), 0);
      const BitString y = parse_bits(*given, run.seed(), 1);
      nlohmann::json rows = nlohmann::json::array();
      run.out() << "length: " << x.size() << '\n';
      for (const auto* comp : select_compressors(*names)) {
        const auto est = y.empty() ? complexity::khat(*comp, x) : complexity::khat_cond(*comp, x, y);
        const double score = x.empty() ? 0.0 : static_cast<double>(est.bits) / static_cast<double>(x.size());
        run.out() << comp->name() << ": " << est.bits << " bits (" << score << " per bit)\n";
        rows.push_back({{"compressor", comp->name()},
                        {"bits", est.bits},
                        {"per_bit", score},
                        {"overhead_bits", comp->overhead_bits(x)}});
      }
      run.write_json("estimate.json", {{"length", x.size()}, {"conditional", !y.empty()}, {"estimates", rows}});
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("ik", "Algorithmic mutual information estimates in both directions");
    auto xs = std::make_shared<std::string>();
    auto ys = std::make_shared<std::string>();
    auto names = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"all"});
    sub->add_option("--x", *xs, "First string")->required();
    sub->add_option("--y", *ys, "Second string")->required();
    sub->add_option("--compressors", *names, "Compressor names or 'all'")->delimiter(',');
    add_common(*sub, s.common);
    sub->callback([&s, sub, xs, ys, names] {
      Run run(s, *sub);
      const BitString x = parse_bits(*xs, run.seed(), 0);
      const BitString y = parse_bits(*ys, run.seed(), 1);
      nlohmann::json rows = nlohmann::json::array();
      for (const auto* comp : select_compressors(*names)) {
        const long long xy = complexity::ik(*comp, x, y);
        const long long yx = complexity::ik(*comp, y, x);
        run.out() << comp->name() << ": ik(x;y) = " << xy << ", ik(y;x) = " << yx << '\n';
        rows.push_back({{"compressor", comp->name()}, {"ik_xy", xy}, {"ik_yx", yx}});
      }
      run.write_json("ik.json", {{"x_length", x.size()}, {"y_length", y.size()}, {"estimates", rows}});
      run.finish();
    });
  }
}

}  // namespace revlab::cli
