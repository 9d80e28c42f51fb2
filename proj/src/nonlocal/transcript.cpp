#include "revlab/nonlocal/transcript.hpp"

#include <map>
#include <sstream>

namespace revlab::nonlocal {

PRTranscript::PRTranscript(BitString a, BitString b, BitString x, BitString y, std::string strategy,
                           std::uint64_t seed, std::string source)
    : a_(std::move(a)),
      b_(std::move(b)),
      x_(std::move(x)),
      y_(std::move(y)),
      strategy_(std::move(strategy)),
      seed_(seed),
      source_(std::move(source)) {
  if (b_.size() != a_.size() || x_.size() != a_.size() || y_.size() != a_.size()) {
    throw GameError("PR transcript strings must have equal lengths");
  }
}

std::size_t PRTranscript::wins() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < rounds(); ++i) w += (x_[i] != y_[i]) == (a_[i] && b_[i]);
  return w;
}

double PRTranscript::win_fraction() const {
  return rounds() == 0 ? 1.0 : static_cast<double>(wins()) / static_cast<double>(rounds());
}

bool promise_holds(unsigned m, unsigned a, unsigned b) {
  if (a < 1 || a > m || b < 1 || b > m) return false;
  return b == a || b == a % m + 1;
}

ChainedTranscript::ChainedTranscript(unsigned m, std::vector<unsigned> a, std::vector<unsigned> b, BitString x,
                                     BitString y, std::string strategy, std::uint64_t seed, std::string source)
    : m_(m),
      a_(std::move(a)),
      b_(std::move(b)),
      x_(std::move(x)),
      y_(std::move(y)),
      strategy_(std::move(strategy)),
      seed_(seed),
      source_(std::move(source)) {
  if (m_ < 2) throw GameError("chained game needs m >= 2");
  if (b_.size() != a_.size() || x_.size() != a_.size() || y_.size() != a_.size()) {
    throw GameError("chained transcript columns must have equal lengths");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!promise_holds(m_, a_[i], b_[i])) {
      throw GameError("promise violated in round " + std::to_string(i) + ": (a, b) = (" + std::to_string(a_[i]) +
                      ", " + std::to_string(b_[i]) + ")");
    }
  }
}

BitString ChainedTranscript::chi() const {
  BitString c(rounds());
  for (std::size_t i = 0; i < rounds(); ++i) c.set(i, chained_target(m_, a_[i], b_[i]));
  return c;
}

std::size_t ChainedTranscript::violations() const {
  std::size_t v = 0;
  for (std::size_t i = 0; i < rounds(); ++i) v += (x_[i] != y_[i]) != chained_target(m_, a_[i], b_[i]);
  return v;
}

double ChainedTranscript::error_fraction() const {
  return rounds() == 0 ? 0.0 : static_cast<double>(violations()) / static_cast<double>(rounds());
}

void write_transcript(std::ostream& out, const Transcript& t) {
  std::visit(
      [&](const auto& tr) {
        using T = std::decay_t<decltype(tr)>;
        constexpr bool pr = std::is_same_v<T, PRTranscript>;
        unsigned m = 2;
        if constexpr (!pr) m = tr.m();
        out << "# kind=" << (pr ? "pr" : "chained") << " m=" << m << " strategy=" << tr.strategy()
            << " seed=" << tr.seed() << " source=" << tr.source() << '\n';
        out << "round,a,b,x,y\n";
        for (std::size_t i = 0; i < tr.rounds(); ++i) {
          out << i << ',' << tr.a()[i] << ',' << tr.b()[i] << ',' << tr.x()[i] << ',' << tr.y()[i] << '\n';
        }
      },
      t);
}

namespace {

unsigned long long parse_number(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw GameError("transcript line " + std::to_string(line) + ": bad number '" + s + "'");
  }
}

}  // namespace

Transcript read_transcript(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) throw GameError("transcript: missing '# kind=...' header");
  std::map<std::string, std::string> meta;
  {
    std::istringstream hs(line.substr(2));
    std::string kv;
    while (hs >> kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw GameError("transcript: malformed header entry '" + kv + "'");
      meta[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
  }
  for (const char* key : {"kind", "m", "strategy", "seed", "source"}) {
    if (!meta.count(key)) throw GameError(std::string("transcript: header lacks ") + key);
  }
  if (!std::getline(in, line) || line != "round,a,b,x,y") throw GameError("transcript: missing column header");

  std::vector<unsigned> a, b;
  BitString x, y;
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::istringstream ls(line);
    std::string col;
    while (std::getline(ls, col, ',')) cols.push_back(col);
    if (cols.size() != 5) throw GameError("transcript line " + std::to_string(line_no) + ": expected 5 columns");
    if (parse_number(cols[0], line_no) != a.size()) {
      throw GameError("transcript line " + std::to_string(line_no) + ": rounds out of order");
    }
    a.push_back(static_cast<unsigned>(parse_number(cols[1], line_no)));
    b.push_back(static_cast<unsigned>(parse_number(cols[2], line_no)));
    const auto xv = parse_number(cols[3], line_no);
    const auto yv = parse_number(cols[4], line_no);
    if (xv > 1 || yv > 1) throw GameError("transcript line " + std::to_string(line_no) + ": outputs must be 0/1");
    x.push_back(xv == 1);
    y.push_back(yv == 1);
  }
  const auto seed = parse_number(meta["seed"], 1);
  if (meta["kind"] == "pr") {
    BitString ab(a.size()), bb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > 1 || b[i] > 1) throw GameError("PR transcript settings must be 0/1");
      ab.set(i, a[i] == 1);
      bb.set(i, b[i] == 1);
    }
    return PRTranscript(ab, bb, x, y, meta["strategy"], seed, meta["source"]);
  }
  if (meta["kind"] == "chained") {
    return ChainedTranscript(static_cast<unsigned>(parse_number(meta["m"], 1)), a, b, x, y, meta["strategy"], seed,
                             meta["source"]);
  }
  throw GameError("transcript: unknown kind '" + meta["kind"] + "'");
}

}  // namespace revlab::nonlocal
