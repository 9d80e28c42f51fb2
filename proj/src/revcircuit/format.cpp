#include <charconv>
#include <optional>
#include <sstream>

#include "revlab/revcircuit/circuit.hpp"

namespace revlab::circuit {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : CircuitError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::uint64_t parse_index(const Token& tok, std::size_t line) {
  std::uint64_t value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, tok.column, "expected a non-negative decimal integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

std::optional<GateKind> kind_from_mnemonic(std::string_view m) {
  for (GateKind k : {GateKind::Not, GateKind::Cnot, GateKind::Toffoli, GateKind::Fredkin}) {
    if (mnemonic(k) == m) return k;
  }
  return std::nullopt;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::optional<std::size_t> width;
  std::vector<Gate> gates;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (!width) {
      if (toks[0].text != "wires") throw ParseError(line_no, toks[0].column, "expected 'wires N' header");
      if (toks.size() != 2) throw ParseError(line_no, toks[0].column, "'wires' takes exactly one argument");
      width = parse_index(toks[1], line_no);
      continue;
    }

    const auto kind = kind_from_mnemonic(toks[0].text);
    if (!kind) {
      throw ParseError(line_no, toks[0].column, "unknown gate '" + std::string(toks[0].text) + "'");
    }
    if (toks.size() != arity(*kind) + 1) {
      throw ParseError(line_no, toks[0].column,
                       std::string(mnemonic(*kind)) + " expects " + std::to_string(arity(*kind)) + " wire indices");
    }
    std::array<std::uint32_t, 3> w{};
    for (std::size_t i = 0; i < arity(*kind); ++i) {
      const auto& tok = toks[i + 1];
      const auto idx = parse_index(tok, line_no);
      if (idx >= *width) {
        throw ParseError(line_no, tok.column,
                         "wire " + std::to_string(idx) + " out of range for width " + std::to_string(*width));
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (w[j] == idx) throw ParseError(line_no, tok.column, "duplicated wire " + std::to_string(idx) + " in gate");
      }
      w[i] = static_cast<std::uint32_t>(idx);
    }
    switch (*kind) {
      case GateKind::Not: gates.push_back(Gate::x(w[0])); break;
      case GateKind::Cnot: gates.push_back(Gate::cx(w[0], w[1])); break;
      case GateKind::Toffoli: gates.push_back(Gate::ccx(w[0], w[1], w[2])); break;
      case GateKind::Fredkin: gates.push_back(Gate::cswap(w[0], w[1], w[2])); break;
    }
  }
  if (!width) throw ParseError(line_no, 1, "missing 'wires N' header");
  return Circuit(*width, std::move(gates));
}

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  out << "wires " << c.width() << '\n';
  for (const auto& g : c.gates()) {
    out << mnemonic(g.kind());
    for (auto w : g.wires()) out << ' ' << w;
    out << '\n';
  }
  return out.str();
}

}  // namespace revlab::circuit
