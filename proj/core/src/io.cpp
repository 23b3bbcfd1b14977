#include "lazyflip/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include <json.hpp>

namespace lazyflip {

namespace {

constexpr std::string_view kMagic = "bfg";
constexpr std::string_view kVersion = "1";

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

// Reads the next line holding something other than comments or whitespace.
class LineReader {
public:
  explicit LineReader(std::istream& is) : is_(is) {}

  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(is_, buffer_)) {
      ++line_;
      std::string_view view(buffer_);
      if (const auto hash = view.find('#'); hash != std::string_view::npos) {
        view = view.substr(0, hash);
      }
      tokens = split(view);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

private:
  std::istream& is_;
  std::string buffer_;
  std::size_t line_ = 0;
};

std::uint64_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

double parse_real(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, "malformed real '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, "non-finite value '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string format_real(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc()) throw std::runtime_error("cannot format real");
  return std::string(buffer, end);
}

void write_model(std::ostream& os, const FactorGraph& graph) {
  os << kMagic << ' ' << kVersion << '\n';
  os << "vars " << graph.variable_count() << '\n';
  for (const Factor& factor : graph.factors()) {
    os << "factor " << factor.arity();
    for (VariableIndex v : factor.scope) os << ' ' << v;
    os << '\n';
    for (std::size_t i = 0; i < factor.table.size(); ++i) {
      if (i) os << ' ';
      os << format_real(factor.table[i]);
    }
    os << '\n';
  }
}

FactorGraph parse_model(std::istream& is) {
  LineReader reader(is);
  std::vector<std::string_view> tokens;

  if (!reader.next(tokens)) throw ParseError(0, "empty model file");
  if (tokens.size() != 2 || tokens[0] != kMagic) {
    throw ParseError(reader.line(), "expected header 'bfg 1'");
  }
  if (tokens[1] != kVersion) {
    throw ParseError(reader.line(), "unsupported format version '" + std::string(tokens[1]) + "'");
  }

  if (!reader.next(tokens)) throw ParseError(reader.line(), "missing 'vars' line");
  if (tokens.size() != 2 || tokens[0] != "vars") {
    throw ParseError(reader.line(), "expected 'vars <count>'");
  }
  const std::uint64_t m = parse_count(tokens[1], reader.line(), "variable count");
  if (m > std::numeric_limits<VariableIndex>::max()) {
    throw ParseError(reader.line(), "variable count too large");
  }

  std::vector<Factor> factors;
  while (reader.next(tokens)) {
    const std::size_t header_line = reader.line();
    if (tokens[0] != "factor" || tokens.size() < 2) {
      throw ParseError(header_line, "expected 'factor <arity> <variables...>'");
    }
    const std::uint64_t arity = parse_count(tokens[1], header_line, "arity");
    if (arity == 0 || arity > 30) {
      throw ParseError(header_line, "arity must be in 1..30");
    }
    if (tokens.size() != arity + 2) {
      throw ParseError(header_line, "factor lists " + std::to_string(tokens.size() - 2) +
                                        " variables, arity says " + std::to_string(arity));
    }
    Factor factor;
    factor.scope.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i) {
      const std::uint64_t v = parse_count(tokens[i + 2], header_line, "variable index");
      if (v >= m) {
        throw ParseError(header_line, "variable index " + std::to_string(v) + " out of range");
      }
      for (VariableIndex u : factor.scope) {
        if (u == v) {
          throw ParseError(header_line, "duplicate variable index " + std::to_string(v));
        }
      }
      factor.scope.push_back(static_cast<VariableIndex>(v));
    }

    if (!reader.next(tokens)) {
      throw ParseError(reader.line(), "missing value table for factor on line " +
                                          std::to_string(header_line));
    }
    const std::size_t expected = std::size_t{1} << arity;
    if (tokens.size() != expected) {
      throw ParseError(reader.line(), "value table has " + std::to_string(tokens.size()) +
                                          " entries, expected " + std::to_string(expected));
    }
    factor.table.reserve(expected);
    for (std::string_view token : tokens) {
      factor.table.push_back(parse_real(token, reader.line()));
    }
    factors.push_back(std::move(factor));
  }

  try {
    return FactorGraph(static_cast<std::size_t>(m), std::move(factors));
  } catch (const ModelError& e) {
    throw ParseError(0, e.what());
  }
}

void save_model(const std::filesystem::path& path, const FactorGraph& graph) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_model(os, graph);
  if (!os) throw std::runtime_error("failed writing '" + path.string() + "'");
}

FactorGraph load_model(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path.string() + "'");
  return parse_model(is);
}

void write_configuration(std::ostream& os, const std::vector<Label>& bits) {
  std::string line(bits.size(), '0');
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j]) line[j] = '1';
  }
  os << line << '\n';
}

std::vector<Label> parse_configuration(std::istream& is) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(is, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    std::vector<Label> bits;
    bits.reserve(line.size());
    for (char ch : line) {
      if (ch != '0' && ch != '1') {
        throw ParseError(number, std::string("configuration character '") + ch + "' not 0 or 1");
      }
      bits.push_back(ch == '1' ? 1 : 0);
    }
    return bits;
  }
  // An empty file is the configuration of a model without variables.
  return {};
}

std::vector<Label> load_configuration(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path.string() + "'");
  return parse_configuration(is);
}

std::string trace_to_json(const SolveTrace& trace) {
  nlohmann::json array = nlohmann::json::array();
  for (const TraceRecord& r : trace) {
    array.push_back({{"elapsed_seconds", r.elapsed_seconds},
                     {"best_energy", r.best_energy},
                     {"depth", r.depth},
                     {"flips_accepted", r.flips_accepted},
                     {"subsets_evaluated", r.subsets_evaluated},
                     {"cstree_nodes", r.cstree_nodes}});
  }
  return array.dump(2);
}

SolveTrace trace_from_json(const std::string& text) {
  SolveTrace trace;
  const auto array = nlohmann::json::parse(text);
  if (!array.is_array()) throw ParseError(0, "trace must be a JSON array");
  for (const auto& item : array) {
    TraceRecord r;
    r.elapsed_seconds = item.at("elapsed_seconds").get<double>();
    r.best_energy = item.at("best_energy").get<double>();
    r.depth = item.at("depth").get<std::size_t>();
    r.flips_accepted = item.at("flips_accepted").get<std::uint64_t>();
    r.subsets_evaluated = item.at("subsets_evaluated").get<std::uint64_t>();
    r.cstree_nodes = item.at("cstree_nodes").get<std::uint64_t>();
    trace.push_back(r);
  }
  return trace;
}

}  // namespace lazyflip
