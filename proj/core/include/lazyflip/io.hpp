#ifndef LAZYFLIP_IO_HPP
#define LAZYFLIP_IO_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lazyflip/model.hpp"
#include "lazyflip/solver.hpp"

namespace lazyflip {

// Raised for malformed model or configuration input. line() is 1-based, or 0
// when the problem is not tied to a line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// Model text format, version 1:
//
//   bfg 1
//   vars <m>
//   factor <k> <v1> ... <vk>
//   <2^k reals, last scope variable varying fastest>
//   ...
//
// '#' starts a comment that runs to the end of the line; blank lines are
// ignored. Reals are written in shortest round-trip form.
void write_model(std::ostream& os, const FactorGraph& graph);
FactorGraph parse_model(std::istream& is);

void save_model(const std::filesystem::path& path, const FactorGraph& graph);
FactorGraph load_model(const std::filesystem::path& path);

// Configuration files hold one line of m characters from {0,1}.
void write_configuration(std::ostream& os, const std::vector<Label>& bits);
std::vector<Label> parse_configuration(std::istream& is);
std::vector<Label> load_configuration(const std::filesystem::path& path);

// Shortest decimal string that parses back to exactly `value`.
std::string format_real(double value);

// JSON array of {elapsed_seconds, best_energy, depth, flips_accepted,
// subsets_evaluated, cstree_nodes} objects.
std::string trace_to_json(const SolveTrace& trace);
SolveTrace trace_from_json(const std::string& text);

}  // namespace lazyflip

#endif  // LAZYFLIP_IO_HPP
