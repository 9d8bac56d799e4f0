#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "propmod/core.hpp"
#include "propmod/dioph.hpp"
#include "propmod/genp.hpp"

namespace propmod::cli {

enum class Verb { Gens, Membership, Frobenius, Apery, Properties, Solve, Oracle };
enum class Method { Geometric, General };
enum class Format { Text, Json };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// --help was requested; what() holds the help text.
class HelpRequested : public UsageError {
 public:
  using UsageError::UsageError;
};

struct Command {
  Verb verb = Verb::Gens;
  std::optional<ModularInequality> ineq;
  Method method = Method::Geometric;
  bool trace = false;
  Format format = Format::Text;
  std::optional<Point> point;
  std::vector<std::int64_t> window;
  std::int64_t margin = -1;        // oracle frobenius; -1 picks the least valid margin
  std::string oracle_verb;         // members | gens | membership | frobenius
  std::optional<DiophSystem> system;
  std::optional<LinearForm> cone;  // solve --cone
  std::size_t cap = kDefaultSetCap;
};

/// Arguments without the program name. Throws UsageError.
Command parse_args(const std::vector<std::string>& args);

struct RunResult {
  int status = 0;  // 0 ok, 1 computational error, 2 usage
  std::string out;
  std::string err;
};

RunResult run(const Command& cmd);

/// parse_args + run; reads PROPMOD_CAP from the environment.
RunResult execute(const std::vector<std::string>& args);

/// "3,-2,1/2" -> rationals.
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace propmod::cli
