#include "ssk/expr.hpp"

#include <cctype>

#include "ssk/builders.hpp"
#include "ssk/subdiv.hpp"

namespace ssk {

namespace {

struct Parser {
  const std::string& text;
  const EvalOptions& options;
  size_t at = 0;

  void skip() {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ExprError(at, message); }

  void expect(char c) {
    skip();
    if (at >= text.size() || text[at] != c)
      fail(std::string("expected '") + c + "'" +
           (at < text.size() ? std::string(", got '") + text[at] + "'" : std::string(", got end of input")));
    ++at;
  }

  std::string identifier() {
    skip();
    size_t start = at;
    while (at < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[at])) || text[at] == '_'))
      ++at;
    if (start == at) fail("expected a name");
    return text.substr(start, at - start);
  }

  int number() {
    skip();
    size_t start = at;
    while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) ++at;
    if (start == at) fail("expected a number");
    return std::stoi(text.substr(start, at - start));
  }

  int rank_argument(const std::string& builder) {
    int n = number();
    if (!options.unsafe && n > options.max_rank)
      fail(builder + "(" + std::to_string(n) + ") exceeds the rank bound " +
           std::to_string(options.max_rank) + " (adjust with --max-rank or --unsafe-bounds)");
    return n;
  }

  SsetPtr expression(int sd_depth) {
    skip();
    size_t name_at = at;
    std::string name = identifier();
    expect('(');
    SsetPtr result;
    if (name == "delta") {
      result = delta(rank_argument(name));
    } else if (name == "boundary") {
      result = boundary(rank_argument(name));
    } else if (name == "sphere") {
      result = sphere(rank_argument(name));
    } else if (name == "collapse_face") {
      int n = rank_argument(name);
      expect(',');
      int k = number();
      if (k < 0 || k > n) fail("collapse_face(n,k) needs 0 <= k <= n");
      result = collapse_face(n, k);
    } else if (name == "strip") {
      int m = number();
      if (m < 1) fail("strip(m) needs m >= 1");
      if (!options.unsafe && m > 64)
        fail("strip(" + std::to_string(m) + ") exceeds the size bound 64 (override with --unsafe-bounds)");
      result = strip(m);
    } else if (name == "sd") {
      if (!options.unsafe && sd_depth + 1 > options.max_sd_depth) {
        at = name_at;
        fail("sd nesting exceeds the depth bound " + std::to_string(options.max_sd_depth) +
             " (adjust with --max-sd-depth or --unsafe-bounds)");
      }
      result = sd(expression(sd_depth + 1)).sset;
    } else if (name == "barratt") {
      result = barratt(expression(sd_depth)).sset();
    } else if (name == "cen") {
      result = cen(expression(sd_depth)).quotient;
    } else if (name == "desing") {
      result = desingularize(expression(sd_depth)).result();
    } else if (name == "disjoint") {
      SsetPtr left = expression(sd_depth);
      expect(',');
      SsetPtr right = expression(sd_depth);
      result = disjoint_union(*left, *right).sset;
    } else {
      at = name_at;
      fail("unknown builder '" + name + "'");
    }
    expect(')');
    return result;
  }
};

}  // namespace

SsetPtr eval_expression(const std::string& text, const EvalOptions& options) {
  Parser parser{text, options};
  SsetPtr result = parser.expression(0);
  parser.skip();
  if (parser.at != text.size()) parser.fail("trailing input");
  return result;
}

}  // namespace ssk
