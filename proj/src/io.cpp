#include "ssk/io.hpp"

#include <functional>
#include <sstream>
#include <unordered_map>

namespace ssk {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (size_t hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number, std::string("expected ") + what + ", got '" + tok + "'");
  }
}

// Tokens from position `from` to the end are "<name'> [| <values>]"; build
// the simplex, where the simplex degree must be `degree`.
Simplex parse_image(const Line& line, size_t from, int degree,
                    const std::function<GeneratorId(const Line&, const std::string&)>& lookup) {
  const auto& t = line.tokens;
  if (from >= t.size()) throw ParseError(line.number, "missing image generator");
  GeneratorId target = lookup(line, t[from]);
  std::vector<int> values;
  if (from + 1 < t.size()) {
    if (t[from + 1] != "|")
      throw ParseError(line.number, "expected '|' before degeneracy values, got '" + t[from + 1] + "'");
    for (size_t p = from + 2; p < t.size(); ++p)
      values.push_back(parse_int(line, t[p], "degeneracy value"));
    if (values.empty()) throw ParseError(line.number, "'|' must be followed by values");
  } else {
    for (int v = 0; v <= target.degree; ++v) values.push_back(v);
  }
  try {
    Simplex s(target, DeltaOperator(target.degree, std::move(values)));
    if (s.degree() != degree)
      throw std::invalid_argument("image has degree " + std::to_string(s.degree()) +
                                  ", expected " + std::to_string(degree));
    return s;
  } catch (const std::exception& e) {
    throw ParseError(line.number, e.what());
  }
}

}  // namespace

std::string emit_sset(const FiniteSimplicialSet& X) {
  std::ostringstream out;
  out << "sset v1\n";
  for (int flat = 0; flat < X.total_generators(); ++flat) {
    GeneratorId g = X.gen_at(flat);
    out << "gen " << X.name(g) << " " << g.degree << "\n";
  }
  for (int flat = 0; flat < X.total_generators(); ++flat) {
    GeneratorId g = X.gen_at(flat);
    for (int i = 0; i <= g.degree && g.degree >= 1; ++i) {
      const Simplex& f = X.face(g, i);
      out << "face " << X.name(g) << " " << i << " = " << X.name(f.gen);
      if (!f.nondegenerate()) out << " | " << f.deg_part.str();
      out << "\n";
    }
  }
  return out.str();
}

SsetPtr parse_sset(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"sset", "v1"})
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'sset v1'");

  SsetBuilder builder;
  std::unordered_map<std::string, GeneratorId> known;
  auto lookup = [&known](const Line& line, const std::string& name) {
    auto it = known.find(name);
    if (it == known.end()) throw ParseError(line.number, "unknown generator '" + name + "'");
    return it->second;
  };

  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& t = line.tokens;
    if (t[0] == "gen") {
      if (t.size() != 3) throw ParseError(line.number, "expected 'gen <name> <degree>'");
      if (known.count(t[1])) throw ParseError(line.number, "duplicate generator '" + t[1] + "'");
      int degree = parse_int(line, t[2], "degree");
      if (degree < 0) throw ParseError(line.number, "negative degree");
      known.emplace(t[1], builder.add_generator(degree, t[1]));
    } else if (t[0] == "face") {
      if (t.size() < 5 || t[3] != "=")
        throw ParseError(line.number, "expected 'face <name> <i> = <name'> [| <values>]'");
      GeneratorId g = lookup(line, t[1]);
      int i = parse_int(line, t[2], "face index");
      if (g.degree < 1 || i < 0 || i > g.degree)
        throw ParseError(line.number, "face index out of range for '" + t[1] + "'");
      Simplex image = parse_image(line, 4, g.degree - 1, lookup);
      try {
        builder.set_face(g, i, std::move(image));
      } catch (const std::exception& e) {
        throw ParseError(line.number, e.what());
      }
    } else {
      throw ParseError(line.number, "unknown directive '" + t[0] + "'");
    }
  }
  try {
    return builder.build();
  } catch (const std::exception& e) {
    throw ParseError(static_cast<int>(lines.back().number), e.what());
  }
}

std::string emit_smap(const SimplicialMap& f, const std::string& source_id,
                      const std::string& target_id) {
  std::ostringstream out;
  out << "smap v1\n";
  out << "source " << source_id << "\n";
  out << "target " << target_id << "\n";
  const FiniteSimplicialSet& X = *f.source();
  const FiniteSimplicialSet& Y = *f.target();
  for (int flat = 0; flat < X.total_generators(); ++flat) {
    GeneratorId g = X.gen_at(flat);
    const Simplex& img = f.assign(g);
    out << "send " << X.name(g) << " = " << Y.name(img.gen);
    if (!img.nondegenerate()) out << " | " << img.deg_part.str();
    out << "\n";
  }
  return out.str();
}

SmapHeader peek_smap_header(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"smap", "v1"})
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'smap v1'");
  SmapHeader header;
  for (const Line& line : lines)
    if (line.tokens.size() == 2 && line.tokens[0] == "source")
      header.source_id = line.tokens[1];
    else if (line.tokens.size() == 2 && line.tokens[0] == "target")
      header.target_id = line.tokens[1];
  if (header.source_id.empty() || header.target_id.empty())
    throw ParseError(lines[0].number, "missing 'source' or 'target' line");
  return header;
}

SimplicialMap parse_smap(const std::string& text, SsetPtr source, SsetPtr target) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"smap", "v1"})
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header 'smap v1'");

  auto lookup_in = [](const FiniteSimplicialSet& S) {
    return [&S](const Line& line, const std::string& name) {
      auto g = S.find(name);
      if (!g) throw ParseError(line.number, "unknown generator '" + name + "'");
      return *g;
    };
  };
  auto in_source = lookup_in(*source);
  auto in_target = lookup_in(*target);

  std::vector<std::vector<std::optional<Simplex>>> assign(
      static_cast<size_t>(source->dimension()) + 1);
  for (int d = 0; d <= source->dimension(); ++d)
    assign[static_cast<size_t>(d)].resize(static_cast<size_t>(source->count(d)));

  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& t = line.tokens;
    if (t[0] == "source" || t[0] == "target") {
      if (t.size() != 2) throw ParseError(line.number, "expected '" + t[0] + " <id>'");
    } else if (t[0] == "send") {
      if (t.size() < 4 || t[2] != "=")
        throw ParseError(line.number, "expected 'send <gen> = <gen'> [| <values>]'");
      GeneratorId g = in_source(line, t[1]);
      auto& slot = assign[static_cast<size_t>(g.degree)][static_cast<size_t>(g.index)];
      if (slot) throw ParseError(line.number, "duplicate 'send' for '" + t[1] + "'");
      slot = parse_image(line, 3, g.degree, in_target);
    } else {
      throw ParseError(line.number, "unknown directive '" + t[0] + "'");
    }
  }

  std::vector<std::vector<Simplex>> filled;
  for (int d = 0; d <= source->dimension(); ++d) {
    std::vector<Simplex> row;
    for (int i = 0; i < source->count(d); ++i) {
      const auto& slot = assign[static_cast<size_t>(d)][static_cast<size_t>(i)];
      if (!slot)
        throw ParseError(lines.back().number,
                         "missing 'send' for '" + source->name(GeneratorId{d, i}) + "'");
      row.push_back(*slot);
    }
    filled.push_back(std::move(row));
  }
  try {
    return SimplicialMap(std::move(source), std::move(target), std::move(filled));
  } catch (const std::exception& e) {
    throw ParseError(lines.back().number, e.what());
  }
}

}  // namespace ssk
