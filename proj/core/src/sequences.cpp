#include <catgraph/sequences.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace catgraph {

SequenceSpec SequenceSpec::catalan() { return {Kind::Catalan, 0, {}}; }

SequenceSpec SequenceSpec::fuss(Nat k) {
  if (k < 1) throw std::invalid_argument("fuss sequence requires k >= 1");
  return {Kind::Fuss, std::move(k), {}};
}

SequenceSpec SequenceSpec::triangle_row(Nat n) {
  return {Kind::TriangleRow, std::move(n), {}};
}

SequenceSpec SequenceSpec::triangle_column(Nat k) {
  return {Kind::TriangleColumn, std::move(k), {}};
}

SequenceSpec SequenceSpec::triangle_diagonal(Nat i) {
  return {Kind::TriangleDiagonal, std::move(i), {}};
}

SequenceSpec SequenceSpec::internal_triangles() {
  return {Kind::InternalTriangles, 0, {}};
}

SequenceSpec SequenceSpec::super_catalan_row(Nat m) {
  return {Kind::SuperCatalanRow, std::move(m), {}};
}

SequenceSpec SequenceSpec::explicit_list(std::vector<Nat> values) {
  if (values.empty())
    throw std::invalid_argument("explicit sequence must be non-empty");
  return {Kind::Explicit, 0, std::move(values)};
}

std::string SequenceSpec::name() const {
  switch (kind) {
    case Kind::Catalan: return "catalan";
    case Kind::Fuss: return "fuss:" + param.str();
    case Kind::TriangleRow: return "triangle-row:" + param.str();
    case Kind::TriangleColumn: return "triangle-column:" + param.str();
    case Kind::TriangleDiagonal: return "triangle-diagonal:" + param.str();
    case Kind::InternalTriangles: return "internal-triangles";
    case Kind::SuperCatalanRow: return "super-catalan-row:" + param.str();
    case Kind::Explicit: {
      std::string out;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += values[i].str();
      }
      return out;
    }
  }
  return "?";
}

std::optional<std::size_t> SequenceSpec::max_terms() const {
  if (kind == Kind::TriangleRow)
    return static_cast<std::size_t>(param) + 1;
  if (kind == Kind::Explicit) return values.size();
  return std::nullopt;
}

std::vector<Nat> sequence_values(const SequenceSpec& spec, std::size_t count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (auto cap = spec.max_terms(); cap && count > *cap)
    throw std::invalid_argument(spec.name() + " has only " +
                                std::to_string(*cap) + " terms, asked for " +
                                std::to_string(count));
  std::vector<Nat> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const Nat jn = j;
    switch (spec.kind) {
      case SequenceSpec::Kind::Catalan:
        out.push_back(catalan(jn));
        break;
      case SequenceSpec::Kind::Fuss:
        out.push_back(fuss_catalan(jn, spec.param));
        break;
      case SequenceSpec::Kind::TriangleRow:
        out.push_back(catalan_triangle(spec.param, jn));
        break;
      case SequenceSpec::Kind::TriangleColumn:
        out.push_back(catalan_triangle(spec.param + jn, spec.param));
        break;
      case SequenceSpec::Kind::TriangleDiagonal:
        out.push_back(catalan_triangle(spec.param + jn, jn));
        break;
      case SequenceSpec::Kind::InternalTriangles:
        out.push_back(j == 0 ? Nat(1) : internal_triangles(jn + 3));
        break;
      case SequenceSpec::Kind::SuperCatalanRow:
        out.push_back(super_catalan(spec.param, jn));
        break;
      case SequenceSpec::Kind::Explicit:
        out.push_back(spec.values[j]);
        break;
    }
  }
  return out;
}

namespace {

bool looks_like_inline_list(const std::string& text) {
  bool has_digit = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) has_digit = true;
    else if (c != ',' && c != ' ' && c != '\t') return false;
  }
  return has_digit;
}

std::vector<Nat> parse_integer_list(const std::string& text, char sep) {
  std::vector<Nat> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, sep)) {
    std::erase_if(token, [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
    if (token.empty()) continue;
    values.emplace_back(token);
  }
  if (values.empty()) throw std::invalid_argument("empty sequence");
  return values;
}

}  // namespace

SequenceSpec parse_sequence_spec(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty sequence spec");

  if (text[0] == '@') {
    std::ifstream file(text.substr(1));
    if (!file) throw std::invalid_argument("cannot open sequence file " + text.substr(1));
    std::stringstream buffer;
    buffer << file.rdbuf();
    return SequenceSpec::explicit_list(parse_integer_list(buffer.str(), '\n'));
  }

  if (looks_like_inline_list(text))
    return SequenceSpec::explicit_list(parse_integer_list(text, ','));

  std::string head = text;
  std::optional<Nat> arg;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    head = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw std::invalid_argument("malformed sequence parameter in '" + text + "'");
    arg = Nat(rest);
  }

  const auto need = [&](const char* what) -> Nat {
    if (!arg) throw std::invalid_argument(head + " needs a parameter: " + head + ":" + what);
    return *arg;
  };
  const auto plain = [&]() {
    if (arg) throw std::invalid_argument(head + " takes no parameter");
  };

  if (head == "catalan") { plain(); return SequenceSpec::catalan(); }
  if (head == "fuss") return SequenceSpec::fuss(need("K"));
  if (head == "triangle-row") return SequenceSpec::triangle_row(need("N"));
  if (head == "triangle-column") return SequenceSpec::triangle_column(need("K"));
  if (head == "triangle-diagonal") return SequenceSpec::triangle_diagonal(need("I"));
  if (head == "internal-triangles") { plain(); return SequenceSpec::internal_triangles(); }
  if (head == "super-catalan-row") return SequenceSpec::super_catalan_row(need("M"));

  throw std::invalid_argument(
      "unknown sequence '" + text +
      "' (expected catalan, fuss:K, triangle-row:N, triangle-column:K, "
      "triangle-diagonal:I, internal-triangles, super-catalan-row:M, an "
      "inline list like 1,4,14,48, or @file)");
}

}  // namespace catgraph
