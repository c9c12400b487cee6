#include <catgraph/build.hpp>

#include <catgraph/errors.hpp>

#include <stdexcept>
#include <utility>

namespace catgraph {

PathRules::PathRules(std::vector<Rational> r) : rules(std::move(r)) {
  for (const Rational& value : rules)
    if (value < 0) throw std::invalid_argument("path rules must be >= 0");
}

std::optional<Rational> PathRules::rule(int length) const {
  if (length < 0 || length >= static_cast<int>(rules.size())) return std::nullopt;
  return rules[length];
}

Rational classic_rule(int) { return Rational(1); }

Rational fuss_rule(int length, const Nat& k) {
  return Rational(binomial(Nat(length) + k - 1, Nat(length)));
}

Rational super_rule(int length) {
  Nat power = 1;
  power <<= length;  // 2^l
  return Rational(2, power);
}

CondensedGraph grow_step(const CondensedGraph& g, int step, const RuleFn& rule,
                         Nat* new_count) {
  if (step < 1) throw std::invalid_argument("growth steps start at 1");

  const int target = step - 1;
  const auto pv = per_vertex_path_counts(g, target, step - 1);
  const auto rep = represented_counts(g);

  CondensedGraph out = g;
  Nat added = 0;
  for (int v = 0; v < g.size(); ++v) {
    Rational per_vertex = 0;  // children gained by each vertex of this class
    for (int l = 0; l <= step - 1; ++l) {
      if (pv[v][l] == 0) continue;
      const auto r = rule(l);
      if (!r) throw RuleMissingError(l);
      per_vertex += Rational(pv[v][l]) * *r;
    }
    if (per_vertex == 0) continue;
    if (denominator(per_vertex) != 1)
      throw NonIntegralGrowthError(step, v, per_vertex);
    Nat count = numerator(per_vertex);
    added += rep[v] * count;
    out.add_node(step, std::move(count), v);
  }
  if (new_count) *new_count = added;
  return out;
}

namespace {

GraphFamily build_family(GraphFamily::Kind kind, int n_max, const RuleFn& rule) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  GraphFamily fam;
  fam.kind = kind;
  fam.graphs.reserve(static_cast<std::size_t>(n_max) + 1);
  fam.graphs.push_back(single_node(0));
  fam.new_counts.push_back(1);
  for (int n = 1; n <= n_max; ++n) {
    Nat added;
    fam.graphs.push_back(grow_step(fam.graphs.back(), n, rule, &added));
    fam.new_counts.push_back(std::move(added));
  }
  return fam;
}

}  // namespace

const CondensedGraph& GraphFamily::at(int n) const {
  if (n < 0 || n > steps())
    throw std::out_of_range("family has no step " + std::to_string(n));
  return graphs[static_cast<std::size_t>(n)];
}

std::string GraphFamily::kind_name() const {
  switch (kind) {
    case Kind::Classic: return "classic";
    case Kind::Fuss: return "fuss";
    case Kind::Super: return "super";
    case Kind::ByRules: return "by-rules";
  }
  return "?";
}

GraphFamily build_classic(int n_max) {
  return build_family(GraphFamily::Kind::Classic, n_max,
                      [](int l) { return classic_rule(l); });
}

GraphFamily build_fuss(int n_max, const Nat& k) {
  if (k < 1) throw std::invalid_argument("fuss family requires k >= 1");
  auto fam = build_family(GraphFamily::Kind::Fuss, n_max,
                          [&k](int l) { return fuss_rule(l, k); });
  fam.fuss_k = k;
  return fam;
}

GraphFamily build_super(int n_max) {
  return build_family(GraphFamily::Kind::Super, n_max,
                      [](int l) { return super_rule(l); });
}

GraphFamily build_by_rules(const PathRules& rules, int n_max) {
  for (const Rational& value : rules.rules)
    if (value < 0) throw std::invalid_argument("path rules must be >= 0");
  auto fam = build_family(GraphFamily::Kind::ByRules, n_max,
                          [&rules](int l) { return rules.rule(l); });
  fam.rules = rules;
  return fam;
}

}  // namespace catgraph
