#include <catgraph/ntable.hpp>

#include <catgraph/errors.hpp>

#include <stdexcept>

namespace catgraph {

const Nat& NTable::at(int length, int label) const {
  if (length < 0 || length > n || label < 0 || label > n)
    throw std::out_of_range("table index out of range");
  return k[static_cast<std::size_t>(length)][static_cast<std::size_t>(label)];
}

Nat NTable::row_sum(int length) const {
  Nat sum = 0;
  for (const Nat& value : k[static_cast<std::size_t>(length)]) sum += value;
  return sum;
}

NTable compute_ntable(const CondensedGraph& g, int n) {
  NTable t;
  t.n = n;
  t.k.assign(static_cast<std::size_t>(n) + 1,
             std::vector<Nat>(static_cast<std::size_t>(n) + 1));

  const auto pv = per_vertex_path_counts(g, n, n);
  const auto rep = represented_counts(g);
  for (int v = 0; v < g.size(); ++v) {
    const int label = g.nodes[v].label;
    if (label < 0 || label > n)
      throw std::invalid_argument("graph carries labels beyond step n");
    for (int l = 0; l <= n; ++l)
      if (pv[v][l] != 0)
        t.k[static_cast<std::size_t>(l)][static_cast<std::size_t>(label)] +=
            rep[v] * pv[v][l];
  }
  return t;
}

NTable compute_ntable(const GraphFamily& fam, int n) {
  return compute_ntable(fam.at(n), n);
}

std::vector<Rational> next_value_summands(const NTable& t) {
  std::vector<Rational> summands;
  summands.reserve(static_cast<std::size_t>(t.n) + 1);
  for (int l = 0; l <= t.n; ++l)
    summands.push_back(super_rule(l) * Rational(t.row_sum(l)));
  return summands;
}

Rational predict_next_value(const NTable& t) {
  Rational total = 0;
  for (const Rational& s : next_value_summands(t)) total += s;
  return total;
}

NTable predict_ntable(const NTable& prev) {
  const int n = prev.n + 1;
  NTable t;
  t.n = n;
  t.k.assign(static_cast<std::size_t>(n) + 1,
             std::vector<Nat>(static_cast<std::size_t>(n) + 1));

  for (int l = 1; l <= n; ++l) {
    for (int v = 0; v <= n; ++v) {
      Rational entry = 0;
      // empty when n - l - v < 0; the indices l-1+i stay within prev
      for (int i = 0; i <= n - l - v; ++i)
        entry += super_rule(i) * Rational(prev.at(l - 1 + i, v));
      if (denominator(entry) != 1) throw NonIntegralEntryError(l, v, entry);
      t.k[static_cast<std::size_t>(l)][static_cast<std::size_t>(v)] =
          numerator(entry);
    }
  }

  const Rational next = predict_next_value(prev);
  if (denominator(next) != 1) throw NonIntegralEntryError(0, n, next);
  t.k[0][static_cast<std::size_t>(n)] = numerator(next);
  return t;
}

VerifyReport verify_conjectures(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");

  VerifyReport report;
  report.n_max = n_max;
  report.note =
      "the l=0 row of each predicted table comes from the trivial-path rule "
      "(only the newest label has length-0 paths), not from the recurrence";

  const GraphFamily fam = build_super(n_max);
  std::vector<NTable> tables;
  tables.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) tables.push_back(compute_ntable(fam, n));

  for (int n = 0; n < n_max; ++n) {
    VerifyReport::Entry entry;
    entry.n = n;
    entry.predicted_next = predict_next_value(tables[static_cast<std::size_t>(n)]);
    entry.sum_ok = entry.predicted_next == Rational(super_catalan(0, n + 1));

    try {
      const NTable predicted = predict_ntable(tables[static_cast<std::size_t>(n)]);
      const NTable& actual = tables[static_cast<std::size_t>(n) + 1];
      for (int l = 0; l <= n + 1 && entry.recurrence_ok; ++l)
        for (int v = 0; v <= n + 1; ++v)
          if (predicted.at(l, v) != actual.at(l, v)) {
            entry.recurrence_ok = false;
            entry.first_mismatch = {n + 1, l, v};
            break;
          }
    } catch (const NonIntegralEntryError& e) {
      entry.recurrence_ok = false;
      entry.non_integral = {e.length, e.label};
    }

    report.ok = report.ok && entry.recurrence_ok && entry.sum_ok;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string to_csv(const NTable& t) {
  std::string out = "l\\v";
  for (int v = 0; v <= t.n; ++v) out += "," + std::to_string(v);
  out += "\n";
  for (int l = 0; l <= t.n; ++l) {
    out += std::to_string(l);
    for (int v = 0; v <= t.n; ++v) out += "," + t.at(l, v).str();
    out += "\n";
  }
  return out;
}

}  // namespace catgraph
