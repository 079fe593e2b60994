#include "puv/json_io.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "puv/errors.hpp"
#include "puv/kernels.hpp"
#include "puv/numeric.hpp"
#include "puv/partition.hpp"
#include "puv/probability.hpp"
#include "puv/qseries.hpp"
#include "puv/rsk.hpp"
#include "puv/schur.hpp"
#include "puv/tableau.hpp"

namespace puv {
namespace {

using nlohmann::json;

void require_object(const json& payload) {
  if (!payload.is_object()) throw std::invalid_argument("payload must be a JSON object");
}

void require_keys(const json& payload, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  require_object(payload);
  for (const auto& key : required)
    if (!payload.contains(key)) throw std::invalid_argument("missing payload field \"" + key + "\"");
  for (const auto& [key, value] : payload.items())
    if (!required.contains(key) && !optional.contains(key))
      throw std::invalid_argument("unknown payload field \"" + key + "\"");
}

int int_field(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw std::invalid_argument(what + " must be an integer");
  return v.get<int>();
}

// Exact inputs are integers or strings ("115/144", "2.5"); bare JSON floats
// are rejected so nobody silently feeds binary-rounded decimals into the
// exact backend.
Rational rational_field(const json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(what + " is not a valid rational string");
    }
  }
  throw std::invalid_argument(what + " must be an integer or a rational string (exact backend)");
}

double double_field(const json& v, const std::string& what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string())
    return static_cast<double>(rational_field(v, what));
  throw std::invalid_argument(what + " must be a number or a rational string");
}

template <class K, class Field>
std::vector<K> vector_field(const json& v, const std::string& what, Field&& field) {
  if (!v.is_array() || v.empty()) throw std::invalid_argument(what + " must be a nonempty array");
  std::vector<K> out;
  out.reserve(v.size());
  for (const auto& item : v) out.push_back(field(item, what + " entry"));
  return out;
}

json tableau_to_json(const Tableau& t) {
  json rows = json::array();
  for (const auto& r : t.rows) rows.push_back(r);
  return rows;
}

Tableau tableau_field(const json& v, const std::string& what) {
  if (!v.is_array()) throw std::invalid_argument(what + " must be an array of row arrays");
  std::vector<std::vector<int>> rows;
  for (const auto& row : v) {
    if (!row.is_array()) throw std::invalid_argument(what + " rows must be arrays");
    std::vector<int> r;
    for (const auto& entry : row) r.push_back(int_field(entry, what + " entry"));
    rows.push_back(std::move(r));
  }
  return Tableau(std::move(rows));
}

Partition partition_field(const json& v, const std::string& what) {
  if (!v.is_array()) throw std::invalid_argument(what + " must be an integer array");
  std::vector<int> parts;
  for (const auto& entry : v) parts.push_back(int_field(entry, what + " entry"));
  return Partition(std::move(parts));
}

ZeroOneMatrix matrix_field(const json& v) {
  if (!v.is_array() || v.empty())
    throw std::invalid_argument("matrix must be a nonempty array of row arrays");
  const int n = static_cast<int>(v.size());
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : v) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix must be square");
    for (const auto& entry : row) {
      int b = int_field(entry, "matrix entry");
      if (b != 0 && b != 1) throw std::invalid_argument("matrix entries must be 0 or 1");
      bits.push_back(static_cast<std::uint8_t>(b));
    }
  }
  return ZeroOneMatrix(n, std::move(bits));
}

json coeffs_to_json(const IntPoly& p) {
  json out = json::array();
  for (const BigInt& c : p.c) out.push_back(c.str());
  return out;
}

Rational prob_schur_exact(const std::vector<Rational>& chi, const std::vector<Rational>& delta) {
  const int n = static_cast<int>(chi.size());
  MultiPoly f = f_schur(n);  // throws DomainError beyond the enumeration cap
  Rational value = eval_multipoly<Rational>(f, delta, chi);
  for (const Rational& ci : chi)
    for (const Rational& dj : delta) value /= ci + dj;
  return value;
}

}  // namespace

json run_prob(const json& payload, const ProbOptions& opts) {
  require_keys(payload, {"chi", "delta"});
  const std::string& method = opts.method;
  const std::string& backend = opts.backend;
  if (method != "barett" && method != "bezout" && method != "schur" && method != "mc")
    throw std::invalid_argument("unknown method \"" + method + "\"");
  if (backend != "exact" && backend != "float")
    throw std::invalid_argument("unknown backend \"" + backend + "\"");
  if (method == "schur" && backend != "exact")
    throw std::invalid_argument("method schur is exact-only");
  if (method == "mc" && backend != "float")
    throw std::invalid_argument("method mc is float-only");

  json out;
  out["method"] = method;
  out["backend"] = backend;

  if (backend == "exact") {
    auto chi = vector_field<Rational>(payload["chi"], "chi", rational_field);
    auto delta = vector_field<Rational>(payload["delta"], "delta", rational_field);
    VarianceProfile<Rational> p(chi, delta);
    if (method == "barett") {
      out["value"] = format_rational(barett_direct(p));
    } else if (method == "bezout") {
      auto [x, d] = build_x_delta(p);
      BezoutPair<Rational> bz = bezout_pi(x, d);
      out["value"] = format_rational(bz.pi.at(0));
      out["residual"] = "0";
    } else {
      out["value"] = format_rational(prob_schur_exact(chi, delta));
    }
    return out;
  }

  auto chi = vector_field<double>(payload["chi"], "chi", double_field);
  auto delta = vector_field<double>(payload["delta"], "delta", double_field);
  VarianceProfile<double> p(chi, delta);
  if (method == "barett") {
    out["value"] = format_double(barett_direct(p));
  } else if (method == "bezout") {
    auto [x, d] = build_x_delta(p);
    BezoutPair<double> bz = bezout_pi(x, d);
    out["value"] = format_double(bz.pi.at(0));
    out["residual"] = format_double(bezout_residual(x, d, bz));
  } else {  // mc
    MonteCarloResult r = monte_carlo(p, opts.samples, opts.seed);
    out["value"] = format_double(r.estimate);
    out["std_error"] = format_double(r.std_error);
    out["samples"] = r.samples;
    out["seed"] = r.seed;
    out["rng"] = kMonteCarloRng;
  }
  return out;
}

json run_identity(const json& payload) {
  require_keys(payload, {"n"}, {"t"});
  const int n = int_field(payload.at("n"), "n");
  Rational t = payload.contains("t") ? rational_field(payload.at("t"), "t") : Rational(3, 2);

  json out;
  out["n"] = n;
  out["t"] = format_rational(t);
  out["alpha"] = alpha(n).str();

  auto [nlhs, nrhs] = q_newton_check(n);
  out["q_newton"] = {{"lhs", coeffs_to_json(nlhs)},
                     {"rhs", coeffs_to_json(nrhs)},
                     {"equal", nlhs == nrhs}};

  auto [elhs, erhs] = euler_sum_check(n);
  out["euler_sum"] = {{"lhs", coeffs_to_json(elhs)},
                      {"rhs", coeffs_to_json(erhs)},
                      {"equal", elhs == erhs}};

  Rational half = partial_fraction_sum(n, t);
  out["partial_fraction"] = {{"value", format_rational(half)},
                             {"equal_half", half == Rational(1, 2)}};
  return out;
}

json run_rsk(const json& payload) {
  require_keys(payload, {"matrix"});
  ZeroOneMatrix m = matrix_field(payload.at("matrix"));

  KnuthResult k = knuth_forward(m);
  SquareFilling s = phi(m);
  auto [w1, w2] = words_w1_w2(m);
  TableauPair alt = alternate_phi(m);
  bool roundtrip = phi_inverse(s) == m;
  bool symmetry = alt.first == s.delta_tab && alt.second == s.chi_tab;

  json word = json::array();
  for (auto [u, v] : k.word.pairs) word.push_back(json::array({u, v}));

  json out;
  out["n"] = m.n;
  out["matrix"] = payload.at("matrix");
  out["word"] = word;
  out["t1"] = tableau_to_json(k.t1);
  out["t2"] = tableau_to_json(k.t2);
  out["t2_complement"] = tableau_to_json(s.chi_tab);
  out["square"] = {{"n", s.n},
                   {"delta", tableau_to_json(s.delta_tab)},
                   {"chi", tableau_to_json(s.chi_tab)},
                   {"grid", render_square(s)}};
  out["w1"] = w1;
  out["w2"] = w2;
  out["alternate"] = {{"t1", tableau_to_json(alt.first)}, {"t2", tableau_to_json(alt.second)}};
  out["roundtrip_ok"] = roundtrip;
  out["symmetry_holds"] = symmetry;
  return out;
}

json run_schur(const json& payload) {
  require_keys(payload, {"n"});
  const int n = int_field(payload.at("n"), "n");
  MultiPoly f = f_schur(n);

  json terms = json::array();
  BigInt multiset_count = 0;
  for (const auto& [mon, coeff] : f.terms) {
    terms.push_back({{"delta_exp", mon.delta_exp},
                     {"chi_exp", mon.chi_exp},
                     {"coeff", coeff.str()}});
    multiset_count += coeff;
  }

  std::vector<BigInt> two_value = specialize_two_values(n);
  json two_values = json::array();
  for (const BigInt& c : two_value) two_values.push_back(c.str());

  json out;
  out["n"] = n;
  out["distinct_monomials"] = f.terms.size();
  // Tableau pairs counted with multiplicity; this is the count the 2^(n^2-1)
  // formula speaks about.
  out["monomials_with_multiplicity"] = multiset_count.str();
  out["terms"] = terms;
  out["two_value_coeffs"] = two_values;
  return out;
}

json run_count(const json& payload) {
  require_keys(payload, {"n"});
  const int n = int_field(payload.at("n"), "n");
  BigInt enumerated = count_square_fillings(n);
  BigInt formula = alpha(n);

  json out;
  out["n"] = n;
  out["enumerated"] = static_cast<long long>(enumerated);
  out["formula"] = static_cast<long long>(formula);
  out["match"] = enumerated == formula;
  return out;
}

json run_enumerate(const json& payload) {
  require_object(payload);
  if (!payload.contains("op")) throw std::invalid_argument("missing payload field \"op\"");
  const std::string op = payload.at("op").is_string() ? payload.at("op").get<std::string>() : "";

  if (op == "tableaux") {
    require_keys(payload, {"op", "shape", "max_entry"});
    Partition shape = partition_field(payload.at("shape"), "shape");
    const int max_entry = int_field(payload.at("max_entry"), "max_entry");
    std::vector<Tableau> all = list_tableaux(shape, max_entry);
    if (all.size() > 10000) throw DomainError("enumeration too large to print");
    json tableaux = json::array();
    for (const Tableau& t : all) tableaux.push_back(tableau_to_json(t));
    json out;
    out["op"] = op;
    out["shape"] = shape.parts;
    out["max_entry"] = max_entry;
    out["count"] = all.size();
    out["tableaux"] = tableaux;
    return out;
  }

  if (op == "complement") {
    require_keys(payload, {"op", "partition", "n"});
    Partition p = partition_field(payload.at("partition"), "partition");
    const int n = int_field(payload.at("n"), "n");
    Partition nu = rotated_complement(p, n);
    Partition comp = complement(p, n);

    // The partition's cells sit bottom left in the n x n square ("*"); the
    // rotated complement fills the rest ("o").  Top row first.
    json grid = json::array();
    for (int row = n; row >= 1; --row) {
      std::string line;
      for (int col = 1; col <= n; ++col) {
        if (!line.empty()) line += ' ';
        line += col <= p.part(row - 1) ? '*' : 'o';
      }
      grid.push_back(line);
    }

    json out;
    out["op"] = op;
    out["partition"] = p.parts;
    out["n"] = n;
    out["nu"] = nu.parts;
    out["complement"] = comp.parts;
    out["conjugate"] = conjugate(p).parts;
    out["grid"] = grid;
    return out;
  }

  if (op == "tableau") {
    require_keys(payload, {"op", "rows", "n"});
    const int n = int_field(payload.at("n"), "n");
    json out;
    out["op"] = op;
    out["n"] = n;
    out["rows"] = payload.at("rows");
    try {
      Tableau t = tableau_field(payload.at("rows"), "rows");
      if (t.max_entry() > n) throw DomainError("tableau entry exceeds alphabet size");
      out["valid"] = true;
      out["shape"] = t.shape().parts;
      out["monomial"] = t.content(n);
    } catch (const DomainError&) {
      out["valid"] = false;
    }
    return out;
  }

  throw std::invalid_argument("unknown enumerate op \"" + op + "\"");
}

}  // namespace puv
