#include "liegauge/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "liegauge/error.hpp"

namespace liegauge {

namespace {

void validate(const TensorTerm& t) {
  if (t.factors.size() > 6)
    throw MalformedTermError("too many factors for brute-force canonicalization");
  std::map<IndexId, int> count;
  for (const auto& f : t.factors) {
    if (f.field.empty()) throw MalformedTermError("factor without field label");
    if (f.vector_index == 0) throw MalformedTermError("zero vector index id");
    if (f.has_derivative) {
      if (f.derivative_index == 0) throw MalformedTermError("zero derivative index id");
      if (f.derivative_index == f.vector_index)
        throw MalformedTermError("factor contracts its own derivative and vector indices");
      ++count[f.derivative_index];
    }
    ++count[f.vector_index];
  }
  for (const auto& [id, n] : count) {
    if (id > 0 && n != 2)
      throw MalformedTermError("summed index id " + std::to_string(id) +
                               " appears " + std::to_string(n) + " times, expected 2");
    if (id < 0 && n != 1)
      throw MalformedTermError("free index id " + std::to_string(id) +
                               " appears " + std::to_string(n) + " times, expected 1");
  }
}

}  // namespace

TensorTerm canonicalize(TensorTerm t) {
  validate(t);
  std::size_t n = t.factors.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  using Key = std::vector<std::tuple<std::string, IndexId, IndexId>>;
  Key best;
  std::vector<Factor> best_factors;
  bool have_best = false;

  do {
    std::map<IndexId, IndexId> relabel;
    IndexId next = 1;
    auto mapped = [&](IndexId id) {
      if (id < 0) return id;
      auto [it, inserted] = relabel.emplace(id, next);
      if (inserted) ++next;
      return it->second;
    };
    Key key;
    std::vector<Factor> factors;
    key.reserve(n);
    factors.reserve(n);
    for (std::size_t idx : perm) {
      Factor f = t.factors[idx];
      if (f.has_derivative) f.derivative_index = mapped(f.derivative_index);
      else f.derivative_index = 0;
      f.vector_index = mapped(f.vector_index);
      key.emplace_back(f.field, f.derivative_index, f.vector_index);
      factors.push_back(std::move(f));
    }
    if (!have_best || key < best) {
      best = std::move(key);
      best_factors = std::move(factors);
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  t.factors = std::move(best_factors);
  return t;
}

void TensorPoly::add(TensorTerm t) {
  if (t.coeff.is_zero()) return;
  t = canonicalize(std::move(t));
  TermKey key;
  key.g_power = t.g_power;
  key.factors.reserve(t.factors.size());
  for (const auto& f : t.factors)
    key.factors.push_back({f.field, f.has_derivative ? f.derivative_index : 0, f.vector_index});
  auto [it, inserted] = terms_.emplace(std::move(key), t.coeff);
  if (!inserted) {
    it->second += t.coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  for (const auto& [key, coeff] : o.terms_) {
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

TensorTerm key_to_term(const TensorPoly::TermKey& key, const TrigScalar& coeff) {
  TensorTerm t;
  t.coeff = coeff;
  t.g_power = key.g_power;
  t.factors.reserve(key.factors.size());
  for (const auto& fk : key.factors)
    t.factors.push_back(Factor{fk.field, fk.deriv != 0, fk.deriv, fk.vec});
  return t;
}

std::vector<TensorTerm> TensorPoly::terms() const {
  std::vector<TensorTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, coeff] : terms_) out.push_back(key_to_term(key, coeff));
  return out;
}

TensorPoly TensorPoly::scaled(const TrigScalar& s, int g_shift) const {
  TensorPoly out;
  for (const auto& [key, coeff] : terms_) {
    TrigScalar c = coeff * s;
    if (c.is_zero()) continue;
    TermKey k = key;
    k.g_power += g_shift;
    if (k.g_power < 0) throw Error("negative coupling power after normalization");
    out.terms_.emplace(std::move(k), std::move(c));
  }
  return out;
}

TensorPoly TensorPoly::specialized(const TrigScalar& cos_value,
                                   const TrigScalar& sin_value) const {
  TensorPoly out;
  for (const auto& [key, coeff] : terms_) {
    TrigScalar c = coeff.specialize(cos_value, sin_value);
    if (!c.is_zero()) out.terms_.emplace(key, std::move(c));
  }
  return out;
}

namespace {

std::set<IndexId> free_ids(const TensorTerm& t) {
  std::set<IndexId> out;
  for (const auto& f : t.factors) {
    if (f.has_derivative && f.derivative_index < 0) out.insert(f.derivative_index);
    if (f.vector_index < 0) out.insert(f.vector_index);
  }
  return out;
}

IndexId max_id(const TensorTerm& t) {
  IndexId m = 0;
  for (const auto& f : t.factors) {
    if (f.has_derivative) m = std::max(m, f.derivative_index);
    m = std::max(m, f.vector_index);
  }
  return m;
}

}  // namespace

TensorPoly contract_product(const TensorPoly& p, const TensorPoly& q) {
  TensorPoly out;
  for (const auto& tp : p.terms()) {
    std::set<IndexId> fp = free_ids(tp);
    IndexId shift = max_id(tp);
    for (const auto& tq : q.terms()) {
      if (free_ids(tq) != fp) throw DimensionError("free-index mismatch in contraction");
      // shared free ids become fresh dummies
      std::map<IndexId, IndexId> fresh;
      IndexId next = shift + max_id(tq);
      for (IndexId id : fp) fresh[id] = ++next;

      TensorTerm t;
      t.coeff = tp.coeff * tq.coeff;
      t.g_power = tp.g_power + tq.g_power;
      t.factors.reserve(tp.factors.size() + tq.factors.size());
      auto remap = [&fresh](IndexId id, IndexId offset) {
        if (id < 0) return fresh.at(id);
        return id + offset;
      };
      for (Factor f : tp.factors) {
        if (f.has_derivative) f.derivative_index = remap(f.derivative_index, 0);
        f.vector_index = remap(f.vector_index, 0);
        t.factors.push_back(std::move(f));
      }
      for (Factor f : tq.factors) {
        if (f.has_derivative) f.derivative_index = remap(f.derivative_index, shift);
        f.vector_index = remap(f.vector_index, shift);
        t.factors.push_back(std::move(f));
      }
      out.add(std::move(t));
    }
  }
  return out;
}

TensorPoly swap_free_indices(const TensorPoly& p) {
  TensorPoly out;
  auto flip = [](IndexId id) {
    if (id == kFreeMu) return kFreeNu;
    if (id == kFreeNu) return kFreeMu;
    return id;
  };
  for (TensorTerm t : p.terms()) {
    for (Factor& f : t.factors) {
      if (f.has_derivative) f.derivative_index = flip(f.derivative_index);
      f.vector_index = flip(f.vector_index);
    }
    out.add(std::move(t));
  }
  return out;
}

bool antisymmetric_in_free_indices(const TensorPoly& p) {
  return (p + swap_free_indices(p)).empty();
}

FieldStrengthSet field_strength(const StructureConstants& sc,
                                const std::map<std::string, std::string>& names) {
  auto label = [&](std::size_t a) {
    const std::string& l = sc.labels()[a];
    auto it = names.find(l);
    return it == names.end() ? l : it->second;
  };
  FieldStrengthSet fs;
  std::size_t n = sc.dim();
  for (std::size_t a = 0; a < n; ++a) {
    fs.labels.push_back(label(a));
    TensorPoly poly;
    poly.add({TrigScalar(1), 1, {Factor{label(a), true, kFreeMu, kFreeNu}}});
    poly.add({TrigScalar(-1), 1, {Factor{label(a), true, kFreeNu, kFreeMu}}});
    for (const auto& [key, f] : sc.entries()) {
      auto [b, c, target] = key;
      if (target != a) continue;
      poly.add({f, 2, {Factor{label(b), false, 0, kFreeMu}, Factor{label(c), false, 0, kFreeNu}}});
      poly.add({-f, 2, {Factor{label(c), false, 0, kFreeMu}, Factor{label(b), false, 0, kFreeNu}}});
    }
    fs.components.push_back(std::move(poly));
  }
  return fs;
}

TensorPoly lagrangian(const FieldStrengthSet& fs, const TrigMatrix& trace_matrix,
                      const Normalization& norm) {
  std::size_t n = fs.components.size();
  if (trace_matrix.size() != n)
    throw DimensionError("trace matrix dimension does not match component count");
  if (!is_symmetric(trace_matrix)) throw DimensionError("trace matrix must be symmetric");
  TensorPoly acc;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const TrigScalar& t = trace_matrix(a, b);
      if (t.is_zero()) continue;
      acc += contract_product(fs.components[a], fs.components[b]).scaled(t);
    }
  return acc.scaled(norm.scale, norm.g_shift);
}

TensorPoly rename_fields(const TensorPoly& p, const std::map<std::string, std::string>& map) {
  TensorPoly out;
  for (TensorTerm t : p.terms()) {
    for (Factor& f : t.factors) {
      auto it = map.find(f.field);
      if (it == map.end()) throw Error("rename map missing label '" + f.field + "'");
      f.field = it->second;
    }
    out.add(std::move(t));
  }
  return out;
}

std::vector<VertexGroup> vertex_table(const TensorPoly& p) {
  std::map<std::tuple<int, std::vector<std::string>, int>, VertexGroup> groups;
  for (const auto& t : p.terms()) {
    std::vector<std::string> fields;
    int derivs = 0;
    for (const auto& f : t.factors) {
      fields.push_back(f.field);
      if (f.has_derivative) ++derivs;
    }
    std::sort(fields.begin(), fields.end());
    std::string kind = "other";
    if (fields.size() == 2 && derivs == 2) kind = "kinetic";
    else if (fields.size() == 3 && derivs == 1) kind = "cubic";
    else if (fields.size() == 4 && derivs == 0) kind = "quartic";
    int rank = kind == "kinetic" ? 0 : kind == "cubic" ? 1 : kind == "quartic" ? 2 : 3;
    auto& g = groups[{rank, fields, derivs}];
    if (g.terms.empty()) {
      g.kind = kind;
      g.fields = fields;
      g.derivative_count = derivs;
    }
    g.terms.push_back(t);
  }
  std::vector<VertexGroup> out;
  out.reserve(groups.size());
  for (auto& [key, g] : groups) out.push_back(std::move(g));
  return out;
}

namespace {

// Identity of a term = everything but the coefficient.
std::tuple<int, std::vector<std::tuple<std::string, IndexId, IndexId>>> term_shape(
    const TensorTerm& t) {
  std::vector<std::tuple<std::string, IndexId, IndexId>> factors;
  factors.reserve(t.factors.size());
  for (const auto& f : t.factors)
    factors.emplace_back(f.field, f.has_derivative ? f.derivative_index : 0, f.vector_index);
  return {t.g_power, std::move(factors)};
}

}  // namespace

PolyDiff poly_equal(const TensorPoly& p, const TensorPoly& q) {
  PolyDiff diff;
  auto pt = p.terms();
  auto qt = q.terms();
  std::size_t i = 0, j = 0;
  while (i < pt.size() || j < qt.size()) {
    if (i == pt.size()) {
      diff.only_right.push_back(qt[j++]);
      continue;
    }
    if (j == qt.size()) {
      diff.only_left.push_back(pt[i++]);
      continue;
    }
    auto sp = term_shape(pt[i]);
    auto sq = term_shape(qt[j]);
    if (sp < sq) diff.only_left.push_back(pt[i++]);
    else if (sq < sp) diff.only_right.push_back(qt[j++]);
    else {
      if (!(pt[i].coeff == qt[j].coeff)) {
        diff.only_left.push_back(pt[i]);
        diff.only_right.push_back(qt[j]);
      }
      ++i;
      ++j;
    }
  }
  diff.equal = diff.only_left.empty() && diff.only_right.empty();
  return diff;
}

namespace {

std::string index_text(IndexId id) {
  if (id == kFreeMu) return "mu";
  if (id == kFreeNu) return "nu";
  if (id > 0 && id <= 8) return std::string(1, static_cast<char>('a' + id - 1));
  return "i" + std::to_string(id);
}

std::string index_latex_name(IndexId id) {
  static const char* dummies[] = {"\\rho", "\\sigma", "\\alpha", "\\beta",
                                  "\\gamma", "\\delta", "\\epsilon", "\\zeta"};
  if (id == kFreeMu) return "\\mu";
  if (id == kFreeNu) return "\\nu";
  if (id > 0 && id <= 8) return dummies[id - 1];
  return "i_{" + std::to_string(id) + "}";
}

// (base, charge): a trailing +/- splits off so the vector index can share
// the superscript slot (W^{+\rho}, never the invalid W^{+}^{\rho}).
std::pair<std::string, std::string> field_latex(const std::string& label) {
  if (label.size() >= 2 && (label.back() == '+' || label.back() == '-'))
    return {label.substr(0, label.size() - 1), std::string(1, label.back())};
  return {label, ""};
}

// Single-monomial latex body for a display-positive coefficient.
std::string monomial_latex(const TrigKey& k, const GaussRational& mag) {
  std::string out;
  auto rat = [](const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return "\\tfrac{" + numerator(r).str() + "}{" + denominator(r).str() + "}";
  };
  bool unit_mag = false;
  if (mag.im == 0) {
    if (mag.re == 1) unit_mag = true;
    else out += rat(mag.re);
  } else if (mag.re == 0) {
    if (mag.im != 1) out += rat(mag.im);
    out += "i";
  } else {
    out += "(" + rat(mag.re) + (mag.im < 0 ? "-" : "+") +
           (mag.im == 1 || mag.im == -1 ? "" : rat(mag.im < 0 ? Rational(-mag.im) : mag.im)) +
           "i)";
  }
  std::string atoms;
  if (k.cos_pow == 1) atoms += "\\cos\\theta";
  else if (k.cos_pow > 1) atoms += "\\cos^{" + std::to_string(k.cos_pow) + "}\\theta";
  if (k.sin_pow) atoms += "\\sin\\theta";
  if (k.sqrt2_pow) atoms += "\\sqrt{2}";
  if (k.sqrt3_pow) atoms += "\\sqrt{3}";
  if (unit_mag && atoms.empty()) return "1";
  return out + atoms;
}

// (negative?, body); body omits the sign and is empty for +/-1 coefficients.
std::pair<bool, std::string> coeff_latex(const TrigScalar& s) {
  const auto& terms = s.terms();
  if (terms.size() == 1) {
    const auto& [k, q] = *terms.begin();
    bool neg = (q.re != 0) ? (q.re < 0) : (q.im < 0);
    GaussRational mag = neg ? -q : q;
    std::string body = monomial_latex(k, mag);
    if (body == "1") body.clear();
    return {neg, body};
  }
  std::string body = "\\left(";
  bool first = true;
  for (const auto& [k, q] : terms) {
    bool neg = (q.re != 0) ? (q.re < 0) : (q.im < 0);
    GaussRational mag = neg ? -q : q;
    if (first) body += neg ? "-" : "";
    else body += neg ? " - " : " + ";
    first = false;
    body += monomial_latex(k, mag);
  }
  body += "\\right)";
  return {false, body};
}

std::string term_latex_body(const TensorTerm& t) {
  auto [neg, coeff] = coeff_latex(t.coeff);
  (void)neg;
  std::string out = coeff;
  if (t.g_power >= 1) {
    if (!out.empty()) out += "\\,";
    out += t.g_power == 1 ? "g" : "g^{" + std::to_string(t.g_power) + "}";
  }
  if (!out.empty()) out += "\\,";
  std::map<IndexId, int> seen;
  // First occurrence of an index sits low, the repeat sits high.
  auto raised = [&seen](IndexId id) { return seen[id]++ != 0; };
  for (const auto& f : t.factors) {
    if (f.has_derivative) {
      bool up = raised(f.derivative_index);
      out += "\\partial" + std::string(up ? "^{" : "_{") +
             index_latex_name(f.derivative_index) + "}";
    }
    auto [base, charge] = field_latex(f.field);
    bool up = raised(f.vector_index);
    std::string name = index_latex_name(f.vector_index);
    if (up)
      out += base + "^{" + charge + name + "}";
    else
      out += base + (charge.empty() ? "" : "^{" + charge + "}") + "_{" + name + "}";
    out += "\\,";
  }
  if (out.size() >= 2 && out.ends_with("\\,")) out.resize(out.size() - 2);
  return out;
}

}  // namespace

std::string to_text(const TensorTerm& t) {
  std::string out = "(" + t.coeff.str() + ")";
  if (t.g_power == 1) out += " g";
  else if (t.g_power > 1) out += " g^" + std::to_string(t.g_power);
  for (const auto& f : t.factors) {
    out += " ";
    if (f.has_derivative)
      out += "d" + f.field + "(" + index_text(f.derivative_index) + "," +
             index_text(f.vector_index) + ")";
    else
      out += f.field + "(" + index_text(f.vector_index) + ")";
  }
  return out;
}

std::string to_text(const TensorPoly& p) {
  if (p.empty()) return "0\n";
  std::string out;
  for (const auto& t : p.terms()) {
    out += to_text(t);
    out += "\n";
  }
  return out;
}

std::string to_latex(const TensorPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = coeff_latex(t.coeff).first;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    TensorTerm flipped = t;
    if (neg) flipped.coeff = -flipped.coeff;
    out += term_latex_body(flipped);
  }
  return out;
}

}  // namespace liegauge
