#include "rootrel/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <utility>

#include "rootrel/errors.hpp"
#include "rootrel/lll.hpp"

namespace rootrel::pipeline {

using algebra::BigInt;
using algebra::Rational;
using json = nlohmann::ordered_json;

AnalysisOptions AnalysisOptions::make_default() {
  AnalysisOptions o;
  o.height_bound = BigInt(1) << 64;
  return o;
}

namespace {

// ---------------------------------------------------------------- parsing

bool plain_integer_string(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// JSON integers above 2^63-1 parse as unsigned, above 2^64-1 silently as
// double; big values must arrive as decimal strings, so floats are refused.
BigInt big_from_json(const json& v, const std::string& what) {
  if (v.is_number_unsigned()) return BigInt(v.get<unsigned long long>());
  if (v.is_number_integer()) return BigInt(v.get<long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (!plain_integer_string(s))
      throw RequestError(what + " is not a decimal integer: \"" + s + "\"");
    return BigInt(s);
  }
  throw RequestError(what + " must be an integer or a decimal string");
}

int bounded_int(const json& v, const std::string& what, long lo, long hi) {
  if (!v.is_number_integer())
    throw RequestError(what + " must be an integer");
  BigInt x = big_from_json(v, what);
  if (x < lo || x > hi)
    throw RequestError(what + " must be between " + std::to_string(lo) +
                       " and " + std::to_string(hi));
  return static_cast<int>(x.convert_to<long>());
}

void parse_polynomial(const json& v, AnalysisRequest& req) {
  if (!v.is_array() || v.size() < 3)
    throw RequestError(
        "polynomial must be an ascending coefficient array of degree >= 2");
  std::vector<BigInt> c;
  c.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    c.push_back(big_from_json(v[i], "polynomial coefficient " +
                                        std::to_string(i)));
  req.f = numeric::IntPolynomial(std::move(c));
  if (req.f.degree() + 1 != static_cast<int>(v.size()) || !req.f.monic())
    throw RequestError("polynomial must be monic (leading coefficient 1)");
}

void parse_action(const json& v, AnalysisRequest& req) {
  if (!v.is_object() || v.empty())
    throw RequestError(
        "galois_action must be an object of generator permutations");
  for (auto it = v.begin(); it != v.end(); ++it) {
    const json& a = it.value();
    if (!a.is_array())
      throw RequestError("galois_action." + it.key() +
                         " must be a 1-based image array");
    std::vector<int> im;
    im.reserve(a.size());
    for (const json& e : a) {
      if (!e.is_number_integer())
        throw RequestError("galois_action." + it.key() +
                           " entries must be integers");
      const long long x = e.get<long long>();
      if (x < 1 || x > static_cast<long long>(a.size()))
        throw RequestError("galois_action." + it.key() +
                           " entries must lie in 1.." +
                           std::to_string(a.size()));
      im.push_back(static_cast<int>(x) - 1);
    }
    try {
      req.action.emplace_back(it.key(), group::Permutation(std::move(im)));
    } catch (const RequestError&) {
      throw RequestError("galois_action." + it.key() +
                         " is not a permutation");
    }
  }
}

void parse_roots(const json& v, AnalysisRequest& req) {
  if (!v.is_array() || v.empty())
    throw RequestError("roots must be a nonempty array of expressions");
  for (const json& e : v) {
    if (!e.is_string())
      throw RequestError("roots entries must be expression strings");
    const std::string s = e.get<std::string>();
    numeric::parse_expression(s);  // syntax check up front
    req.root_exprs.push_back(s);
  }
}

void parse_options(const json& v, AnalysisOptions& o) {
  if (!v.is_object()) throw RequestError("options must be an object");
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::string& key = it.key();
    const json& val = it.value();
    if (key == "precision") {
      o.digits = bounded_int(val, "options.precision", 8, 1000000);
    } else if (key == "max_precision") {
      o.max_digits = bounded_int(val, "options.max_precision", 8, 10000000);
    } else if (key == "den_bound") {
      o.den_bound = big_from_json(val, "options.den_bound");
      if (o.den_bound < 1)
        throw RequestError("options.den_bound must be positive");
    } else if (key == "height_bound") {
      o.height_bound = big_from_json(val, "options.height_bound");
      if (o.height_bound < 2)
        throw RequestError("options.height_bound must be at least 2");
    } else if (key == "oracle") {
      if (!val.is_boolean())
        throw RequestError("options.oracle must be a boolean");
      o.oracle = val.get<bool>();
    } else if (key == "format") {
      if (!val.is_string() ||
          (val.get<std::string>() != "json" && val.get<std::string>() != "table"))
        throw RequestError("options.format must be \"json\" or \"table\"");
      o.format = val.get<std::string>();
    } else {
      throw RequestError("unknown option \"" + key + "\"");
    }
  }
  if (o.max_digits < o.digits)
    throw RequestError("options.max_precision is below options.precision");
}

}  // namespace

AnalysisRequest parse_request(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw RequestError(std::string("request is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw RequestError("request must be a JSON object");

  AnalysisRequest req;
  req.options = AnalysisOptions::make_default();
  bool have_poly = false;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "polynomial") {
      parse_polynomial(it.value(), req);
      have_poly = true;
    } else if (key == "galois_action") {
      parse_action(it.value(), req);
    } else if (key == "roots") {
      parse_roots(it.value(), req);
    } else if (key == "options") {
      parse_options(it.value(), req.options);
    } else {
      throw RequestError("unknown request field \"" + key + "\"");
    }
  }
  if (!have_poly) throw RequestError("request is missing \"polynomial\"");
  for (const auto& [label, p] : req.action)
    if (p.size() != req.f.degree())
      throw RequestError("galois_action." + label + " must permute " +
                         std::to_string(req.f.degree()) + " labels");
  return req;
}

// ----------------------------------------------------------------- running

namespace {

AnalysisReport attempt(const AnalysisRequest& req, int& digits) {
  const AnalysisOptions& opt = req.options;
  numeric::set_working_digits(digits);

  numeric::PrecisionPolicy pol;
  pol.digits = digits;
  pol.max_digits = std::max(digits, opt.max_digits);
  pol.escalation_factor = opt.escalation_factor;
  numeric::RootList base = numeric::find_roots(req.f, pol);
  if (base.digits > digits) {
    digits = base.digits;
    numeric::set_working_digits(digits);
  }
  const int n = req.f.degree();

  std::vector<std::string> exprs = req.root_exprs;
  if (exprs.empty()) exprs.emplace_back("z");
  std::vector<numeric::IntExpression> parsed;
  parsed.reserve(exprs.size());
  for (const std::string& s : exprs) {
    numeric::IntExpression e = numeric::parse_expression(s);
    if (!numeric::transform_is_injective(req.f, e))
      throw RequestError("root expression \"" + s +
                         "\" does not separate the conjugate roots");
    parsed.push_back(std::move(e));
  }

  group::FiniteGroup g0;
  std::optional<group::Permutation> named_sigma, named_mu;
  if (req.action.empty()) {
    g0 = group::detect_automorphisms(base, req.f, digits, opt.height_bound);
  } else {
    std::vector<group::Permutation> gens;
    gens.reserve(req.action.size());
    for (const auto& [label, p] : req.action) {
      gens.push_back(p);
      if (label == "sigma") named_sigma = p;
      if (label == "mu") named_mu = p;
    }
    g0 = group::close_supplied_action(gens, base, req.f, digits,
                                      opt.height_bound);
  }

  AnalysisReport rep;
  rep.polynomial = req.f.coeffs;
  rep.options = opt;
  rep.digits_used = digits;
  rep.galois = group::organize_galois_data(g0, base, named_sigma, named_mu);
  const group::FiniteGroup& g = rep.galois.group;
  const group::Classification& cls = rep.galois.cls;

  std::vector<algebra::CharacterDeg1> chars = algebra::degree1_characters(g);
  std::vector<algebra::CharacterOrbit> orbits = algebra::galois_orbits(chars, g);
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    CharacterSummary cs;
    cs.id = k == 0 ? "trivial" : "orbit" + std::to_string(k);
    cs.order = orbits[k].rep.order;
    cs.exponents = orbits[k].rep.exponent;
    cs.orbit_size = static_cast<int>(orbits[k].exponents_d.size());
    rep.characters.push_back(std::move(cs));
  }

  std::optional<algebra::TwoDimRep> two;
  if (cls.cls == group::GroupClass::S3 || cls.cls == group::GroupClass::D8)
    two = algebra::two_dim_rep(g, cls);

  algebra::GroupRingQ handled = orbits[0].idempotent;
  for (std::size_t k = 1; k < orbits.size(); ++k)
    handled = handled + orbits[k].idempotent;
  if (two) handled = handled + two->central;
  const algebra::GroupRingQ residual = algebra::ring_one(g) - handled;
  rep.partial = !residual.is_zero();
  rep.two_dim_supported = !rep.partial;
  if (rep.partial) rep.residual_idempotent = residual.coeffs();

  const bool saturated =
      numeric::effective_height_bound(digits, n + 1, opt.height_bound) >=
      opt.height_bound;

  for (std::size_t ei = 0; ei < parsed.size(); ++ei) {
    RowReport row;
    row.expression = exprs[ei];
    const numeric::RootList r =
        numeric::transform_roots(rep.galois.roots, parsed[ei], digits);
    const relations::TrivialResult triv =
        relations::lr_trivial(req.f, parsed[ei], g);
    row.trace = triv.trace;

    ComponentReport tc;
    tc.id = "trivial";
    tc.order = 1;
    tc.rep_exponents = orbits[0].rep.exponent;
    tc.orbit_size = 1;
    tc.basis.relations.push_back(triv.relation);
    tc.basis.dimension = 1;
    row.components.push_back(std::move(tc));

    for (std::size_t k = 1; k < orbits.size(); ++k) {
      ComponentReport c;
      c.id = rep.characters[k].id;
      c.order = orbits[k].rep.order;
      c.rep_exponents = orbits[k].rep.exponent;
      c.orbit_size = rep.characters[k].orbit_size;
      c.basis = relations::lr_deg1(orbits[k], r, g, digits);
      for (relations::Relation& rel : c.basis.relations) rel.provenance = c.id;
      row.components.push_back(std::move(c));
    }

    if (two) {
      relations::TwoDimResult td =
          relations::lr_2dim(*two, r, g, opt.den_bound, digits);
      ComponentReport c;
      c.id = "degree2";
      c.order = 2;
      c.orbit_size = 1;
      c.basis = std::move(td.basis);
      c.diagnostic = std::move(td.diagnostic);
      c.ab = td.ab;
      row.components.push_back(std::move(c));
    }

    // S3: a rational rotation-orbit sum exists exactly when the order-2
    // character contributes, and then it equals half the full trace.
    if (cls.cls == group::GroupClass::S3 &&
        row.components[1].basis.dimension > 0)
      row.orbit_sum = triv.trace / 2;

    std::vector<relations::RelationBasis> parts;
    for (std::size_t i = 1; i < row.components.size(); ++i)
      parts.push_back(row.components[i].basis);
    row.assembled = relations::assemble_lr(triv, parts);

    if (opt.oracle && !rep.partial) {
      row.oracle = relations::oracle_relation_space(r, digits, opt.height_bound);
      std::vector<relations::ComponentSpan> spans;
      for (std::size_t k = 1; k < orbits.size(); ++k)
        spans.push_back({orbits[k].idempotent, &row.components[k].basis});
      if (two)
        spans.push_back({two->central, &row.components.back().basis});
      row.comparison = relations::verify_and_compare(
          row.assembled, *row.oracle, spans, r, g, digits, saturated);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace

AnalysisReport run_pipeline(const AnalysisRequest& req) {
  if (req.f.degree() < 2)
    throw RequestError("polynomial must have degree >= 2");
  if (!req.f.monic())
    throw RequestError("polynomial must be monic (leading coefficient 1)");
  for (const auto& [label, p] : req.action)
    if (p.size() != req.f.degree())
      throw RequestError("galois_action." + label + " must permute " +
                         std::to_string(req.f.degree()) + " labels");

  int digits = req.options.digits;
  for (;;) {
    try {
      return attempt(req, digits);
    } catch (const AmbiguousZero&) {
      // fall through to escalation
    } catch (const InsufficientPrecision&) {
      // fall through to escalation
    }
    if (digits >= req.options.max_digits)
      throw PrecisionExhausted("analysis still unresolved at " +
                               std::to_string(digits) + " digits");
    digits = std::min(req.options.max_digits,
                      digits * req.options.escalation_factor);
  }
}

// --------------------------------------------------------------- rendering

namespace {

json big_json(const BigInt& x) {
  static const BigInt lo = BigInt(std::numeric_limits<long long>::min());
  static const BigInt hi = BigInt(std::numeric_limits<long long>::max());
  if (x >= lo && x <= hi) return json(x.convert_to<long long>());
  return json(x.str());
}

json rational_json(const Rational& q) { return json(algebra::rational_to_string(q)); }

std::string fixed_string(const numeric::BigReal& x, int frac) {
  return x.str(frac, std::ios_base::fixed);
}

// Smallest (well, small) e with 10^e >= err plus the fixed-point printing
// slack 10^-frac, so the printed centers with radius 10^e still enclose
// the true roots.
long error_exponent(const numeric::BigReal& err, int frac) {
  const numeric::BigReal total = err + numeric::pow10(-frac);
  long e = static_cast<long>(
      boost::multiprecision::ceil(boost::multiprecision::log10(total))
          .convert_to<long>());
  while (numeric::pow10(e) < total) ++e;
  return e;
}

json relation_json(const relations::Relation& rel) {
  json m = json::array();
  for (const BigInt& c : rel.m) m.push_back(big_json(c));
  json out = json::object();
  out["m"] = std::move(m);
  out["rhs"] = rational_json(rel.rhs);
  out["provenance"] = rel.provenance;
  return out;
}

json basis_json(const relations::RelationBasis& b) {
  json out = json::object();
  out["dimension"] = b.dimension;
  json rels = json::array();
  for (const relations::Relation& rel : b.relations)
    rels.push_back(relation_json(rel));
  out["relations"] = std::move(rels);
  return out;
}

json generators_json(const AnalysisReport& rep) {
  const group::Classification& cls = rep.galois.cls;
  json out = json::array();
  auto add = [&out](const std::string& label, int element) {
    json g = json::object();
    g["label"] = label;
    g["element"] = element + 1;
    out.push_back(std::move(g));
  };
  switch (cls.cls) {
    case group::GroupClass::Cyclic:
      add("sigma", rep.galois.group.size() > 1 ? 1 : 0);
      break;
    case group::GroupClass::Abelian: {
      const group::AbelianDecomposition dec =
          group::abelian_decomposition(rep.galois.group);
      for (std::size_t i = 0; i < dec.gens.size(); ++i)
        add("g" + std::to_string(i + 1), dec.gens[i]);
      break;
    }
    case group::GroupClass::S3:
    case group::GroupClass::D8:
      add("sigma", cls.sigma);
      add("mu", cls.mu);
      break;
    case group::GroupClass::Other:
      break;
  }
  return out;
}

std::string degree2_diagnostic(const RowReport& row) {
  for (const ComponentReport& c : row.components)
    if (c.id == "degree2") return c.diagnostic;
  return "";
}

}  // namespace

std::string render_json(const AnalysisReport& rep) {
  json out = json::object();

  json poly = json::array();
  for (const BigInt& c : rep.polynomial) poly.push_back(big_json(c));
  out["polynomial"] = std::move(poly);

  json prec = json::object();
  prec["digits"] = rep.options.digits;
  prec["max_digits"] = rep.options.max_digits;
  prec["used"] = rep.digits_used;
  out["precision"] = std::move(prec);

  const int frac = rep.digits_used;
  json roots = json::object();
  roots["err_exponent"] = error_exponent(rep.galois.roots.err, frac);
  json values = json::array();
  for (const numeric::BigComplex& z : rep.galois.roots.roots) {
    json v = json::object();
    v["re"] = fixed_string(z.re, frac);
    v["im"] = fixed_string(z.im, frac);
    values.push_back(std::move(v));
  }
  roots["values"] = std::move(values);
  out["roots"] = std::move(roots);

  json grp = json::object();
  grp["order"] = rep.galois.group.size();
  grp["classification"] = rep.galois.cls.name;
  json invf = json::array();
  for (long d : rep.galois.cls.invariant_factors) invf.push_back(d);
  grp["invariant_factors"] = std::move(invf);
  grp["generators"] = generators_json(rep);
  json cayley = json::array();
  for (const std::vector<int>& row : rep.galois.group.cayley) {
    json r = json::array();
    for (int x : row) r.push_back(x + 1);
    cayley.push_back(std::move(r));
  }
  grp["cayley"] = std::move(cayley);
  out["group"] = std::move(grp);

  json chars = json::array();
  for (const CharacterSummary& cs : rep.characters) {
    json c = json::object();
    c["id"] = cs.id;
    c["order"] = cs.order;
    json ex = json::array();
    for (long e : cs.exponents) ex.push_back(e);
    c["exponents"] = std::move(ex);
    c["orbit_size"] = cs.orbit_size;
    chars.push_back(std::move(c));
  }
  out["characters"] = std::move(chars);

  json rows = json::array();
  for (const RowReport& row : rep.rows) {
    json r = json::object();
    r["root"] = row.expression;
    r["trace"] = rational_json(row.trace);
    r["orbit_sum"] =
        row.orbit_sum ? rational_json(*row.orbit_sum) : json(nullptr);
    json comps = json::array();
    for (const ComponentReport& c : row.components) {
      json cj = json::object();
      cj["id"] = c.id;
      cj["order"] = c.order;
      json rels = json::array();
      for (const relations::Relation& rel : c.basis.relations)
        rels.push_back(relation_json(rel));
      cj["relations"] = std::move(rels);
      if (c.id == "degree2") {
        cj["diagnostic"] = c.diagnostic;
        if (c.ab) {
          json ab = json::array();
          ab.push_back(big_json(c.ab->first));
          ab.push_back(big_json(c.ab->second));
          cj["ab"] = std::move(ab);
        } else {
          cj["ab"] = nullptr;
        }
      }
      comps.push_back(std::move(cj));
    }
    r["components"] = std::move(comps);
    r["assembled"] = basis_json(row.assembled);
    r["oracle"] = row.oracle ? basis_json(*row.oracle) : json(nullptr);
    if (row.comparison) {
      json cmp = json::object();
      cmp["rank_equal"] = row.comparison->rank_equal;
      cmp["spans_equal"] = row.comparison->spans_equal;
      cmp["projections_ok"] = row.comparison->projections_ok;
      cmp["max_residual"] =
          numeric::to_decimal_string(row.comparison->max_residual, 3);
      cmp["max_projection_residual"] = numeric::to_decimal_string(
          row.comparison->max_projection_residual, 3);
      r["comparison"] = std::move(cmp);
    } else {
      r["comparison"] = nullptr;
    }
    rows.push_back(std::move(r));
  }
  out["rows"] = std::move(rows);

  out["partial"] = rep.partial;
  if (rep.residual_idempotent) {
    json res = json::array();
    for (const Rational& q : *rep.residual_idempotent)
      res.push_back(rational_json(q));
    out["residual_idempotent"] = std::move(res);
  } else {
    out["residual_idempotent"] = nullptr;
  }

  return out.dump(2) + "\n";
}

std::string render_table(const AnalysisReport& rep) {
  const group::GroupClass cls = rep.galois.cls.cls;
  std::ostringstream os;
  if (cls == group::GroupClass::S3) {
    os << "root | a1+a2+a3 | A21/A11\n";
    for (const RowReport& row : rep.rows)
      os << row.expression << " | "
         << (row.orbit_sum ? algebra::rational_to_string(*row.orbit_sum) : "")
         << " | " << degree2_diagnostic(row) << "\n";
  } else if (cls == group::GroupClass::D8) {
    os << "root | A21/A11\n";
    for (const RowReport& row : rep.rows)
      os << row.expression << " | " << degree2_diagnostic(row) << "\n";
  } else {
    os << "root | trace\n";
    for (const RowReport& row : rep.rows)
      os << row.expression << " | " << algebra::rational_to_string(row.trace)
         << "\n";
  }
  return os.str();
}

int report_exit_code(const AnalysisReport& rep) { return rep.partial ? 4 : 0; }

int error_exit_code(const std::exception& e) {
  if (dynamic_cast<const RequestError*>(&e)) return 1;
  if (dynamic_cast<const GroupMismatch*>(&e)) return 1;
  if (dynamic_cast<const PrecisionExhausted*>(&e)) return 2;
  if (dynamic_cast<const InsufficientPrecision*>(&e)) return 2;
  if (dynamic_cast<const AmbiguousZero*>(&e)) return 2;
  if (dynamic_cast<const NotGalois*>(&e)) return 3;
  if (dynamic_cast<const NotRegular*>(&e)) return 3;
  if (dynamic_cast<const NotSquarefree*>(&e)) return 3;
  if (dynamic_cast<const UnsupportedGroup*>(&e)) return 4;
  return 5;
}

}  // namespace rootrel::pipeline
