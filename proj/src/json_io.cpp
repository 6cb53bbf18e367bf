#include "deltaq/json_io.hpp"

#include <stdexcept>

namespace deltaq {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("json: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

Int big_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      fail("bad integer \"" + j.get<std::string>() + "\"");
    }
  }
  fail("coefficient must be an integer or a decimal string");
}

}  // namespace

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const TPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

json to_json(const TLaurent& p) { return {{"offset", p.offset()}, {"coeffs", to_json(p.body())}}; }

json to_json(const TRat& r) {
  if (r.is_polynomial()) return to_json(r.num());
  return {{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

json to_json(const SymFuncExpr& e) {
  json terms = json::array();
  for (const auto& [lambda, c] : e.terms) terms.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
  return {{"degree", e.degree}, {"basis", std::string(basis_name(e.basis))}, {"terms", terms}};
}

json to_json(const DecoratedDyckPath& d) {
  return {{"area_seq", d.path().area_seq()}, {"decorated_rows", d.decorated_rows()}};
}

json to_json(const MSequence& s) {
  json pairs = json::array();
  for (const auto& [a, b] : s.pairs) pairs.push_back({a, b});
  return {{"pairs", pairs}};
}

json to_json(const OSPSequence& s) {
  json pairs = json::array();
  for (const auto& [a, block] : s.pairs) pairs.push_back({a, block});
  return {{"pairs", pairs}};
}

json to_json(const LabeledDiagram& t) {
  json stacks = json::array();
  for (const auto& s : t.stacks) {
    stacks.push_back({{"row_len", s.row_len}, {"above", to_json(s.above)}, {"labels", s.labels}});
  }
  return {{"lambda", to_json(t.lambda)}, {"stacks", stacks}};
}

Partition partition_from_json(const json& j) { return Partition(int_list(j, "partition")); }

TPoly tpoly_from_json(const json& j) {
  if (!j.is_array()) fail("polynomial must be an array of coefficients");
  std::vector<Int> c;
  for (const auto& v : j) c.push_back(big_from_json(v));
  return TPoly(std::move(c));
}

TRat trat_from_json(const json& j) {
  if (j.is_array()) return TRat(tpoly_from_json(j));
  const TPoly den = tpoly_from_json(field(j, "den"));
  if (den.is_zero()) fail("zero denominator");
  return TRat(tpoly_from_json(field(j, "num")), den);
}

SymFuncExpr symfunc_from_json(const json& j) {
  const int degree = as_int(field(j, "degree"), "degree");
  const json& basis = field(j, "basis");
  if (!basis.is_string()) fail("basis must be a string");
  SymFuncExpr out = SymFuncExpr::zero(parse_basis(basis.get<std::string>()), degree);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) fail("terms must be an array");
  for (const auto& term : terms) out.add(partition_from_json(field(term, "partition")), trat_from_json(field(term, "coeff")));
  return out;
}

DecoratedDyckPath decorated_path_from_json(const json& j) {
  return DecoratedDyckPath(DyckPath(int_list(field(j, "area_seq"), "area_seq")),
                           int_list(field(j, "decorated_rows"), "decorated_rows"));
}

MSequence msequence_from_json(const json& j) {
  const json& pairs = field(j, "pairs");
  if (!pairs.is_array()) fail("pairs must be an array");
  MSequence s;
  for (const auto& p : pairs) {
    const auto v = int_list(p, "pair");
    if (v.size() != 2) fail("each pair needs exactly two entries");
    s.pairs.emplace_back(v[0], v[1]);
  }
  return s;
}

LabeledDiagram diagram_from_json(const json& j) {
  LabeledDiagram t;
  t.lambda = partition_from_json(field(j, "lambda"));
  const json& stacks = field(j, "stacks");
  if (!stacks.is_array()) fail("stacks must be an array");
  for (const auto& s : stacks) {
    ColumnStack st;
    st.row_len = as_int(field(s, "row_len"), "row_len");
    st.above = partition_from_json(field(s, "above"));
    st.labels = int_list(field(s, "labels"), "labels");
    t.stacks.push_back(std::move(st));
  }
  return t;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

}  // namespace deltaq
